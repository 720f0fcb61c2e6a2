use std::ffi::{c_char, c_int, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use icomb_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { icomb_string_free(s) };
    out
}

fn last_error() -> String {
    let p = icomb_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> (IcombStatus, c_int, String) {
    let owned: Vec<CString> = args.iter().map(|a| CString::new(*a).unwrap()).collect();
    let ptrs: Vec<*const c_char> = owned.iter().map(|c| c.as_ptr()).collect();
    let mut out = ptr::null_mut();
    let mut code = -1;
    let status = unsafe { icomb_run(ptrs.len() as c_int, ptrs.as_ptr(), &mut out, &mut code) };
    let text = if out.is_null() { last_error() } else { take(out) };
    (status, code, text)
}

#[test]
fn counts() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { icomb_asm_count(5, &mut out) }, IcombStatus::Ok);
    assert_eq!(take(out), "429");
    assert!(icomb_last_error().is_null());
    assert_eq!(unsafe { icomb_asm_count(5, ptr::null_mut()) }, IcombStatus::NullPointer);
    assert!(last_error().contains("null"));
}

#[test]
fn command_lines() {
    let (status, code, text) = run(&["asm", "count", "--n", "3"]);
    assert_eq!((status, code), (IcombStatus::Ok, 0));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["results"]["value"], 7);
    let (status, code, text) = run(&["asm", "count", "--nope"]);
    assert_eq!((status, code), (IcombStatus::Usage, 2));
    assert!(text.contains("--nope"));
}

#[test]
fn matrices() {
    let json = CString::new(r#"[["1", "2"], ["3", "4"]]"#).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { icomb_matrix_from_json(json.as_ptr(), &mut m) }, IcombStatus::Ok);
    let (mut r, mut c) = (0, 0);
    assert_eq!(unsafe { icomb_matrix_shape(m, &mut r, &mut c) }, IcombStatus::Ok);
    assert_eq!((r, c), (2, 2));
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { icomb_matrix_det(m, &mut out) }, IcombStatus::Ok);
    assert_eq!(take(out), "-2");
    let lambda = CString::new("2").unwrap();
    assert_eq!(unsafe { icomb_matrix_lambda_det(m, lambda.as_ptr(), &mut out) }, IcombStatus::Ok);
    assert_eq!(take(out), "16");
    let bad = CString::new("x/0").unwrap();
    assert_eq!(unsafe { icomb_matrix_lambda_det(m, bad.as_ptr(), &mut out) }, IcombStatus::Parse);
    unsafe { icomb_matrix_free(m) };

    let ragged = CString::new("[[1, 2], [3]]").unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { icomb_matrix_from_json(ragged.as_ptr(), &mut m) }, IcombStatus::DimensionMismatch);
    let not_json = CString::new("[[1,").unwrap();
    assert_eq!(unsafe { icomb_matrix_from_json(not_json.as_ptr(), &mut m) }, IcombStatus::Parse);
    assert_eq!(unsafe { icomb_matrix_det(ptr::null(), &mut out) }, IcombStatus::NullPointer);
    unsafe { icomb_matrix_free(ptr::null_mut()) };
}

#[test]
fn quivers() {
    let json = CString::new(r#"{"n": 3, "arrows": [[1, 2], [2, 3]]}"#).unwrap();
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { icomb_quiver_from_json(json.as_ptr(), &mut q) }, IcombStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { icomb_quiver_to_json(q, &mut out) }, IcombStatus::Ok);
    let before = take(out);
    assert_eq!(unsafe { icomb_quiver_mutate(q, 2) }, IcombStatus::Ok);
    assert_eq!(unsafe { icomb_quiver_to_json(q, &mut out) }, IcombStatus::Ok);
    assert_eq!(take(out), r#"{"matrix":[[0,-1,1],[1,0,-1],[-1,1,0]]}"#);
    assert_eq!(unsafe { icomb_quiver_mutate(q, 2) }, IcombStatus::Ok);
    assert_eq!(unsafe { icomb_quiver_to_json(q, &mut out) }, IcombStatus::Ok);
    assert_eq!(take(out), before);
    assert_eq!(unsafe { icomb_quiver_mutate(q, 0) }, IcombStatus::InvalidArgument);
    assert_eq!(unsafe { icomb_quiver_mutate(q, 4) }, IcombStatus::InvalidArgument);
    unsafe { icomb_quiver_free(q) };
}

#[test]
fn header_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/icomb.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["icomb_run", "icomb_last_error", "icomb_string_free", "icomb_matrix_lambda_det", "icomb_quiver_mutate"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    if Command::new("cc").arg("--version").output().is_err() {
        return;
    }
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("use.c");
    std::fs::write(
        &src,
        r#"#include "icomb.h"
int main(void) {
    char *out = 0;
    IcombStatus s = icomb_asm_count(3, &out);
    icomb_string_free(out);
    return s == ICOMB_STATUS_OK ? 0 : 1;
}
"#,
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}
