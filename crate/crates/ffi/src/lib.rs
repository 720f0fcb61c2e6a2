//! C ABI over `icomb`. Every call returns an [`IcombStatus`]; on failure the message is
//! available from [`icomb_last_error`] until the next call on the same thread.
//!
//! Strings returned through `out` pointers are owned by the caller and must be released
//! with [`icomb_string_free`]. Handles are released with their `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use icomb::asm::{asm_count_formula, lambda_det_eval};
use icomb::cluster::Quiver;
use icomb::exact::json::rational_matrix_from_json;
use icomb::exact::matrix::ExactMatrix;
use icomb::exact::rational::{format_rational, parse_rational, Rational};
use icomb::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IcombStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    SizeCap = 5,
    DivisionByZero = 6,
    NotDivisible = 7,
    DimensionMismatch = 8,
    /// The command ran but at least one of its checks failed.
    CheckFailed = 9,
    /// Bad command-line arguments given to [`icomb_run`].
    Usage = 10,
    Internal = 11,
    Panic = 12,
}

/// Dense rational matrix.
pub struct IcombMatrix(ExactMatrix<Rational>);

/// Exchange quiver.
pub struct IcombQuiver(Quiver);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> IcombStatus {
    match e {
        Error::Parse(_) => IcombStatus::Parse,
        Error::SizeCap { .. } => IcombStatus::SizeCap,
        Error::DivisionByZero(_) | Error::NonInvertibleDenominator => IcombStatus::DivisionByZero,
        Error::NotDivisible(_) => IcombStatus::NotDivisible,
        Error::DimensionMismatch(_) | Error::NonSquare { .. } => IcombStatus::DimensionMismatch,
        Error::Internal(_) => IcombStatus::Internal,
        _ => IcombStatus::InvalidArgument,
    }
}

enum Failure {
    Status(IcombStatus, String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Runs `f`, converting errors and panics to a status and recording the message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> IcombStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IcombStatus::Ok,
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Failure::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside icomb");
            IcombStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(IcombStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Status(IcombStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

/// # Safety
/// `out` must be null or valid for writing one pointer.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure::Status(IcombStatus::Internal, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn icomb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn icomb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs one command line, for example `["asm", "count", "--n", "3"]` (no program name).
/// Writes the report (or usage text) to `out` and the process exit code to `exit_code`.
/// Returns `CheckFailed` when the report contains a failing check.
///
/// # Safety
/// `argv` must point to `argc` valid strings; `out` and `exit_code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icomb_run(argc: c_int, argv: *const *const c_char, out: *mut *mut c_char, exit_code: *mut c_int) -> IcombStatus {
    guard(|| {
        if exit_code.is_null() {
            return Err(null("exit_code"));
        }
        if argc < 0 || (argc > 0 && argv.is_null()) {
            return Err(null("argv"));
        }
        let mut args = vec!["icomb".to_string()];
        for i in 0..argc as usize {
            args.push(read_str(*argv.add(i), "argument")?.to_string());
        }
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = icomb::cli::main_with(args, &mut stdout, &mut stderr);
        *exit_code = code;
        let text = if stdout.is_empty() { stderr } else { stdout };
        let text = String::from_utf8_lossy(&text).into_owned();
        match code {
            0 => write_string(out, text),
            1 => {
                write_string(out, text)?;
                Err(Failure::Status(IcombStatus::CheckFailed, "a check failed".into()))
            }
            _ => Err(Failure::Status(IcombStatus::Usage, text.trim_end().to_string())),
        }
    })
}

/// `A_n` as a decimal string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icomb_asm_count(n: u32, out: *mut *mut c_char) -> IcombStatus {
    guard(|| write_string(out, asm_count_formula(n as usize).to_string()))
}

/// Parses a matrix from JSON: an array of rows or `{"entries": [...]}`, entries `"p/q"` or integers.
///
/// # Safety
/// `json` must be a valid string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icomb_matrix_from_json(json: *const c_char, out: *mut *mut IcombMatrix) -> IcombStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(json, "json")?;
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Failure::Status(IcombStatus::Parse, e.to_string()))?;
        let m = rational_matrix_from_json(&v)?;
        *out = Box::into_raw(Box::new(IcombMatrix(m)));
        Ok(())
    })
}

/// # Safety
/// `m` must be null or a live handle from [`icomb_matrix_from_json`].
#[no_mangle]
pub unsafe extern "C" fn icomb_matrix_free(m: *mut IcombMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows and columns.
///
/// # Safety
/// `m` must be a live handle; `rows` and `cols` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icomb_matrix_shape(m: *const IcombMatrix, rows: *mut usize, cols: *mut usize) -> IcombStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        if rows.is_null() || cols.is_null() {
            return Err(null("rows/cols"));
        }
        *rows = m.0.rows();
        *cols = m.0.cols();
        Ok(())
    })
}

/// Determinant as `"p/q"`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icomb_matrix_det(m: *const IcombMatrix, out: *mut *mut c_char) -> IcombStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        write_string(out, format_rational(&m.0.det()?))
    })
}

/// Lambda-determinant at rational `lambda` (given as `"p/q"`), as `"p/q"`.
///
/// # Safety
/// `m` must be a live handle; `lambda` a valid string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn icomb_matrix_lambda_det(m: *const IcombMatrix, lambda: *const c_char, out: *mut *mut c_char) -> IcombStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        let l = parse_rational(read_str(lambda, "lambda")?)?;
        write_string(out, format_rational(&lambda_det_eval(&m.0, &l)?.value))
    })
}

/// Parses a quiver from JSON: `{"matrix": [[...]]}` or `{"n": N, "arrows": [[i, j], ...]}` (1-based).
///
/// # Safety
/// `json` must be a valid string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icomb_quiver_from_json(json: *const c_char, out: *mut *mut IcombQuiver) -> IcombStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(json, "json")?;
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Failure::Status(IcombStatus::Parse, e.to_string()))?;
        *out = Box::into_raw(Box::new(IcombQuiver(Quiver::from_json(&v)?)));
        Ok(())
    })
}

/// # Safety
/// `q` must be null or a live handle from [`icomb_quiver_from_json`].
#[no_mangle]
pub unsafe extern "C" fn icomb_quiver_free(q: *mut IcombQuiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Mutates in place at the 1-based vertex `k`.
///
/// # Safety
/// `q` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn icomb_quiver_mutate(q: *mut IcombQuiver, k: usize) -> IcombStatus {
    guard(|| {
        let q = q.as_mut().ok_or_else(|| null("quiver"))?;
        if k == 0 {
            return Err(Failure::Status(IcombStatus::InvalidArgument, "vertices are numbered from 1".into()));
        }
        q.0 = q.0.mutate(k - 1)?;
        Ok(())
    })
}

/// The exchange matrix as `{"matrix": [[...]]}`.
///
/// # Safety
/// `q` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icomb_quiver_to_json(q: *const IcombQuiver, out: *mut *mut c_char) -> IcombStatus {
    guard(|| {
        let q = q.as_ref().ok_or_else(|| null("quiver"))?;
        write_string(out, q.0.to_json().to_string())
    })
}
