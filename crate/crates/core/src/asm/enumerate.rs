use super::Asm;
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_N: usize = 7;

/// Calls `f` once per `n x n` ASM.
///
/// Rows are generated left to right while tracking the column partial sums, which
/// stay in {0, 1}: a `1` may only go in a column with sum 0 and a `-1` only in a
/// column with sum 1, alternating along the row.
pub fn for_each_asm(n: usize, mut f: impl FnMut(&Asm)) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION_N {
        if n == 0 {
            return Err(Error::InvalidArgument("ASM size must be at least 1".into()));
        }
        return Err(Error::SizeCap { what: "ASM size", max: MAX_ENUMERATION_N, got: n });
    }
    let mut entries = vec![0i8; n * n];
    let mut colsum = vec![0u8; n];
    rows(n, 0, &mut entries, &mut colsum, &mut f);
    Ok(())
}

fn rows(n: usize, r: usize, entries: &mut [i8], colsum: &mut [u8], f: &mut impl FnMut(&Asm)) {
    if r == n {
        f(&Asm::from_raw(n, entries.to_vec()));
        return;
    }
    cells(n, r, 0, 0, entries, colsum, f);
}

fn cells(n: usize, r: usize, c: usize, h: u8, entries: &mut [i8], colsum: &mut [u8], f: &mut impl FnMut(&Asm)) {
    if c == n {
        if h == 1 {
            rows(n, r + 1, entries, colsum, f);
        }
        return;
    }
    let idx = r * n + c;
    entries[idx] = 0;
    cells(n, r, c + 1, h, entries, colsum, f);
    if colsum[c] == 0 && h == 0 {
        entries[idx] = 1;
        colsum[c] = 1;
        cells(n, r, c + 1, 1, entries, colsum, f);
        colsum[c] = 0;
    } else if colsum[c] == 1 && h == 1 {
        entries[idx] = -1;
        colsum[c] = 0;
        cells(n, r, c + 1, 0, entries, colsum, f);
        colsum[c] = 1;
    }
    entries[idx] = 0;
}

pub fn enumerate_asms(n: usize) -> Result<Vec<Asm>> {
    let mut out = Vec::new();
    for_each_asm(n, |b| out.push(b.clone()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::asm_count_formula;
    use num_bigint::BigInt;
    use std::collections::BTreeSet;

    #[test]
    fn counts_match_formula() {
        for n in 1..=6 {
            let all = enumerate_asms(n).unwrap();
            assert_eq!(BigInt::from(all.len()), asm_count_formula(n), "n = {n}");
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            for b in &all {
                Asm::new(&b.rows()).unwrap();
            }
        }
    }

    #[test]
    fn size_cap() {
        assert!(matches!(enumerate_asms(8), Err(Error::SizeCap { .. })));
        assert!(enumerate_asms(0).is_err());
    }
}
