//! Exact golden-ratio floor arithmetic on integers.
//!
//! Every irrational floor used by the closed forms reduces to `⌊mφ⌋`, and
//! `⌊mφ⌋ = ⌊(m + ⌊√(5m²)⌋) / 2⌋` because `√(5m²)` is irrational for `m > 0`.

use crate::error::{Error, Result};

/// Largest `m` for which `5m²` fits in a `u128`; the input ceiling of [`floor_n_phi`].
pub const PHI_INPUT_MAX: u64 = 8_249_634_742_471_189_717;

/// `⌊√x⌋` by Newton iteration from a floating-point seed, corrected so that
/// `r² <= x < (r+1)²`.
pub fn isqrt_u128(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    // seed is within a few ulps of the root; Newton from above then fixes it up
    let mut r = ((x as f64).sqrt() as u128).max(1);
    loop {
        let next = (r + x / r) / 2;
        if next >= r {
            break;
        }
        r = next;
    }
    while r.checked_mul(r).is_none_or(|sq| sq > x) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= x) {
        r += 1;
    }
    r
}

fn check_input(what: &'static str, m: u64) -> Result<()> {
    if m > PHI_INPUT_MAX {
        Err(Error::range(what, m, PHI_INPUT_MAX))
    } else {
        Ok(())
    }
}

/// `⌊mφ⌋`.
pub fn floor_n_phi(m: u64) -> Result<u64> {
    check_input("floor_n_phi", m)?;
    let m = m as u128;
    let root = isqrt_u128(5 * m * m);
    Ok(((m + root) / 2) as u64)
}

/// `⌊m/φ⌋ = ⌊mφ⌋ - m`, from `1/φ = φ - 1`.
pub fn floor_div_phi(m: u64) -> Result<u64> {
    Ok(floor_n_phi(m)? - m)
}

/// `⌊i/φ + φ⌋`, which is also `⌊(i + φ²)/φ⌋`; both equal `⌊(i+1)φ⌋ - i`.
pub fn floor_shifted(i: u64) -> Result<u64> {
    let m = i
        .checked_add(1)
        .filter(|&m| m <= PHI_INPUT_MAX)
        .ok_or_else(|| Error::range("floor_shifted", i, PHI_INPUT_MAX - 1))?;
    Ok(floor_n_phi(m)? - i)
}
