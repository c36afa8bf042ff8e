//! Summand counts `L(n)` and the step `f(n) = L(n+1) - L(n)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fib::FibTable;
use crate::rep::decompose;

/// Sign of `f(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepClass {
    Up,
    Down,
    Flat,
}

impl StepClass {
    pub fn from_step(f: i32) -> Self {
        match f.signum() {
            1 => StepClass::Up,
            -1 => StepClass::Down,
            _ => StepClass::Flat,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StepClass::Up => "up",
            StepClass::Down => "down",
            StepClass::Flat => "flat",
        }
    }
}

impl fmt::Display for StepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `L(n)`, the number of Zeckendorf summands of `n`. `L(0) = 0`.
pub fn summand_count(n: u64) -> u32 {
    decompose(n, FibTable::shared())
        .expect("shared table covers u64")
        .len() as u32
}

fn require_positive(what: &'static str, n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::domain(what, 0u64, "n >= 1"))
    } else {
        Ok(())
    }
}

fn next(what: &'static str, n: u64) -> Result<u64> {
    n.checked_add(1)
        .ok_or_else(|| Error::range(what, n as u128 + 1, u64::MAX))
}

/// `f(n) = L(n+1) - L(n)` for `n >= 1`.
pub fn step(n: u64) -> Result<i32> {
    require_positive("step", n)?;
    let m = next("step", n)?;
    Ok(summand_count(m) as i32 - summand_count(n) as i32)
}

/// Classifies `n` by looking only at the low indices of the representation of `n + 1`:
/// `Up` iff index 2 is present, `Down` iff none of 2, 3, 4 is present.
pub fn classify_step(n: u64) -> Result<StepClass> {
    require_positive("classify_step", n)?;
    let m = next("classify_step", n)?;
    let rep = decompose(m, FibTable::shared())?;
    Ok(match rep.lowest() {
        Some(2) => StepClass::Up,
        Some(3) | Some(4) => StepClass::Flat,
        _ => StepClass::Down,
    })
}

/// Member of the family `n = F_{2k+1} - 1 = F_2 + F_4 + ... + F_{2k}` where `L` falls
/// by `k - 1` on the next integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub k: u32,
    pub n: u64,
    pub drop: i32,
}

/// Returns `(F_{2k+1} - 1, 1 - k)`. For `k = 1` this is `(1, 0)`: the family only
/// produces negative steps from `k = 2` on.
pub fn deep_witness(k: u32, table: &FibTable) -> Result<Witness> {
    if k == 0 {
        return Err(Error::domain("deep_witness", 0u32, "k >= 1"));
    }
    let top = 2 * k as u64 + 1;
    if top > table.max_index() as u64 {
        return Err(Error::range(
            "deep_witness k",
            k,
            (table.max_index() - 1) / 2,
        ));
    }
    let n = table.value(top as u32)? - 1;
    Ok(Witness {
        k,
        n,
        drop: 1 - k as i32,
    })
}
