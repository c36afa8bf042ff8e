//! Closed-form integer sets built on the exact `⌊·φ⌋` kernel.
//!
//! Each set is a union of blocks `[base(i), base(i) + width)` where `base` is a
//! strictly increasing Beatty-type expression of a parameter `i`. For `S1`, `S2`, `S3`
//! the width is 1; for `Z(k)` and `Z(k, k+2)` it is `F_{k-1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::fib::{FibTable, MAX_FIB_INDEX};
use crate::phi::{floor_div_phi, floor_shifted};

/// Identifies one of the closed-form sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetId {
    /// `{⌊(i+1)/φ⌋ + 2i : i >= 1}`, the `n` with `L(n) < L(n+1)`.
    S1,
    /// `{2⌊(i+1)/φ⌋ + 3i - 1 : i >= 1}`, the `n` with `L(n) > L(n+1)`.
    S2,
    /// `{3⌊i/φ + φ⌋ + 5i : i >= 0}`, the `n` with `n + 1` a peak of `L`.
    S3,
    /// Integers whose Zeckendorf representation contains `F_k`.
    Z(u32),
    /// Integers whose representation contains both `F_k` and `F_{k+2}`.
    Zpair(u32),
}

impl fmt::Display for SetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetId::S1 => f.write_str("S1"),
            SetId::S2 => f.write_str("S2"),
            SetId::S3 => f.write_str("S3"),
            SetId::Z(k) => write!(f, "Z({k})"),
            SetId::Zpair(k) => write!(f, "Z({k},{})", k + 2),
        }
    }
}

impl SetId {
    /// Checks the parameter of `Z`/`Zpair`: `k >= 2` and every Fibonacci number the
    /// formula uses fits in `u64`.
    pub fn validate(&self) -> Result<()> {
        let (k, top) = match *self {
            SetId::S1 | SetId::S2 | SetId::S3 => return Ok(()),
            SetId::Z(k) => (k, MAX_FIB_INDEX - 1),
            SetId::Zpair(k) => (k, MAX_FIB_INDEX - 3),
        };
        if k < 2 {
            return Err(Error::domain("set parameter k", k, "k >= 2"));
        }
        if k > top {
            return Err(Error::range("set parameter k", k, top));
        }
        Ok(())
    }

    fn first_param(&self) -> u64 {
        match self {
            SetId::S1 | SetId::S2 => 1,
            _ => 0,
        }
    }

    fn block_width(&self) -> u64 {
        let fib = FibTable::shared();
        match *self {
            SetId::Z(k) | SetId::Zpair(k) => fib.values()[k as usize - 1],
            _ => 1,
        }
    }

    /// First element of block `i`. Assumes `validate` passed and `i >= first_param`.
    fn block_start(&self, i: u64) -> Result<u64> {
        let fib = FibTable::shared().values();
        match *self {
            SetId::S1 => s1_element(i),
            SetId::S2 => s2_element(i),
            SetId::S3 => s3_element(i),
            SetId::Z(k) => {
                let k = k as usize;
                beatty_block(fib[k], fib[k + 1], 0, i)
            }
            SetId::Zpair(k) => {
                let k = k as usize;
                beatty_block(fib[k + 2], fib[k + 3], fib[k], i)
            }
        }
    }

    /// Largest parameter `i` whose block starts at or below `n`.
    fn param_at_or_below(&self, n: u64) -> Option<u64> {
        let fits = |i: u64| self.block_start(i).is_ok_and(|b| b <= n);
        let first = self.first_param();
        if !fits(first) {
            return None;
        }
        // block_start(i) >= i, so the answer lies in [first, n]
        let (mut lo, mut hi) = (first, n.max(first));
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if fits(mid) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        Some(lo)
    }

    /// Elements in increasing order, stopping where the formula leaves the `u64` range.
    pub fn iter(&self) -> Result<SetIter> {
        self.validate()?;
        SetIter::starting_at(*self, self.first_param())
    }
}

/// `scale·⌊i/φ + φ⌋ + i·stride + offset`.
fn beatty_block(scale: u64, stride: u64, offset: u64, i: u64) -> Result<u64> {
    let over = || Error::range("set element", i, u64::MAX);
    let floor = floor_shifted(i)?;
    scale
        .checked_mul(floor)
        .and_then(|a| i.checked_mul(stride).and_then(|b| a.checked_add(b)))
        .and_then(|a| a.checked_add(offset))
        .ok_or_else(over)
}

fn affine(what: &'static str, a: u64, floor: u64, b: u64, i: u64, c: i64) -> Result<u64> {
    let v = (a as i128) * (floor as i128) + (b as i128) * (i as i128) + c as i128;
    u64::try_from(v).map_err(|_| Error::range(what, i, u64::MAX))
}

fn require_param(what: &'static str, i: u64, min: u64) -> Result<()> {
    if i < min {
        Err(Error::domain(
            what,
            i,
            if min == 1 { "i >= 1" } else { "i >= 0" },
        ))
    } else {
        Ok(())
    }
}

/// `⌊(i+1)/φ⌋ + 2i`, `i >= 1`.
pub fn s1_element(i: u64) -> Result<u64> {
    require_param("s1_element", i, 1)?;
    let m = i
        .checked_add(1)
        .ok_or_else(|| Error::range("s1_element", i, u64::MAX))?;
    affine("s1_element", 1, floor_div_phi(m)?, 2, i, 0)
}

/// `2⌊(i+1)/φ⌋ + 3i - 1`, `i >= 1`.
pub fn s2_element(i: u64) -> Result<u64> {
    require_param("s2_element", i, 1)?;
    let m = i
        .checked_add(1)
        .ok_or_else(|| Error::range("s2_element", i, u64::MAX))?;
    affine("s2_element", 2, floor_div_phi(m)?, 3, i, -1)
}

/// `3⌊i/φ + φ⌋ + 5i`, `i >= 0`.
pub fn s3_element(i: u64) -> Result<u64> {
    affine("s3_element", 3, floor_shifted(i)?, 5, i, 0)
}

/// `⌊(i+φ²)/φ⌋ + 2i - 1`, `i >= 1`: the increase set written through the `F_2` column of `Z(2)`.
pub fn s1_element_shifted_form(i: u64) -> Result<u64> {
    require_param("s1_element_shifted_form", i, 1)?;
    affine("s1_element_shifted_form", 1, floor_shifted(i)?, 2, i, -1)
}

/// `2⌊(i+φ²)/φ⌋ + 3(i-1)`, `i >= 1`: the decrease set written through the `F_3` column of `Z(3)`.
pub fn s2_element_shifted_form(i: u64) -> Result<u64> {
    require_param("s2_element_shifted_form", i, 1)?;
    affine("s2_element_shifted_form", 2, floor_shifted(i)?, 3, i, -3)
}

/// Whether `n` belongs to `set`, found by binary search on the generator parameter.
///
/// Fails only when `set` carries an invalid `k`. `n = 0` is never a member.
pub fn membership(set: SetId, n: u64) -> Result<bool> {
    set.validate()?;
    if n == 0 {
        return Ok(false);
    }
    Ok(match set.param_at_or_below(n) {
        None => false,
        Some(i) => {
            let start = set.block_start(i).expect("checked by search");
            n - start < set.block_width()
        }
    })
}

fn collect_sorted(set: SetId, limit: u64) -> Result<Vec<u64>> {
    let mut out: Vec<u64> = set.iter()?.take_while(|&m| m <= limit).collect();
    // blocks are emitted in order already; this only guards against a colliding parametrization
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Elements of `Z(k)` not exceeding `limit`, increasing.
pub fn zk_elements(k: u32, limit: u64) -> Result<Vec<u64>> {
    collect_sorted(SetId::Z(k), limit)
}

/// Elements of `Z(k, k+2)` not exceeding `limit`, increasing.
pub fn zpair_elements(k: u32, limit: u64) -> Result<Vec<u64>> {
    collect_sorted(SetId::Zpair(k), limit)
}

/// Elements of any set not exceeding `limit`.
pub fn elements_up_to(set: SetId, limit: u64) -> Result<Vec<u64>> {
    collect_sorted(set, limit)
}

/// The `count` smallest elements of `set`.
pub fn first_elements(set: SetId, count: usize) -> Result<Vec<u64>> {
    let out: Vec<u64> = set.iter()?.take(count).collect();
    if out.len() < count {
        return Err(Error::range(
            "set element count",
            count as u64,
            out.len() as u64,
        ));
    }
    Ok(out)
}

/// Increasing iterator over a set's elements.
#[derive(Debug, Clone)]
pub struct SetIter {
    set: SetId,
    param: u64,
    width: u64,
    // next element to yield and how many remain in its block
    next: Option<(u64, u64)>,
}

impl SetIter {
    fn starting_at(set: SetId, param: u64) -> Result<Self> {
        let width = set.block_width();
        let next = set.block_start(param).ok().map(|s| (s, width));
        Ok(SetIter {
            set,
            param,
            width,
            next,
        })
    }
}

impl Iterator for SetIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let (value, left) = self.next?;
        self.next = if left > 1 {
            value.checked_add(1).map(|v| (v, left - 1))
        } else {
            self.param += 1;
            self.set
                .block_start(self.param)
                .ok()
                .map(|s| (s, self.width))
        };
        Some(value)
    }
}

/// Answers membership for a non-decreasing sequence of queries in amortized O(1).
#[derive(Debug, Clone)]
pub struct SetCursor {
    set: SetId,
    param: u64,
    width: u64,
    start: Option<u64>,
}

impl SetCursor {
    /// Cursor positioned for queries starting at `from`.
    pub fn new(set: SetId, from: u64) -> Result<Self> {
        set.validate()?;
        let param = set
            .param_at_or_below(from)
            .unwrap_or_else(|| set.first_param());
        Ok(SetCursor {
            set,
            param,
            width: set.block_width(),
            start: set.block_start(param).ok(),
        })
    }

    /// Membership of `n`; `n` must not be smaller than any earlier query.
    pub fn contains(&mut self, n: u64) -> bool {
        while let Some(start) = self.start {
            if n < start {
                return false;
            }
            if n - start < self.width {
                return true;
            }
            self.param += 1;
            self.start = self.set.block_start(self.param).ok();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::decompose;

    fn brute(limit: u64, keep: impl Fn(&[u32]) -> bool) -> Vec<u64> {
        let t = FibTable::new();
        (1..=limit)
            .filter(|&m| keep(decompose(m, &t).unwrap().indices()))
            .collect()
    }

    #[test]
    fn s_elements() {
        let s1: Vec<u64> = (1..=3).map(|i| s1_element(i).unwrap()).collect();
        assert_eq!(s1, [3, 5, 8]);
        let s2: Vec<u64> = (1..=5).map(|i| s2_element(i).unwrap()).collect();
        assert_eq!(s2, [4, 7, 12, 17, 20]);
        let s3: Vec<u64> = (0..=2).map(|i| s3_element(i).unwrap()).collect();
        assert_eq!(s3, [3, 11, 16]);
        assert!(matches!(s1_element(0), Err(Error::Domain { .. })));
        assert!(matches!(s2_element(0), Err(Error::Domain { .. })));
        assert!(s1_element(u64::MAX).is_err());
        assert!(s3_element(u64::MAX / 4).is_err());
    }

    #[test]
    fn shifted_forms_agree_on_prefix() {
        for i in 1..2_000 {
            assert_eq!(s1_element_shifted_form(i).unwrap(), s1_element(i).unwrap());
            assert_eq!(s2_element_shifted_form(i).unwrap(), s2_element(i).unwrap());
        }
    }

    #[test]
    fn z_examples() {
        assert_eq!(zk_elements(2, 10).unwrap(), [1, 4, 6, 9]);
        assert_eq!(zk_elements(3, 10).unwrap(), [2, 7, 10]);
        assert_eq!(zk_elements(4, 12).unwrap(), [3, 4, 11, 12]);
        assert_eq!(zpair_elements(2, 20).unwrap(), [4, 12, 17]);
        assert_eq!(zpair_elements(3, 20).unwrap(), [7, 20]);
        assert_eq!(zpair_elements(2, 3).unwrap(), Vec::<u64>::new());
    }

    #[test]
    fn z_matches_brute_force_small() {
        for k in 2..=10u32 {
            assert_eq!(
                zk_elements(k, 3_000).unwrap(),
                brute(3_000, |ix| ix.contains(&k)),
                "k = {k}"
            );
            assert_eq!(
                zpair_elements(k, 3_000).unwrap(),
                brute(3_000, |ix| ix.contains(&k) && ix.contains(&(k + 2))),
                "k = {k}"
            );
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(zk_elements(1, 10), Err(Error::Domain { .. })));
        assert!(matches!(zpair_elements(0, 10), Err(Error::Domain { .. })));
        assert!(matches!(zk_elements(93, 10), Err(Error::Range { .. })));
        assert!(matches!(zpair_elements(91, 10), Err(Error::Range { .. })));
        assert!(zk_elements(92, 10).unwrap().is_empty());
        assert!(membership(SetId::Z(1), 5).is_err());
    }

    #[test]
    fn large_k_first_block() {
        let t = FibTable::new();
        // Z(92) starts at F_92 and its first block has F_91 elements
        let mut it = SetId::Z(92).iter().unwrap();
        assert_eq!(it.next(), t.get(92));
        assert_eq!(it.next(), t.get(92).map(|v| v + 1));
        assert!(membership(SetId::Z(92), t.get(92).unwrap() + t.get(91).unwrap() - 1).unwrap());
        assert!(!membership(SetId::Z(92), t.get(93).unwrap()).unwrap());
    }

    #[test]
    fn membership_examples() {
        assert!(membership(SetId::S1, 3).unwrap());
        assert!(!membership(SetId::S1, 4).unwrap());
        assert!(membership(SetId::S2, 4).unwrap());
        assert!(!membership(SetId::S3, 0).unwrap());
        assert!(membership(SetId::S3, 3).unwrap());
        assert!(membership(SetId::Z(4), 12).unwrap());
        assert!(!membership(SetId::Z(4), 13).unwrap());
        // the search must not overflow at the top of the range
        membership(SetId::S1, u64::MAX).unwrap();
        membership(SetId::Z(3), u64::MAX).unwrap();
    }

    #[test]
    fn membership_agrees_with_enumeration() {
        for set in [
            SetId::S1,
            SetId::S2,
            SetId::S3,
            SetId::Z(2),
            SetId::Z(5),
            SetId::Zpair(3),
        ] {
            let elems = elements_up_to(set, 5_000).unwrap();
            let mut cursor = SetCursor::new(set, 1).unwrap();
            for n in 1..=5_000 {
                let expected = elems.binary_search(&n).is_ok();
                assert_eq!(membership(set, n).unwrap(), expected, "{set} n = {n}");
                assert_eq!(cursor.contains(n), expected, "{set} cursor n = {n}");
            }
        }
    }

    #[test]
    fn cursor_seeded_midway() {
        let elems = elements_up_to(SetId::Z(6), 10_000).unwrap();
        let mut cursor = SetCursor::new(SetId::Z(6), 4_321).unwrap();
        for n in 4_321..=10_000 {
            assert_eq!(
                cursor.contains(n),
                elems.binary_search(&n).is_ok(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn first_elements_counts() {
        assert_eq!(first_elements(SetId::S3, 3).unwrap(), [3, 11, 16]);
        assert_eq!(first_elements(SetId::Z(3), 3).unwrap(), [2, 7, 10]);
        assert!(first_elements(SetId::S1, 0).unwrap().is_empty());
    }

    #[test]
    fn display_names() {
        assert_eq!(SetId::Z(4).to_string(), "Z(4)");
        assert_eq!(SetId::Zpair(2).to_string(), "Z(2,4)");
    }
}
