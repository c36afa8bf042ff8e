//! Fibonacci value table with index/value lookup.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest `k` with `F_k <= u64::MAX`.
pub const MAX_FIB_INDEX: u32 = 93;

/// Immutable table of `F_0 ..= F_max_index` (`F_0 = 0`, `F_1 = F_2 = 1`).
///
/// Entry 0 is the recurrence base and entry 1 only seeds the recurrence;
/// representations use indices from 2 upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibTable {
    values: Vec<u64>,
}

impl FibTable {
    /// Table covering the whole `u64` range, `F_0 ..= F_93`.
    pub fn new() -> Self {
        Self::build(MAX_FIB_INDEX)
    }

    /// Table holding `F_0 ..= F_max_index`.
    pub fn with_max_index(max_index: u32) -> Result<Self> {
        if max_index < 2 {
            return Err(Error::domain(
                "fib table max index",
                max_index,
                "max_index >= 2",
            ));
        }
        if max_index > MAX_FIB_INDEX {
            return Err(Error::range(
                "fib table max index",
                max_index,
                MAX_FIB_INDEX,
            ));
        }
        Ok(Self::build(max_index))
    }

    /// Smallest table whose largest entry exceeds `n` (or the full table when none does).
    pub fn covering(n: u64) -> Self {
        let mut table = Self::build(2);
        while table.max_value() <= n && table.max_index() < MAX_FIB_INDEX {
            let k = table.values.len();
            let next = table.values[k - 1] + table.values[k - 2];
            table.values.push(next);
        }
        table
    }

    /// Process-wide full table.
    pub fn shared() -> &'static FibTable {
        static TABLE: OnceLock<FibTable> = OnceLock::new();
        TABLE.get_or_init(FibTable::new)
    }

    fn build(max_index: u32) -> Self {
        let mut values = Vec::with_capacity(max_index as usize + 1);
        values.push(0u64);
        values.push(1u64);
        for k in 2..=max_index as usize {
            values.push(values[k - 1] + values[k - 2]);
        }
        FibTable { values }
    }

    pub fn max_index(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    pub fn max_value(&self) -> u64 {
        self.values[self.values.len() - 1]
    }

    /// Largest integer the greedy decomposition can handle with this table,
    /// i.e. `F_{max+1} - 1`, saturating at `u64::MAX` for the full table.
    pub fn decompose_limit(&self) -> u64 {
        let k = self.values.len() - 1;
        self.values[k]
            .checked_add(self.values[k - 1])
            .map_or(u64::MAX, |next| next - 1)
    }

    /// `F_k`, if `k` is within the table.
    pub fn get(&self, k: u32) -> Option<u64> {
        self.values.get(k as usize).copied()
    }

    /// `F_k`, or a range error naming the table limit.
    pub fn value(&self, k: u32) -> Result<u64> {
        self.get(k)
            .ok_or_else(|| Error::range("fibonacci index", k, self.max_index()))
    }

    /// Largest index `k >= 2` with `F_k <= n`; `None` for `n = 0`.
    pub fn largest_index_le(&self, n: u64) -> Option<u32> {
        if n == 0 {
            return None;
        }
        // values[2..] is strictly increasing
        let pos = self.values[2..].partition_point(|&v| v <= n);
        Some(pos as u32 + 1)
    }

    /// Index `k >= 2` with `F_k = value`, if `value` is a Fibonacci number in the table.
    pub fn index_of(&self, value: u64) -> Option<u32> {
        let k = self.largest_index_le(value)?;
        (self.values[k as usize] == value).then_some(k)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

impl Default for FibTable {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_and_seed() {
        let t = FibTable::new();
        assert_eq!(t.get(0), Some(0));
        assert_eq!(t.get(1), Some(1));
        assert_eq!(t.get(2), Some(1));
        for k in 3..=MAX_FIB_INDEX {
            assert_eq!(
                t.get(k).unwrap(),
                t.get(k - 1).unwrap() + t.get(k - 2).unwrap()
            );
        }
        assert_eq!(t.get(93), Some(12_200_160_415_121_876_738));
        assert_eq!(t.get(94), None);
        assert_eq!(t.decompose_limit(), u64::MAX);
    }

    #[test]
    fn covering_grows_past_n() {
        let t = FibTable::covering(100);
        assert_eq!(t.max_index(), 12);
        assert_eq!(t.max_value(), 144);
        assert_eq!(t.decompose_limit(), 232);
        assert_eq!(FibTable::covering(0).max_index(), 2);
        assert_eq!(FibTable::covering(u64::MAX).max_index(), MAX_FIB_INDEX);
    }

    #[test]
    fn lookups() {
        let t = FibTable::new();
        assert_eq!(t.largest_index_le(0), None);
        assert_eq!(t.largest_index_le(1), Some(2));
        assert_eq!(t.largest_index_le(2), Some(3));
        assert_eq!(t.largest_index_le(12), Some(6));
        assert_eq!(t.largest_index_le(13), Some(7));
        assert_eq!(t.largest_index_le(u64::MAX), Some(93));
        assert_eq!(t.index_of(1), Some(2));
        assert_eq!(t.index_of(89), Some(11));
        assert_eq!(t.index_of(90), None);
    }

    #[test]
    fn bad_max_index() {
        assert!(matches!(
            FibTable::with_max_index(1),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            FibTable::with_max_index(94),
            Err(Error::Range { .. })
        ));
        assert_eq!(FibTable::with_max_index(10).unwrap().max_value(), 55);
    }
}
