//! Canonical Zeckendorf representations and the arithmetic done directly on them.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fib::{FibTable, MAX_FIB_INDEX};

/// Zeckendorf representation of a non-negative integer: Fibonacci indices in
/// increasing order, each at least 2 and pairwise at least 2 apart.
///
/// The empty representation is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZeckRep {
    indices: Vec<u32>,
}

impl ZeckRep {
    pub fn empty() -> Self {
        ZeckRep::default()
    }

    /// Builds a representation from increasing indices, checking the gap invariant.
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if let Some(&first) = indices.first() {
            if first < 2 {
                return Err(Error::InvalidRep(format!(
                    "smallest index {first} is below 2"
                )));
            }
        }
        if let Some(w) = indices.windows(2).find(|w| w[1] < w[0] + 2) {
            return Err(Error::InvalidRep(format!(
                "indices {} and {} are not at least 2 apart",
                w[0], w[1]
            )));
        }
        if let Some(&last) = indices.last() {
            if last > MAX_FIB_INDEX {
                return Err(Error::range("fibonacci index", last, MAX_FIB_INDEX));
            }
        }
        Ok(ZeckRep { indices })
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn into_indices(self) -> Vec<u32> {
        self.indices
    }

    /// Number of summands.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Smallest index present.
    pub fn lowest(&self) -> Option<u32> {
        self.indices.first().copied()
    }

    pub fn contains(&self, k: u32) -> bool {
        // the few smallest indices are the ones queried in hot loops
        self.indices
            .iter()
            .take_while(|&&c| c <= k)
            .any(|&c| c == k)
    }

    /// Overwrites `self` with a copy of `other`, reusing the allocation.
    pub(crate) fn copy_from(&mut self, other: &ZeckRep) {
        self.indices.clear();
        self.indices.extend_from_slice(&other.indices);
    }

    /// Adds one in place by carry normalization on the indices.
    ///
    /// The lowest index is bumped (`{} -> {2}`, `c >= 4 -> {2, c}`, `2 -> 3`, `3 -> 4`),
    /// then adjacent pairs `F_a + F_{a+1}` at the bottom are folded into `F_{a+2}`
    /// until no two indices are adjacent.
    pub fn increment(&mut self) -> Result<()> {
        if self.indices.last() == Some(&MAX_FIB_INDEX) && *self == *max_rep() {
            return Err(Error::range("successor", u64::MAX as u128 + 1, u64::MAX));
        }
        let v = &mut self.indices;
        match v.first().copied() {
            None => v.push(2),
            Some(c) if c >= 4 => v.insert(0, 2),
            Some(c) => v[0] = c + 1,
        }
        let mut top = v[0];
        let mut j = 1;
        while j < v.len() && v[j] == top + 1 {
            top = v[j] + 1;
            j += 1;
        }
        if j > 1 {
            v[j - 1] = top;
            v.drain(..j - 1);
        }
        Ok(())
    }
}

impl fmt::Display for ZeckRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, k) in self.indices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("}")
    }
}

fn max_rep() -> &'static ZeckRep {
    static MAX: OnceLock<ZeckRep> = OnceLock::new();
    MAX.get_or_init(|| decompose(u64::MAX, FibTable::shared()).expect("u64::MAX is in range"))
}

/// Greedy Zeckendorf decomposition: repeatedly takes the largest `F_k` not exceeding
/// what remains.
pub fn decompose(n: u64, table: &FibTable) -> Result<ZeckRep> {
    let limit = table.decompose_limit();
    if n > limit {
        return Err(Error::range("decompose", n, limit));
    }
    let mut indices = Vec::new();
    let mut rest = n;
    while let Some(k) = table.largest_index_le(rest) {
        indices.push(k);
        rest -= table.values()[k as usize];
    }
    indices.reverse();
    Ok(ZeckRep { indices })
}

/// Sum of `F_c` over the representation's indices.
pub fn recompose(rep: &ZeckRep, table: &FibTable) -> Result<u64> {
    rep.indices.iter().try_fold(0u64, |acc, &k| {
        let v = table.value(k)?;
        acc.checked_add(v)
            .ok_or_else(|| Error::range("recompose", acc as u128 + v as u128, u64::MAX))
    })
}

/// Representation of `recompose(rep) + 1`, computed on the indices alone.
pub fn successor(rep: &ZeckRep) -> Result<ZeckRep> {
    let mut next = rep.clone();
    next.increment()?;
    Ok(next)
}
