//! Range sweeps that check the closed forms against summand counts.
//!
//! The truth side of every check comes from Zeckendorf representations walked with
//! [`ZeckRep::increment`], never from the closed forms under test. Sweeps split
//! `[1, N]` into fixed chunks that run in parallel; each chunk seeds its window with
//! one decomposition and the per-chunk results are merged in order, so reports do
//! not depend on how the work was scheduled.

use std::fmt;
use std::ops::RangeInclusive;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fib::FibTable;
use crate::phi::isqrt_u128;
use crate::rep::{decompose, ZeckRep};
use crate::sets::{zk_elements, zpair_elements, SetCursor, SetId};
use crate::step::{deep_witness, summand_count, StepClass};

/// At most this many mismatches are kept per report; `mismatch_total` counts all of them.
pub const MISMATCH_CAP: usize = 100;

const CHUNK: u64 = 1 << 16;

/// Reference counts of `n <= N` with `f(n) > 0`, `f(n) < 0`, `f(n) = 0`.
pub const TABLE1: [(u64, [u64; 3]); 6] = [
    (10, [3, 2, 5]),
    (100, [38, 23, 39]),
    (1_000, [382, 236, 382]),
    (10_000, [3_819, 2_360, 3_820]),
    (100_000, [38_196, 23_606, 38_197]),
    (1_000_000, [381_966, 236_068, 381_966]),
];
// NOTE: the 10^4 and 10^5 rows sum to N - 1 (n = N is a fall in both cases), so
// check_table1 reports a one-count mismatch on the down column for them.

/// Shape of `L` around `m`: strict local maximum, strict local minimum, or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumClass {
    Peak,
    Divot,
    Neither,
}

impl ExtremumClass {
    fn from_counts(before: u32, at: u32, after: u32) -> Self {
        if before < at && at > after {
            ExtremumClass::Peak
        } else if before > at && at < after {
            ExtremumClass::Divot
        } else {
            ExtremumClass::Neither
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ExtremumClass::Peak => "peak",
            ExtremumClass::Divot => "divot",
            ExtremumClass::Neither => "none",
        }
    }
}

impl fmt::Display for ExtremumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies `m >= 2` from `L(m-1)`, `L(m)`, `L(m+1)`.
pub fn classify_extremum(m: u64) -> Result<ExtremumClass> {
    if m < 2 {
        return Err(Error::domain("classify_extremum", m, "m >= 2"));
    }
    let after = m
        .checked_add(1)
        .ok_or_else(|| Error::range("classify_extremum", m as u128 + 1, u64::MAX))?;
    Ok(ExtremumClass::from_counts(
        summand_count(m - 1),
        summand_count(m),
        summand_count(after),
    ))
}

/// One disagreement between the oracle and the closed form (or published value).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: u64,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct MismatchLog {
    entries: Vec<Mismatch>,
    total: u64,
}

impl MismatchLog {
    fn push(&mut self, n: u64, expected: impl Into<String>, actual: impl Into<String>) {
        self.total += 1;
        if self.entries.len() < MISMATCH_CAP {
            self.entries.push(Mismatch {
                n,
                expected: expected.into(),
                actual: actual.into(),
            });
        }
    }

    fn merge(&mut self, later: MismatchLog) {
        self.total += later.total;
        let room = MISMATCH_CAP - self.entries.len();
        self.entries.extend(later.entries.into_iter().take(room));
    }
}

/// Step-class counts over `[1, N]` plus any mismatches a check found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub check: &'static str,
    pub limit: u64,
    pub count_up: u64,
    pub count_down: u64,
    pub count_flat: u64,
    pub density_up: Ratio<u64>,
    pub density_down: Ratio<u64>,
    pub density_flat: Ratio<u64>,
    /// First [`MISMATCH_CAP`] mismatches in ascending `n`.
    pub mismatches: Vec<Mismatch>,
    pub mismatch_total: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatch_total == 0
    }

    pub fn counts(&self) -> [u64; 3] {
        [self.count_up, self.count_down, self.count_flat]
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Tally {
    up: u64,
    down: u64,
    flat: u64,
    log: MismatchLog,
}

impl Tally {
    fn count(&mut self, w: &Window) {
        match w.l(1).cmp(&w.l(0)) {
            std::cmp::Ordering::Greater => self.up += 1,
            std::cmp::Ordering::Less => self.down += 1,
            std::cmp::Ordering::Equal => self.flat += 1,
        }
    }

    fn merge(&mut self, later: Tally) {
        self.up += later.up;
        self.down += later.down;
        self.flat += later.flat;
        self.log.merge(later.log);
    }

    fn into_report(self, check: &'static str, limit: u64) -> SweepReport {
        SweepReport {
            check,
            limit,
            count_up: self.up,
            count_down: self.down,
            count_flat: self.flat,
            density_up: Ratio::new(self.up, limit),
            density_down: Ratio::new(self.down, limit),
            density_flat: Ratio::new(self.flat, limit),
            mismatches: self.log.entries,
            mismatch_total: self.log.total,
        }
    }
}

/// Representations of `n`, `n+1`, `n+2`, advanced one integer at a time.
struct Window {
    n: u64,
    slots: [ZeckRep; 3],
    head: usize,
}

impl Window {
    fn at(n: u64) -> Result<Self> {
        let table = FibTable::shared();
        let first = decompose(n, table)?;
        let mut second = first.clone();
        second.increment()?;
        let mut third = second.clone();
        third.increment()?;
        Ok(Window {
            n,
            slots: [first, second, third],
            head: 0,
        })
    }

    fn rep(&self, offset: usize) -> &ZeckRep {
        &self.slots[(self.head + offset) % 3]
    }

    fn l(&self, offset: usize) -> u32 {
        self.rep(offset).len() as u32
    }

    fn advance(&mut self) -> Result<()> {
        let h = self.head;
        let mut slot = std::mem::take(&mut self.slots[h]);
        slot.copy_from(&self.slots[(h + 2) % 3]);
        slot.increment()?;
        self.slots[h] = slot;
        self.head = (h + 1) % 3;
        self.n += 1;
        if cfg!(debug_assertions) && self.n.is_multiple_of(CHUNK) {
            debug_assert_eq!(
                self.rep(2),
                &decompose(self.n + 2, FibTable::shared()).unwrap(),
                "successor drifted from decompose at {}",
                self.n + 2
            );
        }
        Ok(())
    }
}

trait Visitor: Send + Sized {
    fn visit(&mut self, w: &Window);
    fn merge(&mut self, later: Self);
}

fn check_limit(what: &'static str, limit: u64, min: u64) -> Result<()> {
    if limit < min {
        return Err(Error::domain(
            what,
            limit,
            if min == 1 { "N >= 1" } else { "N >= 3" },
        ));
    }
    if limit > u64::MAX - 2 {
        return Err(Error::range(what, limit, u64::MAX - 2));
    }
    Ok(())
}

fn sweep<V, F>(limit: u64, chunk: u64, make: F) -> Result<V>
where
    V: Visitor,
    F: Fn(u64) -> Result<V> + Sync,
{
    let starts: Vec<u64> = (0..limit.div_ceil(chunk)).map(|c| 1 + c * chunk).collect();
    let parts: Vec<Result<V>> = starts
        .par_iter()
        .map(|&lo| {
            let hi = (lo + chunk - 1).min(limit);
            let mut visitor = make(lo)?;
            let mut window = Window::at(lo)?;
            loop {
                visitor.visit(&window);
                if window.n == hi {
                    break;
                }
                window.advance()?;
            }
            Ok(visitor)
        })
        .collect();
    let mut parts = parts.into_iter();
    let mut acc = parts.next().expect("limit >= 1 gives one chunk")?;
    for part in parts {
        acc.merge(part?);
    }
    Ok(acc)
}

struct Counts(Tally);

impl Visitor for Counts {
    fn visit(&mut self, w: &Window) {
        self.0.count(w);
    }
    fn merge(&mut self, later: Self) {
        self.0.merge(later.0);
    }
}

/// Counts `n in [1, N]` by the sign of `f(n)`.
pub fn sweep_counts(limit: u64) -> Result<SweepReport> {
    sweep_counts_chunked(limit, CHUNK)
}

fn sweep_counts_chunked(limit: u64, chunk: u64) -> Result<SweepReport> {
    check_limit("sweep_counts", limit, 1)?;
    let Counts(tally) = sweep(limit, chunk, |_| Ok(Counts(Tally::default())))?;
    Ok(tally.into_report("counts", limit))
}

/// [`sweep_counts`], additionally compared with [`TABLE1`] when `N` is one of its rows.
pub fn check_table1(limit: u64) -> Result<SweepReport> {
    let mut report = sweep_counts(limit)?;
    report.check = "table1";
    if let Some((_, expected)) = TABLE1.iter().find(|(n, _)| *n == limit) {
        let actual = report.counts();
        if actual != *expected {
            let mut log = MismatchLog::default();
            log.push(limit, format!("{expected:?}"), format!("{actual:?}"));
            report.mismatches = log.entries;
            report.mismatch_total = log.total;
        }
    }
    Ok(report)
}

struct Partition {
    tally: Tally,
    s1: SetCursor,
    s2: SetCursor,
}

impl Visitor for Partition {
    fn visit(&mut self, w: &Window) {
        self.tally.count(w);
        let oracle = StepClass::from_step(w.l(1) as i32 - w.l(0) as i32);
        let (in_s1, in_s2) = (self.s1.contains(w.n), self.s2.contains(w.n));
        let closed = match (in_s1, in_s2) {
            (true, true) => {
                self.tally
                    .log
                    .push(w.n, "at most one of S1, S2", "S1 and S2");
                return;
            }
            (true, false) => StepClass::Up,
            (false, true) => StepClass::Down,
            (false, false) => StepClass::Flat,
        };
        if closed != oracle {
            self.tally.log.push(w.n, oracle.as_str(), closed.as_str());
        }
    }
    fn merge(&mut self, later: Self) {
        self.tally.merge(later.tally);
    }
}

/// Compares S1/S2 membership with the sign of `f(n)` for every `n in [1, N]`.
pub fn check_partition(limit: u64) -> Result<SweepReport> {
    check_partition_chunked(limit, CHUNK)
}

fn check_partition_chunked(limit: u64, chunk: u64) -> Result<SweepReport> {
    check_limit("check_partition", limit, 1)?;
    let done = sweep(limit, chunk, |lo| {
        Ok(Partition {
            tally: Tally::default(),
            s1: SetCursor::new(SetId::S1, lo)?,
            s2: SetCursor::new(SetId::S2, lo)?,
        })
    })?;
    Ok(done.tally.into_report("partition", limit))
}

struct Extrema {
    tally: Tally,
    s2: SetCursor,
    s3: SetCursor,
}

impl Visitor for Extrema {
    fn visit(&mut self, w: &Window) {
        self.tally.count(w);
        let (a, b, c) = (w.l(0), w.l(1), w.l(2));
        if a < b && b < c {
            self.tally
                .log
                .push(w.n, "no monotone triple", "increasing triple");
        }
        if a > b && b > c {
            self.tally
                .log
                .push(w.n, "no monotone triple", "decreasing triple");
        }
        if a > b && b >= c {
            self.tally.log.push(w.n, "rise after a fall", "no rise");
        }
        let shape = ExtremumClass::from_counts(a, b, c);
        let divot = self.s2.contains(w.n);
        if (shape == ExtremumClass::Divot) != divot {
            self.tally.log.push(
                w.n,
                format!("divot at n+1: {}", shape == ExtremumClass::Divot),
                format!("n in S2: {divot}"),
            );
        }
        let peak = self.s3.contains(w.n);
        if (shape == ExtremumClass::Peak) != peak {
            self.tally.log.push(
                w.n,
                format!("peak at n+1: {}", shape == ExtremumClass::Peak),
                format!("n in S3: {peak}"),
            );
        }
    }
    fn merge(&mut self, later: Self) {
        self.tally.merge(later.tally);
    }
}

/// Over `n in [1, N]`: no strictly monotone triple `L(n), L(n+1), L(n+2)`; every fall
/// is followed by a rise; `n + 1` is a divot iff `n in S2`; `n + 1` is a peak iff `n in S3`.
pub fn check_extrema(limit: u64) -> Result<SweepReport> {
    check_limit("check_extrema", limit, 3)?;
    let done = sweep(limit, CHUNK, |lo| {
        Ok(Extrema {
            tally: Tally::default(),
            s2: SetCursor::new(SetId::S2, lo)?,
            s3: SetCursor::new(SetId::S3, lo)?,
        })
    })?;
    Ok(done.tally.into_report("extrema", limit))
}

struct Bound(Tally);

impl Visitor for Bound {
    fn visit(&mut self, w: &Window) {
        self.0.count(w);
        let f = w.l(1) as i64 - w.l(0) as i64;
        if f > 1 {
            self.0.log.push(w.n, "f(n) <= 1", format!("f(n) = {f}"));
        }
    }
    fn merge(&mut self, later: Self) {
        self.0.merge(later.0);
    }
}

/// Checks that a positive `f(n)` is always 1 on `[1, N]`, and that every witness
/// `F_{2k+1} - 1 <= N` attains `f = 1 - k`.
pub fn check_bound(limit: u64) -> Result<SweepReport> {
    check_limit("check_bound", limit, 1)?;
    let Bound(mut tally) = sweep(limit, CHUNK, |_| Ok(Bound(Tally::default())))?;
    let table = FibTable::shared();
    let mut k = 1;
    while let Ok(w) = deep_witness(k, table) {
        if w.n >= limit {
            break;
        }
        let f = summand_count(w.n + 1) as i32 - summand_count(w.n) as i32;
        if f != w.drop {
            tally
                .log
                .push(w.n, format!("f(n) = {}", w.drop), format!("f(n) = {f}"));
        }
        k += 1;
    }
    Ok(tally.into_report("bound", limit))
}

struct Columns {
    tally: Tally,
    ks: RangeInclusive<u32>,
    pair: bool,
    hits: Vec<Vec<u64>>,
}

impl Visitor for Columns {
    fn visit(&mut self, w: &Window) {
        self.tally.count(w);
        let rep = w.rep(0);
        for (slot, k) in self.ks.clone().enumerate() {
            if rep.contains(k) && (!self.pair || rep.contains(k + 2)) {
                self.hits[slot].push(w.n);
            }
        }
    }
    fn merge(&mut self, later: Self) {
        self.tally.merge(later.tally);
        for (mine, theirs) in self.hits.iter_mut().zip(later.hits) {
            mine.extend(theirs);
        }
    }
}

fn check_columns(limit: u64, ks: RangeInclusive<u32>, pair: bool) -> Result<SweepReport> {
    let what = if pair { "check_zpair" } else { "check_zk" };
    check_limit(what, limit, 1)?;
    for k in ks.clone() {
        let set = if pair { SetId::Zpair(k) } else { SetId::Z(k) };
        set.validate()?;
    }
    let done = sweep(limit, CHUNK, |_| {
        Ok(Columns {
            tally: Tally::default(),
            ks: ks.clone(),
            pair,
            hits: vec![Vec::new(); ks.clone().count()],
        })
    })?;
    let mut diffs: Vec<(u64, u32, bool)> = Vec::new();
    for (k, oracle) in ks.clone().zip(&done.hits) {
        let closed = if pair {
            zpair_elements(k, limit)?
        } else {
            zk_elements(k, limit)?
        };
        let (mut i, mut j) = (0, 0);
        while i < oracle.len() || j < closed.len() {
            match (oracle.get(i), closed.get(j)) {
                (Some(a), Some(b)) if a == b => {
                    i += 1;
                    j += 1;
                }
                (Some(&a), Some(&b)) if a < b => {
                    diffs.push((a, k, true));
                    i += 1;
                }
                (Some(&a), None) => {
                    diffs.push((a, k, true));
                    i += 1;
                }
                (_, Some(&b)) => {
                    diffs.push((b, k, false));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
    }
    diffs.sort_unstable();
    let mut tally = done.tally;
    for (n, k, in_oracle) in diffs {
        let name = if pair { SetId::Zpair(k) } else { SetId::Z(k) };
        let (expected, actual) = if in_oracle {
            (format!("in {name}"), "not generated")
        } else {
            (format!("not in {name}"), "generated")
        };
        tally.log.push(n, expected, actual);
    }
    Ok(tally.into_report(if pair { "zpair" } else { "zk" }, limit))
}

/// Compares `zk_elements(k, N)` with the integers `<= N` whose representation holds `F_k`.
pub fn check_zk(limit: u64, ks: RangeInclusive<u32>) -> Result<SweepReport> {
    check_columns(limit, ks, false)
}

/// Compares `zpair_elements(k, N)` with the integers `<= N` holding both `F_k` and `F_{k+2}`.
pub fn check_zpair(limit: u64, ks: RangeInclusive<u32>) -> Result<SweepReport> {
    check_columns(limit, ks, true)
}

/// Digits of precision used for the limiting densities.
pub const DENSITY_DIGITS: u32 = 18;

/// Limiting densities as rationals within `10^-18` of the true values:
/// `(3 - √5)/2 = φ/(1+2φ)` for rises and flats, `√5 - 2 = φ/(3φ+2)` for falls.
pub fn density_limits() -> (Ratio<u128>, Ratio<u128>) {
    let scale = 10u128.pow(DENSITY_DIGITS);
    let root5 = isqrt_u128(5 * scale * scale);
    let up = Ratio::new(3 * scale - root5, 2 * scale);
    let down = Ratio::new(root5 - 2 * scale, scale);
    (up, down)
}

/// Nearest `f64` to a rational (to within a couple of ulps).
pub fn ratio_f64(r: &Ratio<u128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Distance of the observed densities from their limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityGap {
    pub limit: u64,
    pub counts: [u64; 3],
    /// `[up, down, flat]`, each `|count/N - limit density|` using the rational limits.
    pub gaps: [Ratio<u128>; 3],
    /// Bound on how far the rational limits are from the irrational ones.
    pub constant_error: Ratio<u128>,
}

impl DensityGap {
    pub fn gaps_f64(&self) -> [f64; 3] {
        self.gaps.map(|g| ratio_f64(&g))
    }

    /// True when every gap, widened by `constant_error`, is strictly below `tolerance`.
    pub fn within(&self, tolerance: Ratio<u128>) -> bool {
        self.gaps
            .iter()
            .all(|g| *g + self.constant_error < tolerance)
    }

    pub fn within_f64(&self, tolerance: f64) -> bool {
        let err = ratio_f64(&self.constant_error);
        self.gaps_f64().iter().all(|g| g + err < tolerance)
    }

    /// Suggested tolerance for a sweep of `N`: `2/√N`.
    pub fn default_tolerance(limit: u64) -> f64 {
        2.0 / (limit as f64).sqrt()
    }
}

/// Observed densities over `[1, N]` against the limiting densities.
pub fn density_gap(limit: u64) -> Result<DensityGap> {
    let report = sweep_counts(limit)?;
    Ok(density_gap_from(&report))
}

/// Same as [`density_gap`] for counts already swept.
pub fn density_gap_from(report: &SweepReport) -> DensityGap {
    let (up, down) = density_limits();
    let n = report.limit as u128;
    let dist = |count: u64, target: Ratio<u128>| {
        let observed = Ratio::new(count as u128, n);
        if observed > target {
            observed - target
        } else {
            target - observed
        }
    };
    DensityGap {
        limit: report.limit,
        counts: report.counts(),
        gaps: [
            dist(report.count_up, up),
            dist(report.count_down, down),
            dist(report.count_flat, up),
        ],
        constant_error: Ratio::new(1, 10u128.pow(DENSITY_DIGITS)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{s2_element, s3_element};

    #[test]
    fn extremum_examples() {
        assert_eq!(classify_extremum(4).unwrap(), ExtremumClass::Peak);
        assert_eq!(classify_extremum(5).unwrap(), ExtremumClass::Divot);
        assert_eq!(classify_extremum(2).unwrap(), ExtremumClass::Neither);
        assert!(matches!(classify_extremum(1), Err(Error::Domain { .. })));
        assert!(matches!(
            classify_extremum(u64::MAX),
            Err(Error::Range { .. })
        ));
    }

    #[test]
    fn table1_small_rows() {
        for &(n, expected) in &TABLE1[..3] {
            let r = check_table1(n).unwrap();
            assert_eq!(r.counts(), expected, "N = {n}");
            assert!(r.passed());
        }
    }

    #[test]
    fn table1_row_10k_is_one_short() {
        // the reference row sums to 9999: it misses n = 10000, where L drops from 6 to 5
        let r = check_table1(10_000).unwrap();
        assert_eq!(r.counts(), [3_819, 2_361, 3_820]);
        assert_eq!(r.count_up + r.count_down + r.count_flat, 10_000);
        assert_eq!(r.mismatch_total, 1);
        assert_eq!(r.mismatches[0].n, 10_000);
        assert_eq!(summand_count(10_000), 6);
        assert_eq!(summand_count(10_001), 5);
    }

    #[test]
    fn densities_are_exact() {
        let r = sweep_counts(10).unwrap();
        assert_eq!(r.density_up, Ratio::new(3, 10));
        assert_eq!(r.density_down, Ratio::new(1, 5));
        assert_eq!(r.density_flat, Ratio::new(1, 2));
    }

    #[test]
    fn partition_small() {
        let r = check_partition(10).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
        let r = check_partition(1).unwrap();
        assert!(r.passed());
        assert_eq!(r.counts(), [0, 0, 1]);
        assert!(check_partition(10_000).unwrap().passed());
    }

    #[test]
    fn extrema_small() {
        let r = check_extrema(20).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
        let divots: Vec<u64> = (1..=20)
            .filter(|&n| classify_extremum(n + 1).unwrap() == ExtremumClass::Divot)
            .collect();
        assert_eq!(divots, [4, 7, 12, 17, 20]);
        assert_eq!(
            divots,
            (1..=5).map(|i| s2_element(i).unwrap()).collect::<Vec<_>>()
        );
        let peaks: Vec<u64> = (1..=20)
            .filter(|&n| classify_extremum(n + 1).unwrap() == ExtremumClass::Peak)
            .collect();
        assert_eq!(peaks, [3, 11, 16]);
        assert_eq!(
            peaks,
            (0..=2).map(|i| s3_element(i).unwrap()).collect::<Vec<_>>()
        );
        assert!(check_extrema(2).is_err());
    }

    #[test]
    fn bound_small() {
        assert!(check_bound(1).unwrap().passed());
        assert!(check_bound(13).unwrap().passed());
        assert!(check_bound(100_000).unwrap().passed());
    }

    #[test]
    fn columns_small() {
        assert!(check_zk(20_000, 2..=15).unwrap().passed());
        assert!(check_zpair(20_000, 2..=12).unwrap().passed());
        assert!(check_zk(100, 1..=3).is_err());
    }

    #[test]
    fn chunking_does_not_change_reports() {
        let a = sweep_counts_chunked(300_000, CHUNK).unwrap();
        let b = sweep_counts_chunked(300_000, 777).unwrap();
        let c = sweep_counts_chunked(300_000, 300_000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        let p = check_partition_chunked(50_000, 1_001).unwrap();
        assert_eq!(p, check_partition(50_000).unwrap());
    }

    #[test]
    fn mismatch_log_caps_and_orders() {
        let mut first = MismatchLog::default();
        for n in 0..80 {
            first.push(n, "a", "b");
        }
        let mut second = MismatchLog::default();
        for n in 80..200 {
            second.push(n, "a", "b");
        }
        assert_eq!(second.entries.len(), MISMATCH_CAP);
        first.merge(second);
        assert_eq!(first.total, 200);
        assert_eq!(first.entries.len(), MISMATCH_CAP);
        assert!(first.entries.windows(2).all(|w| w[0].n < w[1].n));
    }

    #[test]
    fn density_constants() {
        let (up, down) = density_limits();
        assert!((ratio_f64(&up) - 0.381_966_011_250_105_1).abs() < 1e-15);
        assert!((ratio_f64(&down) - 0.236_067_977_499_789_7).abs() < 1e-15);
    }

    #[test]
    fn density_gap_small_n() {
        // (3/10, 2/10, 5/10) against (0.381966…, 0.236067…, 0.381966…)
        let g = density_gap(10).unwrap();
        let f = g.gaps_f64();
        assert!((f[0] - 0.081_966_011_250_105).abs() < 1e-12);
        assert!((f[1] - 0.036_067_977_499_790).abs() < 1e-12);
        assert!((f[2] - 0.118_033_988_749_895).abs() < 1e-12);
        assert!(g.within_f64(0.12));
        assert!(!g.within_f64(0.07));
        let g = density_gap(1_000).unwrap();
        assert!(g.within(Ratio::new(1, 1_000)));
    }

    #[test]
    fn limits_rejected() {
        assert!(matches!(sweep_counts(0), Err(Error::Domain { .. })));
        assert!(matches!(sweep_counts(u64::MAX), Err(Error::Range { .. })));
    }
}
