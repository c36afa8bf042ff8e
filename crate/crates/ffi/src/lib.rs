//! C ABI for `zeckstep`.
//!
//! Every fallible function returns a [`ZeckStatus`] and writes its result through an
//! out-pointer. Tables and sweep reports are opaque heap handles owned by the caller
//! and released with the matching `*_free` function. Panics never cross the boundary;
//! they surface as `ZECK_STATUS_PANIC`.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use zeckstep::verify::{self, ExtremumClass, SweepReport};
use zeckstep::{Error, FibTable, SetId, StepClass, ZeckRep};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeckStatus {
    Ok = 0,
    NullPointer = 1,
    /// Input or result outside the supported integer range.
    Range = 2,
    /// Argument outside the operation's domain (e.g. `n = 0` where `n >= 1` is required).
    Domain = 3,
    /// Output buffer too small; the required length was written to `out_len`.
    BufferTooSmall = 4,
    /// Indices do not form a Zeckendorf representation.
    InvalidRep = 5,
    Panic = 6,
}

impl From<Error> for ZeckStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::Range { .. } => ZeckStatus::Range,
            Error::Domain { .. } => ZeckStatus::Domain,
            Error::InvalidRep(_) => ZeckStatus::InvalidRep,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeckStepClass {
    Up = 1,
    Down = -1,
    Flat = 0,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeckExtremum {
    Neither = 0,
    Peak = 1,
    Divot = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeckSetKind {
    S1 = 0,
    S2 = 1,
    S3 = 2,
    /// Needs `k >= 2`.
    Z = 3,
    /// `Z(k, k+2)`; needs `k >= 2`.
    Zpair = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeckCheck {
    /// Plain counts, compared with the reference table when `n` is one of its rows.
    Table1 = 0,
    Partition = 1,
    Extrema = 2,
    Bound = 3,
    /// `Z(k)` for `k = 2..=15`.
    Zk = 4,
    /// `Z(k, k+2)` for `k = 2..=12`.
    Zpair = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ZeckCounts {
    pub up: u64,
    pub down: u64,
    pub flat: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ZeckDensity {
    pub gap_up: f64,
    pub gap_down: f64,
    pub gap_flat: f64,
    /// Bound on the error of the limiting constants themselves.
    pub constant_error: f64,
}

/// Opaque Fibonacci table.
pub struct ZeckTable(FibTable);

/// Opaque sweep report.
pub struct ZeckReport(SweepReport);

fn guard(f: impl FnOnce() -> Result<(), ZeckStatus>) -> ZeckStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ZeckStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => ZeckStatus::Panic,
    }
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, ZeckStatus> {
    p.as_mut().ok_or(ZeckStatus::NullPointer)
}

unsafe fn table<'a>(p: *const ZeckTable) -> Result<&'a FibTable, ZeckStatus> {
    p.as_ref().map(|t| &t.0).ok_or(ZeckStatus::NullPointer)
}

unsafe fn slice<'a, T>(p: *const T, len: usize) -> Result<&'a [T], ZeckStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(ZeckStatus::NullPointer);
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn write_buf<T: Copy>(
    src: &[T],
    dst: *mut T,
    capacity: usize,
    out_len: *mut usize,
) -> Result<(), ZeckStatus> {
    *out(out_len)? = src.len();
    if src.len() > capacity {
        return Err(ZeckStatus::BufferTooSmall);
    }
    if !src.is_empty() {
        if dst.is_null() {
            return Err(ZeckStatus::NullPointer);
        }
        ptr::copy_nonoverlapping(src.as_ptr(), dst, src.len());
    }
    Ok(())
}

fn set_id(kind: ZeckSetKind, k: u32) -> SetId {
    match kind {
        ZeckSetKind::S1 => SetId::S1,
        ZeckSetKind::S2 => SetId::S2,
        ZeckSetKind::S3 => SetId::S3,
        ZeckSetKind::Z => SetId::Z(k),
        ZeckSetKind::Zpair => SetId::Zpair(k),
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn zeck_status_message(status: ZeckStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        ZeckStatus::Ok => b"ok\0",
        ZeckStatus::NullPointer => b"null pointer argument\0",
        ZeckStatus::Range => b"value outside the supported integer range\0",
        ZeckStatus::Domain => b"argument outside the domain of the operation\0",
        ZeckStatus::BufferTooSmall => b"output buffer too small\0",
        ZeckStatus::InvalidRep => b"indices are not a Zeckendorf representation\0",
        ZeckStatus::Panic => b"internal error\0",
    };
    s.as_ptr() as *const c_char
}

/// Table covering every `u64`. Never returns NULL.
#[no_mangle]
pub extern "C" fn zeck_table_new() -> *mut ZeckTable {
    Box::into_raw(Box::new(ZeckTable(FibTable::new())))
}

/// Table holding `F_0 ..= F_max_index` (`2 <= max_index <= 93`).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zeck_table_with_max_index(
    max_index: u32,
    out_table: *mut *mut ZeckTable,
) -> ZeckStatus {
    guard(|| {
        let slot = out(out_table)?;
        let t = FibTable::with_max_index(max_index)?;
        *slot = Box::into_raw(Box::new(ZeckTable(t)));
        Ok(())
    })
}

/// # Safety
/// `table` must come from this library and not be used afterwards. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn zeck_table_free(table: *mut ZeckTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_table_max_index(
    t: *const ZeckTable,
    out_index: *mut u32,
) -> ZeckStatus {
    guard(|| {
        *out(out_index)? = table(t)?.max_index();
        Ok(())
    })
}

/// Writes the increasing Fibonacci indices of `n` into `out_indices`.
///
/// `*out_len` always receives the number of indices; if it exceeds `capacity`
/// nothing is copied and `ZECK_STATUS_BUFFER_TOO_SMALL` is returned. 48 slots
/// always suffice.
///
/// # Safety
/// `out_indices` must be valid for `capacity` writes; other pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_decompose(
    t: *const ZeckTable,
    n: u64,
    out_indices: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> ZeckStatus {
    guard(|| {
        let rep = zeckstep::decompose(n, table(t)?)?;
        write_buf(rep.indices(), out_indices, capacity, out_len)
    })
}

/// # Safety
/// `indices` must be valid for `len` reads.
#[no_mangle]
pub unsafe extern "C" fn zeck_recompose(
    t: *const ZeckTable,
    indices: *const u32,
    len: usize,
    out_value: *mut u64,
) -> ZeckStatus {
    guard(|| {
        let rep = ZeckRep::new(slice(indices, len)?.to_vec())?;
        *out(out_value)? = zeckstep::recompose(&rep, table(t)?)?;
        Ok(())
    })
}

/// Representation of one more than the given one, computed on the indices.
///
/// # Safety
/// As for [`zeck_recompose`] and [`zeck_decompose`].
#[no_mangle]
pub unsafe extern "C" fn zeck_successor(
    indices: *const u32,
    len: usize,
    out_indices: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> ZeckStatus {
    guard(|| {
        let rep = ZeckRep::new(slice(indices, len)?.to_vec())?;
        let next = zeckstep::successor(&rep)?;
        write_buf(next.indices(), out_indices, capacity, out_len)
    })
}

/// `L(n)`; `L(0) = 0`.
///
/// # Safety
/// `out_count` must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_summand_count(n: u64, out_count: *mut u32) -> ZeckStatus {
    guard(|| {
        *out(out_count)? = zeckstep::summand_count(n);
        Ok(())
    })
}

/// `f(n) = L(n+1) - L(n)`, `n >= 1`.
///
/// # Safety
/// `out_step` must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_step(n: u64, out_step: *mut i32) -> ZeckStatus {
    guard(|| {
        *out(out_step)? = zeckstep::step(n)?;
        Ok(())
    })
}

/// # Safety
/// `out_class` must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_classify_step(n: u64, out_class: *mut ZeckStepClass) -> ZeckStatus {
    guard(|| {
        *out(out_class)? = match zeckstep::classify_step(n)? {
            StepClass::Up => ZeckStepClass::Up,
            StepClass::Down => ZeckStepClass::Down,
            StepClass::Flat => ZeckStepClass::Flat,
        };
        Ok(())
    })
}

/// Shape of `L` at `m >= 2`.
///
/// # Safety
/// `out_class` must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_classify_extremum(
    m: u64,
    out_class: *mut ZeckExtremum,
) -> ZeckStatus {
    guard(|| {
        *out(out_class)? = match verify::classify_extremum(m)? {
            ExtremumClass::Peak => ZeckExtremum::Peak,
            ExtremumClass::Divot => ZeckExtremum::Divot,
            ExtremumClass::Neither => ZeckExtremum::Neither,
        };
        Ok(())
    })
}

/// `n = F_{2k+1} - 1` and `drop = 1 - k`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_deep_witness(
    t: *const ZeckTable,
    k: u32,
    out_n: *mut u64,
    out_drop: *mut i32,
) -> ZeckStatus {
    guard(|| {
        let w = zeckstep::deep_witness(k, table(t)?)?;
        *out(out_n)? = w.n;
        *out(out_drop)? = w.drop;
        Ok(())
    })
}

/// `⌊mφ⌋`.
///
/// # Safety
/// `out_value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_floor_n_phi(m: u64, out_value: *mut u64) -> ZeckStatus {
    guard(|| {
        *out(out_value)? = zeckstep::floor_n_phi(m)?;
        Ok(())
    })
}

/// `⌊m/φ⌋`.
///
/// # Safety
/// `out_value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_floor_div_phi(m: u64, out_value: *mut u64) -> ZeckStatus {
    guard(|| {
        *out(out_value)? = zeckstep::floor_div_phi(m)?;
        Ok(())
    })
}

/// Membership of `n` in a closed-form set; `k` is ignored for S1/S2/S3.
///
/// # Safety
/// `out_member` must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_set_contains(
    kind: ZeckSetKind,
    k: u32,
    n: u64,
    out_member: *mut bool,
) -> ZeckStatus {
    guard(|| {
        *out(out_member)? = zeckstep::membership(set_id(kind, k), n)?;
        Ok(())
    })
}

/// Elements `<= limit` of a closed-form set, increasing. Same buffer protocol as
/// [`zeck_decompose`].
///
/// # Safety
/// `out_elements` must be valid for `capacity` writes.
#[no_mangle]
pub unsafe extern "C" fn zeck_set_elements(
    kind: ZeckSetKind,
    k: u32,
    limit: u64,
    out_elements: *mut u64,
    capacity: usize,
    out_len: *mut usize,
) -> ZeckStatus {
    guard(|| {
        let elems = zeckstep::elements_up_to(set_id(kind, k), limit)?;
        write_buf(&elems, out_elements, capacity, out_len)
    })
}

/// Runs a sweep over `[1, n]` and hands back a report handle.
///
/// # Safety
/// `out_report` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zeck_verify(
    check: ZeckCheck,
    n: u64,
    out_report: *mut *mut ZeckReport,
) -> ZeckStatus {
    guard(|| {
        let slot = out(out_report)?;
        let report = match check {
            ZeckCheck::Table1 => verify::check_table1(n),
            ZeckCheck::Partition => verify::check_partition(n),
            ZeckCheck::Extrema => verify::check_extrema(n),
            ZeckCheck::Bound => verify::check_bound(n),
            ZeckCheck::Zk => verify::check_zk(n, 2..=15),
            ZeckCheck::Zpair => verify::check_zpair(n, 2..=12),
        }?;
        *slot = Box::into_raw(Box::new(ZeckReport(report)));
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_report_counts(
    r: *const ZeckReport,
    out_counts: *mut ZeckCounts,
) -> ZeckStatus {
    guard(|| {
        let r = &r.as_ref().ok_or(ZeckStatus::NullPointer)?.0;
        *out(out_counts)? = ZeckCounts {
            up: r.count_up,
            down: r.count_down,
            flat: r.count_flat,
        };
        Ok(())
    })
}

/// Total number of mismatches found (not capped).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_report_mismatch_total(
    r: *const ZeckReport,
    out_total: *mut u64,
) -> ZeckStatus {
    guard(|| {
        let r = &r.as_ref().ok_or(ZeckStatus::NullPointer)?.0;
        *out(out_total)? = r.mismatch_total;
        Ok(())
    })
}

/// `n` of the `index`-th recorded mismatch (at most 100 are kept).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_report_mismatch_at(
    r: *const ZeckReport,
    index: usize,
    out_n: *mut u64,
) -> ZeckStatus {
    guard(|| {
        let r = &r.as_ref().ok_or(ZeckStatus::NullPointer)?.0;
        let m = r.mismatches.get(index).ok_or(ZeckStatus::Range)?;
        *out(out_n)? = m.n;
        Ok(())
    })
}

/// # Safety
/// `r` must come from [`zeck_verify`] and not be used afterwards. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn zeck_report_free(r: *mut ZeckReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Distance of the observed densities over `[1, n]` from their limits.
///
/// # Safety
/// `out_density` must be valid.
#[no_mangle]
pub unsafe extern "C" fn zeck_density_gap(n: u64, out_density: *mut ZeckDensity) -> ZeckStatus {
    guard(|| {
        let slot = out(out_density)?;
        let g = verify::density_gap(n)?;
        let [up, down, flat] = g.gaps_f64();
        *slot = ZeckDensity {
            gap_up: up,
            gap_down: down,
            gap_flat: flat,
            constant_error: verify::ratio_f64(&g.constant_error),
        };
        Ok(())
    })
}
