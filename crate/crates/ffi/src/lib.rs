//! C ABI over `enumgeo`.
//!
//! Every function returns an [`EgStatus`]; results go through out-pointers.
//! Objects are opaque handles released with their `_free` function, and
//! strings returned to the caller are released with [`eg_string_free`].
//! After a non-OK status, [`eg_last_error_message`] describes the failure on
//! the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use enumgeo::arith;
use enumgeo::invariants::{self, Chamber, MochizukiInput};
use enumgeo::lattice::{self, LatticeVector, SurfaceLattice};
use enumgeo::modular::{self, EisensteinWeight};
use enumgeo::verify::{self, Suite};
use enumgeo::QSeries;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    SeriesError = 4,
    LatticeError = 5,
    InvariantError = 6,
    ParseError = 7,
    Panic = 8,
}

/// Truncated q-series with exact rational coefficients.
pub struct EgSeries(QSeries);

/// Integral lattice with an optional canonical class.
pub struct EgLattice(SurfaceLattice);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl ToString) {
    let msg = msg.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Fail(EgStatus, String);

impl Fail {
    fn new(status: EgStatus, e: impl ToString) -> Self {
        Fail(status, e.to_string())
    }
}

type FfiResult = Result<(), Fail>;

fn guard(f: impl FnOnce() -> FfiResult) -> EgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            EgStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            EgStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail::new(EgStatus::NullPointer, "null pointer"))
}

unsafe fn write<T>(out: *mut T, value: T) -> FfiResult {
    if out.is_null() {
        return Err(Fail::new(EgStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::new(EgStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail::new(EgStatus::InvalidUtf8, e))
}

fn c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|e| Fail::new(EgStatus::InvalidArgument, e))
}

unsafe fn emit_series(out: *mut *mut EgSeries, s: QSeries) -> FfiResult {
    write(out, Box::into_raw(Box::new(EgSeries(s))))
}

fn series_err(e: impl ToString) -> Fail {
    Fail::new(EgStatus::SeriesError, e)
}

fn lattice_err(e: impl ToString) -> Fail {
    Fail::new(EgStatus::LatticeError, e)
}

fn invariant_err(e: impl ToString) -> Fail {
    Fail::new(EgStatus::InvariantError, e)
}

/// Message for the last failed call on this thread, or NULL. The caller owns
/// the returned string.
#[no_mangle]
pub extern "C" fn eg_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |m| m.clone().into_raw()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn eg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `Π(1 − qⁿ)^e` with shift `e/24`, to `order`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_series_eta_quotient(exponent: i64, order: usize, out: *mut *mut EgSeries) -> EgStatus {
    guard(|| emit_series(out, modular::eta_quotient(exponent, order)))
}

/// Eisenstein series of weight 2, 4 or 6.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_series_eisenstein(weight: i64, order: usize, out: *mut *mut EgSeries) -> EgStatus {
    guard(|| {
        let w = EisensteinWeight::new(weight).map_err(|e| Fail::new(EgStatus::InvalidArgument, e))?;
        emit_series(out, modular::eisenstein(w, order))
    })
}

/// Parses the JSON form produced by [`eg_series_to_json`].
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_series_from_json(json: *const c_char, out: *mut *mut EgSeries) -> EgStatus {
    guard(|| {
        let s: QSeries =
            serde_json::from_str(read_str(json)?).map_err(|e| Fail::new(EgStatus::ParseError, e))?;
        emit_series(out, s)
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_series_add(a: *const EgSeries, b: *const EgSeries, out: *mut *mut EgSeries) -> EgStatus {
    guard(|| emit_series(out, deref(a)?.0.add(&deref(b)?.0).map_err(series_err)?))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_series_mul(a: *const EgSeries, b: *const EgSeries, out: *mut *mut EgSeries) -> EgStatus {
    guard(|| emit_series(out, deref(a)?.0.mul(&deref(b)?.0).map_err(series_err)?))
}

/// Integer power; negative exponents need an invertible constant term.
///
/// # Safety
/// `a` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_series_pow(a: *const EgSeries, exponent: i64, out: *mut *mut EgSeries) -> EgStatus {
    guard(|| emit_series(out, deref(a)?.0.pow_int(exponent).map_err(series_err)?))
}

/// # Safety
/// `a` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_series_invert(a: *const EgSeries, out: *mut *mut EgSeries) -> EgStatus {
    guard(|| emit_series(out, deref(a)?.0.invert().map_err(series_err)?))
}

/// # Safety
/// `s` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_series_order(s: *const EgSeries, out: *mut usize) -> EgStatus {
    guard(|| write(out, deref(s)?.0.order()))
}

/// Coefficient of `q^k` as `"n"` or `"n/d"`. The caller owns the string.
///
/// # Safety
/// `s` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_series_coefficient(s: *const EgSeries, k: i64, out: *mut *mut c_char) -> EgStatus {
    guard(|| {
        let c = deref(s)?.0.coefficient(k).map_err(series_err)?;
        write(out, c_string(arith::fmt_rational(&c))?)
    })
}

/// Shift of the series as `"n"` or `"n/d"`. The caller owns the string.
///
/// # Safety
/// `s` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_series_shift(s: *const EgSeries, out: *mut *mut c_char) -> EgStatus {
    guard(|| write(out, c_string(arith::fmt_rational(deref(s)?.0.shift()))?))
}

/// # Safety
/// `s` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_series_to_json(s: *const EgSeries, out: *mut *mut c_char) -> EgStatus {
    guard(|| {
        let text = serde_json::to_string(&deref(s)?.0).map_err(|e| Fail::new(EgStatus::ParseError, e))?;
        write(out, c_string(text)?)
    })
}

/// # Safety
/// `s` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn eg_series_free(s: *mut EgSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

unsafe fn emit_lattice(out: *mut *mut EgLattice, l: SurfaceLattice) -> FfiResult {
    write(out, Box::into_raw(Box::new(EgLattice(l))))
}

/// The half-K3 lattice `Γ^{1,9}` with aliases `F`, `B`, `K`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_lattice_gamma19(out: *mut *mut EgLattice) -> EgStatus {
    guard(|| emit_lattice(out, lattice::make_gamma19()))
}

/// ℙ² blown up at `k` points.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_lattice_blowup_p2(k: usize, out: *mut *mut EgLattice) -> EgStatus {
    guard(|| emit_lattice(out, SurfaceLattice::blowup_p2(k)))
}

/// The positive-definite E8 lattice.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_lattice_e8(out: *mut *mut EgLattice) -> EgStatus {
    guard(|| emit_lattice(out, lattice::make_e8()))
}

/// # Safety
/// `l` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_lattice_rank(l: *const EgLattice, out: *mut usize) -> EgStatus {
    guard(|| write(out, deref(l)?.0.rank()))
}

unsafe fn coords(l: &SurfaceLattice, v: *const i64) -> Result<LatticeVector, Fail> {
    if v.is_null() {
        return Err(Fail::new(EgStatus::NullPointer, "null vector"));
    }
    Ok(LatticeVector(std::slice::from_raw_parts(v, l.rank()).to_vec()))
}

/// `u·v` for coordinate arrays of length `rank`.
///
/// # Safety
/// `l` must be a live handle, `u` and `v` must point to `rank` integers,
/// and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_lattice_pair(
    l: *const EgLattice,
    u: *const i64,
    v: *const i64,
    out: *mut i64,
) -> EgStatus {
    guard(|| {
        let l = &deref(l)?.0;
        write(out, l.pair(&coords(l, u)?, &coords(l, v)?).map_err(lattice_err)?)
    })
}

/// `u·v` for vectors written as label expressions such as `"3e0-e1"` or `"B+2F"`.
///
/// # Safety
/// `l` must be a live handle, `u` and `v` NUL-terminated strings, and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_lattice_pair_str(
    l: *const EgLattice,
    u: *const c_char,
    v: *const c_char,
    out: *mut i64,
) -> EgStatus {
    guard(|| {
        let l = &deref(l)?.0;
        let u = l.parse_vector(read_str(u)?).map_err(lattice_err)?;
        let v = l.parse_vector(read_str(v)?).map_err(lattice_err)?;
        write(out, l.pair(&u, &v).map_err(lattice_err)?)
    })
}

/// Adjunction genus of a class given as a label expression.
///
/// # Safety
/// `l` must be a live handle, `beta` a NUL-terminated string, and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_lattice_genus(l: *const EgLattice, beta: *const c_char, out: *mut i64) -> EgStatus {
    guard(|| {
        let l = &deref(l)?.0;
        let b = l.parse_vector(read_str(beta)?).map_err(lattice_err)?;
        write(out, l.adjunction_genus(&b).map_err(lattice_err)?)
    })
}

/// # Safety
/// `l` must be a live handle; `positive` and `negative` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_lattice_signature(
    l: *const EgLattice,
    positive: *mut usize,
    negative: *mut usize,
) -> EgStatus {
    guard(|| {
        let (p, q) = deref(l)?.0.signature().map_err(lattice_err)?;
        write(positive, p)?;
        write(negative, q)
    })
}

/// Number of vectors of norm exactly `norm` in a positive-definite lattice.
///
/// # Safety
/// `l` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_lattice_count_norm(l: *const EgLattice, norm: i64, out: *mut u64) -> EgStatus {
    guard(|| {
        let counts = lattice::enumerate_vectors(&deref(l)?.0, norm).map_err(lattice_err)?;
        write(out, counts.get(&norm).copied().unwrap_or(0))
    })
}

/// # Safety
/// `l` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn eg_lattice_free(l: *mut EgLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Number of (−1)-classes on ℙ² blown up at `k` points with `e0`-degree at
/// most `degree_bound`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_exceptional_count(k: usize, degree_bound: i64, out: *mut usize) -> EgStatus {
    guard(|| write(out, lattice::exceptional_classes(k, degree_bound).len()))
}

/// SW invariant of ℙ² for `c = c_coeff·h`; `chamber` is `+1` or `−1`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_sw_p2(c_coeff: i64, chamber: i32, out: *mut i64) -> EgStatus {
    guard(|| {
        let ch = match chamber {
            1 => Chamber::Plus,
            -1 => Chamber::Minus,
            _ => return Err(Fail::new(EgStatus::InvalidArgument, "chamber must be +1 or -1")),
        };
        write(out, invariants::sw_p2(c_coeff, ch).map_err(invariant_err)?)
    })
}

/// `(−1)^d·C(p_g − 1, d)` as a decimal string. The caller owns the string.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_sw_closed_form(d: i64, p_g: i64, out: *mut *mut c_char) -> EgStatus {
    guard(|| {
        let v = invariants::sw_closed_form(d, p_g).map_err(invariant_err)?;
        write(out, c_string(v.to_string())?)
    })
}

/// Evaluates the wall-crossing sum for a JSON decomposition document and
/// returns `{"value": [num, den], "warnings": [...]}`. The caller owns the string.
///
/// # Safety
/// `input` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_mochizuki_sum_json(input: *const c_char, out: *mut *mut c_char) -> EgStatus {
    guard(|| {
        let parsed: MochizukiInput =
            serde_json::from_str(read_str(input)?).map_err(|e| Fail::new(EgStatus::ParseError, e))?;
        let outcome = invariants::mochizuki_sum(&parsed).map_err(invariant_err)?;
        let text = serde_json::to_string(&outcome).map_err(|e| Fail::new(EgStatus::ParseError, e))?;
        write(out, c_string(text)?)
    })
}

/// Runs the full verification suite. `failed` receives the number of failed
/// checks and `report` (if not NULL) the JSON report, owned by the caller.
///
/// # Safety
/// `failed` must be valid for writes; `report` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eg_verify_all(order: usize, failed: *mut usize, report: *mut *mut c_char) -> EgStatus {
    guard(|| {
        let reports = verify::run_suite(Suite::All, order);
        let n = reports.iter().filter(|r| r.status == verify::Status::Fail).count();
        write(failed, n)?;
        if !report.is_null() {
            let text = serde_json::to_string(&reports).map_err(|e| Fail::new(EgStatus::ParseError, e))?;
            write(report, c_string(text)?)?;
        }
        Ok(())
    })
}
