//! C ABI for the kcatalan library.
//!
//! Conventions:
//! - Every fallible call returns a [`KcStatus`]; results come back
//!   through out-pointers.
//! - Counts cross the boundary as NUL-terminated decimal strings
//!   allocated here; release them with [`kc_string_free`].
//! - [`KcWeights`] and [`KcMatrix`] are opaque handles; release them
//!   with their `_free` functions. A null weights handle means the
//!   all-ones vector where one is accepted.
//! - A `modulus` argument of 0 means "no modulus" on counting calls;
//!   cycle detection requires a modulus of at least 2.
//! - On any non-`Ok` status, [`kc_last_error_message`] returns a
//!   human-readable reason, valid on the calling thread until the next
//!   failing call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use kcatalan::counting;
use kcatalan::error::Error;
use kcatalan::periodicity::{self, Hypothesis};
use kcatalan::render;
use kcatalan::transfer::{self, TransferMatrix};
use kcatalan::weights::WeightVector;

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KcStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Bad input: dimension, bound, modulus, index, or weight spec.
    InvalidArgument = 2,
    /// The computation refused to run (enumeration cap exceeded).
    Refused = 3,
    /// Cycle detection exhausted its step budget.
    Undetermined = 4,
}

/// Which divisibility reduction produced a finite system.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KcHypothesis {
    None = 0,
    Consecutive = 1,
    Pair = 2,
    Product = 3,
}

/// Preperiod/period pair for the state vector and for its first
/// coordinate.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KcPeriodReport {
    pub modulus: u64,
    pub vector_preperiod: u64,
    pub vector_period: u64,
    pub scalar_preperiod: u64,
    pub scalar_period: u64,
    pub confirmed: bool,
}

/// Opaque parsed weight vector.
pub struct KcWeights {
    inner: WeightVector,
}

/// Opaque transfer matrix.
pub struct KcMatrix {
    inner: TransferMatrix,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap();
    });
}

fn status_of(error: &Error) -> KcStatus {
    match error {
        Error::CapExceeded { .. } => KcStatus::Refused,
        Error::Undetermined { .. } => KcStatus::Undetermined,
        _ => KcStatus::InvalidArgument,
    }
}

fn fail(error: &Error) -> KcStatus {
    set_error(&error.to_string());
    status_of(error)
}

fn fail_null(what: &str) -> KcStatus {
    set_error(&format!("null pointer argument: {what}"));
    KcStatus::NullArgument
}

/// Writes `text` to `out` as a newly allocated C string.
unsafe fn emit_string(text: String, out: *mut *mut c_char) -> KcStatus {
    let c = match CString::new(text) {
        Ok(c) => c,
        Err(_) => {
            set_error("interior NUL in rendered output");
            return KcStatus::InvalidArgument;
        }
    };
    *out = c.into_raw();
    KcStatus::Ok
}

fn modulus_arg(modulus: u64) -> Option<u64> {
    if modulus == 0 {
        None
    } else {
        Some(modulus)
    }
}

unsafe fn weights_or_ones(weights: *const KcWeights) -> WeightVector {
    if weights.is_null() {
        WeightVector::ones()
    } else {
        (*weights).inner.clone()
    }
}

/// Version of the underlying library, as a static C string.
#[no_mangle]
pub extern "C" fn kc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message describing the most recent failure on this thread. Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn kc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string allocated by this library.
///
/// # Safety
/// `s` must be a pointer previously returned through an out-parameter of
/// this library and not yet freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn kc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a weight spec (`ones`, `odd-squares`, `geom:<int>`,
/// `list:..[;tail:..]`) into a handle.
///
/// # Safety
/// `spec` must point to a NUL-terminated string; `out` must be a valid
/// destination pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_weights_parse(
    spec: *const c_char,
    out: *mut *mut KcWeights,
) -> KcStatus {
    if spec.is_null() || out.is_null() {
        return fail_null("spec/out");
    }
    let text = match CStr::from_ptr(spec).to_str() {
        Ok(t) => t,
        Err(_) => {
            set_error("weight spec is not valid UTF-8");
            return KcStatus::InvalidArgument;
        }
    };
    match kcatalan::weights::parse_weight_spec(text) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(KcWeights { inner }));
            KcStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Renders a handle back to its canonical spec text.
///
/// # Safety
/// `weights` must be a live handle from [`kc_weights_parse`]; `out` must
/// be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_weights_render(
    weights: *const KcWeights,
    out: *mut *mut c_char,
) -> KcStatus {
    if weights.is_null() || out.is_null() {
        return fail_null("weights/out");
    }
    emit_string((*weights).inner.to_string(), out)
}

/// Releases a weights handle; null is ignored.
///
/// # Safety
/// `weights` must come from [`kc_weights_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn kc_weights_free(weights: *mut KcWeights) {
    if !weights.is_null() {
        drop(Box::from_raw(weights));
    }
}

/// The closed-form count for (k, n), as a decimal string.
///
/// # Safety
/// `out` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_catalan(
    k: usize,
    n: u32,
    modulus: u64,
    out: *mut *mut c_char,
) -> KcStatus {
    if out.is_null() {
        return fail_null("out");
    }
    match counting::catalan_exact(k, n, modulus_arg(modulus)) {
        Ok(v) => emit_string(v.to_string(), out),
        Err(e) => fail(&e),
    }
}

/// The weighted count for (k, n).
///
/// # Safety
/// `weights` must be null (all-ones) or a live handle; `out` must be a
/// valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_weighted_catalan(
    k: usize,
    n: u32,
    weights: *const KcWeights,
    modulus: u64,
    out: *mut *mut c_char,
) -> KcStatus {
    if out.is_null() {
        return fail_null("out");
    }
    let wv = weights_or_ones(weights);
    match counting::weighted_catalan(k, n, &wv, modulus_arg(modulus)) {
        Ok(v) => emit_string(v.to_string(), out),
        Err(e) => fail(&e),
    }
}

/// The height-bounded weighted count for (k, s, n).
///
/// # Safety
/// As for [`kc_weighted_catalan`].
#[no_mangle]
pub unsafe extern "C" fn kc_bounded_catalan(
    k: usize,
    s: i64,
    n: u32,
    weights: *const KcWeights,
    modulus: u64,
    out: *mut *mut c_char,
) -> KcStatus {
    if out.is_null() {
        return fail_null("out");
    }
    let wv = weights_or_ones(weights);
    match counting::bounded_weighted_catalan(k, s, n, &wv, modulus_arg(modulus)) {
        Ok(v) => emit_string(v.to_string(), out),
        Err(e) => fail(&e),
    }
}

/// The number of paths of maximum height exactly s.
///
/// # Safety
/// `out` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_exact_height_count(
    k: usize,
    s: i64,
    n: u32,
    modulus: u64,
    out: *mut *mut c_char,
) -> KcStatus {
    if out.is_null() {
        return fail_null("out");
    }
    match counting::exact_height_count(k, s, n, modulus_arg(modulus)) {
        Ok(v) => emit_string(v.to_string(), out),
        Err(e) => fail(&e),
    }
}

/// The number of paths with exactly p peaks.
///
/// # Safety
/// `out` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_narayana_count(
    k: usize,
    p: usize,
    n: u32,
    modulus: u64,
    out: *mut *mut c_char,
) -> KcStatus {
    if out.is_null() {
        return fail_null("out");
    }
    match counting::narayana_count(k, p, n, modulus_arg(modulus)) {
        Ok(v) => emit_string(v.to_string(), out),
        Err(e) => fail(&e),
    }
}

/// Height-triangle rows 1..=rows as a JSON object with decimal-string
/// entries.
///
/// # Safety
/// `out` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_height_triangle_json(
    k: usize,
    rows: u32,
    modulus: u64,
    out: *mut *mut c_char,
) -> KcStatus {
    if out.is_null() {
        return fail_null("out");
    }
    match counting::height_triangle(k, rows, modulus_arg(modulus)) {
        Ok(t) => emit_string(render::triangle_to_json(&t).to_string(), out),
        Err(e) => fail(&e),
    }
}

/// Narayana-triangle rows 1..=rows as a JSON object.
///
/// # Safety
/// `out` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_narayana_triangle_json(
    k: usize,
    rows: u32,
    modulus: u64,
    out: *mut *mut c_char,
) -> KcStatus {
    if out.is_null() {
        return fail_null("out");
    }
    match counting::narayana_triangle(k, rows, modulus_arg(modulus)) {
        Ok(t) => emit_string(render::triangle_to_json(&t).to_string(), out),
        Err(e) => fail(&e),
    }
}

/// Builds the transfer matrix of the s-bounded system.
///
/// # Safety
/// `weights` must be null or a live handle; `out` must be a valid
/// destination pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_matrix_build(
    k: usize,
    s: i64,
    weights: *const KcWeights,
    modulus: u64,
    out: *mut *mut KcMatrix,
) -> KcStatus {
    if out.is_null() {
        return fail_null("out");
    }
    let wv = weights_or_ones(weights);
    match transfer::build_transfer_matrix(k, s, &wv, modulus_arg(modulus)) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(KcMatrix { inner }));
            KcStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Releases a matrix handle; null is ignored.
///
/// # Safety
/// `matrix` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn kc_matrix_free(matrix: *mut KcMatrix) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

/// Number of states; 0 for a null handle.
///
/// # Safety
/// `matrix` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kc_matrix_dim(matrix: *const KcMatrix) -> usize {
    if matrix.is_null() {
        0
    } else {
        (*matrix).inner.dim()
    }
}

/// One matrix entry as a decimal string.
///
/// # Safety
/// `matrix` must be a live handle; `out` must be a valid destination
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_matrix_entry(
    matrix: *const KcMatrix,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> KcStatus {
    if matrix.is_null() || out.is_null() {
        return fail_null("matrix/out");
    }
    let m = &(*matrix).inner;
    if row >= m.dim() || col >= m.dim() {
        set_error(&format!("entry ({row},{col}) out of range for dimension {}", m.dim()));
        return KcStatus::InvalidArgument;
    }
    emit_string(m.entry(row, col).to_string(), out)
}

/// The whole matrix with its state list as JSON.
///
/// # Safety
/// `matrix` must be a live handle; `out` must be a valid destination
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_matrix_to_json(
    matrix: *const KcMatrix,
    out: *mut *mut c_char,
) -> KcStatus {
    if matrix.is_null() || out.is_null() {
        return fail_null("matrix/out");
    }
    emit_string(render::matrix_to_json(&(*matrix).inner).to_string(), out)
}

/// First coordinate of `M^n * e1`, the n-th term of the bounded
/// sequence.
///
/// # Safety
/// `matrix` must be a live handle; `out` must be a valid destination
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn kc_matrix_sequence_term(
    matrix: *const KcMatrix,
    n: u32,
    modulus: u64,
    out: *mut *mut c_char,
) -> KcStatus {
    if matrix.is_null() || out.is_null() {
        return fail_null("matrix/out");
    }
    let seq = transfer::sequence_from_matrix(&(*matrix).inner, n, modulus_arg(modulus));
    emit_string(seq[n as usize].to_string(), out)
}

/// Finds the exact preperiod and period of the orbit modulo `modulus`.
/// A `max_steps` of 0 selects the always-sufficient budget
/// `modulus^dim + 1`.
///
/// # Safety
/// `matrix` must be a live handle; `out` must point to a
/// [`KcPeriodReport`].
#[no_mangle]
pub unsafe extern "C" fn kc_detect_cycle(
    matrix: *const KcMatrix,
    modulus: u64,
    max_steps: u64,
    out: *mut KcPeriodReport,
) -> KcStatus {
    if matrix.is_null() || out.is_null() {
        return fail_null("matrix/out");
    }
    let m = &(*matrix).inner;
    let budget = if max_steps == 0 {
        modulus.saturating_pow(m.dim() as u32).saturating_add(1)
    } else {
        max_steps
    };
    match periodicity::detect_cycle(m, modulus, budget) {
        Ok(report) => {
            *out = KcPeriodReport {
                modulus: report.modulus,
                vector_preperiod: report.vector_preperiod,
                vector_period: report.vector_period,
                scalar_preperiod: report.scalar_preperiod,
                scalar_period: report.scalar_period,
                confirmed: report.confirmed,
            };
            KcStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Tries the divisibility reductions for the weighted sequence modulo
/// `modulus`. On success `*out_matrix` owns the finite system and
/// `*out_hypothesis`/`*out_cap` describe the reduction; when no
/// hypothesis applies, `*out_matrix` is null and `*out_hypothesis` is
/// `None` with an `Ok` status. A `limit` of 0 selects the default scan
/// depth.
///
/// # Safety
/// `weights` must be null or a live handle; the three out-pointers must
/// be valid destinations.
#[no_mangle]
pub unsafe extern "C" fn kc_periodic_form(
    k: usize,
    weights: *const KcWeights,
    modulus: u64,
    limit: usize,
    out_matrix: *mut *mut KcMatrix,
    out_cap: *mut i64,
    out_hypothesis: *mut KcHypothesis,
) -> KcStatus {
    if out_matrix.is_null() || out_cap.is_null() || out_hypothesis.is_null() {
        return fail_null("out_matrix/out_cap/out_hypothesis");
    }
    let wv = weights_or_ones(weights);
    let limit = if limit == 0 { periodicity::DEFAULT_HYPOTHESIS_LIMIT } else { limit };
    match periodicity::periodic_form_with_limit(k, &wv, modulus, limit) {
        Ok(Some(form)) => {
            *out_cap = form.cap;
            *out_hypothesis = match form.hypothesis {
                Hypothesis::Consecutive => KcHypothesis::Consecutive,
                Hypothesis::Pair => KcHypothesis::Pair,
                Hypothesis::Product => KcHypothesis::Product,
            };
            *out_matrix = Box::into_raw(Box::new(KcMatrix { inner: form.matrix }));
            KcStatus::Ok
        }
        Ok(None) => {
            *out_matrix = ptr::null_mut();
            *out_cap = -1;
            *out_hypothesis = KcHypothesis::None;
            KcStatus::Ok
        }
        Err(e) => fail(&e),
    }
}
