//! C interface to `schubert-core`.
//!
//! Tensors live behind the opaque `SchubertTensor` handle. Every fallible
//! call returns a `SchubertStatus`; on failure `schubert_last_error` gives a
//! message for the calling thread. Strings returned through `char **` are
//! owned by the caller and released with `schubert_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use schubert_core::kp::{kp_residue_check, QPolynomial};
use schubert_core::pluecker::{
    classical_criterion, exterior_residue_check, pluecker_ideal, random_decomposable, ring_residue_check,
    DEFAULT_VARIANT,
};
use schubert_core::symmetric::TensorCoefficients;
use schubert_core::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchubertStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchubertVerdict {
    Decomposable = 0,
    NotDecomposable = 1,
    /// The three predicates disagree; this indicates a bug.
    Disagreement = 2,
}

/// Opaque tensor handle.
pub struct SchubertTensor {
    inner: TensorCoefficients,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn fail(status: SchubertStatus, msg: impl Into<String>) -> SchubertStatus {
    set_error(msg);
    status
}

fn from_core(e: Error) -> SchubertStatus {
    let status = match e {
        Error::Parse(_) => SchubertStatus::ParseError,
        _ => SchubertStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn guarded(f: impl FnOnce() -> SchubertStatus + UnwindSafe) -> SchubertStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(f).unwrap_or_else(|_| fail(SchubertStatus::Internal, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, SchubertStatus> {
    if s.is_null() {
        return Err(fail(SchubertStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(SchubertStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> SchubertStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            SchubertStatus::Ok
        }
        Err(_) => fail(SchubertStatus::Internal, "output contains a nul byte"),
    }
}

unsafe fn write_tensor(out: *mut *mut SchubertTensor, t: TensorCoefficients) -> SchubertStatus {
    *out = Box::into_raw(Box::new(SchubertTensor { inner: t }));
    SchubertStatus::Ok
}

/// Parses `{"rank":r,"coeffs":[{"partition":[..],"coeff":"..."}]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_tensor_from_json(
    json: *const c_char,
    out: *mut *mut SchubertTensor,
) -> SchubertStatus {
    guarded(|| {
        if out.is_null() {
            return fail(SchubertStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match TensorCoefficients::from_json(text) {
            Ok(t) => write_tensor(out, t),
            Err(e) => from_core(e),
        }
    })
}

/// Deterministic random decomposable tensor in `⋀^r` of an `n`-dimensional space.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_tensor_random_decomposable(
    r: usize,
    n: usize,
    seed: u64,
    out: *mut *mut SchubertTensor,
) -> SchubertStatus {
    guarded(|| {
        if out.is_null() {
            return fail(SchubertStatus::NullPointer, "null output pointer");
        }
        match random_decomposable(r, n, seed) {
            Ok(t) => write_tensor(out, t),
            Err(e) => from_core(e),
        }
    })
}

/// # Safety
/// `tensor` must come from this library and not be freed; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_tensor_to_json(
    tensor: *const SchubertTensor,
    out: *mut *mut c_char,
) -> SchubertStatus {
    guarded(|| {
        if tensor.is_null() || out.is_null() {
            return fail(SchubertStatus::NullPointer, "null pointer");
        }
        write_string(out, (*tensor).inner.to_json())
    })
}

/// Rank of the tensor, 0 for a null handle.
///
/// # Safety
/// `tensor` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn schubert_tensor_rank(tensor: *const SchubertTensor) -> usize {
    if tensor.is_null() {
        0
    } else {
        (*tensor).inner.rank()
    }
}

/// # Safety
/// `tensor` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn schubert_tensor_free(tensor: *mut SchubertTensor) {
    if !tensor.is_null() {
        drop(Box::from_raw(tensor));
    }
}

/// Runs the three decomposability predicates.
///
/// # Safety
/// `tensor` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_tensor_decomposable(
    tensor: *const SchubertTensor,
    out: *mut SchubertVerdict,
) -> SchubertStatus {
    guarded(|| {
        if tensor.is_null() || out.is_null() {
            return fail(SchubertStatus::NullPointer, "null pointer");
        }
        let t = &(*tensor).inner;
        if t.rank() == 0 {
            return fail(SchubertStatus::InvalidArgument, "rank must be at least 1");
        }
        let m = t.to_exterior();
        let verdicts = (|| {
            Ok::<_, Error>((
                classical_criterion(&m)?,
                exterior_residue_check(&m, DEFAULT_VARIANT)?,
                ring_residue_check(t)?,
            ))
        })();
        match verdicts {
            Ok((a, b, c)) => {
                *out = if a != b || a != c.decomposable {
                    SchubertVerdict::Disagreement
                } else if a {
                    SchubertVerdict::Decomposable
                } else {
                    SchubertVerdict::NotDecomposable
                };
                SchubertStatus::Ok
            }
            Err(e) => from_core(e),
        }
    })
}

/// Quadrics for `⋀^r` of an `n`-dimensional space, one per line.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_ideal_text(r: usize, n: usize, out: *mut *mut c_char) -> SchubertStatus {
    guarded(|| {
        if out.is_null() {
            return fail(SchubertStatus::NullPointer, "null output pointer");
        }
        match pluecker_ideal(r, n) {
            Ok(qs) => write_string(out, qs.iter().map(|q| format!("{q}\n")).collect()),
            Err(e) => from_core(e),
        }
    })
}

/// KP residue check of a tau function given as JSON, truncated at `weight`.
/// `*passes` is set when the residue vanishes up to that weight.
///
/// # Safety
/// `tau_json` must be a nul-terminated string; `passes` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schubert_kp_check(tau_json: *const c_char, weight: u32, passes: *mut bool) -> SchubertStatus {
    guarded(|| {
        if passes.is_null() {
            return fail(SchubertStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(tau_json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let report =
            QPolynomial::from_json(text).and_then(|t| t.with_weight_bound(weight)).and_then(|t| kp_residue_check(&t));
        match report {
            Ok(r) => {
                *passes = r.passes;
                SchubertStatus::Ok
            }
            Err(e) => from_core(e),
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn schubert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn schubert_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
