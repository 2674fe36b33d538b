//! C ABI for the pellarin library. The surface is deliberately small:
//! an opaque field handle, status codes, and functions that return their
//! results as JSON strings (polynomials nest too deeply for a useful flat C
//! layout, and every binding language can parse JSON).
//!
//! Conventions:
//! - Every function returns a `PellarinStatus`; results go through out
//!   pointers, which are written only on `Ok`.
//! - Strings returned through `char **` are NUL-terminated, UTF-8, owned by
//!   the library, and must be released with `pellarin_string_free`.
//! - Handles from `pellarin_field_new` must be released with
//!   `pellarin_field_free`. Null handles or out pointers yield `NullPointer`.
//! - Panics never unwind across the boundary; they surface as
//!   `InternalPanic`.

use std::ffi::CString;
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use pellarin::algebra::Field;
use pellarin::approximation::{wagner_coeff, wagner_product};
use pellarin::powersums::{phi_degree, power_sum, sheats_test, twisted_power_sum};
use pellarin::specialpolys::{l_value, trivial_zero_order, z_brute, z_recursive};
use pellarin::Error;

/// Status code for every C API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PellarinStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// The characteristic is not prime.
    NotPrime = 2,
    /// The modulus is invalid for the requested extension.
    BadModulus = 3,
    /// A parameter is outside the supported range.
    OutOfRange = 4,
    /// An exactness or structure invariant failed for these inputs.
    DomainError = 5,
    /// An internal panic was caught at the boundary.
    InternalPanic = 6,
}

fn status_of(err: &Error) -> PellarinStatus {
    match err {
        Error::NotPrime(_) => PellarinStatus::NotPrime,
        Error::ReducibleModulus | Error::DegreeMismatch => PellarinStatus::BadModulus,
        Error::TooLarge | Error::DegreeTooHigh | Error::BoundTooSmall => {
            PellarinStatus::OutOfRange
        }
        _ => PellarinStatus::DomainError,
    }
}

/// Opaque handle to a coefficient field F_{p^e}.
pub struct PellarinField {
    inner: Field,
}

/// Guards an FFI body: checks pointers, catches panics, writes the out
/// value only on success.
fn guarded<T>(
    out: *mut T,
    body: impl FnOnce() -> Result<T, PellarinStatus>,
) -> PellarinStatus {
    if out.is_null() {
        return PellarinStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(value)) => {
            unsafe { out.write(value) };
            PellarinStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => PellarinStatus::InternalPanic,
    }
}

fn field_ref<'a>(handle: *const PellarinField) -> Result<&'a Field, PellarinStatus> {
    unsafe { handle.as_ref() }
        .map(|h| &h.inner)
        .ok_or(PellarinStatus::NullPointer)
}

fn to_c_json<T: serde::Serialize>(value: &T) -> Result<*mut c_char, PellarinStatus> {
    let json = serde_json::to_string(value).map_err(|_| PellarinStatus::DomainError)?;
    CString::new(json)
        .map(CString::into_raw)
        .map_err(|_| PellarinStatus::DomainError)
}

/// Create a field F_{p^e}. `modulus` may be null (use the default modulus);
/// otherwise it is a low-to-high array of `modulus_len` coefficients in
/// [0, p) describing a monic irreducible of degree e over F_p.
#[no_mangle]
pub extern "C" fn pellarin_field_new(
    p: u64,
    e: usize,
    modulus: *const u64,
    modulus_len: usize,
    out: *mut *mut PellarinField,
) -> PellarinStatus {
    guarded(out, || {
        let modulus = if modulus.is_null() {
            None
        } else {
            Some(unsafe { std::slice::from_raw_parts(modulus, modulus_len) }.to_vec())
        };
        let fd = Field::make(p, e, modulus).map_err(|e| status_of(&e))?;
        Ok(Box::into_raw(Box::new(PellarinField { inner: fd })))
    })
}

/// Release a field handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn pellarin_field_free(field: *mut PellarinField) {
    if !field.is_null() {
        drop(unsafe { Box::from_raw(field) });
    }
}

/// Release a string returned by any `_json` function. Null is a no-op.
#[no_mangle]
pub extern "C" fn pellarin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Untwisted power sum S_d(k) as a JSON array of F_q coefficients
/// (ascending theta powers, each coefficient an array of base-p digits).
#[no_mangle]
pub extern "C" fn pellarin_power_sum_json(
    field: *const PellarinField,
    d: usize,
    k: u64,
    out: *mut *mut c_char,
) -> PellarinStatus {
    guarded(out, || {
        let fd = field_ref(field)?;
        let s = power_sum(fd, d, k).map_err(|e| status_of(&e))?;
        to_c_json(&s)
    })
}

/// Twisted power sum S_d(chi_t^beta, k) as a JSON array of t-coefficients.
#[no_mangle]
pub extern "C" fn pellarin_twisted_power_sum_json(
    field: *const PellarinField,
    d: usize,
    beta: u64,
    k: u64,
    out: *mut *mut c_char,
) -> PellarinStatus {
    guarded(out, || {
        let fd = field_ref(field)?;
        let s = twisted_power_sum(fd, d, beta, k).map_err(|e| status_of(&e))?;
        to_c_json(&s)
    })
}

/// Special polynomial z(chi_t^beta, x, -k) as a JSON object with beta, k,
/// degree (-1 for the zero polynomial), coefficients in u = x^{-1}, and the
/// method used. `use_recursion` of 0 forces the brute-force sum.
#[no_mangle]
pub extern "C" fn pellarin_special_poly_json(
    field: *const PellarinField,
    beta: u64,
    k: u64,
    use_recursion: u8,
    out: *mut *mut c_char,
) -> PellarinStatus {
    guarded(out, || {
        let fd = field_ref(field)?;
        let poly = if use_recursion != 0 {
            z_recursive(fd, beta, k)
        } else {
            z_brute(fd, beta, k)
        }
        .map_err(|e| status_of(&e))?;
        to_c_json(&poly)
    })
}

/// L-value L(chi_t^beta, -k) as a JSON array of t-coefficients (empty for 0).
#[no_mangle]
pub extern "C" fn pellarin_l_value_json(
    field: *const PellarinField,
    beta: u64,
    k: u64,
    out: *mut *mut c_char,
) -> PellarinStatus {
    guarded(out, || {
        let fd = field_ref(field)?;
        let v = l_value(fd, beta, k).map_err(|e| status_of(&e))?;
        to_c_json(&v)
    })
}

/// Order of vanishing of the L-value at x = 1: 0 or 1. Requires k >= 1.
#[no_mangle]
pub extern "C" fn pellarin_trivial_zero_order(
    field: *const PellarinField,
    beta: u64,
    k: u64,
    out: *mut u32,
) -> PellarinStatus {
    guarded(out, || {
        let fd = field_ref(field)?;
        if k == 0 {
            return Err(PellarinStatus::OutOfRange);
        }
        trivial_zero_order(fd, beta, k).map_err(|e| status_of(&e))
    })
}

/// The exact degree phi(beta, k) in x^{-1}. Requires beta, k >= 1.
#[no_mangle]
pub extern "C" fn pellarin_phi_degree(
    field: *const PellarinField,
    beta: u64,
    k: u64,
    out: *mut u64,
) -> PellarinStatus {
    guarded(out, || {
        let fd = field_ref(field)?;
        if beta == 0 || k == 0 {
            return Err(PellarinStatus::OutOfRange);
        }
        Ok(phi_degree(fd, beta, k))
    })
}

/// Sheats' criterion: writes 1 when S_d(k) is nonzero, 0 otherwise.
#[no_mangle]
pub extern "C" fn pellarin_sheats_test(
    field: *const PellarinField,
    d: usize,
    k: u64,
    out: *mut u8,
) -> PellarinStatus {
    guarded(out, || {
        let fd = field_ref(field)?;
        Ok(u8::from(sheats_test(fd, d, k)))
    })
}

/// Wagner coefficient b_d(chi_t) as a JSON object {d, b, m0}, where b is
/// verified against the closed product over (t - theta^{q^l}) before being
/// returned.
#[no_mangle]
pub extern "C" fn pellarin_wagner_coeff_json(
    field: *const PellarinField,
    d: usize,
    out: *mut *mut c_char,
) -> PellarinStatus {
    guarded(out, || {
        let fd = field_ref(field)?;
        let wd = wagner_coeff(fd, d).map_err(|e| status_of(&e))?;
        if wd.b != wagner_product(fd, d) {
            return Err(PellarinStatus::DomainError);
        }
        to_c_json(&wd)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;
    use std::ptr;

    fn make_field(p: u64, e: usize) -> *mut PellarinField {
        let mut handle = ptr::null_mut();
        let status = pellarin_field_new(p, e, ptr::null(), 0, &mut handle);
        assert_eq!(status, PellarinStatus::Ok);
        assert!(!handle.is_null());
        handle
    }

    fn take_string(s: *mut c_char) -> String {
        assert!(!s.is_null());
        let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
        pellarin_string_free(s);
        owned
    }

    #[test]
    fn field_lifecycle_and_errors() {
        let handle = make_field(3, 1);
        pellarin_field_free(handle);
        pellarin_field_free(ptr::null_mut());

        let mut out = ptr::null_mut();
        assert_eq!(
            pellarin_field_new(4, 1, ptr::null(), 0, &mut out),
            PellarinStatus::NotPrime
        );
        // w^2 + 2 = (w - 1)(w + 1) is reducible over F_3
        let bad = [2u64, 0, 1];
        assert_eq!(
            pellarin_field_new(3, 2, bad.as_ptr(), bad.len(), &mut out),
            PellarinStatus::BadModulus
        );
        assert_eq!(
            pellarin_field_new(3, 1, ptr::null(), 0, ptr::null_mut()),
            PellarinStatus::NullPointer
        );
    }

    #[test]
    fn explicit_modulus_accepted() {
        // w^2 + w + 1 over F_2 builds F_4
        let modulus = [1u64, 1, 1];
        let mut handle = ptr::null_mut();
        let status = pellarin_field_new(2, 2, modulus.as_ptr(), modulus.len(), &mut handle);
        assert_eq!(status, PellarinStatus::Ok);
        pellarin_field_free(handle);
    }

    #[test]
    fn twisted_power_sum_matches_library() {
        let handle = make_field(3, 1);
        let mut s = ptr::null_mut();
        let status = pellarin_twisted_power_sum_json(handle, 1, 1, 2, &mut s);
        assert_eq!(status, PellarinStatus::Ok);
        // S_1(chi_t, 2) = theta + 2t over F_3
        assert_eq!(take_string(s), "[[[0],[1]],[[2]]]");
        pellarin_field_free(handle);
    }

    #[test]
    fn special_poly_routes_agree() {
        let handle = make_field(3, 1);
        let mut brute = ptr::null_mut();
        let mut rec = ptr::null_mut();
        assert_eq!(
            pellarin_special_poly_json(handle, 2, 3, 0, &mut brute),
            PellarinStatus::Ok
        );
        assert_eq!(
            pellarin_special_poly_json(handle, 2, 3, 1, &mut rec),
            PellarinStatus::Ok
        );
        let brute_doc: serde_json::Value =
            serde_json::from_str(&take_string(brute)).unwrap();
        let rec_doc: serde_json::Value = serde_json::from_str(&take_string(rec)).unwrap();
        assert_eq!(brute_doc["coeffs"], rec_doc["coeffs"]);
        assert_eq!(brute_doc["method"], "brute");
        assert_eq!(rec_doc["method"], "recursive");
        pellarin_field_free(handle);
    }

    #[test]
    fn l_value_and_zero_order() {
        let handle = make_field(3, 1);
        let mut v = ptr::null_mut();
        assert_eq!(
            pellarin_l_value_json(handle, 1, 1, &mut v),
            PellarinStatus::Ok
        );
        assert_eq!(take_string(v), "[]"); // trivial zero
        let mut order = 99;
        assert_eq!(
            pellarin_trivial_zero_order(handle, 1, 1, &mut order),
            PellarinStatus::Ok
        );
        assert_eq!(order, 1);
        assert_eq!(
            pellarin_trivial_zero_order(handle, 1, 0, &mut order),
            PellarinStatus::OutOfRange
        );
        pellarin_field_free(handle);
    }

    #[test]
    fn scalar_queries() {
        let handle = make_field(3, 1);
        let mut degree = 0;
        assert_eq!(
            pellarin_phi_degree(handle, 1, 2, &mut degree),
            PellarinStatus::Ok
        );
        assert_eq!(degree, 1);
        assert_eq!(
            pellarin_phi_degree(handle, 0, 2, &mut degree),
            PellarinStatus::OutOfRange
        );
        let mut nonzero = 0;
        assert_eq!(
            pellarin_sheats_test(handle, 1, 2, &mut nonzero),
            PellarinStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(
            pellarin_power_sum_json(handle, 1, 2, &mut s),
            PellarinStatus::Ok
        );
        let is_zero = take_string(s) == "[]";
        assert_eq!(nonzero == 0, is_zero);
        pellarin_field_free(handle);
    }

    #[test]
    fn wagner_coefficient_json() {
        let handle = make_field(3, 1);
        let mut s = ptr::null_mut();
        assert_eq!(
            pellarin_wagner_coeff_json(handle, 1, &mut s),
            PellarinStatus::Ok
        );
        let doc: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(doc["d"], 1);
        // b_1 = t - theta = 2*theta + t over F_3
        assert_eq!(doc["b"], serde_json::json!([[[0], [2]], [[1]]]));
        pellarin_field_free(handle);
    }

    #[test]
    fn null_field_is_rejected_everywhere() {
        let mut s = ptr::null_mut();
        assert_eq!(
            pellarin_power_sum_json(ptr::null(), 1, 2, &mut s),
            PellarinStatus::NullPointer
        );
        let mut n = 0u64;
        assert_eq!(
            pellarin_phi_degree(ptr::null(), 1, 1, &mut n),
            PellarinStatus::NullPointer
        );
    }

    #[test]
    fn header_was_generated() {
        let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("include")
            .join("pellarin.h");
        let text = std::fs::read_to_string(header).expect("generated header");
        assert!(text.contains("pellarin_field_new"));
        assert!(text.contains("PellarinStatus"));
        assert!(text.contains("typedef struct PellarinField PellarinField;"));
    }
}
