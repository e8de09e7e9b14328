use std::ffi::{CStr, CString};
use std::ptr;

use schubert_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { schubert_string_free(p) };
    s
}

fn last_error() -> String {
    let p = schubert_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn tensor(json: &str) -> *mut SchubertTensor {
    let c = CString::new(json).unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { schubert_tensor_from_json(c.as_ptr(), &mut t) }, SchubertStatus::Ok);
    t
}

fn verdict(t: *const SchubertTensor) -> SchubertVerdict {
    let mut v = SchubertVerdict::Disagreement;
    assert_eq!(unsafe { schubert_tensor_decomposable(t, &mut v) }, SchubertStatus::Ok);
    v
}

#[test]
fn tensor_lifecycle() {
    let json = r#"{"rank":2,"coeffs":[{"partition":[],"coeff":"1"},{"partition":[2,2],"coeff":"1"}]}"#;
    let t = tensor(json);
    assert_eq!(unsafe { schubert_tensor_rank(t) }, 2);
    assert_eq!(verdict(t), SchubertVerdict::NotDecomposable);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { schubert_tensor_to_json(t, &mut s) }, SchubertStatus::Ok);
    assert_eq!(take_string(s), json);
    unsafe { schubert_tensor_free(t) };
    unsafe { schubert_tensor_free(ptr::null_mut()) };
    assert_eq!(unsafe { schubert_tensor_rank(ptr::null()) }, 0);
}

#[test]
fn random_tensors_are_decomposable() {
    for seed in 0..10 {
        let mut t = ptr::null_mut();
        assert_eq!(unsafe { schubert_tensor_random_decomposable(3, 6, seed, &mut t) }, SchubertStatus::Ok);
        assert_eq!(verdict(t), SchubertVerdict::Decomposable);
        unsafe { schubert_tensor_free(t) };
    }
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { schubert_tensor_random_decomposable(4, 2, 0, &mut t) }, SchubertStatus::InvalidArgument);
    assert!(t.is_null());
    assert!(last_error().contains("n ≥ r"));
}

#[test]
fn errors_are_reported() {
    let mut t = ptr::null_mut();
    let bad = CString::new("{").unwrap();
    assert_eq!(unsafe { schubert_tensor_from_json(bad.as_ptr(), &mut t) }, SchubertStatus::ParseError);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { schubert_tensor_from_json(ptr::null(), &mut t) }, SchubertStatus::NullPointer);
    let long = CString::new(r#"{"rank":1,"coeffs":[{"partition":[1,1],"coeff":"1"}]}"#).unwrap();
    assert_eq!(unsafe { schubert_tensor_from_json(long.as_ptr(), &mut t) }, SchubertStatus::InvalidArgument);
    let invalid_utf8 = [0xffu8, 0];
    assert_eq!(unsafe { schubert_tensor_from_json(invalid_utf8.as_ptr().cast(), &mut t) }, SchubertStatus::InvalidUtf8);
    // a successful call clears the message
    let ok = tensor(r#"{"rank":1,"coeffs":[]}"#);
    assert!(schubert_last_error().is_null());
    unsafe { schubert_tensor_free(ok) };
}

#[test]
fn ideal_and_kp() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { schubert_ideal_text(2, 4, &mut s) }, SchubertStatus::Ok);
    assert_eq!(take_string(s), "a[1,1]*a[2] - a[1]*a[2,1] + a[]*a[2,2]\n");
    assert_eq!(unsafe { schubert_ideal_text(3, 2, &mut s) }, SchubertStatus::InvalidArgument);

    let klein = CString::new(
        r#"{"family":"h","weight_bound":4,"terms":[{"exponents":[],"coeff":"1"},{"exponents":[[2,2]],"coeff":"1"},{"exponents":[[1,1],[3,1]],"coeff":"-1"}]}"#,
    )
    .unwrap();
    let mut passes = true;
    assert_eq!(unsafe { schubert_kp_check(klein.as_ptr(), 8, &mut passes) }, SchubertStatus::Ok);
    assert!(!passes);
    assert_eq!(unsafe { schubert_kp_check(klein.as_ptr(), 3, &mut passes) }, SchubertStatus::InvalidArgument);
    let one = CString::new(r#"{"family":"x","weight_bound":1,"terms":[{"exponents":[],"coeff":"1"}]}"#).unwrap();
    assert_eq!(unsafe { schubert_kp_check(one.as_ptr(), 6, &mut passes) }, SchubertStatus::Ok);
    assert!(passes);
}
