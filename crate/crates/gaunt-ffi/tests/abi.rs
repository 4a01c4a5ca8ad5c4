//! Exercises the C ABI end to end through the exported extern "C" functions.

use std::ffi::{CStr, CString};

use gaunt_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null(), "expected a string, got NULL: {}", last_error());
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    gaunt_string_free(p);
    s
}

fn last_error() -> String {
    unsafe {
        let p = gaunt_last_error();
        if p.is_null() {
            String::new()
        } else {
            CStr::from_ptr(p).to_str().unwrap().to_owned()
        }
    }
}

#[test]
fn build_validate_and_round_trip() {
    unsafe {
        let x = gaunt_complex_build(c("oriental:2").as_ptr());
        assert!(!x.is_null(), "{}", last_error());
        assert_eq!(gaunt_complex_validate(x), GAUNT_OK);
        assert_eq!(gaunt_complex_generators(x, 0), 3);
        assert_eq!(gaunt_complex_generators(x, 1), 3);
        assert_eq!(gaunt_complex_generators(x, 2), 1);

        let json = take_string(gaunt_complex_to_json(x));
        let y = gaunt_complex_from_json(c(&json).as_ptr());
        assert!(!y.is_null(), "{}", last_error());
        let json2 = take_string(gaunt_complex_to_json(y));
        assert_eq!(json, json2);

        gaunt_complex_free(x);
        gaunt_complex_free(y);
    }
}

#[test]
fn pi0_of_the_square_is_the_boolean_lattice_of_rank_2() {
    unsafe {
        let x = gaunt_complex_build(c("cube:2").as_ptr());
        let json = take_string(gaunt_pi0_json(x, 8));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["elements"].as_array().unwrap().len(), 4);
        assert_eq!(gaunt_pi0_status(x, 8), GAUNT_OK);
        gaunt_complex_free(x);
    }
}

#[test]
fn pi1_of_the_tetrahedron_has_four_paths() {
    unsafe {
        let x = gaunt_complex_build(c("oriental:3").as_ptr());
        let json = take_string(gaunt_pi1_json(x, 0, 3, 8));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["elements"].as_array().unwrap().len(), 4);
        gaunt_complex_free(x);
    }
}

#[test]
fn errors_set_the_message_and_return_null_or_a_code() {
    unsafe {
        assert!(gaunt_complex_build(c("heptagon:5").as_ptr()).is_null());
        assert!(last_error().contains("heptagon"));

        assert!(gaunt_complex_from_json(c("not json").as_ptr()).is_null());
        assert!(!last_error().is_empty());

        assert_eq!(gaunt_complex_validate(std::ptr::null()), GAUNT_INVALID_INPUT);
        assert!(last_error().contains("NULL"));

        let x = gaunt_complex_build(c("oriental:1").as_ptr());
        assert!(gaunt_pi1_json(x, 0, 7, 8).is_null());
        assert!(last_error().contains("out of range"));
        gaunt_complex_free(x);

        // freeing NULL is a safe no-op
        gaunt_complex_free(std::ptr::null_mut());
        gaunt_string_free(std::ptr::null_mut());
    }
}

#[test]
fn generated_header_declares_the_api() {
    let header = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include").join("gaunt.h"),
    )
    .expect("build script wrote include/gaunt.h");
    for name in [
        "GauntComplex",
        "gaunt_complex_build",
        "gaunt_complex_from_json",
        "gaunt_complex_to_json",
        "gaunt_complex_validate",
        "gaunt_pi0_json",
        "gaunt_pi1_json",
        "gaunt_complex_free",
        "gaunt_string_free",
        "gaunt_last_error",
    ] {
        assert!(header.contains(name), "header is missing {name}");
    }
}
