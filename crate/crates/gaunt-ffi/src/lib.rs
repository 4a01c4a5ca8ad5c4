//! C ABI over the core complex builders and homotopy posets.
//!
//! Conventions:
//! - Complexes are held behind the opaque handle [`GauntComplex`]; free with
//!   [`gaunt_complex_free`].
//! - Functions returning strings allocate a fresh NUL-terminated buffer; free
//!   with [`gaunt_string_free`].
//! - Fallible functions return `NULL` (pointers) or a nonzero status code
//!   (integers) and record a message retrievable via [`gaunt_last_error`].
//!   The message is thread-local and valid until the next failing call on the
//!   same thread.
//! - Status codes mirror the CLI exit codes: 0 success, 1 failed check,
//!   2 invalid input, 3 unsaturated enumeration (raise the cap and retry).

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use gaunt_core::cells::BasePoint;
use gaunt_core::error::Error;
use gaunt_core::{homotopy, shapes, Complex};

/// Success.
pub const GAUNT_OK: c_int = 0;
/// A validation check failed; details via `gaunt_last_error`.
pub const GAUNT_CHECK_FAILED: c_int = 1;
/// Malformed or out-of-range input (including NULL pointers).
pub const GAUNT_INVALID_INPUT: c_int = 2;
/// Enumeration was not saturated at the given cap; raise it and retry.
pub const GAUNT_UNSATURATED: c_int = 3;

/// An augmented directed complex. Opaque; create with `gaunt_complex_build`
/// or `gaunt_complex_from_json`, destroy with `gaunt_complex_free`.
pub struct GauntComplex {
    inner: Complex,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes stripped");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> c_int {
    match err {
        Error::UnsaturatedEnumeration { .. } => GAUNT_UNSATURATED,
        _ => GAUNT_INVALID_INPUT,
    }
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("NUL bytes stripped").into_raw()
}

/// Reads a handle, recording an error on NULL.
unsafe fn deref<'a>(handle: *const GauntComplex) -> Option<&'a Complex> {
    if handle.is_null() {
        set_error("NULL complex handle".into());
        return None;
    }
    Some(&(*handle).inner)
}

unsafe fn read_str<'a>(text: *const c_char, what: &str) -> Option<&'a str> {
    if text.is_null() {
        set_error(format!("NULL {what}"));
        return None;
    }
    match CStr::from_ptr(text).to_str() {
        Ok(s) => Some(s),
        Err(_) => {
            set_error(format!("{what} is not valid UTF-8"));
            None
        }
    }
}

fn build_spec(spec: &str) -> Result<Complex, String> {
    if spec == "point" {
        return Ok(shapes::point());
    }
    let (kind, n) = spec.split_once(':').ok_or_else(|| {
        format!("unknown shape spec {spec:?}; expected point or kind:n")
    })?;
    let n: usize = n.parse().map_err(|_| format!("bad dimension in shape spec {spec:?}"))?;
    match kind {
        "oriental" => Ok(shapes::oriental(n)),
        "cube" => Ok(shapes::cube(n)),
        "disk" => Ok(shapes::disk(n)),
        "boundary" => Ok(shapes::boundary_disk(n)),
        _ => Err(format!("unknown shape kind {kind:?}")),
    }
}

/// The message recorded by the most recent failing call on this thread, or
/// NULL if none. The pointer is borrowed: do not free it, and do not use it
/// after the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gaunt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a standard shape from a spec string: `point`, `oriental:n`,
/// `cube:n`, `disk:n`, or `boundary:n`. Returns NULL on a malformed spec.
#[no_mangle]
pub unsafe extern "C" fn gaunt_complex_build(spec: *const c_char) -> *mut GauntComplex {
    let Some(spec) = read_str(spec, "shape spec") else { return ptr::null_mut() };
    match build_spec(spec) {
        Ok(inner) => Box::into_raw(Box::new(GauntComplex { inner })),
        Err(msg) => {
            set_error(msg);
            ptr::null_mut()
        }
    }
}

/// Parses a complex from its JSON wire format. Returns NULL on parse errors.
#[no_mangle]
pub unsafe extern "C" fn gaunt_complex_from_json(text: *const c_char) -> *mut GauntComplex {
    let Some(text) = read_str(text, "JSON text") else { return ptr::null_mut() };
    match Complex::from_json(text) {
        Ok(inner) => Box::into_raw(Box::new(GauntComplex { inner })),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// Serializes a complex to its JSON wire format. Free with
/// `gaunt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gaunt_complex_to_json(handle: *const GauntComplex) -> *mut c_char {
    let Some(x) = deref(handle) else { return ptr::null_mut() };
    to_c_string(x.to_json())
}

/// Validates the complex: differential squared, unital atoms, and
/// loop-freeness. Returns 0 on pass, 1 on failure (details via
/// `gaunt_last_error`), 2 on a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn gaunt_complex_validate(handle: *const GauntComplex) -> c_int {
    let Some(x) = deref(handle) else { return GAUNT_INVALID_INPUT };
    let d = x.validate();
    if d.pass() {
        GAUNT_OK
    } else {
        let mut all = d.errors;
        all.extend(d.loop_violations);
        set_error(all.join("; "));
        GAUNT_CHECK_FAILED
    }
}

/// Number of generators of the given degree.
#[no_mangle]
pub unsafe extern "C" fn gaunt_complex_generators(
    handle: *const GauntComplex,
    degree: usize,
) -> usize {
    match deref(handle) {
        Some(x) => x.generator_count(degree),
        None => 0,
    }
}

/// π₀ as a JSON poset (`labels` plus covering `edges`), or NULL on failure.
/// `cap` bounds the coefficients explored by chain enumeration.
#[no_mangle]
pub unsafe extern "C" fn gaunt_pi0_json(handle: *const GauntComplex, cap: u32) -> *mut c_char {
    let Some(x) = deref(handle) else { return ptr::null_mut() };
    match homotopy::pi0(x, cap) {
        Ok(pi) => to_c_string(serde_json::to_string_pretty(&pi.poset).expect("poset serializes")),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// π₁ at the object pair `(a, b)` as a JSON poset, or NULL on failure.
/// `a` and `b` index degree-0 generators.
#[no_mangle]
pub unsafe extern "C" fn gaunt_pi1_json(
    handle: *const GauntComplex,
    a: usize,
    b: usize,
    cap: u32,
) -> *mut c_char {
    let Some(x) = deref(handle) else { return ptr::null_mut() };
    let objects = x.generator_count(0);
    if a >= objects || b >= objects {
        set_error(format!("object index out of range: the complex has {objects} objects"));
        return ptr::null_mut();
    }
    match homotopy::pi_n(x, &BasePoint::objects(a, b), cap) {
        Ok(pi) => to_c_string(serde_json::to_string_pretty(&pi.poset).expect("poset serializes")),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// Status-code variant of the π computations, for callers that only need the
/// saturation verdict: 0 if the enumeration saturates at `cap`, 3 if not.
#[no_mangle]
pub unsafe extern "C" fn gaunt_pi0_status(handle: *const GauntComplex, cap: u32) -> c_int {
    let Some(x) = deref(handle) else { return GAUNT_INVALID_INPUT };
    match homotopy::pi0(x, cap) {
        Ok(_) => GAUNT_OK,
        Err(e) => {
            let code = status_of(&e);
            set_error(e.to_string());
            code
        }
    }
}

/// Releases a complex handle. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn gaunt_complex_free(handle: *mut GauntComplex) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Releases a string returned by this library. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn gaunt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
