//! C ABI over `msf7`.
//!
//! Every fallible function returns an [`Msf7Status`]; on failure a message is
//! available from [`msf7_last_error_message`] on the same thread. Forms are
//! passed as opaque [`Msf7KForm`] handles. Strings returned through `out`
//! parameters are owned by the caller and released with [`msf7_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use msf7::exterior::KForm;
use msf7::forms7::{self, Classification, Variant};
use msf7::stabilizers::verify_paper;
use msf7::topology::{check_type, CohomologyModel, VerdictStatus};
use msf7::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Msf7Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Hypothesis = 5,
    Internal = 6,
}

/// Opaque handle to a 3-form.
pub struct Msf7KForm {
    inner: KForm,
}

/// `classify` result for a nondegenerate form outside the table.
pub const MSF7_ORBIT_UNKNOWN: i32 = 0;
/// `classify` result for a degenerate form.
pub const MSF7_ORBIT_NON_MULTISYMPLECTIC: i32 = -1;

pub const MSF7_VERDICT_ADMITS: i32 = 0;
pub const MSF7_VERDICT_NO: i32 = 1;
pub const MSF7_VERDICT_UNKNOWN: i32 = 2;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> Msf7Status {
    match e {
        Error::Json(_) | Error::ParseScalar(_) | Error::Model(_) => Msf7Status::Parse,
        Error::Hypothesis(_) => Msf7Status::Hypothesis,
        Error::AmbiguousTable(_) | Error::Io(_) => Msf7Status::Internal,
        _ => Msf7Status::InvalidArgument,
    }
}

struct Fail(Msf7Status, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> Msf7Status {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Msf7Status::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            Msf7Status::Internal
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(Msf7Status::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(Msf7Status::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn read_form<'a>(form: *const Msf7KForm) -> Result<&'a KForm, Fail> {
    form.as_ref().map(|f| &f.inner).ok_or_else(|| null("form"))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(Msf7Status::Internal, "string contains a nul byte".into()))
}

/// Message for the last failure on this thread, or null. Valid until the
/// next call into the library on this thread.
#[no_mangle]
pub extern "C" fn msf7_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static version string.
#[no_mangle]
pub extern "C" fn msf7_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn msf7_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `form` must be null or a handle returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn msf7_kform_free(form: *mut Msf7KForm) {
    if !form.is_null() {
        drop(Box::from_raw(form));
    }
}

/// Parses KForm JSON into a new handle.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msf7_kform_from_json(json: *const c_char, out: *mut *mut Msf7KForm) -> Msf7Status {
    guard(|| {
        let form = KForm::from_json(read_str(json, "json")?)?;
        write_out(out, Box::into_raw(Box::new(Msf7KForm { inner: form })), "out")
    })
}

/// # Safety
/// `form` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msf7_kform_to_json(form: *const Msf7KForm, out: *mut *mut c_char) -> Msf7Status {
    guard(|| {
        let s = into_c_string(read_form(form)?.to_json())?;
        write_out(out, s, "out")
    })
}

/// The canonical representative of an orbit; `prime` selects the primed
/// variant where one exists.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msf7_canonical(orbit: u8, prime: bool, out: *mut *mut Msf7KForm) -> Msf7Status {
    guard(|| {
        let variant = if prime { Variant::Prime } else { Variant::Standard };
        let form = forms7::canonical(orbit, variant)?.form;
        write_out(out, Box::into_raw(Box::new(Msf7KForm { inner: form })), "out")
    })
}

/// Writes the orbit id `1..=8`, [`MSF7_ORBIT_UNKNOWN`] or
/// [`MSF7_ORBIT_NON_MULTISYMPLECTIC`].
///
/// # Safety
/// `form` must be a live handle; `out_orbit` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msf7_classify(form: *const Msf7KForm, out_orbit: *mut i32) -> Msf7Status {
    guard(|| {
        let id = match forms7::classify(read_form(form)?)? {
            Classification::Orbit(i) => i32::from(i),
            Classification::Unknown => MSF7_ORBIT_UNKNOWN,
            Classification::NonMultisymplectic => MSF7_ORBIT_NON_MULTISYMPLECTIC,
        };
        write_out(out_orbit, id, "out_orbit")
    })
}

/// # Safety
/// `form` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msf7_is_multisymplectic(form: *const Msf7KForm, out: *mut bool) -> Msf7Status {
    guard(|| {
        let b = forms7::is_multisymplectic(read_form(form)?)?;
        write_out(out, b, "out")
    })
}

/// The invariant vector as JSON.
///
/// # Safety
/// `form` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn msf7_invariants_json(form: *const Msf7KForm, out: *mut *mut c_char) -> Msf7Status {
    guard(|| {
        let v = forms7::invariant_vector(read_form(form)?)?;
        let s = serde_json::to_string(&v).map_err(Error::from)?;
        write_out(out, into_c_string(s)?, "out")
    })
}

/// Runs the topology check on a model given as JSON. Writes one of the
/// `MSF7_VERDICT_*` codes and, if `out_json` is non-null, the verdict JSON.
///
/// # Safety
/// `model_json` must be a nul-terminated string; `out_verdict` must be
/// writable; `out_json` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn msf7_topo_check(
    model_json: *const c_char,
    type_id: u8,
    bound: u32,
    out_verdict: *mut i32,
    out_json: *mut *mut c_char,
) -> Msf7Status {
    guard(|| {
        let model = CohomologyModel::from_json(read_str(model_json, "model_json")?)?;
        let v = check_type(&model, type_id, bound)?;
        let code = match v.status {
            VerdictStatus::Admits => MSF7_VERDICT_ADMITS,
            VerdictStatus::No => MSF7_VERDICT_NO,
            VerdictStatus::Unknown => MSF7_VERDICT_UNKNOWN,
        };
        write_out(out_verdict, code, "out_verdict")?;
        if !out_json.is_null() {
            out_json.write(into_c_string(v.to_json())?);
        }
        Ok(())
    })
}

/// Runs every catalog, identity, compact-dimension and embedding check.
///
/// # Safety
/// `out_all_passed` must be writable; `out_json` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn msf7_verify_paper(draws: u32, out_all_passed: *mut bool, out_json: *mut *mut c_char) -> Msf7Status {
    guard(|| {
        let report = verify_paper(draws as usize)?;
        write_out(out_all_passed, report.all_passed(), "out_all_passed")?;
        if !out_json.is_null() {
            out_json.write(into_c_string(report.to_json())?);
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::Hypothesis("x".into())), Msf7Status::Hypothesis);
        assert_eq!(status_of(&Error::InvalidOrbit(9)), Msf7Status::InvalidArgument);
        assert_eq!(status_of(&Error::Model("m".into())), Msf7Status::Parse);
    }

    #[test]
    fn panics_become_internal_errors() {
        let s = guard(|| panic!("boom"));
        assert_eq!(s, Msf7Status::Internal);
        assert!(!msf7_last_error_message().is_null());
    }

    #[test]
    fn success_clears_the_last_error() {
        set_error("old");
        assert_eq!(guard(|| Ok(())), Msf7Status::Ok);
        assert!(msf7_last_error_message().is_null());
    }
}
