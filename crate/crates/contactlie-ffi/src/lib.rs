//! C ABI over the contactlie toolkit.
//!
//! Documents are opaque handles; analysis results cross the boundary as
//! canonical JSON strings allocated by this library (free them with
//! [`clie_string_free`]). Every fallible call returns a `CLIE_*` status code;
//! on failure a thread-local message (the violation report JSON for
//! `CLIE_ERR_MATH`) is retrievable with [`clie_last_error`] until the next
//! failing call on the same thread.
//!
//! The installed header `include/contactlie.h` is maintained by hand and
//! kept in lockstep with this file by the `header_sync` test.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use contactlie::json::{document_to_value, parse_document, to_canonical_string, Document};
use contactlie::reports::{
    canonical_report, catalog_document, catalog_names_report, classify_report,
    homology_gamma_report, homology_quaternion_report, invariants_report, torsion_report,
    validate_report, Report, ReportError,
};

pub const CLIE_OK: c_int = 0;
pub const CLIE_ERR_NULL_ARGUMENT: c_int = 1;
pub const CLIE_ERR_INVALID_UTF8: c_int = 2;
pub const CLIE_ERR_SCHEMA: c_int = 3;
pub const CLIE_ERR_MATH: c_int = 4;
pub const CLIE_ERR_UNSUPPORTED: c_int = 5;
pub const CLIE_ERR_PANIC: c_int = 6;

/// Opaque parsed document.
pub struct ClieDocument {
    doc: Document,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(sanitized).expect("NUL bytes removed"));
    });
}

fn fail(code: c_int, message: String) -> c_int {
    set_last_error(message);
    code
}

fn fail_report(e: ReportError) -> c_int {
    match e {
        ReportError::Math(v) => fail(CLIE_ERR_MATH, to_canonical_string(&v.to_value())),
        ReportError::Schema(s) => fail(CLIE_ERR_SCHEMA, s.to_string()),
        ReportError::Usage(msg) => fail(CLIE_ERR_UNSUPPORTED, msg),
    }
}

/// # Safety
/// `s` must be a valid NUL-terminated string or NULL.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, c_int> {
    if s.is_null() {
        return Err(CLIE_ERR_NULL_ARGUMENT);
    }
    CStr::from_ptr(s).to_str().map_err(|_| CLIE_ERR_INVALID_UTF8)
}

fn write_string(out: *mut *mut c_char, s: String) -> c_int {
    if out.is_null() {
        return fail(CLIE_ERR_NULL_ARGUMENT, "output pointer is NULL".to_string());
    }
    let sanitized = s.replace('\0', " ");
    let c = CString::new(sanitized).expect("NUL bytes removed");
    unsafe { *out = c.into_raw() };
    CLIE_OK
}

fn guard(body: impl FnOnce() -> c_int) -> c_int {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(code) => code,
        Err(_) => fail(CLIE_ERR_PANIC, "internal panic; this is a bug".to_string()),
    }
}

fn parse_param_list(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut map = BTreeMap::new();
    for pair in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| format!("parameter `{pair}` is not of the form key=value"))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn report_call(
    doc: *const ClieDocument,
    out: *mut *mut c_char,
    f: impl FnOnce(&Document) -> Result<Report, ReportError>,
) -> c_int {
    guard(|| {
        let Some(handle) = (unsafe { doc.as_ref() }) else {
            return fail(CLIE_ERR_NULL_ARGUMENT, "document handle is NULL".to_string());
        };
        match f(&handle.doc) {
            Ok(report) => write_string(out, report.to_json_string()),
            Err(e) => fail_report(e),
        }
    })
}

/// Parse a JSON document into a handle. On success `*out` owns the document;
/// release it with `clie_document_free`.
///
/// # Safety
/// `json` must be NUL-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn clie_document_parse(
    json: *const c_char,
    out: *mut *mut ClieDocument,
) -> c_int {
    guard(|| {
        let text = match read_str(json) {
            Ok(t) => t,
            Err(code) => return fail(code, "input string is NULL or not UTF-8".to_string()),
        };
        if out.is_null() {
            return fail(CLIE_ERR_NULL_ARGUMENT, "output pointer is NULL".to_string());
        }
        match parse_document(text) {
            Ok(doc) => {
                *out = Box::into_raw(Box::new(ClieDocument { doc }));
                CLIE_OK
            }
            Err(e) => fail(CLIE_ERR_SCHEMA, e.to_string()),
        }
    })
}

/// Build a document from a catalog family; `params` is a comma-separated
/// `key=value` list and may be NULL for no parameters.
///
/// # Safety
/// `name` must be NUL-terminated; `params` NUL-terminated or NULL; `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn clie_document_from_catalog(
    name: *const c_char,
    params: *const c_char,
    out: *mut *mut ClieDocument,
) -> c_int {
    guard(|| {
        let name = match read_str(name) {
            Ok(t) => t,
            Err(code) => return fail(code, "catalog name is NULL or not UTF-8".to_string()),
        };
        let params = if params.is_null() {
            BTreeMap::new()
        } else {
            let text = match read_str(params) {
                Ok(t) => t,
                Err(code) => return fail(code, "parameter string is not UTF-8".to_string()),
            };
            match parse_param_list(text) {
                Ok(map) => map,
                Err(msg) => return fail(CLIE_ERR_UNSUPPORTED, msg),
            }
        };
        if out.is_null() {
            return fail(CLIE_ERR_NULL_ARGUMENT, "output pointer is NULL".to_string());
        }
        match catalog_document(name, &params) {
            Ok(doc) => {
                *out = Box::into_raw(Box::new(ClieDocument { doc }));
                CLIE_OK
            }
            Err(e) => fail_report(e),
        }
    })
}

/// Release a document handle. NULL is a no-op.
///
/// # Safety
/// `doc` must have come from this library and not have been freed before.
#[no_mangle]
pub unsafe extern "C" fn clie_document_free(doc: *mut ClieDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// Dimension of the underlying algebra.
///
/// # Safety
/// `doc` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn clie_document_dim(doc: *const ClieDocument, out: *mut usize) -> c_int {
    guard(|| {
        let Some(handle) = doc.as_ref() else {
            return fail(CLIE_ERR_NULL_ARGUMENT, "document handle is NULL".to_string());
        };
        if out.is_null() {
            return fail(CLIE_ERR_NULL_ARGUMENT, "output pointer is NULL".to_string());
        }
        *out = handle.doc.tensor.dim();
        CLIE_OK
    })
}

/// Canonical JSON serialization of the document itself.
///
/// # Safety
/// `doc` must be a live handle; `out` receives a string to free with
/// `clie_string_free`.
#[no_mangle]
pub unsafe extern "C" fn clie_document_to_json(
    doc: *const ClieDocument,
    out: *mut *mut c_char,
) -> c_int {
    guard(|| {
        let Some(handle) = doc.as_ref() else {
            return fail(CLIE_ERR_NULL_ARGUMENT, "document handle is NULL".to_string());
        };
        write_string(out, to_canonical_string(&document_to_value(&handle.doc)))
    })
}

/// Validate the bracket table, structure identities, and metric.
///
/// # Safety
/// As for `clie_document_to_json`.
#[no_mangle]
pub unsafe extern "C" fn clie_validate(doc: *const ClieDocument, out: *mut *mut c_char) -> c_int {
    report_call(doc, out, validate_report)
}

/// Classification report; `dim3`/`dim7` select the low-dimensional
/// recognizers (pass 0/0 for the structure-class report).
///
/// # Safety
/// As for `clie_document_to_json`.
#[no_mangle]
pub unsafe extern "C" fn clie_classify(
    doc: *const ClieDocument,
    dim3: c_int,
    dim7: c_int,
    out: *mut *mut c_char,
) -> c_int {
    report_call(doc, out, |d| classify_report(d, dim3 != 0, dim7 != 0))
}

/// Z, delta, psi and the structure case of a 3-contact document.
///
/// # Safety
/// As for `clie_document_to_json`.
#[no_mangle]
pub unsafe extern "C" fn clie_invariants(doc: *const ClieDocument, out: *mut *mut c_char) -> c_int {
    report_call(doc, out, invariants_report)
}

/// Whether the 3-contact structure is canonical, and beta.
///
/// # Safety
/// As for `clie_document_to_json`.
#[no_mangle]
pub unsafe extern "C" fn clie_canonical(doc: *const ClieDocument, out: *mut *mut c_char) -> c_int {
    report_call(doc, out, canonical_report)
}

/// Canonical connection and torsion; pass nonzero `check_parallel` to also
/// decide parallelism.
///
/// # Safety
/// As for `clie_document_to_json`.
#[no_mangle]
pub unsafe extern "C" fn clie_torsion(
    doc: *const ClieDocument,
    check_parallel: c_int,
    out: *mut *mut c_char,
) -> c_int {
    report_call(doc, out, |d| torsion_report(d, check_parallel != 0))
}

/// First homology of the order-m lattice quotient (translation rank 4n).
///
/// # Safety
/// `out` receives a string to free with `clie_string_free`.
#[no_mangle]
pub unsafe extern "C" fn clie_homology_gamma(m: usize, n: usize, out: *mut *mut c_char) -> c_int {
    guard(|| match homology_gamma_report(m, n) {
        Ok(report) => write_string(out, report.to_json_string()),
        Err(e) => fail_report(e),
    })
}

/// First homology of the quaternion-group quotient (translation rank 4n).
///
/// # Safety
/// `out` receives a string to free with `clie_string_free`.
#[no_mangle]
pub unsafe extern "C" fn clie_homology_quaternion(n: usize, out: *mut *mut c_char) -> c_int {
    guard(|| match homology_quaternion_report(n) {
        Ok(report) => write_string(out, report.to_json_string()),
        Err(e) => fail_report(e),
    })
}

/// JSON array of the built-in catalog family names.
///
/// # Safety
/// `out` receives a string to free with `clie_string_free`.
#[no_mangle]
pub unsafe extern "C" fn clie_catalog_names(out: *mut *mut c_char) -> c_int {
    guard(|| write_string(out, catalog_names_report().to_json_string()))
}

/// Free a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must have come from this library and not have been freed before.
#[no_mangle]
pub unsafe extern "C" fn clie_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread (the violation report JSON for
/// `CLIE_ERR_MATH`), or NULL if none. Valid until the next failing call on
/// the same thread.
#[no_mangle]
pub extern "C" fn clie_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |c| c.as_ptr())
    })
}
