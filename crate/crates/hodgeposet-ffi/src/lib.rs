//! C ABI over `hodgeposet`.
//!
//! Every fallible call returns an `HpStatus`. Results come back through out
//! pointers; strings are allocated here and released with `hp_string_free`.
//! The message for the most recent failure on the calling thread is
//! available from `hp_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hodgeposet::budget::Budget;
use hodgeposet::cubes::capacity;
use hodgeposet::diamonds::{HodgeDiamond, HodgeNumbers};
use hodgeposet::g2model::{classify, BinaryCubic};
use hodgeposet::polarized::{named_classes, polarized_digraph, RelationSet};
use hodgeposet::psid::{compute_psi, DomainSpec, Psi};
use hodgeposet::rational::parse_q_list;
use hodgeposet::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HpStatus {
    Ok = 0,
    Invariant = 1,
    Config = 2,
    Unsupported = 3,
    Budget = 4,
    FixtureMismatch = 5,
    NullPointer = 10,
    InvalidUtf8 = 11,
    OutOfRange = 12,
    Panic = 13,
}

impl From<&Error> for HpStatus {
    fn from(e: &Error) -> Self {
        match e.exit_code() {
            2 => HpStatus::Config,
            3 => HpStatus::Unsupported,
            4 => HpStatus::Budget,
            5 => HpStatus::FixtureMismatch,
            _ => HpStatus::Invariant,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: HpStatus, msg: impl Into<String>) -> HpStatus {
    set_error(msg.into());
    status
}

/// Runs `f`, converting panics and library errors into status codes.
fn guard<F: FnOnce() -> Result<(), HpStatus>>(f: F) -> HpStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HpStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(HpStatus::Panic, "internal panic"),
    }
}

fn lib_err(e: Error) -> HpStatus {
    fail(HpStatus::from(&e), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, HpStatus> {
    if p.is_null() {
        return Err(fail(HpStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(HpStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), HpStatus> {
    if out.is_null() {
        return Err(fail(HpStatus::NullPointer, "null out pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), HpStatus> {
    let c = CString::new(s).map_err(|_| fail(HpStatus::Invariant, "string contains NUL"))?;
    write_out(out, c.into_raw())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, HpStatus> {
    p.as_ref().ok_or_else(|| fail(HpStatus::NullPointer, "null handle"))
}

fn budget() -> Result<Budget, HpStatus> {
    Budget::from_env().map_err(lib_err)
}

fn check_index(i: usize, n: usize) -> Result<(), HpStatus> {
    if i < n {
        Ok(())
    } else {
        Err(fail(HpStatus::OutOfRange, format!("class index {i} out of range 0..{n}")))
    }
}

/// Classes of a classical period domain with their polarized relation.
pub struct HpPeriodDomain {
    h: HodgeNumbers,
    classes: Vec<(String, HodgeDiamond)>,
    polarized: RelationSet,
}

/// Classes of a domain given by a root system and grading element.
pub struct HpRootDomain {
    psi: Psi,
}

/// Message for the last failure on this thread, or null. Owned by the
/// library; valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned through an out pointer. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn hp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds the period domain for Hodge numbers `h[0..len]` of the given weight.
///
/// # Safety
/// `h` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_period_domain_new(
    weight: u32,
    h: *const u64,
    len: usize,
    out: *mut *mut HpPeriodDomain,
) -> HpStatus {
    guard(|| {
        if h.is_null() {
            return Err(fail(HpStatus::NullPointer, "null Hodge numbers"));
        }
        let hs = std::slice::from_raw_parts(h, len).to_vec();
        let h = HodgeNumbers::new(weight, hs).map_err(lib_err)?;
        let b = budget()?;
        let classes = named_classes(&h, &b).map_err(lib_err)?;
        let polarized = polarized_digraph(&h, &b).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(HpPeriodDomain { h, classes, polarized })))
    })
}

/// # Safety
/// `d` must be null or a handle from `hp_period_domain_new`.
#[no_mangle]
pub unsafe extern "C" fn hp_period_domain_free(d: *mut HpPeriodDomain) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_period_domain_class_count(d: *const HpPeriodDomain, out: *mut usize) -> HpStatus {
    guard(|| write_out(out, handle(d)?.classes.len()))
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_period_domain_class_name(
    d: *const HpPeriodDomain,
    i: usize,
    out: *mut *mut c_char,
) -> HpStatus {
    guard(|| {
        let d = handle(d)?;
        check_index(i, d.classes.len())?;
        write_string(out, d.classes[i].0.clone())
    })
}

/// Whether class `i` polarizes into class `j` (strict relation).
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_period_domain_polarized(
    d: *const HpPeriodDomain,
    i: usize,
    j: usize,
    out: *mut bool,
) -> HpStatus {
    guard(|| {
        let d = handle(d)?;
        check_index(i, d.classes.len())?;
        check_index(j, d.classes.len())?;
        write_out(out, d.polarized.holds(i, j))
    })
}

/// Classes, diamonds and polarized edges as JSON.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_period_domain_json(d: *const HpPeriodDomain, out: *mut *mut c_char) -> HpStatus {
    guard(|| {
        let d = handle(d)?;
        let classes: Vec<_> =
            d.classes.iter().map(|(n, dia)| serde_json::json!({"name": n, "diamond": dia.to_json()})).collect();
        let v = serde_json::json!({
            "schemaVersion": hodgeposet::SCHEMA_VERSION,
            "weight": d.h.weight,
            "h": d.h.h,
            "classes": classes,
            "polarized": d.polarized.edges.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        });
        write_string(out, v.to_string())
    })
}

/// Builds the class set for root system `root` (e.g. "G2") and a comma
/// separated grading such as "0,1".
///
/// # Safety
/// Both strings must be NUL terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_root_domain_new(
    root: *const c_char,
    grading: *const c_char,
    out: *mut *mut HpRootDomain,
) -> HpStatus {
    guard(|| {
        let root = read_str(root)?;
        let e = parse_q_list(read_str(grading)?).map_err(lib_err)?;
        let spec = DomainSpec::new(root, e).map_err(lib_err)?;
        let psi = compute_psi(&spec, &budget()?).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(HpRootDomain { psi })))
    })
}

/// # Safety
/// `d` must be null or a handle from `hp_root_domain_new`.
#[no_mangle]
pub unsafe extern "C" fn hp_root_domain_free(d: *mut HpRootDomain) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_root_domain_class_count(d: *const HpRootDomain, out: *mut usize) -> HpStatus {
    guard(|| write_out(out, handle(d)?.psi.classes.len()))
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_root_domain_class_name(
    d: *const HpRootDomain,
    i: usize,
    out: *mut *mut c_char,
) -> HpStatus {
    guard(|| {
        let d = handle(d)?;
        check_index(i, d.psi.classes.len())?;
        write_string(out, d.psi.classes[i].name.clone())
    })
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_root_domain_leq(d: *const HpRootDomain, i: usize, j: usize, out: *mut bool) -> HpStatus {
    guard(|| {
        let d = handle(d)?;
        check_index(i, d.psi.classes.len())?;
        check_index(j, d.psi.classes.len())?;
        write_out(out, d.psi.leq(i, j))
    })
}

/// Strong-orthogonality test; exact when the grading is regular,
/// a sufficient condition otherwise.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_root_domain_polarized(
    d: *const HpRootDomain,
    i: usize,
    j: usize,
    out: *mut bool,
) -> HpStatus {
    guard(|| {
        let d = handle(d)?;
        check_index(i, d.psi.classes.len())?;
        check_index(j, d.psi.classes.len())?;
        write_out(out, i != j && d.psi.polarized_by_orthogonality(i, j))
    })
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_root_domain_capacity(d: *const HpRootDomain, i: usize, out: *mut usize) -> HpStatus {
    guard(|| {
        let d = handle(d)?;
        check_index(i, d.psi.classes.len())?;
        write_out(out, capacity(&d.psi, i))
    })
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_root_domain_json(d: *const HpRootDomain, out: *mut *mut c_char) -> HpStatus {
    guard(|| {
        let mut v = handle(d)?.psi.to_json();
        v["schemaVersion"] = serde_json::json!(hodgeposet::SCHEMA_VERSION);
        write_string(out, v.to_string())
    })
}

/// Orbit type ("0", "I", "II" or "III") of a binary cubic given as
/// four comma separated rationals.
///
/// # Safety
/// `cubic` must be NUL terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_g2_classify(cubic: *const c_char, out: *mut *mut c_char) -> HpStatus {
    guard(|| {
        let v = BinaryCubic::parse(read_str(cubic)?).map_err(lib_err)?;
        write_string(out, classify(&v).name().to_string())
    })
}
