use std::ffi::{CStr, CString};
use std::ptr;

use hodgeposet_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { hp_string_free(s) };
    out
}

#[test]
fn period_domain_roundtrip() {
    let h = [1u64, 2, 2, 1];
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { hp_period_domain_new(3, h.as_ptr(), h.len(), &mut d) }, HpStatus::Ok);
    let mut n = 0usize;
    assert_eq!(unsafe { hp_period_domain_class_count(d, &mut n) }, HpStatus::Ok);
    assert_eq!(n, 8);
    let names: Vec<String> = (0..n)
        .map(|i| {
            let mut s = ptr::null_mut();
            assert_eq!(unsafe { hp_period_domain_class_name(d, i, &mut s) }, HpStatus::Ok);
            take(s)
        })
        .collect();
    let idx = |name: &str| names.iter().position(|x| x == name).unwrap();
    let mut b = false;
    assert_eq!(unsafe { hp_period_domain_polarized(d, idx("II1"), idx("IV2"), &mut b) }, HpStatus::Ok);
    assert!(b);
    assert_eq!(unsafe { hp_period_domain_polarized(d, idx("II0"), idx("IV2"), &mut b) }, HpStatus::Ok);
    assert!(!b);

    let mut js = ptr::null_mut();
    assert_eq!(unsafe { hp_period_domain_json(d, &mut js) }, HpStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(js)).unwrap();
    assert_eq!(v["schemaVersion"], "1");
    assert_eq!(v["classes"].as_array().unwrap().len(), 8);

    assert_eq!(unsafe { hp_period_domain_class_name(d, 99, &mut js) }, HpStatus::OutOfRange);
    assert!(!hp_last_error().is_null());
    unsafe { hp_period_domain_free(d) };
}

#[test]
fn bad_hodge_numbers_report_config() {
    let h = [1u64, 2, 1];
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { hp_period_domain_new(3, h.as_ptr(), h.len(), &mut d) }, HpStatus::Config);
    assert!(d.is_null());
    let msg = unsafe { CStr::from_ptr(hp_last_error()) }.to_str().unwrap();
    assert!(msg.contains("weight 3"), "{msg}");
}

#[test]
fn root_domain_g2() {
    let root = CString::new("G2").unwrap();
    let grading = CString::new("0,1").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { hp_root_domain_new(root.as_ptr(), grading.as_ptr(), &mut d) }, HpStatus::Ok);
    let mut n = 0;
    assert_eq!(unsafe { hp_root_domain_class_count(d, &mut n) }, HpStatus::Ok);
    assert_eq!(n, 4);
    let mut caps = std::collections::BTreeMap::new();
    for i in 0..n {
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { hp_root_domain_class_name(d, i, &mut s) }, HpStatus::Ok);
        let mut c = 0;
        assert_eq!(unsafe { hp_root_domain_capacity(d, i, &mut c) }, HpStatus::Ok);
        caps.insert(take(s), c);
    }
    assert_eq!(caps["III"], 2);
    assert_eq!(caps["I"], 1);
    assert_eq!(caps["0"], 0);
    let mut js = ptr::null_mut();
    assert_eq!(unsafe { hp_root_domain_json(d, &mut js) }, HpStatus::Ok);
    assert!(take(js).contains("schemaVersion"));
    unsafe { hp_root_domain_free(d) };
}

#[test]
fn null_and_unsupported_inputs() {
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { hp_root_domain_new(ptr::null(), ptr::null(), &mut d) }, HpStatus::NullPointer);
    let root = CString::new("Q9").unwrap();
    let grading = CString::new("1").unwrap();
    let st = unsafe { hp_root_domain_new(root.as_ptr(), grading.as_ptr(), &mut d) };
    assert_ne!(st, HpStatus::Ok);
    let mut n = 0;
    assert_eq!(unsafe { hp_root_domain_class_count(ptr::null(), &mut n) }, HpStatus::NullPointer);
    unsafe {
        hp_string_free(ptr::null_mut());
        hp_root_domain_free(ptr::null_mut());
        hp_period_domain_free(ptr::null_mut());
    }
}

#[test]
fn g2_classify() {
    let mut s = ptr::null_mut();
    let c = CString::new("0,0,1,0").unwrap();
    assert_eq!(unsafe { hp_g2_classify(c.as_ptr(), &mut s) }, HpStatus::Ok);
    assert_eq!(take(s), "II");
    let c = CString::new("1,2").unwrap();
    assert_eq!(unsafe { hp_g2_classify(c.as_ptr(), &mut s) }, HpStatus::Config);
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(hp_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/hodgeposet.h");
    let text = std::fs::read_to_string(header).unwrap();
    for sym in ["hp_period_domain_new", "hp_root_domain_capacity", "hp_string_free", "HP_STATUS_BUDGET"] {
        assert!(text.contains(sym), "{sym} missing from header");
    }
    let Ok(st) = std::process::Command::new("cc").args(["-fsyntax-only", "-xc", header]).status() else {
        eprintln!("no C compiler, skipping syntax check");
        return;
    };
    assert!(st.success());
}
