//! Exercises the exported ABI from Rust and builds/runs the C smoke test
//! against the generated header and the cdylib.

use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use smallcover_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut libc::c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    sc_string_free(p);
    s
}

#[test]
fn polytope_lifecycle_and_report() {
    unsafe {
        let mut p: *mut ScPolytope = ptr::null_mut();
        assert_eq!(sc_polytope_simplex(3, &mut p), SC_OK);
        assert_eq!(sc_polytope_dim(p), 3);
        assert_eq!(sc_polytope_num_facets(p), 4);

        let mut json: *mut libc::c_char = ptr::null_mut();
        assert_eq!(sc_polytope_to_json(p, &mut json), SC_OK);
        let text = take_string(json);
        assert!(text.contains("\"num_facets\": 4"));

        let mut report: *mut libc::c_char = ptr::null_mut();
        let status = sc_classify_json(p, ptr::null(), true, 0, &mut report);
        assert_eq!(status, SC_OK);
        let report = take_string(report);
        assert!(report.contains("\"simply_connected\": true"));
        assert!(report.contains("\"pi1\": \"(Z_2)^1\""));

        sc_polytope_free(p);
    }
}

#[test]
fn betti_and_membership() {
    unsafe {
        let mut p: *mut ScPolytope = ptr::null_mut();
        assert_eq!(sc_polytope_cube(2, &mut p), SC_OK);

        let mut betti: *mut libc::c_char = ptr::null_mut();
        assert_eq!(sc_betti_json(p, ptr::null(), 0, &mut betti), SC_OK);
        assert_eq!(take_string(betti), r#"{"b":[1,2,1],"euler":0}"#);

        // Klein-bottle data over the square
        let lambda = cstr(r#"{"v":1,"t":2,"columns":[[1,0],[0,1],[1,0],[1,1]]}"#);
        let mut betti: *mut libc::c_char = ptr::null_mut();
        assert_eq!(sc_betti_json(p, lambda.as_ptr(), 0, &mut betti), SC_OK);
        assert_eq!(take_string(betti), r#"{"b":[1,2,1],"euler":0}"#);

        let word = cstr("[0,2,0,2]");
        let mut member = false;
        assert_eq!(sc_word_member(p, word.as_ptr(), ptr::null(), &mut member), SC_OK);
        assert!(member);

        let mut valid = false;
        let mut failing = usize::MAX;
        assert_eq!(
            sc_validate_charfunc(p, lambda.as_ptr(), &mut valid, &mut failing),
            SC_OK
        );
        assert!(valid);

        let repeated = cstr(r#"{"v":1,"t":2,"columns":[[1,0],[0,1],[0,1],[1,0]]}"#);
        assert_eq!(
            sc_validate_charfunc(p, repeated.as_ptr(), &mut valid, &mut failing),
            SC_OK
        );
        assert!(!valid);
        assert!(failing != usize::MAX);

        sc_polytope_free(p);
    }
}

#[test]
fn error_paths_set_messages() {
    unsafe {
        let mut p: *mut ScPolytope = ptr::null_mut();
        let bad = cstr("{\"v\":1}");
        assert_eq!(sc_polytope_from_json(bad.as_ptr(), &mut p), SC_ERR_BAD_INPUT);
        let msg = take_string(sc_last_error_message());
        assert!(!msg.is_empty());

        assert_eq!(sc_polytope_from_json(ptr::null(), &mut p), SC_ERR_NULL);
        assert_eq!(sc_polytope_dim(ptr::null()), -1);

        // a guard of 1 cell cannot hold any complex
        let mut q: *mut ScPolytope = ptr::null_mut();
        assert_eq!(sc_polytope_simplex(2, &mut q), SC_OK);
        let mut betti: *mut libc::c_char = ptr::null_mut();
        assert_eq!(sc_betti_json(q, ptr::null(), 1, &mut betti), SC_ERR_ANALYSIS);
        let msg = take_string(sc_last_error_message());
        assert!(msg.contains("guard"));
        sc_polytope_free(q);
    }
}

#[test]
fn c_smoke_test_compiles_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    let smoke = manifest.join("ctest/smoke.c");
    assert!(
        include.join("smallcover.h").exists(),
        "header not generated"
    );

    // the cdylib lands two levels up from the test executable
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe
        .parent()
        .and_then(|p| p.parent())
        .expect("deps dir has a parent")
        .to_path_buf();
    let dylib = lib_dir.join("libsmallcover_ffi.so");
    assert!(
        dylib.exists(),
        "cdylib not found at {}",
        dylib.display()
    );

    let out = tempdir_path("smallcover_ffi_smoke");
    let status = Command::new("cc")
        .arg(&smoke)
        .arg("-I")
        .arg(&include)
        .arg("-o")
        .arg(&out)
        .arg(format!("-L{}", lib_dir.display()))
        .arg("-lsmallcover_ffi")
        .status()
        .expect("cc is available");
    assert!(status.success(), "smoke test failed to compile");

    let run = Command::new(&out)
        .env("LD_LIBRARY_PATH", &lib_dir)
        .output()
        .expect("smoke test runs");
    assert!(
        run.status.success(),
        "smoke test exited with {:?}: {}",
        run.status,
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).contains("ffi smoke test ok"));
}

fn tempdir_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("{name}_{}", std::process::id()));
    p
}
