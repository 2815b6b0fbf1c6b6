use std::ffi::{CStr, CString};
use std::ptr;
use strongcover_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(sc_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn json_of(col: *const ScColoring) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sc_coloring_to_json(col, &mut s) }, ScStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { sc_string_free(s) };
    out
}

#[test]
fn build_and_cover() {
    unsafe {
        let mut col = ptr::null_mut();
        assert_eq!(sc_coloring_new(4, 2, &mut col), ScStatus::Ok);
        for (u, v, c) in [
            (0, 1, 1),
            (1, 2, 1),
            (2, 3, 1),
            (0, 2, 2),
            (0, 3, 2),
            (1, 3, 2),
        ] {
            assert_eq!(sc_coloring_add_color(col, u, v, c), ScStatus::Ok);
        }
        assert_eq!(
            sc_coloring_add_color(col, 0, 9, 1),
            ScStatus::InvalidArgument
        );
        assert!(last_error().contains("out of range"));

        let mut k4 = ptr::null_mut();
        assert_eq!(sc_construct_k4_two_paths(&mut k4), ScStatus::Ok);
        assert_eq!(json_of(col), json_of(k4));

        let mut th = 0isize;
        let mut cov = ptr::null_mut();
        assert_eq!(sc_theta(col, 40, &mut th, &mut cov), ScStatus::Ok);
        assert_eq!(th, 2);
        assert_eq!(sc_cover_covered(cov), 4);
        assert_eq!(sc_cover_cliques(cov), 2);
        sc_cover_free(cov);

        let order = [2usize, 1];
        let mut g = ptr::null_mut();
        assert_eq!(
            sc_greedy_cover(col, order.as_ptr(), 2, &mut g),
            ScStatus::Ok
        );
        assert_eq!(sc_cover_covered(g), 3);
        sc_cover_free(g);
        sc_coloring_free(col);
        sc_coloring_free(k4);
    }
}

#[test]
fn theta_none_and_null_cover_out() {
    unsafe {
        let mut k5 = ptr::null_mut();
        assert_eq!(sc_construct_k5star(&mut k5), ScStatus::Ok);
        let mut th = 0isize;
        assert_eq!(sc_theta(k5, 40, &mut th, ptr::null_mut()), ScStatus::Ok);
        assert_eq!(th, -1);
        let mut cov = std::ptr::dangling_mut::<ScCover>();
        assert_eq!(sc_theta(k5, 40, &mut th, &mut cov), ScStatus::Ok);
        assert!(cov.is_null());
        assert_eq!(
            sc_theta(k5, 3, &mut th, ptr::null_mut()),
            ScStatus::SizeLimit
        );
        sc_coloring_free(k5);
    }
}

#[test]
fn status_codes() {
    unsafe {
        let mut col = ptr::null_mut();
        let bad = CString::new(r#"{"n": 2, "t": 1, "edges": [[1, 0, [1]]]}"#).unwrap();
        assert_ne!(sc_coloring_from_json(bad.as_ptr(), &mut col), ScStatus::Ok);
        let unknown = CString::new(r#"{"what": 1}"#).unwrap();
        assert_eq!(
            sc_coloring_from_json(unknown.as_ptr(), &mut col),
            ScStatus::Parse
        );
        assert_eq!(
            sc_coloring_from_json(ptr::null(), &mut col),
            ScStatus::InvalidArgument
        );

        let mut k5 = ptr::null_mut();
        assert_eq!(sc_construct_k5star(&mut k5), ScStatus::Ok);
        let mut cov = ptr::null_mut();
        assert_eq!(sc_strong_cover_33(k5, &mut cov), ScStatus::Precondition);
        assert_eq!(sc_strong_cover_tt(k5, &mut cov), ScStatus::NotChordal);
        assert_eq!(
            sc_exact_max_cover(ptr::null(), 40, &mut cov),
            ScStatus::InvalidArgument
        );
        assert_eq!(
            sc_exact_max_cover(k5, 40, ptr::null_mut()),
            ScStatus::InvalidArgument
        );
        let mut tk = false;
        assert_eq!(sc_is_tk(k5, 2, &mut tk), ScStatus::Ok);
        assert!(tk);
        sc_coloring_free(k5);
        sc_coloring_free(ptr::null_mut());
        sc_cover_free(ptr::null_mut());
        sc_string_free(ptr::null_mut());
    }
}

#[test]
fn interval_json_and_constructions() {
    unsafe {
        let fam = CString::new(
            r#"{"t": 2, "members": [[[0, 1], [5, 6]], [[1, 2], [6, 9]], [[3, 4], [6, 7]]]}"#,
        )
        .unwrap();
        let mut col = ptr::null_mut();
        assert_eq!(sc_coloring_from_json(fam.as_ptr(), &mut col), ScStatus::Ok);
        assert_eq!(sc_coloring_n(col), 3);
        let mut tk = false;
        assert_eq!(sc_is_tk(col, 2, &mut tk), ScStatus::Ok);
        assert!(tk);
        sc_coloring_free(col);

        let mut of = ptr::null_mut();
        assert_eq!(sc_construct_onefourth(3, &mut of), ScStatus::Ok);
        assert_eq!(sc_coloring_n(of), 7);
        let mut cov = ptr::null_mut();
        assert_eq!(sc_exact_max_cover(of, 40, &mut cov), ScStatus::Ok);
        assert_eq!(sc_cover_covered(cov), 6);
        sc_cover_free(cov);
        sc_coloring_free(of);
        assert_eq!(
            sc_construct_onefourth(1, &mut of),
            ScStatus::InvalidArgument
        );

        let mut k8 = ptr::null_mut();
        assert_eq!(sc_construct_k8_c4free(&mut k8), ScStatus::Ok);
        assert_eq!(sc_coloring_t(k8), 3);
        sc_coloring_free(k8);
        assert!(!CStr::from_ptr(sc_version()).to_bytes().is_empty());
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/strongcover.h"
    ))
    .unwrap();
    for name in [
        "sc_last_error",
        "sc_coloring_from_json",
        "sc_theta",
        "sc_strong_cover_c4free22",
        "SC_STATUS_THEOREM_VIOLATION",
        "typedef struct ScCover ScCover",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

/// Compiles `tests/c/smoke.c` against the static library and runs it.
#[test]
fn c_program_links_and_runs() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap();
    let lib = profile_dir.join("libstrongcover_ffi.a");
    assert!(
        lib.exists(),
        "static library not built at {}",
        lib.display()
    );
    let manifest = env!("CARGO_MANIFEST_DIR");
    let out = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("sc_smoke");
    let status = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&out)
        .arg(format!("{manifest}/tests/c/smoke.c"))
        .arg(format!("-I{manifest}/include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let run = std::process::Command::new(&out).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
