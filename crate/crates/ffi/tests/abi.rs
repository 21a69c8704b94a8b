use std::ffi::{CStr, CString};
use std::ptr;

use riddle_forge_ffi::*;

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    rf_string_free(p);
    s
}

unsafe fn last_error() -> String {
    take_string(rf_last_error_message())
}

#[test]
fn weighing_counts() {
    unsafe {
        let mut p = 0u32;
        for (n, expected) in [(1, 0), (4, 2), (5, 2), (9, 2), (13, 3), (6561, 8)] {
            assert_eq!(rf_weighing_formula(n, &mut p), RfStatus::Ok);
            assert_eq!(p, expected, "formula N={n}");
            assert_eq!(rf_weighing_oracle(n, &mut p), RfStatus::Ok);
            assert_eq!(p, expected, "oracle N={n}");
        }
        assert_eq!(rf_weighing_formula(0, &mut p), RfStatus::InvalidInstance);
        assert!(last_error().contains("invalid instance"));
        assert_eq!(rf_weighing_oracle(6562, &mut p), RfStatus::OutOfRange);
        assert_eq!(
            rf_weighing_formula(3, ptr::null_mut()),
            RfStatus::NullPointer
        );
    }
}

#[test]
fn pigeonhole_counts() {
    unsafe {
        let mut d = 0u64;
        assert_eq!(rf_pigeonhole_formula(4, 4, &mut d), RfStatus::Ok);
        assert_eq!(d, 13);
        let counts = [84u64, 32, 28, 4];
        assert_eq!(
            rf_pigeonhole_oracle(counts.as_ptr(), counts.len(), 4, &mut d),
            RfStatus::Ok
        );
        assert_eq!(d, 13);
        let small = [1u64, 1];
        assert_eq!(
            rf_pigeonhole_oracle(small.as_ptr(), 2, 2, &mut d),
            RfStatus::Infeasible
        );
        assert_eq!(
            rf_pigeonhole_formula(u64::MAX, 3, &mut d),
            RfStatus::InvalidInstance
        );
        assert_eq!(
            rf_pigeonhole_oracle(ptr::null(), 0, 2, &mut d),
            RfStatus::NullPointer
        );
    }
}

#[test]
fn strategy_handle() {
    unsafe {
        let mut tree = ptr::null_mut();
        assert_eq!(rf_strategy_new(13, &mut tree), RfStatus::Ok);
        let mut depth = 0;
        assert_eq!(rf_strategy_depth(tree, &mut depth), RfStatus::Ok);
        assert_eq!(depth, 3);
        for heavy in 0..13 {
            let (mut found, mut used) = (0u64, 0u32);
            assert_eq!(
                rf_strategy_simulate(tree, heavy, &mut found, &mut used),
                RfStatus::Ok
            );
            assert_eq!(found, heavy);
            assert!(used <= 3);
        }
        let (mut found, mut used) = (0u64, 0u32);
        assert_eq!(
            rf_strategy_simulate(tree, 13, &mut found, &mut used),
            RfStatus::InvalidInstance
        );
        let mut text = ptr::null_mut();
        assert_eq!(rf_strategy_to_text(tree, &mut text), RfStatus::Ok);
        assert!(take_string(text).starts_with("weigh {0-3} vs {4-7}\n"));
        rf_strategy_free(tree);
        rf_strategy_free(ptr::null_mut());
        assert_eq!(
            rf_strategy_depth(ptr::null(), &mut depth),
            RfStatus::NullPointer
        );
    }
}

#[test]
fn puzzle_set_handle() {
    let src = CString::new(
        "puzzle weighing \"coins\" { objects = 13 }\n\
         puzzle pigeonhole { counts = (blue: 10, red: 8, black: 12); required = 2 }\n",
    )
    .unwrap();
    unsafe {
        let mut set = ptr::null_mut();
        assert_eq!(rf_puzzles_parse(src.as_ptr(), &mut set), RfStatus::Ok);
        assert_eq!(rf_puzzles_len(set), 2);
        let mut kind = RfPuzzleKind::Rate;
        assert_eq!(rf_puzzles_kind(set, 1, &mut kind), RfStatus::Ok);
        assert_eq!(kind, RfPuzzleKind::Pigeonhole);
        assert_eq!(rf_puzzles_kind(set, 2, &mut kind), RfStatus::OutOfRange);

        let mut json = ptr::null_mut();
        assert_eq!(
            rf_puzzles_solve_json(set, 0, RF_SOLVE_CHECK, &mut json),
            RfStatus::Ok
        );
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["label"], "coins");
        assert_eq!(report["formula_answer"], "3");
        assert_eq!(report["agreement"], true);
        assert_eq!(rf_puzzles_solve_json(set, 1, 0, &mut json), RfStatus::Ok);
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["formula_answer"], "4");
        assert!(report.get("agreement").is_none());
        rf_puzzles_free(set);
        assert_eq!(rf_puzzles_len(ptr::null()), 0);
    }
}

#[test]
fn parse_errors_are_reported() {
    let src = CString::new("puzzle weighing { objects = -3 }").unwrap();
    unsafe {
        let mut set = ptr::null_mut();
        assert_eq!(
            rf_puzzles_parse(src.as_ptr(), &mut set),
            RfStatus::ParseError
        );
        assert!(set.is_null());
        assert_eq!(
            last_error(),
            "1:29: negative count: values must not be negative"
        );
        assert_eq!(
            rf_puzzles_parse(ptr::null(), &mut set),
            RfStatus::NullPointer
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            rf_puzzles_parse(bad.as_ptr().cast(), &mut set),
            RfStatus::InvalidUtf8
        );
    }
}

#[test]
fn errors_are_per_thread() {
    unsafe {
        let mut p = 0;
        assert_eq!(rf_weighing_formula(0, &mut p), RfStatus::InvalidInstance);
    }
    let other = std::thread::spawn(|| rf_last_error_message().is_null())
        .join()
        .unwrap();
    assert!(other);
}

#[test]
fn header_is_current_and_compiles() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/riddle_forge.h")).unwrap();
    for name in [
        "rf_weighing_formula",
        "rf_strategy_simulate",
        "rf_puzzles_solve_json",
        "RF_STATUS_PARSE_ERROR",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
    // a C compiler is optional in the build environment
    let Ok(out) = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(dir.join("include/riddle_forge.h"))
        .output()
    else {
        return;
    };
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn c_example_links_against_static_library() {
    let manifest = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/abi-<hash> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libriddle_forge_ffi.a");
    if !lib.exists()
        || std::process::Command::new("cc")
            .arg("--version")
            .output()
            .is_err()
    {
        return;
    }
    let dir = tempfile_dir();
    let bin = dir.join("weigh");
    let status = std::process::Command::new("cc")
        .arg(manifest.join("examples/weigh.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = std::process::Command::new(&bin).arg("4").output().unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "4 objects: 2 weighings\nweigh {0} vs {1}\n  left heavy: object 0\n  right heavy: object 1\n  balance: weigh {2} vs {3}\n    left heavy: object 2\n    right heavy: object 3\n"
    );
    let out = std::process::Command::new(&bin).arg("0").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let _ = std::fs::remove_dir_all(&dir);
}

fn tempfile_dir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("riddle-forge-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
