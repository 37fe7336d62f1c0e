use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use strongrat_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    strongrat_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = strongrat_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_string()
}

unsafe fn parse_instance(text: &str) -> *mut StrongratInstance {
    let mut inst = ptr::null_mut();
    assert_eq!(
        strongrat_instance_parse(cstr(text).as_ptr(), &mut inst),
        StrongratStatus::Ok
    );
    inst
}

#[test]
fn decide_verify_round_trip() {
    unsafe {
        let inst = parse_instance("problem: subset-sum-01\ncapacity: 1\n1/2\n1/3\n1/6\n");
        let mut len = 0;
        assert_eq!(strongrat_instance_len(inst, &mut len), StrongratStatus::Ok);
        assert_eq!(len, 3);
        for oracle in [false, true] {
            let mut q = [9u64; 3];
            let mut yes = false;
            assert_eq!(
                strongrat_decide(inst, oracle, 0, &mut yes, q.as_mut_ptr(), 3),
                StrongratStatus::Ok
            );
            assert!(yes);
            assert_eq!(q, [1, 1, 1]);
        }
        let mut valid = true;
        let q = [1u64, 1, 0];
        assert_eq!(
            strongrat_verify(inst, q.as_ptr(), 3, &mut valid),
            StrongratStatus::Ok
        );
        assert!(!valid);
        let q = [2u64, 0, 0];
        assert_eq!(
            strongrat_verify(inst, q.as_ptr(), 3, &mut valid),
            StrongratStatus::InvalidWitness
        );
        assert_eq!(
            strongrat_verify(inst, q.as_ptr(), 2, &mut valid),
            StrongratStatus::Shape
        );

        let mut small = [0u64; 2];
        let mut yes = false;
        assert_eq!(
            strongrat_decide(inst, false, 0, &mut yes, small.as_mut_ptr(), 2),
            StrongratStatus::BufferTooSmall
        );
        assert!(last_error().contains("buffer"));

        let mut csv = ptr::null_mut();
        assert_eq!(
            strongrat_instance_sizes_csv(inst, &mut csv),
            StrongratStatus::Ok
        );
        assert!(take_string(csv).starts_with("binary,unary,scaled_binary,scaled_unary,alpha\n"));
        strongrat_instance_free(inst);
    }
}

#[test]
fn resource_limit_status() {
    unsafe {
        let inst = parse_instance("problem: subset-sum-01\ncapacity: 1000\n1/1000003\n");
        let mut yes = false;
        assert_eq!(
            strongrat_decide(inst, false, 1000, &mut yes, ptr::null_mut(), 0),
            StrongratStatus::ResourceLimit
        );
        strongrat_instance_free(inst);
    }
}

#[test]
fn pipeline_through_handles() {
    unsafe {
        let mut f = ptr::null_mut();
        let text = cstr("p cnf 3 1\n1 2 3 0\n");
        assert_eq!(
            strongrat_formula_parse(text.as_ptr(), &mut f),
            StrongratStatus::Ok
        );

        let mut g = ptr::null_mut();
        assert_eq!(
            strongrat_gadget_one_in_three(f, true, &mut g),
            StrongratStatus::Ok
        );
        let (mut n, mut m) = (0, 0);
        strongrat_formula_num_vars(g, &mut n);
        strongrat_formula_num_clauses(g, &mut m);
        assert_eq!((n, m), (7, 3));

        let mut found = false;
        let mut v = [9u8; 7];
        assert_eq!(
            strongrat_formula_brute_force(
                g,
                StrongratSatMode::OneInThree,
                &mut found,
                v.as_mut_ptr(),
                7
            ),
            StrongratStatus::Ok
        );
        assert!(found);
        assert!(v.iter().all(|&b| b <= 1));

        let mut h = ptr::null_mut();
        assert_eq!(strongrat_gadget_all_same(f, &mut h), StrongratStatus::Ok);
        let mut inst = ptr::null_mut();
        assert_eq!(strongrat_reduce(h, true, &mut inst), StrongratStatus::Ok);
        let mut out = ptr::null_mut();
        strongrat_instance_to_text(inst, &mut out);
        assert!(take_string(out).starts_with("problem: partition\n"));
        let mut len = 0;
        strongrat_instance_len(inst, &mut len);
        let mut q = vec![0u64; len];
        let mut yes = false;
        assert_eq!(
            strongrat_decide(inst, true, 0, &mut yes, q.as_mut_ptr(), len),
            StrongratStatus::Ok
        );
        assert!(yes);

        let mut dimacs = ptr::null_mut();
        strongrat_formula_to_dimacs(h, &mut dimacs);
        assert!(take_string(dimacs).starts_with("p cnf 4 2"));

        for p in [f, g, h] {
            strongrat_formula_free(p);
        }
        strongrat_instance_free(inst);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut f = ptr::null_mut();
        let text = cstr("p cnf 2 1\n1 2 0\n");
        assert_eq!(
            strongrat_formula_parse(text.as_ptr(), &mut f),
            StrongratStatus::Parse
        );
        assert!(f.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(
            strongrat_formula_parse(ptr::null(), &mut f),
            StrongratStatus::NullArgument
        );
        assert_eq!(
            strongrat_instance_len(ptr::null(), ptr::null_mut()),
            StrongratStatus::NullArgument
        );

        let heavy = cstr("p cnf 2 2\n1 1 1 0\n1 1 2 0\n");
        assert_eq!(
            strongrat_formula_parse(heavy.as_ptr(), &mut f),
            StrongratStatus::Ok
        );
        let mut inst = ptr::null_mut();
        assert_eq!(
            strongrat_reduce(f, false, &mut inst),
            StrongratStatus::OccurrenceBound
        );
        strongrat_formula_free(f);

        let invalid = [0xffu8, 0];
        assert_eq!(
            strongrat_instance_parse(invalid.as_ptr().cast(), &mut inst),
            StrongratStatus::InvalidUtf8
        );

        let ks = parse_instance("problem: knapsack-01\ncapacity: 5/6\n1/2 3/4\n1/3 1/3\n");
        let mut subset = [0u64; 2];
        let mut profit = ptr::null_mut();
        let rho = cstr("1/2");
        assert_eq!(
            strongrat_fptas(ks, rho.as_ptr(), subset.as_mut_ptr(), 2, &mut profit),
            StrongratStatus::Ok
        );
        let achieved: strongrat::Rational = take_string(profit).parse().unwrap();
        assert!(achieved >= strongrat::rational::rat(13, 24));
        let rho = cstr("3/2");
        assert_eq!(
            strongrat_fptas(ks, rho.as_ptr(), subset.as_mut_ptr(), 2, &mut profit),
            StrongratStatus::Parameter
        );
        strongrat_instance_free(ks);

        // success clears the previous message
        let mut primes = [0u64; 6];
        assert_eq!(
            strongrat_first_primes(6, primes.as_mut_ptr(), 6),
            StrongratStatus::Ok
        );
        assert!(strongrat_last_error().is_null());
        assert_eq!(primes, [2, 3, 5, 7, 11, 13]);
        assert_eq!(
            strongrat_first_primes(0, primes.as_mut_ptr(), 6),
            StrongratStatus::Shape
        );
    }
}

#[test]
fn free_accepts_null() {
    unsafe {
        strongrat_instance_free(ptr::null_mut());
        strongrat_formula_free(ptr::null_mut());
        strongrat_string_free(ptr::null_mut());
    }
}

/// Compiles and runs a C program against the generated header and the
/// static library. Skipped when no C compiler or static library is found.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let deps = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = deps.parent().unwrap().join("libstrongrat_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping C smoke test: no cc or {} missing", lib.display());
        return;
    }
    let out = tempfile::tempdir().unwrap();
    let exe = out.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
