//! C ABI over the `strongrat` library.
//!
//! Instances and formulas are opaque heap handles created by the `*_parse`
//! and transformation functions and released with the matching `*_free`.
//! Every fallible function returns a [`StrongratStatus`]; on failure the
//! message is available from [`strongrat_last_error`] on the same thread.
//! Strings returned through `out` parameters are owned by the caller and
//! released with [`strongrat_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use strongrat::fptas::{knapsack_fptas, ApproxParams};
use strongrat::gadgets::{all_same_gadget, one_in_three_gadget};
use strongrat::primes::first_n_primes;
use strongrat::reduction::build_instance;
use strongrat::sat::{brute_force_decide, parse_dimacs, Formula, SatMode};
use strongrat::solvers::{
    decide_with_budget, measure_sizes, oracle_decide_with_limit, verify_witness, Instance, Witness,
    DEFAULT_DP_BUDGET, DEFAULT_NODE_LIMIT,
};
use strongrat::{Error, Rational};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrongratStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Shape = 4,
    OutOfRange = 5,
    InvalidPrimes = 6,
    OccurrenceBound = 7,
    ResourceLimit = 8,
    InvalidWitness = 9,
    Parameter = 10,
    BufferTooSmall = 11,
    Panic = 12,
}

/// Satisfiability notion used by [`strongrat_formula_brute_force`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrongratSatMode {
    Sat = 0,
    OneInThree = 1,
    AllSame = 2,
}

impl From<StrongratSatMode> for SatMode {
    fn from(m: StrongratSatMode) -> Self {
        match m {
            StrongratSatMode::Sat => SatMode::Sat,
            StrongratSatMode::OneInThree => SatMode::OneInThree,
            StrongratSatMode::AllSame => SatMode::AllSame,
        }
    }
}

/// Opaque problem instance.
pub struct StrongratInstance(Instance);

/// Opaque 3-CNF formula.
pub struct StrongratFormula(Formula);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> StrongratStatus {
    match e {
        Error::InvalidDenominator | Error::Parse { .. } | Error::Arity { .. } => {
            StrongratStatus::Parse
        }
        Error::EmptyInput(_) | Error::Shape(_) => StrongratStatus::Shape,
        Error::OutOfRange(_) => StrongratStatus::OutOfRange,
        Error::InvalidPrimes(_) => StrongratStatus::InvalidPrimes,
        Error::OccurrenceBound { .. } => StrongratStatus::OccurrenceBound,
        Error::ResourceLimit(_) => StrongratStatus::ResourceLimit,
        Error::InvalidWitness(_) => StrongratStatus::InvalidWitness,
        Error::Parameter(_) => StrongratStatus::Parameter,
    }
}

struct Fail(StrongratStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

type FfiResult = Result<(), Fail>;

/// Runs `body`, recording any failure or panic as the thread's last error.
fn guard(body: impl FnOnce() -> FfiResult) -> StrongratStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => StrongratStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            StrongratStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(StrongratStatus::NullArgument, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(StrongratStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("nul bytes removed")
        .into_raw()
}

/// Copies `src` into a caller buffer of `cap` entries, failing when it is short.
unsafe fn fill<T: Copy>(src: &[T], buf: *mut T, cap: usize) -> FfiResult {
    if src.is_empty() {
        return Ok(());
    }
    if cap < src.len() {
        return Err(Fail(
            StrongratStatus::BufferTooSmall,
            format!("buffer holds {cap} entries, {} needed", src.len()),
        ));
    }
    if buf.is_null() {
        return Err(null("buffer"));
    }
    ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn strongrat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn strongrat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the instance text format.
#[no_mangle]
pub unsafe extern "C" fn strongrat_instance_parse(
    text: *const c_char,
    out: *mut *mut StrongratInstance,
) -> StrongratStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let inst = Instance::parse(read_str(text, "text")?)?;
        *out = Box::into_raw(Box::new(StrongratInstance(inst)));
        Ok(())
    })
}

/// Releases an instance. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn strongrat_instance_free(inst: *mut StrongratInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Number of items in the instance.
#[no_mangle]
pub unsafe extern "C" fn strongrat_instance_len(
    inst: *const StrongratInstance,
    out_len: *mut usize,
) -> StrongratStatus {
    guard(|| {
        *out_ref(out_len, "out_len")? = handle(inst, "instance")?.0.len();
        Ok(())
    })
}

/// Serializes the instance in the text format.
#[no_mangle]
pub unsafe extern "C" fn strongrat_instance_to_text(
    inst: *const StrongratInstance,
    out: *mut *mut c_char,
) -> StrongratStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = to_c_string(handle(inst, "instance")?.0.to_text());
        Ok(())
    })
}

/// Size measures as a CSV header line and one data line.
#[no_mangle]
pub unsafe extern "C" fn strongrat_instance_sizes_csv(
    inst: *const StrongratInstance,
    out: *mut *mut c_char,
) -> StrongratStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let report = measure_sizes(&handle(inst, "instance")?.0);
        *out = to_c_string(format!(
            "{}\n{}\n",
            strongrat::solvers::SizeReport::CSV_HEADER,
            report.csv_row()
        ));
        Ok(())
    })
}

/// Decides the instance by dynamic programming, or by exhaustive search when
/// `use_oracle` is set. `budget` caps DP cells or search nodes; 0 selects the
/// default. On a yes answer the witness (one quantity per item) is written to
/// `witness`, which must hold `strongrat_instance_len` entries.
#[no_mangle]
pub unsafe extern "C" fn strongrat_decide(
    inst: *const StrongratInstance,
    use_oracle: bool,
    budget: u64,
    out_answer: *mut bool,
    witness: *mut u64,
    witness_cap: usize,
) -> StrongratStatus {
    guard(|| {
        let answer = out_ref(out_answer, "out_answer")?;
        let inst = &handle(inst, "instance")?.0;
        let decision = if use_oracle {
            oracle_decide_with_limit(
                inst,
                if budget == 0 {
                    DEFAULT_NODE_LIMIT
                } else {
                    budget
                },
            )?
        } else {
            decide_with_budget(
                inst,
                if budget == 0 {
                    DEFAULT_DP_BUDGET
                } else {
                    budget
                },
            )?
        };
        if let Some(w) = &decision.witness {
            fill(w.quantities(), witness, witness_cap)?;
        }
        *answer = decision.answer;
        Ok(())
    })
}

/// Checks a witness of `len` quantities against the instance.
#[no_mangle]
pub unsafe extern "C" fn strongrat_verify(
    inst: *const StrongratInstance,
    witness: *const u64,
    len: usize,
    out_valid: *mut bool,
) -> StrongratStatus {
    guard(|| {
        let valid = out_ref(out_valid, "out_valid")?;
        let inst = &handle(inst, "instance")?.0;
        let q = if len == 0 {
            Vec::new()
        } else if witness.is_null() {
            return Err(null("witness"));
        } else {
            std::slice::from_raw_parts(witness, len).to_vec()
        };
        *valid = verify_witness(inst, &Witness::new(q))?;
        Ok(())
    })
}

/// Approximates a knapsack-01 instance within relative performance `rho`
/// (a rational such as "1/4"). The chosen subset goes to `subset` and the
/// achieved profit, as a rational string, to `out_profit`.
#[no_mangle]
pub unsafe extern "C" fn strongrat_fptas(
    inst: *const StrongratInstance,
    rho: *const c_char,
    subset: *mut u64,
    subset_cap: usize,
    out_profit: *mut *mut c_char,
) -> StrongratStatus {
    guard(|| {
        let out_profit = out_ref(out_profit, "out_profit")?;
        let inst = &handle(inst, "instance")?.0;
        let rho_text = read_str(rho, "rho")?;
        let rho: Rational = rho_text.parse().map_err(|_| {
            Fail(
                StrongratStatus::Parameter,
                format!("rho {rho_text:?} is not a rational"),
            )
        })?;
        let result = knapsack_fptas(inst, &ApproxParams::new(rho)?)?;
        fill(result.subset.quantities(), subset, subset_cap)?;
        *out_profit = to_c_string(result.achieved_profit.to_string());
        Ok(())
    })
}

/// Parses DIMACS CNF text with three literals per clause.
#[no_mangle]
pub unsafe extern "C" fn strongrat_formula_parse(
    text: *const c_char,
    out: *mut *mut StrongratFormula,
) -> StrongratStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let f = parse_dimacs(read_str(text, "text")?)?;
        *out = Box::into_raw(Box::new(StrongratFormula(f)));
        Ok(())
    })
}

/// Releases a formula. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn strongrat_formula_free(f: *mut StrongratFormula) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

#[no_mangle]
pub unsafe extern "C" fn strongrat_formula_num_vars(
    f: *const StrongratFormula,
    out: *mut usize,
) -> StrongratStatus {
    guard(|| {
        *out_ref(out, "out")? = handle(f, "formula")?.0.num_vars();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn strongrat_formula_num_clauses(
    f: *const StrongratFormula,
    out: *mut usize,
) -> StrongratStatus {
    guard(|| {
        *out_ref(out, "out")? = handle(f, "formula")?.0.num_clauses();
        Ok(())
    })
}

/// Serializes the formula as DIMACS CNF.
#[no_mangle]
pub unsafe extern "C" fn strongrat_formula_to_dimacs(
    f: *const StrongratFormula,
    out: *mut *mut c_char,
) -> StrongratStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = to_c_string(handle(f, "formula")?.0.to_dimacs());
        Ok(())
    })
}

/// Exhaustive search for a valuation accepted under `mode`. When one exists
/// its values (0 or 1 per variable) are written to `valuation`, which must
/// hold `num_vars` entries.
#[no_mangle]
pub unsafe extern "C" fn strongrat_formula_brute_force(
    f: *const StrongratFormula,
    mode: StrongratSatMode,
    out_found: *mut bool,
    valuation: *mut u8,
    valuation_cap: usize,
) -> StrongratStatus {
    guard(|| {
        let found = out_ref(out_found, "out_found")?;
        let v = brute_force_decide(&handle(f, "formula")?.0, mode.into())?;
        if let Some(v) = &v {
            let bytes: Vec<u8> = v.values().iter().map(|&b| b as u8).collect();
            fill(&bytes, valuation, valuation_cap)?;
        }
        *found = v.is_some();
        Ok(())
    })
}

/// Satisfiability to one-in-three gadget. With `require_le4` the input must
/// have every variable occurring at most four times.
#[no_mangle]
pub unsafe extern "C" fn strongrat_gadget_one_in_three(
    f: *const StrongratFormula,
    require_le4: bool,
    out: *mut *mut StrongratFormula,
) -> StrongratStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let g = one_in_three_gadget(&handle(f, "formula")?.0, require_le4)?;
        *out = Box::into_raw(Box::new(StrongratFormula(g.formula)));
        Ok(())
    })
}

/// One-in-three to all-the-same gadget.
#[no_mangle]
pub unsafe extern "C" fn strongrat_gadget_all_same(
    f: *const StrongratFormula,
    out: *mut *mut StrongratFormula,
) -> StrongratStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let g = all_same_gadget(&handle(f, "formula")?.0);
        *out = Box::into_raw(Box::new(StrongratFormula(g.formula)));
        Ok(())
    })
}

/// Builds the prime-denominator instance for a formula, as unbounded subset
/// sum or, with `partition`, as a partition instance.
#[no_mangle]
pub unsafe extern "C" fn strongrat_reduce(
    f: *const StrongratFormula,
    partition: bool,
    out: *mut *mut StrongratInstance,
) -> StrongratStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let ri = build_instance(&handle(f, "formula")?.0)?;
        let inst = if partition {
            ri.as_partition_instance()
        } else {
            ri.as_subset_sum_instance()
        };
        *out = Box::into_raw(Box::new(StrongratInstance(inst)));
        Ok(())
    })
}

/// Writes the first `n` primes to `buf`, which must hold `n` entries.
#[no_mangle]
pub unsafe extern "C" fn strongrat_first_primes(
    n: usize,
    buf: *mut u64,
    cap: usize,
) -> StrongratStatus {
    guard(|| {
        let primes = first_n_primes(n)?;
        fill(primes.as_slice(), buf, cap)
    })
}
