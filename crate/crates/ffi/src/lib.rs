//! C ABI for the riddle-forge solvers.
//!
//! Every fallible function returns an [`RfStatus`] and writes its result
//! through an out-pointer. On failure, `rf_last_error_message` returns a
//! description of the most recent error on the calling thread. Strings
//! handed out by this library must be released with `rf_string_free`;
//! handles with their matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use riddle_forge::model::PuzzleSpec;
use riddle_forge::pigeonhole::{
    guarantee_draws_formula, guarantee_draws_oracle, PigeonholeInstance,
};
use riddle_forge::report::{solve, SolveOptions};
use riddle_forge::speck::parse_puzzles;
use riddle_forge::sweep::MAX_WEIGHING_OBJECTS;
use riddle_forge::weighing::{
    build_strategy, min_weighings_formula, min_weighings_oracle, simulate_strategy, StrategyNode,
    WeighingInstance,
};
use riddle_forge::{Error, PuzzleKind};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInstance = 3,
    Infeasible = 4,
    ZeroDenominator = 5,
    MalformedTree = 6,
    NoMeeting = 7,
    InvalidBounds = 8,
    ParseError = 9,
    OutOfRange = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RfPuzzleKind {
    Rate = 0,
    Weighing = 1,
    Pigeonhole = 2,
    Transfer = 3,
    Station = 4,
}

impl From<PuzzleKind> for RfPuzzleKind {
    fn from(k: PuzzleKind) -> Self {
        match k {
            PuzzleKind::Rate => RfPuzzleKind::Rate,
            PuzzleKind::Weighing => RfPuzzleKind::Weighing,
            PuzzleKind::Pigeonhole => RfPuzzleKind::Pigeonhole,
            PuzzleKind::Transfer => RfPuzzleKind::Transfer,
            PuzzleKind::Station => RfPuzzleKind::Station,
        }
    }
}

/// Bit flags for `rf_puzzles_solve_json`.
pub const RF_SOLVE_CHECK: u32 = 1;
pub const RF_SOLVE_EXPLAIN: u32 = 2;
pub const RF_SOLVE_CEIL_SUBJECTS: u32 = 4;

/// Opaque balance-scale decision tree.
pub struct RfStrategy(StrategyNode);

/// Opaque list of parsed puzzles.
pub struct RfPuzzleSet(Vec<PuzzleSpec>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(msg).ok());
}

struct Failure(RfStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::ZeroDenominator => RfStatus::ZeroDenominator,
            Error::InvalidInstance(_) => RfStatus::InvalidInstance,
            Error::Infeasible(_) => RfStatus::Infeasible,
            Error::MalformedTree(_) => RfStatus::MalformedTree,
            Error::NoMeeting(_) => RfStatus::NoMeeting,
            Error::InvalidBounds(_) => RfStatus::InvalidBounds,
        };
        Failure(status, e.to_string())
    }
}

fn null() -> Failure {
    Failure(RfStatus::NullPointer, "null pointer argument".into())
}

/// Runs `body`, turning errors and panics into a status code and recording
/// the message for `rf_last_error_message`.
fn guard(body: impl FnOnce() -> Result<(), Failure> + UnwindSafe) -> RfStatus {
    match catch_unwind(body) {
        Ok(Ok(())) => RfStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RfStatus::Panic
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(RfStatus::InvalidUtf8, e.to_string()))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("nul bytes removed")
        .into_raw()
}

/// Message for the last failed call on this thread, or null if there was
/// none. The caller owns the returned string.
#[no_mangle]
pub extern "C" fn rf_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |s| s.clone().into_raw())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn rf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Minimum worst-case weighings for `n_objects` by the closed formula.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rf_weighing_formula(n_objects: u64, out: *mut u32) -> RfStatus {
    guard(|| {
        let inst = WeighingInstance::new(n_objects)?;
        write(out, min_weighings_formula(&inst).weighings)
    })
}

/// Minimum worst-case weighings by exhaustive minimax; `n_objects` must
/// not exceed 6561.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rf_weighing_oracle(n_objects: u64, out: *mut u32) -> RfStatus {
    guard(|| {
        let inst = WeighingInstance::new(n_objects)?;
        if n_objects > MAX_WEIGHING_OBJECTS {
            return Err(Failure(
                RfStatus::OutOfRange,
                format!("oracle is limited to {MAX_WEIGHING_OBJECTS} objects"),
            ));
        }
        write(out, min_weighings_oracle(&inst))
    })
}

/// `n_colors·(required − 1) + 1`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rf_pigeonhole_formula(
    n_colors: u64,
    required: u64,
    out: *mut u64,
) -> RfStatus {
    guard(|| write(out, guarantee_draws_formula(n_colors, required)?))
}

/// Exact guarantee for the given per-color counts.
///
/// # Safety
/// `counts` must point to `n_colors` readable values; `out` must be valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn rf_pigeonhole_oracle(
    counts: *const u64,
    n_colors: usize,
    required: u64,
    out: *mut u64,
) -> RfStatus {
    guard(|| {
        if counts.is_null() {
            return Err(null());
        }
        let counts = std::slice::from_raw_parts(counts, n_colors);
        let colors = counts
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("color{i}"), *c))
            .collect();
        let inst = PigeonholeInstance::new(colors, required)?;
        write(out, guarantee_draws_oracle(&inst)?)
    })
}

/// Builds the decision tree for `n_objects` (at most 6561).
///
/// # Safety
/// `out` must be valid for writes. Free the handle with `rf_strategy_free`.
#[no_mangle]
pub unsafe extern "C" fn rf_strategy_new(n_objects: u64, out: *mut *mut RfStrategy) -> RfStatus {
    guard(|| {
        let inst = WeighingInstance::new(n_objects)?;
        if n_objects > MAX_WEIGHING_OBJECTS {
            return Err(Failure(
                RfStatus::OutOfRange,
                format!("trees are limited to {MAX_WEIGHING_OBJECTS} objects"),
            ));
        }
        write(
            out,
            Box::into_raw(Box::new(RfStrategy(build_strategy(&inst)))),
        )
    })
}

/// # Safety
/// `strategy` must come from `rf_strategy_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rf_strategy_free(strategy: *mut RfStrategy) {
    if !strategy.is_null() {
        drop(Box::from_raw(strategy));
    }
}

/// Worst-case number of weighings in the tree.
///
/// # Safety
/// `strategy` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rf_strategy_depth(strategy: *const RfStrategy, out: *mut u32) -> RfStatus {
    guard(|| write(out, borrow(strategy)?.0.depth()))
}

/// Runs the tree against a heavy object at index `heavy`.
///
/// # Safety
/// `strategy` must be a live handle; both out-pointers must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn rf_strategy_simulate(
    strategy: *const RfStrategy,
    heavy: u64,
    out_found: *mut u64,
    out_weighings: *mut u32,
) -> RfStatus {
    guard(|| {
        let tree = &borrow(strategy)?.0;
        let heavy = usize::try_from(heavy)
            .map_err(|_| Failure(RfStatus::OutOfRange, "index too large".into()))?;
        let (found, used) = simulate_strategy(tree, heavy)?;
        write(out_found, found as u64)?;
        write(out_weighings, used)
    })
}

/// Indented text form of the tree. The caller owns the string.
///
/// # Safety
/// `strategy` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rf_strategy_to_text(
    strategy: *const RfStrategy,
    out: *mut *mut c_char,
) -> RfStatus {
    guard(|| {
        let text = borrow(strategy)?.0.to_text();
        write(out, into_c_string(text))
    })
}

/// Parses speck source. On `RF_STATUS_PARSE_ERROR` the last error message
/// lists every error, one `line:col: kind: message` per line.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be valid for
/// writes. Free the handle with `rf_puzzles_free`.
#[no_mangle]
pub unsafe extern "C" fn rf_puzzles_parse(
    source: *const c_char,
    out: *mut *mut RfPuzzleSet,
) -> RfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let specs = parse_puzzles(read_str(source)?).map_err(|errors| {
            let lines: Vec<String> = errors.iter().map(|e| e.to_string()).collect();
            Failure(RfStatus::ParseError, lines.join("\n"))
        })?;
        write(out, Box::into_raw(Box::new(RfPuzzleSet(specs))))
    })
}

/// # Safety
/// `set` must come from `rf_puzzles_parse` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rf_puzzles_free(set: *mut RfPuzzleSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Number of puzzles in the set; zero for a null handle.
///
/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rf_puzzles_len(set: *const RfPuzzleSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.len())
}

unsafe fn puzzle_at<'a>(set: *const RfPuzzleSet, index: usize) -> Result<&'a PuzzleSpec, Failure> {
    let specs = &borrow(set)?.0;
    specs.get(index).ok_or_else(|| {
        Failure(
            RfStatus::OutOfRange,
            format!("index {index} out of range for {} puzzles", specs.len()),
        )
    })
}

/// # Safety
/// `set` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rf_puzzles_kind(
    set: *const RfPuzzleSet,
    index: usize,
    out: *mut RfPuzzleKind,
) -> RfStatus {
    guard(|| write(out, puzzle_at(set, index)?.kind().into()))
}

/// Solves one puzzle and returns its report as a JSON object. `flags` is a
/// combination of the `RF_SOLVE_*` bits. The caller owns the string.
///
/// # Safety
/// `set` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rf_puzzles_solve_json(
    set: *const RfPuzzleSet,
    index: usize,
    flags: u32,
    out: *mut *mut c_char,
) -> RfStatus {
    guard(|| {
        let spec = puzzle_at(set, index)?;
        let opts = SolveOptions {
            check: flags & RF_SOLVE_CHECK != 0,
            explain: flags & RF_SOLVE_EXPLAIN != 0,
            ceil_subjects: flags & RF_SOLVE_CEIL_SUBJECTS != 0,
        };
        let report = solve(spec, &opts)?;
        let json = serde_json::to_string(&report).expect("reports serialize");
        write(out, into_c_string(json))
    })
}
