//! C ABI over `hallreconf`.
//!
//! Objects cross the boundary as opaque handles created by `*_from_json` and
//! released by the matching `*_free`. Every fallible call returns an
//! [`HrStatus`]; on failure [`hr_last_error`] describes the problem.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hallreconf::cli;
use hallreconf::complex::{ComplexJson, PartitionJson, SimplicialComplex, VertexPartition};
use hallreconf::homology::{eta_h, reduced_betti};
use hallreconf::reconfig::{rg_colorful, ReconfigGraph};
use hallreconf::{Error, ExtNat};

/// Status codes; 0 to 4 agree with the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HrStatus {
    Ok = 0,
    InputError = 1,
    Counterexample = 2,
    Capacity = 3,
    Internal = 4,
    NullPointer = 5,
    Panic = 6,
}

/// A simplicial complex.
pub struct HrComplex(SimplicialComplex);

/// A partition of a vertex set into classes.
pub struct HrPartition(VertexPartition);

/// A reconfiguration graph.
pub struct HrRg(ReconfigGraph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(e: &Error) -> HrStatus {
    set_error(&e.to_string());
    match cli::exit_code(e) {
        3 => HrStatus::Capacity,
        4 => HrStatus::Internal,
        _ => HrStatus::InputError,
    }
}

fn guard(f: impl FnOnce() -> HrStatus) -> HrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("panic inside hallreconf");
            HrStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, HrStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(HrStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not UTF-8");
        HrStatus::InputError
    })
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, HrStatus> {
    serde_json::from_str(text).map_err(|e| fail(&Error::Parse(format!("{}:{}: {e}", e.line(), e.column()))))
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the last failed call on this thread. Valid until the next
/// call into the library from the same thread; never NULL.
#[no_mangle]
pub extern "C" fn hr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses `{"ground_set": [...], "maximal_faces": [[...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hr_complex_from_json(json: *const c_char, out: *mut *mut HrComplex) -> HrStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return HrStatus::NullPointer;
        }
        let j: ComplexJson = try_status!(parse(try_status!(str_arg(json))));
        match SimplicialComplex::from_json(&j) {
            Ok(c) => {
                *out = Box::into_raw(Box::new(HrComplex(c)));
                HrStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// # Safety
/// `c` must come from [`hr_complex_from_json`] and not be freed yet, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn hr_complex_free(c: *mut HrComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Homological connectedness; `-1` stands for infinity.
///
/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hr_complex_eta(c: *const HrComplex, out: *mut i64) -> HrStatus {
    guard(|| {
        if c.is_null() || out.is_null() {
            set_error("null pointer argument");
            return HrStatus::NullPointer;
        }
        *out = match eta_h(&(*c).0) {
            ExtNat::Infinite => -1,
            ExtNat::Finite(n) => n as i64,
        };
        HrStatus::Ok
    })
}

/// Reduced rational Betti number in dimension `p >= -1`.
///
/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hr_complex_reduced_betti(c: *const HrComplex, p: i64, out: *mut u64) -> HrStatus {
    guard(|| {
        if c.is_null() || out.is_null() {
            set_error("null pointer argument");
            return HrStatus::NullPointer;
        }
        *out = reduced_betti(&(*c).0, p as isize);
        HrStatus::Ok
    })
}

/// Parses `{"classes": [[...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hr_partition_from_json(json: *const c_char, out: *mut *mut HrPartition) -> HrStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return HrStatus::NullPointer;
        }
        let j: PartitionJson = try_status!(parse(try_status!(str_arg(json))));
        match VertexPartition::from_json(&j) {
            Ok(v) => {
                *out = Box::into_raw(Box::new(HrPartition(v)));
                HrStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// # Safety
/// `v` must come from [`hr_partition_from_json`] and not be freed yet, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn hr_partition_free(v: *mut HrPartition) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// `RG(C, V; k)`: partial colorful simplices meeting exactly `k` classes.
///
/// # Safety
/// `c` and `v` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hr_rg_colorful(
    c: *const HrComplex,
    v: *const HrPartition,
    k: usize,
    out: *mut *mut HrRg,
) -> HrStatus {
    guard(|| {
        if c.is_null() || v.is_null() || out.is_null() {
            set_error("null pointer argument");
            return HrStatus::NullPointer;
        }
        match rg_colorful(&(*c).0, &(*v).0, k) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(HrRg(g)));
                HrStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hr_rg_vertex_count(g: *const HrRg) -> usize {
    if g.is_null() {
        return 0;
    }
    (*g).0.len()
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hr_rg_edge_count(g: *const HrRg) -> usize {
    if g.is_null() {
        return 0;
    }
    (*g).0.edge_count()
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hr_rg_component_count(g: *const HrRg) -> usize {
    if g.is_null() {
        return 0;
    }
    (*g).0.component_count()
}

/// # Safety
/// `g` must come from [`hr_rg_colorful`] and not be freed yet, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn hr_rg_free(g: *mut HrRg) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Runs the command line with `argv[0..argc]` (no program name) and stores
/// the report, or the error document, in `*out`. Returns the exit code.
/// Release the report with [`hr_string_free`].
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn hr_run(argc: usize, argv: *const *const c_char, out: *mut *mut c_char) -> HrStatus {
    guard(|| {
        if out.is_null() || (argc > 0 && argv.is_null()) {
            set_error("null pointer argument");
            return HrStatus::NullPointer;
        }
        let mut args = vec!["hallreconf".to_string()];
        for i in 0..argc {
            args.push(try_status!(str_arg(*argv.add(i))).to_string());
        }
        let (code, text) = cli::run(args);
        *out = CString::new(text.replace('\0', " ")).expect("no interior nul").into_raw();
        match code {
            0 => HrStatus::Ok,
            2 => HrStatus::Counterexample,
            3 => HrStatus::Capacity,
            4 => HrStatus::Internal,
            _ => {
                set_error("command failed; see the report");
                HrStatus::InputError
            }
        }
    })
}

/// Frees a string returned by [`hr_run`].
///
/// # Safety
/// `s` must come from this library and not be freed yet, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn hr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
