//! C ABI for yfock.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `_free`. Strings returned through `char **`
//! are NUL-terminated, heap-allocated by this library and released with
//! `yfock_string_free`. Every entry point returns a `YfockStatus`; on a
//! non-zero status `yfock_last_error` describes the failure.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use yfock::partitions::Partition;
use yfock::ratfield::{parse_ratfun, RatFun};
use yfock::symfun::{jack_gl_n, jack_norm_formula, jack_norm_gs};

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YfockStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed partition or rational function.
    Parse = 3,
    /// Valid input outside the supported domain (bad N, bad index, division by zero).
    Domain = 4,
    /// A relation check ran and reported a failure.
    CheckFailed = 5,
    /// Command-line usage error in `yfock_run`.
    Usage = 6,
    Panic = 7,
}

/// Opaque partition.
pub struct YfockPartition(Partition);

/// Opaque element of Q(e1, e2).
pub struct YfockRatFun(RatFun);

/// Norm computation route for `yfock_jack_norm`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YfockNormMethod {
    Formula = 0,
    GramSchmidt = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), (YfockStatus, String)>) -> YfockStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            YfockStatus::Ok
        }
        Ok(Err((s, m))) => {
            set_error(&m);
            s
        }
        Err(_) => {
            set_error("internal panic");
            YfockStatus::Panic
        }
    }
}

type FfiResult<T> = Result<T, (YfockStatus, String)>;

unsafe fn read_str<'a>(s: *const c_char) -> FfiResult<&'a str> {
    if s.is_null() {
        return Err((YfockStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|e| (YfockStatus::InvalidUtf8, e.to_string()))
}

unsafe fn deref<'a, T>(p: *const T) -> FfiResult<&'a T> {
    p.as_ref().ok_or((YfockStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> FfiResult<()> {
    if out.is_null() {
        return Err((YfockStatus::NullPointer, "null output pointer".into()));
    }
    out.write(v);
    Ok(())
}

fn to_c_string(s: String) -> FfiResult<*mut c_char> {
    CString::new(s).map(CString::into_raw).map_err(|e| (YfockStatus::Domain, e.to_string()))
}

fn domain(e: impl std::fmt::Display) -> (YfockStatus, String) {
    (YfockStatus::Domain, e.to_string())
}

/// Message for the last failing call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn yfock_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Version string, e.g. `0.1.0 (variables: e1, e2)`. Static; do not free.
#[no_mangle]
pub extern "C" fn yfock_version() -> *const c_char {
    static V: &str = "0.1.0 (variables: e1, e2)\0";
    V.as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn yfock_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"3,1"` (empty string for the empty partition).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yfock_partition_parse(text: *const c_char, out: *mut *mut YfockPartition) -> YfockStatus {
    guard(|| {
        let s = read_str(text)?;
        let p: Partition = s.parse().map_err(|e: yfock::partitions::PartitionError| (YfockStatus::Parse, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(YfockPartition(p))))
    })
}

/// # Safety
/// `p` must come from `yfock_partition_parse` and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn yfock_partition_free(p: *mut YfockPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` a live handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yfock_partition_size(p: *const YfockPartition, out: *mut usize) -> YfockStatus {
    guard(|| write_out(out, deref(p)?.0.size()))
}

/// Canonical text form of a partition.
///
/// # Safety
/// `p` a live handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yfock_partition_to_string(p: *const YfockPartition, out: *mut *mut c_char) -> YfockStatus {
    guard(|| write_out(out, to_c_string(deref(p)?.0.to_string())?))
}

/// Parses a rational function in `e1`, `e2`, e.g. `(e1 + 2*e2)/(e1 - e2)`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yfock_ratfun_parse(text: *const c_char, out: *mut *mut YfockRatFun) -> YfockStatus {
    guard(|| {
        let s = read_str(text)?;
        let r = parse_ratfun(s).map_err(|e| (YfockStatus::Parse, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(YfockRatFun(r))))
    })
}

/// # Safety
/// `r` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn yfock_ratfun_free(r: *mut YfockRatFun) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Canonical text form.
///
/// # Safety
/// `r` a live handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yfock_ratfun_to_string(r: *const YfockRatFun, out: *mut *mut c_char) -> YfockStatus {
    guard(|| write_out(out, to_c_string(deref(r)?.0.to_string())?))
}

/// Exact equality; writes 1 or 0.
///
/// # Safety
/// `a`, `b` live handles, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yfock_ratfun_equal(a: *const YfockRatFun, b: *const YfockRatFun, out: *mut c_int) -> YfockStatus {
    guard(|| write_out(out, c_int::from(deref(a)?.0 == deref(b)?.0)))
}

/// `a * b` as a new handle.
///
/// # Safety
/// `a`, `b` live handles, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yfock_ratfun_mul(a: *const YfockRatFun, b: *const YfockRatFun, out: *mut *mut YfockRatFun) -> YfockStatus {
    guard(|| {
        let v = &deref(a)?.0 * &deref(b)?.0;
        write_out(out, Box::into_raw(Box::new(YfockRatFun(v))))
    })
}

/// `a + b` as a new handle.
///
/// # Safety
/// `a`, `b` live handles, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yfock_ratfun_add(a: *const YfockRatFun, b: *const YfockRatFun, out: *mut *mut YfockRatFun) -> YfockStatus {
    guard(|| {
        let v = &deref(a)?.0 + &deref(b)?.0;
        write_out(out, Box::into_raw(Box::new(YfockRatFun(v))))
    })
}

/// Norm of the Jack(gl_N) function `P_lambda`.
///
/// # Safety
/// `p` a live handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yfock_jack_norm(p: *const YfockPartition, n: usize, method: YfockNormMethod, out: *mut *mut YfockRatFun) -> YfockStatus {
    guard(|| {
        let lam = &deref(p)?.0;
        let v = match method {
            YfockNormMethod::Formula => jack_norm_formula(lam, n),
            YfockNormMethod::GramSchmidt => jack_norm_gs(lam, n),
        }
        .map_err(domain)?;
        write_out(out, Box::into_raw(Box::new(YfockRatFun(v))))
    })
}

/// Schur expansion of `P_lambda` as JSON.
///
/// # Safety
/// `p` a live handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yfock_jack_json(p: *const YfockPartition, n: usize, out: *mut *mut c_char) -> YfockStatus {
    guard(|| {
        let f = jack_gl_n(&deref(p)?.0, n).map_err(domain)?;
        write_out(out, to_c_string(f.to_json())?)
    })
}

/// Runs the command-line program on `argv[0..argc]` (without the program
/// name) and returns its standard output. The status maps the exit code:
/// 0 ok, 1 `CHECK_FAILED`, 2 `USAGE`, 3 `DOMAIN`. `out` is set on every
/// status except null/UTF-8 errors.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn yfock_run(argc: usize, argv: *const *const c_char, out: *mut *mut c_char) -> YfockStatus {
    guard(|| {
        if argc > 0 && argv.is_null() {
            return Err((YfockStatus::NullPointer, "null argv".into()));
        }
        let mut args = vec!["yfock".to_string()];
        for k in 0..argc {
            args.push(read_str(*argv.add(k))?.to_string());
        }
        let o = yfock::cli::run(args);
        write_out(out, to_c_string(o.stdout)?)?;
        let msg = o.stderr.trim_end().to_string();
        match o.code {
            0 => Ok(()),
            1 => Err((YfockStatus::CheckFailed, "check failed".into())),
            2 => Err((YfockStatus::Usage, msg)),
            _ => Err((YfockStatus::Domain, msg)),
        }
    })
}
