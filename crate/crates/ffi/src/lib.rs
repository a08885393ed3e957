//! C ABI over `lucas-core`.
//!
//! Values cross the boundary as opaque `LucasNumber` handles owned by the
//! caller and released with [`lucas_number_free`]. Every fallible call
//! returns a [`LucasStatus`]; unless a function says otherwise, its
//! out-parameters are written only on `LUCAS_STATUS_OK`. Algorithm and kind selectors are plain integers
//! (`LUCAS_ALGO_*`, `LUCAS_KIND_*`) so out-of-range values from C are
//! rejected rather than undefined.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lucas_core::{Algorithm, Error, Kind, Natural, OpCounts};
use num_bigint::BigUint;

pub const LUCAS_ALGO_MIDDLE: u32 = 0;
pub const LUCAS_ALGO_RIPPLE: u32 = 1;
pub const LUCAS_ALGO_RIPPLE_MEMO: u32 = 2;
pub const LUCAS_ALGO_LINEAR: u32 = 3;
pub const LUCAS_ALGO_VIA_FIB: u32 = 4;

pub const LUCAS_KIND_LUCAS: u32 = 0;
pub const LUCAS_KIND_FIB: u32 = 1;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LucasStatus {
    Ok = 0,
    NullPointer = 1,
    /// Unknown selector, index below an operation's minimum, bad radix or
    /// unparsable numeral.
    InvalidArgument = 2,
    /// The value given as `L(n)` is not a Lucas number.
    NotLucas = 3,
    /// Output buffer too short; the required length has been reported.
    BufferTooSmall = 4,
    IndexOverflow = 5,
    Internal = 6,
}

/// Operation tallies, mirroring `lucas_core::OpCounts`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LucasOpCounts {
    pub squarings: u64,
    pub general_mults: u64,
    pub add_subs: u64,
    pub recursive_calls: u64,
    pub memo_hits: u64,
}

impl From<OpCounts> for LucasOpCounts {
    fn from(c: OpCounts) -> Self {
        LucasOpCounts {
            squarings: c.squarings,
            general_mults: c.general_mults,
            add_subs: c.add_subs,
            recursive_calls: c.recursive_calls,
            memo_hits: c.memo_hits,
        }
    }
}

/// Opaque arbitrary-precision non-negative integer.
pub struct LucasNumber(Natural);

fn status_of(e: &Error) -> LucasStatus {
    match e {
        Error::NotLucas { .. } => LucasStatus::NotLucas,
        Error::IndexOverflow { .. } => LucasStatus::IndexOverflow,
        Error::Io { .. } | Error::Mismatch { .. } => LucasStatus::Internal,
        _ => LucasStatus::InvalidArgument,
    }
}

fn algorithm(id: u32) -> Option<Algorithm> {
    Some(match id {
        LUCAS_ALGO_MIDDLE => Algorithm::Middle,
        LUCAS_ALGO_RIPPLE => Algorithm::Ripple,
        LUCAS_ALGO_RIPPLE_MEMO => Algorithm::RippleMemo,
        LUCAS_ALGO_LINEAR => Algorithm::Linear,
        LUCAS_ALGO_VIA_FIB => Algorithm::ViaFib,
        _ => return None,
    })
}

fn kind(id: u32) -> Option<Kind> {
    match id {
        LUCAS_KIND_LUCAS => Some(Kind::Lucas),
        LUCAS_KIND_FIB => Some(Kind::Fib),
        _ => None,
    }
}

fn guard(f: impl FnOnce() -> LucasStatus) -> LucasStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(LucasStatus::Internal)
}

fn radix_ok(radix: u32) -> bool {
    (2..=36).contains(&radix)
}

/// Computes one sequence value.
///
/// `kind_id` is a `LUCAS_KIND_*` constant and `algo_id` a `LUCAS_ALGO_*`
/// constant.
/// On success `*out` receives a new handle. `counts` may be null.
///
/// # Safety
///
/// `out` must be valid for writes. `counts`, when non-null, must be valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn lucas_compute(
    kind_id: u32,
    n: u64,
    algo_id: u32,
    out: *mut *mut LucasNumber,
    counts: *mut LucasOpCounts,
) -> LucasStatus {
    guard(|| {
        if out.is_null() {
            return LucasStatus::NullPointer;
        }
        let (Some(kind), Some(algo)) = (kind(kind_id), algorithm(algo_id)) else {
            return LucasStatus::InvalidArgument;
        };
        let mut ops = OpCounts::new();
        match lucas_core::compute(kind, n, algo, &mut ops) {
            Ok(v) => {
                *out = Box::into_raw(Box::new(LucasNumber(v)));
                if !counts.is_null() {
                    *counts = ops.into();
                }
                LucasStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// `F(n)` from `L(n)` by exact integer square root.
///
/// # Safety
///
/// `lucas_value` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lucas_fib_from_lucas(
    n: u64,
    lucas_value: *const LucasNumber,
    out: *mut *mut LucasNumber,
) -> LucasStatus {
    guard(|| {
        if lucas_value.is_null() || out.is_null() {
            return LucasStatus::NullPointer;
        }
        match lucas_core::fib_from_lucas(n, &(*lucas_value).0) {
            Ok(v) => {
                *out = Box::into_raw(Box::new(LucasNumber(v)));
                LucasStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Parses a NUL-terminated numeral in `radix` (2..=36).
///
/// # Safety
///
/// `text` must point to a NUL-terminated string; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn lucas_number_parse(
    text: *const c_char,
    radix: u32,
    out: *mut *mut LucasNumber,
) -> LucasStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return LucasStatus::NullPointer;
        }
        if !radix_ok(radix) {
            return LucasStatus::InvalidArgument;
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return LucasStatus::InvalidArgument;
        };
        match BigUint::parse_bytes(s.as_bytes(), radix) {
            Some(v) => {
                *out = Box::into_raw(Box::new(LucasNumber(v)));
                LucasStatus::Ok
            }
            None => LucasStatus::InvalidArgument,
        }
    })
}

/// Writes the numeral in `radix` (2..=36, lowercase) followed by a NUL.
///
/// `*written` receives the numeral length excluding the NUL. When `buf_len`
/// is too small nothing is written to `buf`, `*written` holds the length
/// needed (excluding the NUL) and `LUCAS_STATUS_BUFFER_TOO_SMALL` is
/// returned; `buf` may be null in that case to query the size.
///
/// # Safety
///
/// `num` must be a live handle, `written` valid for writes, and `buf` valid
/// for `buf_len` bytes when non-null.
#[no_mangle]
pub unsafe extern "C" fn lucas_number_to_string(
    num: *const LucasNumber,
    radix: u32,
    buf: *mut c_char,
    buf_len: usize,
    written: *mut usize,
) -> LucasStatus {
    guard(|| {
        if num.is_null() || written.is_null() {
            return LucasStatus::NullPointer;
        }
        if !radix_ok(radix) {
            return LucasStatus::InvalidArgument;
        }
        let digits = (*num).0.to_str_radix(radix);
        *written = digits.len();
        if buf.is_null() || buf_len < digits.len() + 1 {
            return LucasStatus::BufferTooSmall;
        }
        ptr::copy_nonoverlapping(digits.as_ptr(), buf as *mut u8, digits.len());
        *buf.add(digits.len()) = 0;
        LucasStatus::Ok
    })
}

/// Number of significant bits; 0 for zero.
///
/// # Safety
///
/// `num` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lucas_number_bit_length(
    num: *const LucasNumber,
    out: *mut u64,
) -> LucasStatus {
    if num.is_null() || out.is_null() {
        return LucasStatus::NullPointer;
    }
    *out = (*num).0.bits();
    LucasStatus::Ok
}

/// Returns 1 when both handles hold the same value, 0 otherwise (including
/// when either is null).
///
/// # Safety
///
/// Non-null arguments must be live handles.
#[no_mangle]
pub unsafe extern "C" fn lucas_number_equal(a: *const LucasNumber, b: *const LucasNumber) -> i32 {
    if a.is_null() || b.is_null() {
        return 0;
    }
    ((*a).0 == (*b).0) as i32
}

/// Releases a handle. Null is ignored.
///
/// # Safety
///
/// `num` must be null or a handle returned by this library that has not been
/// freed.
#[no_mangle]
pub unsafe extern "C" fn lucas_number_free(num: *mut LucasNumber) {
    if !num.is_null() {
        drop(Box::from_raw(num));
    }
}

/// Calls made by the unmemoized Ripple recursion for `n >= 2`.
///
/// # Safety
///
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lucas_ripple_call_count(n: u64, out: *mut u64) -> LucasStatus {
    if out.is_null() {
        return LucasStatus::NullPointer;
    }
    match lucas_core::ripple_call_count(n) {
        Ok(c) => {
            *out = c;
            LucasStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn lucas_status_message(status: LucasStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        LucasStatus::Ok => c"ok",
        LucasStatus::NullPointer => c"null pointer argument",
        LucasStatus::InvalidArgument => c"invalid argument",
        LucasStatus::NotLucas => c"value is not the Lucas number for this index",
        LucasStatus::BufferTooSmall => c"output buffer too small",
        LucasStatus::IndexOverflow => c"index arithmetic overflow",
        LucasStatus::Internal => c"internal error",
    };
    msg.as_ptr()
}

/// Library version, static and NUL-terminated.
#[no_mangle]
pub extern "C" fn lucas_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
