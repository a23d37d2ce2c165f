//! C ABI over the mondepth library.
//!
//! Ideals are opaque handles created by [`md_ideal_parse`] and released by
//! [`md_ideal_free`]. Every entry point returns an [`MdStatus`]; outputs go
//! through pointers that are written only on `MD_STATUS_OK`. Rust panics are
//! caught at the boundary and surfaced as `MD_STATUS_PANIC`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use mondepth::{
    associated_primes, modify_trivial, parse_ideal, render_ideal, sdepth_ideal, sdepth_quotient,
    size_bigsize, Alpha, Error, FieldChar, MonomialIdeal, SdepthConfig, SdepthResult,
};

/// Status code returned by every FFI entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    CapExceeded = 5,
    /// The sdepth search budget ran out; no exact value is available.
    Indeterminate = 6,
    Panic = 7,
}

/// Which module the Stanley depth refers to.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdMode {
    Ideal = 0,
    Quotient = 1,
}

/// Opaque handle to a monomial ideal in canonical form.
pub struct MdIdeal(MonomialIdeal);

fn status_of(e: &Error) -> MdStatus {
    match e {
        Error::Parse { .. } | Error::UnknownVariable { .. } | Error::ZeroExponentLiteral { .. } => {
            MdStatus::ParseError
        }
        Error::GeneratorCapExceeded { .. }
        | Error::LatticeCapExceeded { .. }
        | Error::FaceCapExceeded { .. }
        | Error::BoxCapExceeded { .. } => MdStatus::CapExceeded,
        _ => MdStatus::InvalidInput,
    }
}

fn guarded(body: impl FnOnce() -> MdStatus) -> MdStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => MdStatus::Panic,
    }
}

/// Parse an ideal from the two-line text format (`/` may replace newlines).
/// On success writes a fresh handle to `out`; free it with `md_ideal_free`.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn md_ideal_parse(text: *const c_char, out: *mut *mut MdIdeal) -> MdStatus {
    if text.is_null() || out.is_null() {
        return MdStatus::NullPointer;
    }
    let raw = unsafe { CStr::from_ptr(text) };
    guarded(|| {
        let Ok(text) = raw.to_str() else {
            return MdStatus::InvalidUtf8;
        };
        match parse_ideal(text) {
            Ok(ideal) => {
                unsafe { *out = Box::into_raw(Box::new(MdIdeal(ideal))) };
                MdStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Release a handle returned by `md_ideal_parse` or `md_modify`.
///
/// # Safety
/// `ideal` must be a handle from this library, or null (a no-op).
#[no_mangle]
pub unsafe extern "C" fn md_ideal_free(ideal: *mut MdIdeal) {
    if !ideal.is_null() {
        drop(unsafe { Box::from_raw(ideal) });
    }
}

/// Render the canonical text form. The returned string must be released
/// with `md_string_free`.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_ideal_render(ideal: *const MdIdeal, out: *mut *mut c_char) -> MdStatus {
    if ideal.is_null() || out.is_null() {
        return MdStatus::NullPointer;
    }
    let handle = unsafe { &*ideal };
    guarded(|| {
        let rendered = render_ideal(&handle.0);
        match CString::new(rendered) {
            Ok(s) => {
                unsafe { *out = s.into_raw() };
                MdStatus::Ok
            }
            Err(_) => MdStatus::InvalidInput,
        }
    })
}

/// Release a string returned by `md_ideal_render`.
///
/// # Safety
/// `s` must come from this library, or be null (a no-op).
#[no_mangle]
pub unsafe extern "C" fn md_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Number of minimal generators.
///
/// # Safety
/// `ideal` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn md_num_gens(ideal: *const MdIdeal, out: *mut i64) -> MdStatus {
    if ideal.is_null() || out.is_null() {
        return MdStatus::NullPointer;
    }
    let handle = unsafe { &*ideal };
    unsafe { *out = handle.0.num_gens() as i64 };
    MdStatus::Ok
}

/// The size and bigsize invariants together with the cover count `a` and
/// total height `b`.
///
/// # Safety
/// `ideal` must be a live handle; output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn md_size(
    ideal: *const MdIdeal,
    a: *mut i64,
    b: *mut i64,
    size: *mut i64,
    bigsize: *mut i64,
) -> MdStatus {
    if ideal.is_null() || a.is_null() || b.is_null() || size.is_null() || bigsize.is_null() {
        return MdStatus::NullPointer;
    }
    let handle = unsafe { &*ideal };
    guarded(|| {
        let run = associated_primes(&handle.0).and_then(|ass| size_bigsize(&ass, handle.0.nvars()));
        match run {
            Ok(report) => {
                unsafe {
                    *a = report.a as i64;
                    *b = report.b as i64;
                    *size = report.size as i64;
                    *bigsize = report.bigsize as i64;
                }
                MdStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// depth(S/I) and depth(I) over the field of the given characteristic
/// (0 for the rationals).
///
/// # Safety
/// `ideal` must be a live handle; output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn md_depth(
    ideal: *const MdIdeal,
    characteristic: u64,
    depth_quotient: *mut i64,
    depth_ideal: *mut i64,
) -> MdStatus {
    if ideal.is_null() || depth_quotient.is_null() || depth_ideal.is_null() {
        return MdStatus::NullPointer;
    }
    let handle = unsafe { &*ideal };
    guarded(|| {
        let run = FieldChar::from_u64(characteristic)
            .and_then(|field| mondepth::depth_quotient(&handle.0, field));
        match run {
            Ok(dq) => {
                unsafe {
                    *depth_quotient = dq as i64;
                    *depth_ideal = dq as i64 + 1;
                }
                MdStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Exact Stanley depth of the ideal or the quotient. `mode` is an `MdMode`
/// value passed as a plain integer so out-of-range values are rejected
/// rather than trusted. A zero `budget` or `box_cap` selects the default
/// limits. Returns `MD_STATUS_INDETERMINATE` when the search budget runs
/// out before the value is exact.
///
/// # Safety
/// `ideal` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn md_sdepth(
    ideal: *const MdIdeal,
    mode: i32,
    budget: u64,
    box_cap: u64,
    out: *mut i64,
) -> MdStatus {
    if ideal.is_null() || out.is_null() {
        return MdStatus::NullPointer;
    }
    let mode = match mode {
        0 => MdMode::Ideal,
        1 => MdMode::Quotient,
        _ => return MdStatus::InvalidInput,
    };
    let handle = unsafe { &*ideal };
    guarded(|| {
        let defaults = SdepthConfig::default();
        let config = SdepthConfig {
            node_budget: if budget == 0 {
                defaults.node_budget
            } else {
                budget
            },
            box_cap: if box_cap == 0 {
                defaults.box_cap
            } else {
                box_cap
            },
            g_override: None,
        };
        let run = match mode {
            MdMode::Ideal => sdepth_ideal(&handle.0, &config),
            MdMode::Quotient => sdepth_quotient(&handle.0, &config),
        };
        match run {
            Ok(SdepthResult::Exact { value, .. }) => {
                unsafe { *out = value as i64 };
                MdStatus::Ok
            }
            Ok(SdepthResult::Indeterminate { .. }) => MdStatus::Indeterminate,
            Err(e) => status_of(&e),
        }
    })
}

/// Trivial modification `I^alpha` of a squarefree ideal. Writes a fresh
/// handle on success.
///
/// # Safety
/// `ideal` must be a live handle, `alpha` must point to `alpha_len` entries,
/// and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn md_modify(
    ideal: *const MdIdeal,
    alpha: *const u32,
    alpha_len: usize,
    out: *mut *mut MdIdeal,
) -> MdStatus {
    if ideal.is_null() || alpha.is_null() || out.is_null() {
        return MdStatus::NullPointer;
    }
    let handle = unsafe { &*ideal };
    let entries = unsafe { std::slice::from_raw_parts(alpha, alpha_len) };
    guarded(|| {
        let run = Alpha::new(entries.to_vec()).and_then(|alpha| modify_trivial(&handle.0, &alpha));
        match run {
            Ok(modified) => {
                unsafe { *out = Box::into_raw(Box::new(MdIdeal(modified))) };
                MdStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn parse(text: &str) -> *mut MdIdeal {
        let c = CString::new(text).unwrap();
        let mut handle: *mut MdIdeal = ptr::null_mut();
        let status = unsafe { md_ideal_parse(c.as_ptr(), &mut handle) };
        assert_eq!(status, MdStatus::Ok);
        handle
    }

    #[test]
    fn parse_render_round_trip() {
        let handle = parse("vars: 3\ngens: x1^2*x2, x2*x3");
        let mut rendered: *mut c_char = ptr::null_mut();
        assert_eq!(
            unsafe { md_ideal_render(handle, &mut rendered) },
            MdStatus::Ok
        );
        let text = unsafe { CStr::from_ptr(rendered) }.to_str().unwrap();
        assert_eq!(text, "vars: 3\ngens: x1^2*x2, x2*x3\n");
        unsafe {
            md_string_free(rendered);
            md_ideal_free(handle);
        }
    }

    #[test]
    fn size_and_depth_through_the_boundary() {
        let handle = parse("vars:2 / gens: x1*x2");
        let (mut a, mut b, mut size, mut bigsize) = (0i64, 0i64, 0i64, 0i64);
        assert_eq!(
            unsafe { md_size(handle, &mut a, &mut b, &mut size, &mut bigsize) },
            MdStatus::Ok
        );
        assert_eq!((a, b, size, bigsize), (2, 2, 1, 1));
        let (mut dq, mut di) = (0i64, 0i64);
        assert_eq!(
            unsafe { md_depth(handle, 32003, &mut dq, &mut di) },
            MdStatus::Ok
        );
        assert_eq!((dq, di), (1, 2));
        unsafe { md_ideal_free(handle) };
    }

    #[test]
    fn sdepth_and_modify_through_the_boundary() {
        let handle = parse("vars:2 / gens: x1, x2");
        let mut value = -1i64;
        assert_eq!(
            unsafe { md_sdepth(handle, MdMode::Ideal as i32, 0, 0, &mut value) },
            MdStatus::Ok
        );
        assert_eq!(value, 1);

        let alpha = [3u32, 2u32];
        let mut modified: *mut MdIdeal = ptr::null_mut();
        assert_eq!(
            unsafe { md_modify(handle, alpha.as_ptr(), alpha.len(), &mut modified) },
            MdStatus::Ok
        );
        let mut rendered: *mut c_char = ptr::null_mut();
        assert_eq!(
            unsafe { md_ideal_render(modified, &mut rendered) },
            MdStatus::Ok
        );
        let text = unsafe { CStr::from_ptr(rendered) }.to_str().unwrap();
        assert_eq!(text, "vars: 2\ngens: x1^3, x2^2\n");
        unsafe {
            md_string_free(rendered);
            md_ideal_free(modified);
            md_ideal_free(handle);
        }
    }

    #[test]
    fn error_statuses() {
        let mut handle: *mut MdIdeal = ptr::null_mut();
        assert_eq!(
            unsafe { md_ideal_parse(ptr::null(), &mut handle) },
            MdStatus::NullPointer
        );
        let bad = CString::new("vars: 2\ngens: x9").unwrap();
        assert_eq!(
            unsafe { md_ideal_parse(bad.as_ptr(), &mut handle) },
            MdStatus::ParseError
        );
        // zero ideal admits no depth computation
        let zero = parse("vars: 2\ngens:");
        let (mut dq, mut di) = (0i64, 0i64);
        assert_eq!(
            unsafe { md_depth(zero, 32003, &mut dq, &mut di) },
            MdStatus::InvalidInput
        );
        // non-squarefree modification is rejected
        let square = parse("vars: 1\ngens: x1^2");
        let alpha = [2u32];
        let mut out: *mut MdIdeal = ptr::null_mut();
        assert_eq!(
            unsafe { md_modify(square, alpha.as_ptr(), 1, &mut out) },
            MdStatus::InvalidInput
        );
        // out-of-range mode integers are rejected, not trusted
        let proper = parse("vars: 2\ngens: x1");
        let mut sd = 0i64;
        assert_eq!(
            unsafe { md_sdepth(proper, 7, 0, 0, &mut sd) },
            MdStatus::InvalidInput
        );
        unsafe {
            md_ideal_free(zero);
            md_ideal_free(square);
            md_ideal_free(proper);
        }
    }
}
