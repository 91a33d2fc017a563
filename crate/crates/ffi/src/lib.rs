//! C ABI over `holoweb`.
//!
//! Objects are opaque heap handles created by `hw_*_parse` or by an
//! operation, and released with the matching `hw_*_free`. Every fallible call
//! returns an [`HwStatus`]; on failure the message is available from
//! [`hw_last_error`] on the same thread until the next call. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`hw_string_free`].

use holoweb::contact::{fiber_points, to_implicit_ode, ImplicitOde};
use holoweb::elimination::{
    leviflat_from_first_integral, verify_first_integral, web_from_first_integral, FirstIntegral,
};
use holoweb::poly::{discriminant_in, resultant, MultiPoly};
use holoweb::web::Web;
use num_complex::Complex64;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Invalid = 4,
    Numeric = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Polynomial over Gaussian rationals.
pub struct HwPoly(MultiPoly);
/// Canonical web.
pub struct HwWeb(Web);
/// Monic first-integral family.
pub struct HwFirstIntegral(FirstIntegral);
/// Implicit ODE `F(x, y, p) = 0`.
pub struct HwOde(ImplicitOde);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

type Fail = (HwStatus, String);

fn parse_fail(e: impl std::fmt::Display) -> Fail {
    (HwStatus::Parse, e.to_string())
}

fn invalid(e: impl std::fmt::Display) -> Fail {
    (HwStatus::Invalid, e.to_string())
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HwStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HwStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HwStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err((HwStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (HwStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or((HwStatus::NullPointer, "null handle".into()))
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err((HwStatus::NullPointer, "null out-parameter".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err((HwStatus::NullPointer, "null out-parameter".into()));
    }
    *out = CString::new(s).map_err(invalid)?.into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library.
#[no_mangle]
pub extern "C" fn hw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn hw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `text` over the comma-separated variable list `vars`.
///
/// # Safety
/// Pointers must be valid NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_poly_parse(text: *const c_char, vars: *const c_char, out: *mut *mut HwPoly) -> HwStatus {
    guard(|| {
        let t = self::text(text)?;
        let names: Vec<&str> = self::text(vars)?
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let p = MultiPoly::parse(t, &names).map_err(parse_fail)?;
        emit(out, HwPoly(p))
    })
}

/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hw_poly_to_string(poly: *const HwPoly, out: *mut *mut c_char) -> HwStatus {
    guard(|| emit_string(out, handle(poly)?.0.to_string()))
}

/// # Safety
/// `poly` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn hw_poly_free(poly: *mut HwPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Sylvester resultant of `f` and `g` in `var`.
///
/// # Safety
/// Handles must be live; `var` a valid string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_resultant(
    f: *const HwPoly,
    g: *const HwPoly,
    var: *const c_char,
    out: *mut *mut HwPoly,
) -> HwStatus {
    guard(|| {
        let r = resultant(&handle(f)?.0, &handle(g)?.0, text(var)?).map_err(invalid)?;
        emit(out, HwPoly(r))
    })
}

/// Discriminant of `p` in `var`.
///
/// # Safety
/// As for [`hw_resultant`].
#[no_mangle]
pub unsafe extern "C" fn hw_discriminant(p: *const HwPoly, var: *const c_char, out: *mut *mut HwPoly) -> HwStatus {
    guard(|| {
        let d = discriminant_in(&handle(p)?.0, text(var)?).map_err(invalid)?;
        emit(out, HwPoly(d))
    })
}

/// Parses a web in text form (header optional).
///
/// # Safety
/// `text` must be a valid string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_web_parse(text: *const c_char, out: *mut *mut HwWeb) -> HwStatus {
    guard(|| {
        let w = Web::from_text(self::text(text)?).map_err(parse_fail)?;
        emit(out, HwWeb(w))
    })
}

/// Text form of the web, including the header.
///
/// # Safety
/// `web` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_web_to_string(web: *const HwWeb, out: *mut *mut c_char) -> HwStatus {
    guard(|| emit_string(out, handle(web)?.0.to_text()))
}

/// Degree `k` of the web, or 0 for a null handle.
///
/// # Safety
/// `web` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn hw_web_degree(web: *const HwWeb) -> u32 {
    web.as_ref().map_or(0, |w| w.0.k())
}

/// # Safety
/// `web` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn hw_web_free(web: *mut HwWeb) {
    if !web.is_null() {
        drop(Box::from_raw(web));
    }
}

/// Parses a first integral (`fi` text form or a bare polynomial in `z`).
///
/// # Safety
/// `text` must be a valid string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_fi_parse(text: *const c_char, out: *mut *mut HwFirstIntegral) -> HwStatus {
    guard(|| {
        let fi = FirstIntegral::from_text(self::text(text)?).map_err(parse_fail)?;
        emit(out, HwFirstIntegral(fi))
    })
}

/// # Safety
/// `fi` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn hw_fi_free(fi: *mut HwFirstIntegral) {
    if !fi.is_null() {
        drop(Box::from_raw(fi));
    }
}

/// Eliminates the parameter of `fi`, giving its web.
///
/// # Safety
/// `fi` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_web_from_first_integral(fi: *const HwFirstIntegral, out: *mut *mut HwWeb) -> HwStatus {
    guard(|| {
        let w = web_from_first_integral(&handle(fi)?.0).map_err(invalid)?;
        emit(out, HwWeb(w))
    })
}

/// Writes whether `fi` is a first integral of `web`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_verify_first_integral(
    web: *const HwWeb,
    fi: *const HwFirstIntegral,
    out: *mut bool,
) -> HwStatus {
    guard(|| {
        let v = verify_first_integral(&handle(web)?.0, &handle(fi)?.0).map_err(invalid)?;
        let out = out
            .as_mut()
            .ok_or((HwStatus::NullPointer, "null out-parameter".into()))?;
        *out = v.holds();
        Ok(())
    })
}

/// Levi-flat polynomial of `fi`, over the coordinates and their `_bar`
/// conjugates.
///
/// # Safety
/// `fi` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_leviflat(fi: *const HwFirstIntegral, out: *mut *mut HwPoly) -> HwStatus {
    guard(|| {
        let levi = leviflat_from_first_integral(&handle(fi)?.0).map_err(invalid)?;
        emit(out, HwPoly(levi.base().clone()))
    })
}

/// Parses `F(x, y, p)`.
///
/// # Safety
/// `text` must be a valid string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_ode_parse(text: *const c_char, out: *mut *mut HwOde) -> HwStatus {
    guard(|| {
        let ode = ImplicitOde::parse(self::text(text)?).map_err(parse_fail)?;
        emit(out, HwOde(ode))
    })
}

/// Dehomogenizes a planar web to its implicit ODE.
///
/// # Safety
/// `web` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_ode_from_web(web: *const HwWeb, out: *mut *mut HwOde) -> HwStatus {
    guard(|| {
        let ode = to_implicit_ode(&handle(web)?.0).map_err(invalid)?;
        emit(out, HwOde(ode))
    })
}

/// # Safety
/// `ode` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn hw_ode_free(ode: *mut HwOde) {
    if !ode.is_null() {
        drop(Box::from_raw(ode));
    }
}

#[allow(clippy::too_many_arguments)]
/// Roots `p` of `F(x0, y0, p)`. Writes up to `capacity` roots as interleaved
/// `(re, im)` pairs into `roots` and their multiplicities into
/// `multiplicities`; `len` receives the number of distinct roots.
///
/// # Safety
/// `ode` must be live; `roots` must hold `2 * capacity` doubles and
/// `multiplicities` `capacity` entries; `len` writable.
#[no_mangle]
pub unsafe extern "C" fn hw_fiber_points(
    ode: *const HwOde,
    x0_re: f64,
    x0_im: f64,
    y0_re: f64,
    y0_im: f64,
    tolerance: f64,
    roots: *mut f64,
    multiplicities: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> HwStatus {
    guard(|| {
        let fp = fiber_points(
            &handle(ode)?.0,
            Complex64::new(x0_re, x0_im),
            Complex64::new(y0_re, y0_im),
            tolerance,
        )
        .map_err(|e| (HwStatus::Numeric, e.to_string()))?;
        let len = len.as_mut().ok_or((HwStatus::NullPointer, "null length".into()))?;
        *len = fp.roots.len();
        if fp.roots.len() > capacity {
            return Err((
                HwStatus::BufferTooSmall,
                format!("need room for {} roots", fp.roots.len()),
            ));
        }
        if roots.is_null() || multiplicities.is_null() {
            return Err((HwStatus::NullPointer, "null output buffer".into()));
        }
        for (i, (z, m)) in fp.roots.iter().enumerate() {
            *roots.add(2 * i) = z.re;
            *roots.add(2 * i + 1) = z.im;
            *multiplicities.add(i) = *m;
        }
        Ok(())
    })
}
