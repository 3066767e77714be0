//! C ABI over the `verlinde` crate.
//!
//! Objects cross the boundary as opaque heap handles that the caller releases
//! with the matching `*_free`. Every fallible call returns a [`VerlindeStatus`];
//! on failure the message is kept per thread and read back with
//! [`verlinde_last_error`]. Strings handed out by the library are released with
//! [`verlinde_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use verlinde::glx::{GLXShape, GWeight};
use verlinde::verp::VerpObject;
use verlinde::{cli, Error, Prime};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerlindeStatus {
    Ok = 0,
    /// A required pointer was null or a string was not UTF-8.
    NullOrUtf8 = 1,
    /// The library rejected the input.
    InvalidInput = 2,
    /// Valid input outside what the library can compute.
    Unsupported = 3,
    /// Internal panic; the library state is still usable.
    Panic = 4,
}

/// An object of Ver_p, a direct sum of simples L_1..L_{p-1}.
pub struct VerlindeVerp(VerpObject);

/// A GL(X) shape: characteristic plus block multiplicities.
pub struct VerlindeShape(GLXShape);

/// A weight of GL(X) for a fixed shape.
pub struct VerlindeWeight(GWeight);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let s = CString::new(msg).unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Fail(VerlindeStatus);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        set_error(e.to_string());
        match e {
            Error::Unsupported(_) => Fail(VerlindeStatus::Unsupported),
            _ => Fail(VerlindeStatus::InvalidInput),
        }
    }
}

fn null_or_utf8(what: &str) -> Fail {
    set_error(format!("{what}: null pointer or invalid UTF-8"));
    Fail(VerlindeStatus::NullOrUtf8)
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> VerlindeStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => VerlindeStatus::Ok,
        Ok(Err(Fail(s))) => s,
        Err(_) => {
            set_error("internal panic");
            VerlindeStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null_or_utf8(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| null_or_utf8(what))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null_or_utf8(what))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null_or_utf8("out"));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(VerlindeStatus::Panic))?;
    write_out(out, c.into_raw())
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next library call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn verlinde_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn verlinde_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The simple object L_k of Ver_p, 1 <= k <= p-1.
#[no_mangle]
pub unsafe extern "C" fn verlinde_verp_simple(
    p: u32,
    k: usize,
    out: *mut *mut VerlindeVerp,
) -> VerlindeStatus {
    guard(|| {
        let o = VerpObject::simple(Prime::new(p)?, k)?;
        write_out(out, boxed(VerlindeVerp(o)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn verlinde_verp_fuse(
    a: *const VerlindeVerp,
    b: *const VerlindeVerp,
    out: *mut *mut VerlindeVerp,
) -> VerlindeStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        write_out(out, boxed(VerlindeVerp(a.0.fuse(&b.0)?)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn verlinde_verp_direct_sum(
    a: *const VerlindeVerp,
    b: *const VerlindeVerp,
    out: *mut *mut VerlindeVerp,
) -> VerlindeStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        write_out(out, boxed(VerlindeVerp(a.0.direct_sum(&b.0)?)))
    })
}

/// Multiplicity of L_k; 0 for k outside 1..p-1 or a null handle.
#[no_mangle]
pub unsafe extern "C" fn verlinde_verp_multiplicity(obj: *const VerlindeVerp, k: usize) -> u64 {
    obj.as_ref().map_or(0, |o| o.0.multiplicity(k))
}

/// Numerical quantum dimension, categorical dimension in F_p, and the
/// integer dimension of the Jordan-model lift.
#[no_mangle]
pub unsafe extern "C" fn verlinde_verp_dims(
    obj: *const VerlindeVerp,
    out_qdim: *mut f64,
    out_catdim: *mut u32,
    out_dim: *mut u64,
) -> VerlindeStatus {
    guard(|| {
        let o = &ref_arg(obj, "obj")?.0;
        if out_qdim.is_null() || out_catdim.is_null() || out_dim.is_null() {
            return Err(null_or_utf8("out"));
        }
        write_out(out_qdim, o.qdim().to_float())?;
        write_out(out_catdim, o.fpdim())?;
        write_out(out_dim, o.underlying_dim())
    })
}

/// JSON object `{"L1": m1, ...}` listing nonzero multiplicities.
#[no_mangle]
pub unsafe extern "C" fn verlinde_verp_to_json(
    obj: *const VerlindeVerp,
    out: *mut *mut c_char,
) -> VerlindeStatus {
    guard(|| write_string(out, cli::verp_json(&ref_arg(obj, "obj")?.0).to_string()))
}

#[no_mangle]
pub unsafe extern "C" fn verlinde_verp_free(obj: *mut VerlindeVerp) {
    if !obj.is_null() {
        drop(Box::from_raw(obj));
    }
}

/// Shape from a summand list such as `"L1:2,L3:1"`.
#[no_mangle]
pub unsafe extern "C" fn verlinde_shape_parse(
    p: u32,
    spec: *const c_char,
    out: *mut *mut VerlindeShape,
) -> VerlindeStatus {
    guard(|| {
        let s = GLXShape::parse(Prime::new(p)?, str_arg(spec, "spec")?)?;
        write_out(out, boxed(VerlindeShape(s)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn verlinde_shape_rank(shape: *const VerlindeShape) -> usize {
    shape.as_ref().map_or(0, |s| s.0.rank())
}

#[no_mangle]
pub unsafe extern "C" fn verlinde_shape_free(shape: *mut VerlindeShape) {
    if !shape.is_null() {
        drop(Box::from_raw(shape));
    }
}

/// Weight from `"12,3|0"` (blocks separated by `|`) or a flat list.
#[no_mangle]
pub unsafe extern "C" fn verlinde_weight_parse(
    shape: *const VerlindeShape,
    text: *const c_char,
    out: *mut *mut VerlindeWeight,
) -> VerlindeStatus {
    guard(|| {
        let w = GWeight::parse(&ref_arg(shape, "shape")?.0, str_arg(text, "text")?)?;
        write_out(out, boxed(VerlindeWeight(w)))
    })
}

/// Copy up to `cap` entries into `buf`; returns the total number of entries.
#[no_mangle]
pub unsafe extern "C" fn verlinde_weight_entries(
    w: *const VerlindeWeight,
    buf: *mut i64,
    cap: usize,
) -> usize {
    let Some(w) = w.as_ref() else { return 0 };
    let e = w.0.entries();
    if !buf.is_null() {
        ptr::copy_nonoverlapping(e.as_ptr(), buf, e.len().min(cap));
    }
    e.len()
}

#[no_mangle]
pub unsafe extern "C" fn verlinde_weight_to_string(
    w: *const VerlindeWeight,
    out: *mut *mut c_char,
) -> VerlindeStatus {
    guard(|| write_string(out, ref_arg(w, "w")?.0.to_string()))
}

/// Split a dominant weight as base + p * mu with base restricted.
#[no_mangle]
pub unsafe extern "C" fn verlinde_weight_decompose(
    w: *const VerlindeWeight,
    out_base: *mut *mut VerlindeWeight,
    out_mu: *mut *mut VerlindeWeight,
) -> VerlindeStatus {
    guard(|| {
        if out_base.is_null() || out_mu.is_null() {
            return Err(null_or_utf8("out"));
        }
        let (base, mu) = ref_arg(w, "w")?.0.padic_decompose()?;
        write_out(out_base, boxed(VerlindeWeight(base)))?;
        write_out(out_mu, boxed(VerlindeWeight(mu)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn verlinde_weight_free(w: *mut VerlindeWeight) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Ver_p(SL(n)) product of two partitions (`"2,1"`), as the CLI's JSON.
#[no_mangle]
pub unsafe extern "C" fn verlinde_sln_fuse_json(
    p: u32,
    n: u32,
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut *mut c_char,
) -> VerlindeStatus {
    guard(|| {
        let v = cli::cmd_sln_fuse(p, n, str_arg(lambda, "lambda")?, str_arg(mu, "mu")?, false)?;
        write_string(out, v.to_string())
    })
}

/// Steinberg factorization of (weight, v) as JSON. `v` may be null for the
/// trivial tuple.
#[no_mangle]
pub unsafe extern "C" fn verlinde_factorize_json(
    p: u32,
    shape: *const c_char,
    weight: *const c_char,
    v: *const c_char,
    out: *mut *mut c_char,
) -> VerlindeStatus {
    guard(|| {
        let v = if v.is_null() { "" } else { str_arg(v, "v")? };
        let j = cli::cmd_factorize(p, str_arg(shape, "shape")?, str_arg(weight, "weight")?, v, true)?;
        write_string(out, j.to_string())
    })
}

/// Dimension data of the r-th Frobenius kernel's coordinate ring as JSON.
#[no_mangle]
pub unsafe extern "C" fn verlinde_kernel_dim_json(
    p: u32,
    shape: *const c_char,
    r: u32,
    out: *mut *mut c_char,
) -> VerlindeStatus {
    guard(|| write_string(out, cli::cmd_kernel_dim(p, str_arg(shape, "shape")?, r)?.to_string()))
}
