//! C ABI over `tropkit`.
//!
//! Objects cross the boundary as opaque handles created by `*_from_json`
//! and released by the matching `*_free`. Every fallible call returns a
//! [`TkStatus`]; on failure [`tk_last_error`] describes the problem. Strings
//! returned through `char **out` belong to the caller and must be released
//! with [`tk_string_free`]. Rationals are exchanged as `"p/q"` strings.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::c_char;
use tropkit::metricgraph::MetricGraph;
use tropkit::planecurve::PlaneTropicalCurve;
use tropkit::polynomial::TropicalPolynomial;
use tropkit::{enumeration, io, jacobian, metricgraph, planecurve, Error};

/// Result of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TkStatus {
    Ok = 0,
    /// Well-formed request rejected by the mathematics.
    Domain = 1,
    /// Malformed or invalid input data.
    Input = 2,
    NullPointer = 3,
    /// A bug inside the library; the handle arguments are still valid.
    Panic = 4,
}

/// Tropical polynomial.
pub struct TkPolynomial(TropicalPolynomial);

/// Plane tropical curve.
pub struct TkCurve(PlaneTropicalCurve);

/// Metric graph.
pub struct TkGraph(MetricGraph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(e: Error) -> TkStatus {
    set_error(&e.to_string());
    if e.is_input() {
        TkStatus::Input
    } else {
        TkStatus::Domain
    }
}

fn guard(f: impl FnOnce() -> Result<(), TkStatus>) -> TkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            TkStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            TkStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, TkStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(TkStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        TkStatus::Input
    })
}

unsafe fn handle<'a, T>(h: *const T) -> Result<&'a T, TkStatus> {
    h.as_ref().ok_or_else(|| {
        set_error("null handle");
        TkStatus::NullPointer
    })
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), TkStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(TkStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

/// Checked before boxing so a null `out` does not leak the object.
unsafe fn put_box<T>(out: *mut *mut T, value: T) -> Result<(), TkStatus> {
    if out.is_null() {
        return put(out, std::ptr::null_mut());
    }
    put(out, Box::into_raw(Box::new(value)))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), TkStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("result contains a NUL byte");
        TkStatus::Panic
    })?;
    put(out, c.into_raw())
}

fn lift<T>(r: tropkit::Result<T>) -> Result<T, TkStatus> {
    r.map_err(fail)
}

/// Message for the most recent failed call on this thread, or an empty
/// string. Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn tk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// polynomials

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tk_polynomial_from_json(json: *const c_char, out: *mut *mut TkPolynomial) -> TkStatus {
    guard(|| {
        let f = lift(io::polynomial_from_json(text(json)?))?;
        put_box(out, TkPolynomial(f))
    })
}

/// # Safety
/// `p` must be NULL or a handle from [`tk_polynomial_from_json`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tk_polynomial_free(p: *mut TkPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Evaluates at a point given as comma-separated rationals; the value is
/// written as a rational string or `"-inf"`.
///
/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn tk_polynomial_evaluate(
    p: *const TkPolynomial,
    point: *const c_char,
    out: *mut *mut c_char,
) -> TkStatus {
    guard(|| {
        let p = handle(p)?;
        let x = lift(io::parse_rational_list(text(point)?))?;
        let v = lift(p.0.evaluate(&x))?;
        put_string(out, v.to_string())
    })
}

/// Corner locus of a two-variable polynomial.
///
/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn tk_polynomial_corner_locus(p: *const TkPolynomial, out: *mut *mut TkCurve) -> TkStatus {
    guard(|| {
        let c = lift(planecurve::corner_locus(&handle(p)?.0))?;
        put_box(out, TkCurve(c))
    })
}

// curves

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tk_curve_from_json(json: *const c_char, out: *mut *mut TkCurve) -> TkStatus {
    guard(|| {
        let c = lift(io::curve_from_json(text(json)?))?;
        put_box(out, TkCurve(c))
    })
}

/// # Safety
/// `c` must be NULL or a curve handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tk_curve_free(c: *mut TkCurve) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Canonical JSON encoding of the curve.
///
/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn tk_curve_to_json(c: *const TkCurve, out: *mut *mut c_char) -> TkStatus {
    guard(|| put_string(out, io::to_text(&io::curve_to_json(&handle(c)?.0))))
}

/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn tk_curve_is_balanced(c: *const TkCurve, out: *mut bool) -> TkStatus {
    guard(|| put(out, handle(c)?.0.is_balanced()))
}

/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn tk_curve_degree(c: *const TkCurve, out: *mut u64) -> TkStatus {
    guard(|| put(out, lift(planecurve::degree(&handle(c)?.0))?))
}

/// Stable intersection report as JSON.
///
/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn tk_curve_intersect(
    a: *const TkCurve,
    b: *const TkCurve,
    seed: u64,
    out: *mut *mut c_char,
) -> TkStatus {
    guard(|| {
        let r = lift(planecurve::stable_intersection(&handle(a)?.0, &handle(b)?.0, seed))?;
        put_string(out, io::to_text(&io::report_to_json(&r)))
    })
}

// metric graphs

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tk_graph_from_json(json: *const c_char, out: *mut *mut TkGraph) -> TkStatus {
    guard(|| {
        let g = lift(io::graph_from_json(text(json)?))?;
        put_box(out, TkGraph(g))
    })
}

/// # Safety
/// `g` must be NULL or a graph handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tk_graph_free(g: *mut TkGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn tk_graph_genus(g: *const TkGraph, out: *mut usize) -> TkStatus {
    guard(|| put(out, handle(g)?.0.genus()))
}

/// Rank of a divisor given as divisor JSON.
///
/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn tk_graph_rank(g: *const TkGraph, divisor: *const c_char, out: *mut i64) -> TkStatus {
    guard(|| {
        let g = &handle(g)?.0;
        let d = lift(io::divisor_from_json(g, text(divisor)?))?;
        put(out, lift(metricgraph::rank(g, &d))?)
    })
}

/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn tk_graph_riemann_roch(g: *const TkGraph, divisor: *const c_char, out: *mut bool) -> TkStatus {
    guard(|| {
        let g = &handle(g)?.0;
        let d = lift(io::divisor_from_json(g, text(divisor)?))?;
        put(out, lift(metricgraph::riemann_roch_check(g, &d))?)
    })
}

/// Period matrix as a row-major JSON array of rational strings.
///
/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn tk_graph_period_matrix(g: *const TkGraph, out: *mut *mut c_char) -> TkStatus {
    guard(|| {
        let q = lift(jacobian::period_matrix(&handle(g)?.0))?;
        put_string(out, io::to_text(&io::period_matrix_to_json(&q)))
    })
}

/// Abel-Jacobi image of a degree-zero divisor as `{"coords": [...]}`.
///
/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn tk_graph_abel_jacobi(
    g: *const TkGraph,
    divisor: *const c_char,
    out: *mut *mut c_char,
) -> TkStatus {
    guard(|| {
        let g = &handle(g)?.0;
        let d = lift(io::divisor_from_json(g, text(divisor)?))?;
        let p = lift(jacobian::abel_jacobi(g, &d))?;
        put_string(out, io::to_text(&io::jacobian_point_to_json(&p)))
    })
}

// enumeration

/// Number of degree-`degree`, genus-`genus` plane curves through generic
/// points, as a decimal string. Degrees above the default enumeration
/// bound are rejected as input errors.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tk_count_curves(degree: u32, genus: u32, out: *mut *mut c_char) -> TkStatus {
    guard(|| {
        let d = degree as usize;
        if d == 0 || d > enumeration::DEFAULT_MAX_DEGREE {
            return Err(fail(Error::Input(format!("degree {d} outside 1..={}", enumeration::DEFAULT_MAX_DEGREE))));
        }
        put_string(out, enumeration::count_curves(d, genus as usize).to_string())
    })
}

/// Rational curve count from the associativity recursion, as a decimal string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tk_kontsevich(degree: u32, out: *mut *mut c_char) -> TkStatus {
    guard(|| put_string(out, enumeration::kontsevich_n(degree as usize).to_string()))
}
