//! C ABI for the smallcover library.
//!
//! Polytopes are opaque handles created from the JSON schema or the built-in
//! constructors and released with [`sc_polytope_free`]. Analyses return JSON
//! payloads (the same schemas the CLI emits) through out-parameters; every
//! returned string is owned by the caller and must be released with
//! [`sc_string_free`]. Functions report a status code; on failure a
//! description is available from [`sc_last_error_message`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};

use libc::c_char;

use smallcover::charfunc::{self, CharFunc, SmallCoverSearch};
use smallcover::coxeter::{self, Pi1Target};
use smallcover::zhomology::{self, DEFAULT_CELL_GUARD};
use smallcover::{classify, format, SimplePolytope};

/// Success.
pub const SC_OK: i32 = 0;
/// The analysis itself failed (guards, rank defects, invalid data).
pub const SC_ERR_ANALYSIS: i32 = 1;
/// Malformed input (JSON, incidence, parameters).
pub const SC_ERR_BAD_INPUT: i32 = 2;
/// A required pointer was null.
pub const SC_ERR_NULL: i32 = 3;
/// A string argument was not valid UTF-8.
pub const SC_ERR_UTF8: i32 = 4;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(code: i32, msg: String) -> i32 {
    set_error(msg);
    code
}

/// Combinatorial simple polytope (opaque).
pub struct ScPolytope {
    inner: SimplePolytope,
}

fn boxed(p: SimplePolytope) -> *mut ScPolytope {
    Box::into_raw(Box::new(ScPolytope { inner: p }))
}

/// Borrows the handle, recording an error when it is null.
unsafe fn deref<'a>(p: *const ScPolytope) -> Option<&'a SimplePolytope> {
    if p.is_null() {
        set_error("polytope handle is null".into());
        None
    } else {
        Some(&(*p).inner)
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, i32> {
    if s.is_null() {
        return Err(fail(SC_ERR_NULL, "string argument is null".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| fail(SC_ERR_UTF8, format!("argument is not UTF-8: {e}")))
}

fn return_string(out: *mut *mut c_char, text: String) -> i32 {
    if out.is_null() {
        return fail(SC_ERR_NULL, "out-parameter is null".into());
    }
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            SC_OK
        }
        Err(e) => fail(SC_ERR_ANALYSIS, format!("payload contains NUL: {e}")),
    }
}

fn guard_or_default(cell_guard: usize) -> usize {
    if cell_guard == 0 {
        DEFAULT_CELL_GUARD
    } else {
        cell_guard
    }
}

unsafe fn parse_optional_charfunc(json: *const c_char) -> Result<Option<CharFunc>, i32> {
    if json.is_null() {
        return Ok(None);
    }
    let text = read_str(json)?;
    format::charfunc_from_json(text)
        .map(Some)
        .map_err(|e| fail(SC_ERR_BAD_INPUT, e.to_string()))
}

/// Message for the most recent failure on this thread, or an empty string.
/// The caller owns the result.
#[no_mangle]
pub extern "C" fn sc_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        let msg = slot
            .borrow()
            .as_ref()
            .map(|c| c.clone())
            .unwrap_or_else(|| CString::new("").unwrap());
        msg.into_raw()
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by one of these functions and
/// not yet freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a polytope from its JSON schema.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_from_json(
    json: *const c_char,
    out: *mut *mut ScPolytope,
) -> i32 {
    if out.is_null() {
        return fail(SC_ERR_NULL, "out-parameter is null".into());
    }
    let text = match read_str(json) {
        Ok(t) => t,
        Err(code) => return code,
    };
    match format::polytope_from_json(text) {
        Ok(p) => {
            *out = boxed(p);
            SC_OK
        }
        Err(e) => fail(SC_ERR_BAD_INPUT, e.to_string()),
    }
}

/// Serializes a polytope to its JSON schema. The caller owns the result.
///
/// # Safety
/// `p` must be a live handle from this library (or null, which fails).
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_to_json(
    p: *const ScPolytope,
    out: *mut *mut c_char,
) -> i32 {
    let Some(p) = deref(p) else {
        return SC_ERR_NULL;
    };
    return_string(out, format::polytope_to_json(p))
}

fn construct_into(
    out: *mut *mut ScPolytope,
    result: Result<SimplePolytope, smallcover::polytope::PolytopeError>,
) -> i32 {
    if out.is_null() {
        return fail(SC_ERR_NULL, "out-parameter is null".into());
    }
    match result {
        Ok(p) => {
            unsafe { *out = boxed(p) };
            SC_OK
        }
        Err(e) => fail(SC_ERR_BAD_INPUT, e.to_string()),
    }
}

/// The n-simplex.
#[no_mangle]
pub extern "C" fn sc_polytope_simplex(n: usize, out: *mut *mut ScPolytope) -> i32 {
    construct_into(out, SimplePolytope::simplex(n))
}

/// The n-cube with facet pairs (j, n + j).
#[no_mangle]
pub extern "C" fn sc_polytope_cube(n: usize, out: *mut *mut ScPolytope) -> i32 {
    construct_into(out, SimplePolytope::cube(n))
}

/// The m-gon.
#[no_mangle]
pub extern "C" fn sc_polytope_polygon(m: usize, out: *mut *mut ScPolytope) -> i32 {
    construct_into(out, SimplePolytope::polygon(m))
}

/// The simple dual of the cyclic polytope on k points in dimension n.
#[no_mangle]
pub extern "C" fn sc_polytope_dual_cyclic(k: usize, n: usize, out: *mut *mut ScPolytope) -> i32 {
    construct_into(out, SimplePolytope::dual_cyclic(k, n))
}

/// Cartesian product of two polytopes.
///
/// # Safety
/// `a` and `b` must be live handles from this library.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_product(
    a: *const ScPolytope,
    b: *const ScPolytope,
    out: *mut *mut ScPolytope,
) -> i32 {
    if out.is_null() {
        return fail(SC_ERR_NULL, "out-parameter is null".into());
    }
    let (Some(a), Some(b)) = (deref(a), deref(b)) else {
        return SC_ERR_NULL;
    };
    match a.product(b) {
        Ok(p) => {
            *out = boxed(p);
            SC_OK
        }
        Err(e) => fail(SC_ERR_BAD_INPUT, e.to_string()),
    }
}

/// Dimension, or -1 for a null handle.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_dim(p: *const ScPolytope) -> i64 {
    deref(p).map_or(-1, |p| p.dim() as i64)
}

/// Number of facets, or -1 for a null handle.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_num_facets(p: *const ScPolytope) -> i64 {
    deref(p).map_or(-1, |p| p.num_facets() as i64)
}

/// Number of vertices, or -1 for a null handle.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_num_vertices(p: *const ScPolytope) -> i64 {
    deref(p).map_or(-1, |p| p.num_vertices() as i64)
}

/// Releases a polytope handle; null is ignored.
///
/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sc_polytope_free(p: *mut ScPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Runs the full classification and returns the report JSON.
///
/// `charfunc_json` may be null (a small-cover search is attempted instead);
/// `cell_guard` of 0 selects the default of 2^20 cells.
///
/// # Safety
/// `p` must be a live handle; string arguments must be NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn sc_classify_json(
    p: *const ScPolytope,
    charfunc_json: *const c_char,
    compute_homology: bool,
    cell_guard: usize,
    out: *mut *mut c_char,
) -> i32 {
    let Some(p) = deref(p) else {
        return SC_ERR_NULL;
    };
    let lambda = match parse_optional_charfunc(charfunc_json) {
        Ok(l) => l,
        Err(code) => return code,
    };
    match classify::classify(p, lambda.as_ref(), compute_homology, guard_or_default(cell_guard)) {
        Ok(report) => return_string(out, report.to_json()),
        Err(e) => fail(SC_ERR_ANALYSIS, e.to_string()),
    }
}

/// Betti numbers of the quotient complex as JSON `{"b": [...], "euler": e}`.
/// With a null `charfunc_json`, the identity gluing (the real moment-angle
/// manifold) is used.
///
/// # Safety
/// As for [`sc_classify_json`].
#[no_mangle]
pub unsafe extern "C" fn sc_betti_json(
    p: *const ScPolytope,
    charfunc_json: *const c_char,
    cell_guard: usize,
    out: *mut *mut c_char,
) -> i32 {
    let Some(p) = deref(p) else {
        return SC_ERR_NULL;
    };
    let lambda = match parse_optional_charfunc(charfunc_json) {
        Ok(Some(l)) => l,
        Ok(None) => match charfunc::lambda0(p) {
            Ok(l) => l,
            Err(e) => return fail(SC_ERR_ANALYSIS, e.to_string()),
        },
        Err(code) => return code,
    };
    let complex = match zhomology::build_complex(p, &lambda, guard_or_default(cell_guard)) {
        Ok(c) => c,
        Err(e) => return fail(SC_ERR_ANALYSIS, e.to_string()),
    };
    let betti = zhomology::z2_betti(&complex);
    return_string(
        out,
        serde_json::to_string(&betti).expect("betti serialization cannot fail"),
    )
}

/// Small-cover existence. Returns JSON: either
/// `{"exists": true, "charfunc": {...}}` or
/// `{"exists": false, "reason": "..."}`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_exists_small_cover_json(
    p: *const ScPolytope,
    out: *mut *mut c_char,
) -> i32 {
    let Some(p) = deref(p) else {
        return SC_ERR_NULL;
    };
    match charfunc::exists_small_cover(p) {
        Ok(SmallCoverSearch::Exists(l)) => {
            let payload = serde_json::json!({
                "exists": true,
                "charfunc": format::CharFuncFile::from_charfunc(&l),
            });
            return_string(out, payload.to_string())
        }
        Ok(SmallCoverSearch::NoneExists(reason)) => {
            let payload = serde_json::json!({
                "exists": false,
                "reason": reason.to_string(),
            });
            return_string(out, payload.to_string())
        }
        Err(e) => fail(SC_ERR_ANALYSIS, e.to_string()),
    }
}

/// Validates a characteristic function. Sets `*valid` and, when invalid,
/// `*failing_vertex` (untouched otherwise).
///
/// # Safety
/// As for [`sc_classify_json`]; `valid` and `failing_vertex` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sc_validate_charfunc(
    p: *const ScPolytope,
    charfunc_json: *const c_char,
    valid: *mut bool,
    failing_vertex: *mut usize,
) -> i32 {
    let Some(p) = deref(p) else {
        return SC_ERR_NULL;
    };
    if valid.is_null() || failing_vertex.is_null() {
        return fail(SC_ERR_NULL, "out-parameter is null".into());
    }
    let text = match read_str(charfunc_json) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let lambda = match format::charfunc_from_json(text) {
        Ok(l) => l,
        Err(e) => return fail(SC_ERR_BAD_INPUT, e.to_string()),
    };
    match charfunc::validate_charfunc(p, &lambda) {
        Ok(charfunc::CharFuncValidity::Valid) => {
            *valid = true;
            SC_OK
        }
        Ok(charfunc::CharFuncValidity::InvalidAt { vertex }) => {
            *valid = false;
            *failing_vertex = vertex;
            SC_OK
        }
        Err(e) => fail(SC_ERR_ANALYSIS, e.to_string()),
    }
}

/// Cross-checks the equivalent real-Bott descriptions; sets `*consistent`.
///
/// # Safety
/// `p` must be a live handle and `consistent` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_real_bott_audit(
    p: *const ScPolytope,
    cell_guard: usize,
    consistent: *mut bool,
) -> i32 {
    let Some(p) = deref(p) else {
        return SC_ERR_NULL;
    };
    if consistent.is_null() {
        return fail(SC_ERR_NULL, "out-parameter is null".into());
    }
    *consistent = classify::real_bott_equivalence_audit(p, guard_or_default(cell_guard));
    SC_OK
}

/// Geodesic normal form of a word (JSON list of facet indices in, same out).
///
/// # Safety
/// As for [`sc_classify_json`].
#[no_mangle]
pub unsafe extern "C" fn sc_word_reduce_json(
    p: *const ScPolytope,
    word_json: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    let Some(p) = deref(p) else {
        return SC_ERR_NULL;
    };
    let text = match read_str(word_json) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let word = match format::word_from_json(text) {
        Ok(w) => w,
        Err(e) => return fail(SC_ERR_BAD_INPUT, e.to_string()),
    };
    match coxeter::normal_form(p, &word) {
        Ok(nf) => return_string(
            out,
            serde_json::to_string(&nf).expect("word serialization cannot fail"),
        ),
        Err(e) => fail(SC_ERR_ANALYSIS, e.to_string()),
    }
}

/// Membership of a word in the fundamental group of the moment-angle
/// manifold (`charfunc_json` null) or of the small cover of the given
/// characteristic function. Sets `*member`.
///
/// # Safety
/// As for [`sc_classify_json`]; `member` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_word_member(
    p: *const ScPolytope,
    word_json: *const c_char,
    charfunc_json: *const c_char,
    member: *mut bool,
) -> i32 {
    let Some(p) = deref(p) else {
        return SC_ERR_NULL;
    };
    if member.is_null() {
        return fail(SC_ERR_NULL, "out-parameter is null".into());
    }
    let text = match read_str(word_json) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let word = match format::word_from_json(text) {
        Ok(w) => w,
        Err(e) => return fail(SC_ERR_BAD_INPUT, e.to_string()),
    };
    let lambda = match parse_optional_charfunc(charfunc_json) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let target = match lambda.as_ref() {
        Some(l) => Pi1Target::SmallCover(l),
        None => Pi1Target::MomentAngle,
    };
    match coxeter::pi1_membership(p, &word, target) {
        Ok(answer) => {
            *member = answer;
            SC_OK
        }
        Err(e) => fail(SC_ERR_ANALYSIS, e.to_string()),
    }
}
