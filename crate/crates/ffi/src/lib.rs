//! C ABI over `strongcover`.
//!
//! Objects are opaque handles created by `sc_*` constructors and released
//! with the matching `sc_*_free`. Every fallible call returns an
//! [`ScStatus`]; on failure `sc_last_error()` describes the problem until
//! the next failing call on the same thread. Strings returned through
//! `char **` out-parameters are owned by the caller and released with
//! `sc_string_free`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use strongcover::cli::parse_instance;
use strongcover::constructions::{
    blow_up, construct_k4_two_paths, construct_k5star, construct_k8_c4free_3col,
    construct_onefourth, BlowupSpec,
};
use strongcover::covers::{
    exact_max_strong_cover, greedy_strong_cover, strong_cover_33, strong_cover_c4free_22,
    strong_cover_tt, theta, ExactLimits,
};
use strongcover::{coloring_from_intervals, is_tk_coloring, Error, MultiColoring, StrongCover};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    /// Null pointer, bad UTF-8, or an argument out of range.
    InvalidArgument = 1,
    /// Malformed JSON or instance.
    Parse = 2,
    /// The instance does not meet the algorithm's precondition.
    Precondition = 3,
    /// A color graph that must be chordal has an induced hole.
    NotChordal = 4,
    /// A step guaranteed to succeed failed; the message holds the instance.
    TheoremViolation = 5,
    /// The instance exceeds an exact-search limit.
    SizeLimit = 6,
    /// A random generator exhausted its retry budget.
    RetriesExhausted = 7,
    /// A panic was caught at the boundary.
    Internal = 8,
}

/// Opaque multicolored complete graph.
pub struct ScColoring(MultiColoring);

/// Opaque strong cover: cliques with pairwise distinct colors.
pub struct ScCover(StrongCover);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> ScStatus {
    match e {
        Error::InvalidInput(_) | Error::VertexOutOfRange { .. } | Error::ColorOutOfRange { .. } => {
            ScStatus::InvalidArgument
        }
        Error::NotChordal { .. } | Error::NotChordalGraph { .. } => ScStatus::NotChordal,
        Error::Precondition { .. } => ScStatus::Precondition,
        Error::TheoremViolation { .. } => ScStatus::TheoremViolation,
        Error::SizeLimit { .. } => ScStatus::SizeLimit,
        Error::RetriesExhausted { .. } => ScStatus::RetriesExhausted,
        Error::Json(_) => ScStatus::Parse,
    }
}

fn message_of(e: &Error) -> String {
    match e {
        Error::TheoremViolation { instance, .. } => format!("{e}; instance: {instance}"),
        _ => e.to_string(),
    }
}

struct Fail(ScStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), message_of(&e))
    }
}

fn invalid(msg: &str) -> Fail {
    Fail(ScStatus::InvalidArgument, msg.to_string())
}

/// Runs `f` behind the panic boundary and converts its outcome.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ScStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(&format!("internal error: {msg}"));
            ScStatus::Internal
        }
    }
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(invalid("null out pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(invalid("null out pointer"));
    }
    *out = CString::new(s)
        .map_err(|_| invalid("string contains NUL"))?
        .into_raw();
    Ok(())
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| invalid("null handle"))
}

unsafe fn slice<'a>(p: *const usize, len: usize) -> Result<&'a [usize], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(invalid("null array"));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

/// Message of the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn sc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Edgeless coloring of `K_n` with `t` colors.
#[no_mangle]
pub unsafe extern "C" fn sc_coloring_new(
    n: usize,
    t: usize,
    out: *mut *mut ScColoring,
) -> ScStatus {
    guard(|| put(out, ScColoring(MultiColoring::new(n, t)?)))
}

/// Parses a coloring, interval family or subtree family from JSON; the
/// latter two are converted to their colorings.
#[no_mangle]
pub unsafe extern "C" fn sc_coloring_from_json(
    json: *const c_char,
    out: *mut *mut ScColoring,
) -> ScStatus {
    guard(|| {
        if json.is_null() {
            return Err(invalid("null string"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| invalid("string is not UTF-8"))?;
        let (inst, _) = parse_instance(text).map_err(|e| match e {
            Error::InvalidInput(m) => Fail(ScStatus::Parse, m),
            other => other.into(),
        })?;
        put(out, ScColoring(inst.coloring()?))
    })
}

#[no_mangle]
pub unsafe extern "C" fn sc_coloring_to_json(
    col: *const ScColoring,
    out: *mut *mut c_char,
) -> ScStatus {
    guard(|| {
        let text = serde_json::to_string(&get(col)?.0).map_err(Error::from)?;
        put_string(out, text)
    })
}

/// Adds color `c` (1-based) to the edge `uv` (0-based vertices).
#[no_mangle]
pub unsafe extern "C" fn sc_coloring_add_color(
    col: *mut ScColoring,
    u: usize,
    v: usize,
    c: usize,
) -> ScStatus {
    guard(|| {
        let col = col.as_mut().ok_or_else(|| invalid("null handle"))?;
        col.0.add_color(u, v, c)?;
        Ok(())
    })
}

/// Number of vertices; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn sc_coloring_n(col: *const ScColoring) -> usize {
    col.as_ref().map_or(0, |c| c.0.n())
}

/// Number of colors; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn sc_coloring_t(col: *const ScColoring) -> usize {
    col.as_ref().map_or(0, |c| c.0.t())
}

#[no_mangle]
pub unsafe extern "C" fn sc_coloring_free(col: *mut ScColoring) {
    if !col.is_null() {
        drop(Box::from_raw(col));
    }
}

#[no_mangle]
pub unsafe extern "C" fn sc_construct_k5star(out: *mut *mut ScColoring) -> ScStatus {
    guard(|| put(out, ScColoring(construct_k5star())))
}

#[no_mangle]
pub unsafe extern "C" fn sc_construct_k4_two_paths(out: *mut *mut ScColoring) -> ScStatus {
    guard(|| put(out, ScColoring(construct_k4_two_paths())))
}

#[no_mangle]
pub unsafe extern "C" fn sc_construct_k8_c4free(out: *mut *mut ScColoring) -> ScStatus {
    guard(|| put(out, ScColoring(construct_k8_c4free_3col())))
}

/// Coloring of the pairwise intersecting t-interval family on `4t - 5`
/// members with no strong cover beyond `3(t - 1)` vertices.
#[no_mangle]
pub unsafe extern "C" fn sc_construct_onefourth(t: usize, out: *mut *mut ScColoring) -> ScStatus {
    guard(|| {
        put(
            out,
            ScColoring(coloring_from_intervals(&construct_onefourth(t)?)?),
        )
    })
}

/// Replaces vertex `i` by an all-colors clique of `sizes[i]` vertices.
#[no_mangle]
pub unsafe extern "C" fn sc_blow_up(
    col: *const ScColoring,
    sizes: *const usize,
    len: usize,
    out: *mut *mut ScColoring,
) -> ScStatus {
    guard(|| {
        let spec = BlowupSpec {
            base: get(col)?.0.clone(),
            sizes: slice(sizes, len)?.to_vec(),
        };
        put(out, ScColoring(blow_up(&spec)?))
    })
}

/// Whether every `k` vertices span a monochromatic clique.
#[no_mangle]
pub unsafe extern "C" fn sc_is_tk(col: *const ScColoring, k: usize, out: *mut bool) -> ScStatus {
    guard(|| {
        let ok = is_tk_coloring(&get(col)?.0, k)?;
        out.as_mut()
            .map(|o| *o = ok)
            .ok_or_else(|| invalid("null out pointer"))
    })
}

/// Greedy cover taking a maximum clique of each color in `order` (a
/// permutation of `1..=t`). Every color graph must be chordal.
#[no_mangle]
pub unsafe extern "C" fn sc_greedy_cover(
    col: *const ScColoring,
    order: *const usize,
    len: usize,
    out: *mut *mut ScCover,
) -> ScStatus {
    guard(|| {
        let (cov, _) = greedy_strong_cover(&get(col)?.0, slice(order, len)?)?;
        put(out, ScCover(cov))
    })
}

/// Strong cover of maximum size by exhaustive search; `max_n` caps the
/// instance size.
#[no_mangle]
pub unsafe extern "C" fn sc_exact_max_cover(
    col: *const ScColoring,
    max_n: usize,
    out: *mut *mut ScCover,
) -> ScStatus {
    guard(|| {
        put(
            out,
            ScCover(exact_max_strong_cover(
                &get(col)?.0,
                &ExactLimits::with_max_n(max_n),
            )?),
        )
    })
}

/// Fewest cliques in a strong cover of all vertices, or -1 when there is
/// none. `cover_out` may be null; it is set to null when there is no cover.
#[no_mangle]
pub unsafe extern "C" fn sc_theta(
    col: *const ScColoring,
    max_n: usize,
    theta_out: *mut isize,
    cover_out: *mut *mut ScCover,
) -> ScStatus {
    guard(|| {
        let res = theta(&get(col)?.0, &ExactLimits::with_max_n(max_n))?;
        let th = theta_out
            .as_mut()
            .ok_or_else(|| invalid("null out pointer"))?;
        *th = res.as_ref().map_or(-1, |(v, _)| *v as isize);
        if !cover_out.is_null() {
            match res {
                Some((_, cov)) => put(cover_out, ScCover(cov))?,
                None => *cover_out = ptr::null_mut(),
            }
        }
        Ok(())
    })
}

/// All-vertex cover of a chordal (3,3)-coloring by at most three cliques.
#[no_mangle]
pub unsafe extern "C" fn sc_strong_cover_33(
    col: *const ScColoring,
    out: *mut *mut ScCover,
) -> ScStatus {
    guard(|| put(out, ScCover(strong_cover_33(&get(col)?.0)?)))
}

/// All-vertex cover of a chordal (t,t)-coloring by two cliques for even t
/// and three for odd t.
#[no_mangle]
pub unsafe extern "C" fn sc_strong_cover_tt(
    col: *const ScColoring,
    out: *mut *mut ScCover,
) -> ScStatus {
    guard(|| put(out, ScCover(strong_cover_tt(&get(col)?.0)?)))
}

/// Cover of at least `4n/5` vertices of a 2-coloring with both classes
/// induced-C4-free and every edge colored.
#[no_mangle]
pub unsafe extern "C" fn sc_strong_cover_c4free22(
    col: *const ScColoring,
    out: *mut *mut ScCover,
) -> ScStatus {
    guard(|| put(out, ScCover(strong_cover_c4free_22(&get(col)?.0)?)))
}

/// Number of covered vertices; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn sc_cover_covered(cov: *const ScCover) -> usize {
    cov.as_ref().map_or(0, |c| c.0.covered_count())
}

/// Number of cliques; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn sc_cover_cliques(cov: *const ScCover) -> usize {
    cov.as_ref().map_or(0, |c| c.0.clique_count())
}

/// JSON `{"assignments": [[color, [vertices]], ...]}`.
#[no_mangle]
pub unsafe extern "C" fn sc_cover_to_json(cov: *const ScCover, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let text = serde_json::to_string(&get(cov)?.0).map_err(Error::from)?;
        put_string(out, text)
    })
}

#[no_mangle]
pub unsafe extern "C" fn sc_cover_free(cov: *mut ScCover) {
    if !cov.is_null() {
        drop(Box::from_raw(cov));
    }
}
