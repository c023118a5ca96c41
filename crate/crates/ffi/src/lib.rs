//! C interface to the zfw solvers.
//!
//! Graphs live behind an opaque `ZfwGraph` handle. Vertex sets cross the
//! boundary as `uint64_t` bit masks (bit `v` set means vertex `v` is in the
//! set). Every function returns a `ZfwStatus`; on failure a message is
//! available from `zfw_last_error_message` on the same thread. Strings
//! returned through `char **` must be released with `zfw_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use zfw::harness::{verify_graph, RunConfig};
use zfw::{Budget, Error, Graph, VertexSet};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZfwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidGraph6 = 2,
    InvalidArgument = 3,
    Precondition = 4,
    BudgetExceeded = 5,
    NotForcingSet = 6,
    SearchFailed = 7,
    Panic = 8,
}

/// Opaque graph handle.
pub struct ZfwGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> ZfwStatus {
    match e {
        Error::Graph6(_) => ZfwStatus::InvalidGraph6,
        Error::TooManyVertices { .. } | Error::VertexOutOfRange { .. } | Error::SelfLoop(_) => {
            ZfwStatus::InvalidArgument
        }
        Error::BudgetExceeded { .. } => ZfwStatus::BudgetExceeded,
        Error::NotForcingSet { .. } => ZfwStatus::NotForcingSet,
        Error::SearchFailed(_) | Error::Io(_) => ZfwStatus::SearchFailed,
        _ => ZfwStatus::Precondition,
    }
}

/// Runs `f`, turning errors and panics into a status plus a stored message.
fn guard(f: impl FnOnce() -> Result<(), (ZfwStatus, String)>) -> ZfwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ZfwStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            ZfwStatus::Panic
        }
    }
}

fn lib(e: Error) -> (ZfwStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (ZfwStatus, String) {
    (ZfwStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const ZfwGraph) -> Result<&'a Graph, (ZfwStatus, String)> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), (ZfwStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn mask(g: &Graph, bits: u64) -> Result<VertexSet, (ZfwStatus, String)> {
    let s = VertexSet::from_bits(bits);
    if !s.is_subset(g.vertices()) {
        return Err((ZfwStatus::InvalidArgument, format!("mask {bits:#x} has bits beyond vertex {}", g.n())));
    }
    Ok(s)
}

/// Non-positive or non-finite values mean no limit.
fn budget(secs: f64) -> Budget {
    if secs.is_finite() && secs > 0.0 {
        Budget::new(Duration::from_secs_f64(secs))
    } else {
        Budget::unlimited()
    }
}

fn boxed(graph: Graph) -> *mut ZfwGraph {
    Box::into_raw(Box::new(ZfwGraph { graph }))
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn zfw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zfw_graph_from_graph6(text: *const c_char, out: *mut *mut ZfwGraph) -> ZfwStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let bytes = CStr::from_ptr(text).to_bytes();
        let g = zfw::graph6::parse_graph6(bytes).map_err(|e| lib(e.into()))?;
        write(out, boxed(g), "out")
    })
}

/// Builds a graph from `m` edges given as `2 * m` vertex indices.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (may be NULL when `m` is 0).
#[no_mangle]
pub unsafe extern "C" fn zfw_graph_from_edges(
    n: usize,
    edges: *const u32,
    m: usize,
    out: *mut *mut ZfwGraph,
) -> ZfwStatus {
    guard(|| {
        let flat: &[u32] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        let g = Graph::from_edges(n, pairs).map_err(lib)?;
        write(out, boxed(g), "out")
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zfw_graph_free(g: *mut ZfwGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zfw_graph_order(g: *const ZfwGraph, out: *mut usize) -> ZfwStatus {
    guard(|| write(out, graph_ref(g)?.n(), "out"))
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer. Free the result with `zfw_string_free`.
#[no_mangle]
pub unsafe extern "C" fn zfw_graph_to_graph6(g: *const ZfwGraph, out: *mut *mut c_char) -> ZfwStatus {
    guard(|| {
        let text = zfw::graph6::write_graph6(graph_ref(g)?).map_err(|e| lib(e.into()))?;
        write(out, CString::new(text).expect("graph6 is ASCII").into_raw(), "out")
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zfw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact zero forcing number and a minimum zero forcing set.
///
/// # Safety
/// `g` must be a live handle; `z` and `witness` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn zfw_zero_forcing_number(
    g: *const ZfwGraph,
    budget_secs: f64,
    z: *mut usize,
    witness: *mut u64,
) -> ZfwStatus {
    guard(|| {
        let r = zfw::forcing::zero_forcing_number_with_budget(graph_ref(g)?, &budget(budget_secs)).map_err(lib)?;
        write(z, r.z, "z")?;
        write(witness, r.witness.bits(), "witness")
    })
}

/// Exact independence number and a maximum independent set.
///
/// # Safety
/// `g` must be a live handle; `alpha` and `witness` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn zfw_independence_number(
    g: *const ZfwGraph,
    budget_secs: f64,
    alpha: *mut usize,
    witness: *mut u64,
) -> ZfwStatus {
    guard(|| {
        let r = zfw::independence::maximum_independent_set_with_budget(graph_ref(g)?, &budget(budget_secs))
            .map_err(lib)?;
        write(alpha, r.alpha, "alpha")?;
        write(witness, r.witness.bits(), "witness")
    })
}

/// Minimum decycling set size and a witness.
///
/// # Safety
/// `g` must be a live handle; `phi` and `witness` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn zfw_decycling_number(
    g: *const ZfwGraph,
    budget_secs: f64,
    phi: *mut usize,
    witness: *mut u64,
) -> ZfwStatus {
    guard(|| {
        let (k, s) = zfw::bounds::decycling_number_with_budget(graph_ref(g)?, &budget(budget_secs)).map_err(lib)?;
        write(phi, k, "phi")?;
        write(witness, s.bits(), "witness")
    })
}

/// Blue set reached from `blue` under the color change rule.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zfw_closure(g: *const ZfwGraph, blue: u64, out: *mut u64) -> ZfwStatus {
    guard(|| {
        let g = graph_ref(g)?;
        write(out, zfw::forcing::closure(g, mask(g, blue)?).blue.bits(), "out")
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zfw_is_zero_forcing_set(g: *const ZfwGraph, blue: u64, out: *mut bool) -> ZfwStatus {
    guard(|| {
        let g = graph_ref(g)?;
        write(out, zfw::forcing::is_zero_forcing_set(g, mask(g, blue)?), "out")
    })
}

/// Full certificate for a connected graph as one JSON object.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer. Free the result with `zfw_string_free`.
#[no_mangle]
pub unsafe extern "C" fn zfw_verify_graph_json(
    g: *const ZfwGraph,
    budget_secs: f64,
    out: *mut *mut c_char,
) -> ZfwStatus {
    guard(|| {
        let mut cfg = RunConfig::default();
        if budget_secs.is_finite() && budget_secs > 0.0 {
            cfg.budget = Duration::from_secs_f64(budget_secs);
        }
        let cert = verify_graph(graph_ref(g)?, &cfg).map_err(lib)?;
        let text = serde_json::to_string(&cert).expect("certificates serialize");
        write(out, CString::new(text).expect("JSON has no NUL").into_raw(), "out")
    })
}
