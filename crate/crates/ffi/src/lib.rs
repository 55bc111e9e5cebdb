//! C ABI for `interval-powers`.
//!
//! Objects are opaque handles created by `ipw_*_new` or returned through out
//! parameters, and released with the matching `ipw_*_free`. Every fallible
//! function returns an [`IpwStatus`]; on failure a description is available
//! from [`ipw_last_error`] until the next call on the same thread.
//!
//! Vertex ids crossing the boundary are 1-indexed, as in the text formats.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::ptr;

use interval_powers::{self as ip, Error};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IpwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidVertex = 2,
    InvalidEdge = 3,
    InvalidK = 4,
    VertexSetMismatch = 5,
    InvalidInterval = 6,
    CoordinateOverflow = 7,
    NotProper = 8,
    InfeasibleConstraints = 9,
    RepresentationMismatch = 10,
    NonStrictOrder = 11,
    Parse = 12,
    BufferTooSmall = 13,
}

impl From<&Error> for IpwStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidVertex { .. } => IpwStatus::InvalidVertex,
            Error::SelfLoop(_) | Error::DuplicateEdge(..) => IpwStatus::InvalidEdge,
            Error::InvalidK { .. } => IpwStatus::InvalidK,
            Error::VertexSetMismatch { .. } => IpwStatus::VertexSetMismatch,
            Error::InvalidInterval { .. } => IpwStatus::InvalidInterval,
            Error::CoordinateOverflow => IpwStatus::CoordinateOverflow,
            Error::NotProper { .. } => IpwStatus::NotProper,
            Error::InfeasibleConstraints => IpwStatus::InfeasibleConstraints,
            Error::RepresentationMismatch { .. } => IpwStatus::RepresentationMismatch,
            Error::NonStrictOrder(..) => IpwStatus::NonStrictOrder,
            Error::Parse { .. } => IpwStatus::Parse,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(e: Error) -> IpwStatus {
    let status = IpwStatus::from(&e);
    set_error(e.to_string());
    status
}

fn null_pointer(what: &str) -> IpwStatus {
    set_error(format!("{what} is null"));
    IpwStatus::NullPointer
}

/// Description of the last failure on this thread, or NULL. The pointer is
/// owned by the library and valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn ipw_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Opaque simple undirected graph.
pub struct IpwGraph(ip::Graph);

/// Opaque interval representation.
pub struct IpwRepresentation(ip::IntervalRepresentation);

/// Opaque extension trace.
pub struct IpwTrace(ip::ExtensionTrace);

unsafe fn slice<'a, T>(data: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if data.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(data, len))
    }
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Builds a graph on `n` vertices from `m` edges stored as
/// `edges[2*i], edges[2*i+1]` (1-indexed).
#[no_mangle]
pub unsafe extern "C" fn ipw_graph_new(
    n: usize,
    edges: *const u32,
    m: usize,
    out: *mut *mut IpwGraph,
) -> IpwStatus {
    clear_error();
    if out.is_null() {
        return null_pointer("out");
    }
    let Some(flat) = slice(edges, m.saturating_mul(2)) else {
        return null_pointer("edges");
    };
    let mut pairs = Vec::with_capacity(m);
    for pair in flat.chunks_exact(2) {
        let (u, v) = (pair[0] as usize, pair[1] as usize);
        if u == 0 || v == 0 {
            return fail(Error::InvalidVertex { vertex: 0, n });
        }
        pairs.push((u - 1, v - 1));
    }
    match ip::Graph::from_edges(n, pairs) {
        Ok(g) => {
            *out = boxed(IpwGraph(g));
            IpwStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Parses a graph in the `n m` / `u v` text format.
#[no_mangle]
pub unsafe extern "C" fn ipw_graph_parse(
    text: *const c_char,
    out: *mut *mut IpwGraph,
) -> IpwStatus {
    clear_error();
    if text.is_null() || out.is_null() {
        return null_pointer("argument");
    }
    let s = match std::ffi::CStr::from_ptr(text).to_str() {
        Ok(s) => s,
        Err(_) => {
            return fail(Error::Parse {
                line: 0,
                message: "input is not UTF-8".into(),
            })
        }
    };
    match ip::format::parse_graph(s) {
        Ok(g) => {
            *out = boxed(IpwGraph(g));
            IpwStatus::Ok
        }
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn ipw_graph_free(g: *mut IpwGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ipw_graph_vertex_count(g: *const IpwGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

#[no_mangle]
pub unsafe extern "C" fn ipw_graph_edge_count(g: *const IpwGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Whether 1-indexed vertices `u` and `v` are adjacent.
#[no_mangle]
pub unsafe extern "C" fn ipw_graph_has_edge(g: *const IpwGraph, u: u32, v: u32) -> bool {
    match g.as_ref() {
        Some(g) if u >= 1 && v >= 1 => g.0.has_edge(u as usize - 1, v as usize - 1),
        _ => false,
    }
}

/// Copies the edges (ascending, 1-indexed, two entries per edge) into
/// `buf`, which must hold `2 * ipw_graph_edge_count(g)` entries.
#[no_mangle]
pub unsafe extern "C" fn ipw_graph_edges(
    g: *const IpwGraph,
    buf: *mut u32,
    capacity: usize,
) -> IpwStatus {
    clear_error();
    let Some(g) = g.as_ref() else {
        return null_pointer("graph");
    };
    let needed = 2 * g.0.edge_count();
    if capacity < needed {
        set_error(format!("buffer holds {capacity} entries, {needed} needed"));
        return IpwStatus::BufferTooSmall;
    }
    if needed == 0 {
        return IpwStatus::Ok;
    }
    if buf.is_null() {
        return null_pointer("buf");
    }
    let out = std::slice::from_raw_parts_mut(buf, needed);
    for (i, (u, v)) in g.0.edges().enumerate() {
        out[2 * i] = (u + 1) as u32;
        out[2 * i + 1] = (v + 1) as u32;
    }
    IpwStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn ipw_graph_power(
    g: *const IpwGraph,
    k: usize,
    out: *mut *mut IpwGraph,
) -> IpwStatus {
    clear_error();
    let Some(g) = g.as_ref() else {
        return null_pointer("graph");
    };
    if out.is_null() {
        return null_pointer("out");
    }
    match ip::graph_power(&g.0, k) {
        Ok(p) => {
            *out = boxed(IpwGraph(p));
            IpwStatus::Ok
        }
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn ipw_graph_equal(a: *const IpwGraph, b: *const IpwGraph) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// Representation of `n` vertices; vertex `i + 1` gets `[lefts[i], rights[i]]`.
#[no_mangle]
pub unsafe extern "C" fn ipw_rep_new(
    n: usize,
    lefts: *const i64,
    rights: *const i64,
    out: *mut *mut IpwRepresentation,
) -> IpwStatus {
    clear_error();
    if out.is_null() {
        return null_pointer("out");
    }
    let (Some(l), Some(r)) = (slice(lefts, n), slice(rights, n)) else {
        return null_pointer("endpoints");
    };
    let intervals = l
        .iter()
        .zip(r)
        .map(|(&a, &b)| ip::Interval::new(a, b))
        .collect();
    match ip::IntervalRepresentation::new(intervals) {
        Ok(rep) => {
            *out = boxed(IpwRepresentation(rep));
            IpwStatus::Ok
        }
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn ipw_rep_free(r: *mut IpwRepresentation) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ipw_rep_len(r: *const IpwRepresentation) -> usize {
    r.as_ref().map_or(0, |r| r.0.len())
}

/// Endpoints of 1-indexed vertex `v`.
#[no_mangle]
pub unsafe extern "C" fn ipw_rep_get(
    r: *const IpwRepresentation,
    v: u32,
    left: *mut i64,
    right: *mut i64,
) -> IpwStatus {
    clear_error();
    let Some(r) = r.as_ref() else {
        return null_pointer("representation");
    };
    if left.is_null() || right.is_null() {
        return null_pointer("out");
    }
    let n = r.0.len();
    if v == 0 || v as usize > n {
        return fail(Error::InvalidVertex {
            vertex: v as usize,
            n,
        });
    }
    let iv = r.0.interval(v as usize - 1);
    *left = iv.left;
    *right = iv.right;
    IpwStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn ipw_intersection_graph(
    r: *const IpwRepresentation,
    out: *mut *mut IpwGraph,
) -> IpwStatus {
    clear_error();
    let Some(r) = r.as_ref() else {
        return null_pointer("representation");
    };
    if out.is_null() {
        return null_pointer("out");
    }
    *out = boxed(IpwGraph(ip::intersection_graph(&r.0)));
    IpwStatus::Ok
}

/// Whether both representations induce the same left and right orders.
#[no_mangle]
pub unsafe extern "C" fn ipw_rep_same_orders(
    a: *const IpwRepresentation,
    b: *const IpwRepresentation,
    same: *mut bool,
) -> IpwStatus {
    clear_error();
    let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
        return null_pointer("representation");
    };
    if same.is_null() {
        return null_pointer("out");
    }
    let (oa, ob) = (ip::endpoint_orders(&a.0), ip::endpoint_orders(&b.0));
    let result = ip::same_orders(&oa.left, &ob.left)
        .and_then(|l| Ok(l && ip::same_orders(&oa.right, &ob.right)?));
    match result {
        Ok(s) => {
            *same = s;
            IpwStatus::Ok
        }
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn ipw_rep_is_proper(r: *const IpwRepresentation) -> bool {
    r.as_ref().is_some_and(|r| ip::is_proper(&r.0))
}

#[no_mangle]
pub unsafe extern "C" fn ipw_rep_normalize(
    r: *const IpwRepresentation,
    out: *mut *mut IpwRepresentation,
) -> IpwStatus {
    clear_error();
    let Some(r) = r.as_ref() else {
        return null_pointer("representation");
    };
    if out.is_null() {
        return null_pointer("out");
    }
    match ip::normalize(&r.0) {
        Ok(n) => {
            *out = boxed(IpwRepresentation(n));
            IpwStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Unit representation (all lengths `n^2`) with the same graph and orders.
#[no_mangle]
pub unsafe extern "C" fn ipw_rep_to_unit(
    r: *const IpwRepresentation,
    out: *mut *mut IpwRepresentation,
) -> IpwStatus {
    clear_error();
    let Some(r) = r.as_ref() else {
        return null_pointer("representation");
    };
    if out.is_null() {
        return null_pointer("out");
    }
    match ip::proper_to_unit(&r.0) {
        Ok(u) => {
            *out = boxed(IpwRepresentation(u));
            IpwStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Extends `r`, a representation of `G^(k-1)`, to one of `G^k`. `out_trace`
/// may be NULL when the trace is not wanted.
#[no_mangle]
pub unsafe extern "C" fn ipw_extend(
    g: *const IpwGraph,
    k: usize,
    r: *const IpwRepresentation,
    out_rep: *mut *mut IpwRepresentation,
    out_trace: *mut *mut IpwTrace,
) -> IpwStatus {
    clear_error();
    let (Some(g), Some(r)) = (g.as_ref(), r.as_ref()) else {
        return null_pointer("argument");
    };
    if out_rep.is_null() {
        return null_pointer("out_rep");
    }
    match ip::extend_representation(&g.0, k, &r.0) {
        Ok(ext) => {
            *out_rep = boxed(IpwRepresentation(ext.representation));
            if !out_trace.is_null() {
                *out_trace = boxed(IpwTrace(ext.trace));
            }
            IpwStatus::Ok
        }
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn ipw_trace_free(t: *mut IpwTrace) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

#[no_mangle]
pub unsafe extern "C" fn ipw_trace_scale(t: *const IpwTrace) -> i64 {
    t.as_ref().map_or(0, |t| t.0.scale)
}

/// Witness (1-indexed, 0 when absent) and new right endpoint of vertex `x`.
#[no_mangle]
pub unsafe extern "C" fn ipw_trace_entry(
    t: *const IpwTrace,
    x: u32,
    witness: *mut u32,
    new_right: *mut i64,
) -> IpwStatus {
    clear_error();
    let Some(t) = t.as_ref() else {
        return null_pointer("trace");
    };
    if witness.is_null() || new_right.is_null() {
        return null_pointer("out");
    }
    let n = t.0.entries.len();
    if x == 0 || x as usize > n {
        return fail(Error::InvalidVertex {
            vertex: x as usize,
            n,
        });
    }
    let e = t.0.entries[x as usize - 1];
    *witness = e.witness.map_or(0, |u| (u + 1) as u32);
    *new_right = e.new_right;
    IpwStatus::Ok
}

/// Exhaustive search for trapezoid representations of `target` with the
/// four orders of the built-in `P5` representation.
#[no_mangle]
pub unsafe extern "C" fn ipw_p5_order_search(
    target: *const IpwGraph,
    matches: *mut u64,
    candidates: *mut u64,
) -> IpwStatus {
    clear_error();
    let Some(target) = target.as_ref() else {
        return null_pointer("target");
    };
    if matches.is_null() || candidates.is_null() {
        return null_pointer("out");
    }
    let orders = ip::p5_representation().orders();
    match ip::search_representation(&orders, &target.0) {
        Ok(outcome) => {
            *matches = outcome.matches;
            *candidates = outcome.candidates;
            IpwStatus::Ok
        }
        Err(e) => fail(e),
    }
}
