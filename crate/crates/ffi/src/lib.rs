//! C ABI over `degdist`.
//!
//! Graphs and phenylenes are opaque handles created by `dd_*_new` functions
//! and released with the matching `dd_*_free`. Every fallible call returns a
//! `DdStatus` and writes its result through an out-pointer; on failure the
//! message is available from `dd_last_error` on the calling thread.
//! Index values are exact 128-bit integers internally and are reported as
//! `int64_t`, with `DD_STATUS_OVERFLOW` when they do not fit.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use degdist::cut::degree_distance_via_cuts;
use degdist::families::{gen_house, gen_phenylene_chain, parse_kinks};
use degdist::hamming::{gutman_lower_bound, is_partial_hamming};
use degdist::phenylene::{build_phenylene, BenzenoidPlacement, Cell, Phenylene};
use degdist::{
    degree_distance, gutman, is_partial_cube, theta_star_classes, wiener, wiener_double,
    DoubleWeightedGraph, EdgePartition, ErrorKind, Graph,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DdStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Malformed input: bad edge list, weights, placement or kink pattern.
    InvalidInput = 2,
    /// The method does not apply to this input.
    Inapplicable = 3,
    /// The exact value does not fit in `int64_t`.
    Overflow = 4,
    /// An output buffer is too small.
    BufferTooSmall = 5,
    /// Internal failure; the message has details.
    Internal = 6,
}

/// Opaque connected simple graph.
pub struct DdGraph(Graph);

/// Opaque phenylene built from a hexagon placement.
pub struct DdPhenylene(Phenylene);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(DdStatus, String);

impl From<degdist::Error> for Failure {
    fn from(e: degdist::Error) -> Self {
        let status = match e.kind() {
            ErrorKind::Input => DdStatus::InvalidInput,
            ErrorKind::Inapplicable => DdStatus::Inapplicable,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(DdStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, recording any failure or panic as the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> DdStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => DdStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            DdStatus::Internal
        }
    }
}

unsafe fn graph_ref<'a>(g: *const DdGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn phenylene_ref<'a>(p: *const DdPhenylene) -> Result<&'a Phenylene, Failure> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| null("phenylene"))
}

unsafe fn slice<'a, T>(data: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_i64(out: *mut i64, value: i128) -> Result<(), Failure> {
    let value = i64::try_from(value).map_err(|_| {
        Failure(
            DdStatus::Overflow,
            format!("{value} does not fit in int64_t"),
        )
    })?;
    write(out, value)
}

/// Message of the last failed call on this thread, or null if none. Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn dd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries). The graph must be simple and
/// connected.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut DdGraph,
) -> DdStatus {
    guard(|| {
        let flat = slice(edges, 2 * edge_count, "edges")?;
        let g = Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        write(out, Box::into_raw(Box::new(DdGraph(g))))
    })
}

/// The house graph of the given order, one of the bundled families.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_house(n: usize, out: *mut *mut DdGraph) -> DdStatus {
    guard(|| {
        let g = gen_house(n)?;
        write(out, Box::into_raw(Box::new(DdGraph(g))))
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_free(g: *mut DdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for null.
///
/// # Safety
/// `g` must be null or a live graph.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_vertex_count(g: *const DdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Edge count, or 0 for null.
///
/// # Safety
/// `g` must be null or a live graph.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_edge_count(g: *const DdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Wiener index.
///
/// # Safety
/// `g` must be a live graph and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_wiener(g: *const DdGraph, out: *mut i64) -> DdStatus {
    guard(|| write_i64(out, wiener(graph_ref(g)?)))
}

/// Degree distance.
///
/// # Safety
/// `g` must be a live graph and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_degree_distance(g: *const DdGraph, out: *mut i64) -> DdStatus {
    guard(|| write_i64(out, degree_distance(graph_ref(g)?)))
}

/// Gutman index.
///
/// # Safety
/// `g` must be a live graph and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_gutman(g: *const DdGraph, out: *mut i64) -> DdStatus {
    guard(|| write_i64(out, gutman(graph_ref(g)?)))
}

/// Double-weighted Wiener index with positive integer weights `a` and `b`,
/// one per vertex.
///
/// # Safety
/// `a` and `b` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dd_wiener_double(
    g: *const DdGraph,
    a: *const i64,
    b: *const i64,
    len: usize,
    out: *mut i64,
) -> DdStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let a: Vec<i128> = slice(a, len, "a")?.iter().map(|&x| i128::from(x)).collect();
        let b: Vec<i128> = slice(b, len, "b")?.iter().map(|&x| i128::from(x)).collect();
        let dwg = DoubleWeightedGraph::new(g.clone(), a, b)?;
        write_i64(out, wiener_double(&dwg))
    })
}

/// Degree distance through the quotients by the Θ*-classes.
///
/// # Safety
/// `g` must be a live graph and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_degree_distance_via_cuts(g: *const DdGraph, out: *mut i64) -> DdStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let partition = EdgePartition::finest(&theta_star_classes(g));
        write_i64(out, degree_distance_via_cuts(g, &partition)?)
    })
}

/// Number of Θ*-classes. When `class_of` is non-null it receives the class
/// of every edge, in edge order; `capacity` must be at least the edge count.
///
/// # Safety
/// `count` must be writable; `class_of`, if non-null, must have room for
/// `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn dd_theta_classes(
    g: *const DdGraph,
    count: *mut usize,
    class_of: *mut usize,
    capacity: usize,
) -> DdStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let classes = theta_star_classes(g);
        write(count, classes.len())?;
        if class_of.is_null() {
            return Ok(());
        }
        let m = g.edge_count();
        if capacity < m {
            return Err(Failure(
                DdStatus::BufferTooSmall,
                format!("need room for {m} edge classes, got {capacity}"),
            ));
        }
        let out = std::slice::from_raw_parts_mut(class_of, m);
        for (e, slot) in out.iter_mut().enumerate() {
            *slot = classes.class_of(e);
        }
        Ok(())
    })
}

/// Whether the graph is a partial cube.
///
/// # Safety
/// `g` must be a live graph and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_is_partial_cube(g: *const DdGraph, out: *mut bool) -> DdStatus {
    guard(|| write(out, is_partial_cube(graph_ref(g)?)))
}

/// Whether the graph is a partial Hamming graph.
///
/// # Safety
/// `g` must be a live graph and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_is_partial_hamming(g: *const DdGraph, out: *mut bool) -> DdStatus {
    guard(|| write(out, is_partial_hamming(graph_ref(g)?)))
}

/// Lower bound on the Gutman index, exact on partial Hamming graphs.
///
/// # Safety
/// `g` must be a live graph and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_gutman_lower_bound(g: *const DdGraph, out: *mut i64) -> DdStatus {
    guard(|| write_i64(out, gutman_lower_bound(graph_ref(g)?)))
}

/// Phenylene from `len` hexagon cells in axial coordinates `(q[i], r[i])`.
///
/// # Safety
/// `q` and `r` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dd_phenylene_from_cells(
    q: *const i32,
    r: *const i32,
    len: usize,
    out: *mut *mut DdPhenylene,
) -> DdStatus {
    guard(|| {
        let q = slice(q, len, "q")?;
        let r = slice(r, len, "r")?;
        let cells = q.iter().zip(r).map(|(&q, &r)| Cell::new(q, r)).collect();
        let ph = build_phenylene(&BenzenoidPlacement::new(cells)?)?;
        write(out, Box::into_raw(Box::new(DdPhenylene(ph))))
    })
}

/// Phenylene chain of `h` hexagons. `kinks` is a nul-terminated pattern of
/// `h - 2` attachments: `L` linear, `+` and `-` angular.
///
/// # Safety
/// `kinks` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_phenylene_chain(
    h: usize,
    kinks: *const c_char,
    out: *mut *mut DdPhenylene,
) -> DdStatus {
    guard(|| {
        if kinks.is_null() {
            return Err(null("kinks"));
        }
        let pattern = CStr::from_ptr(kinks)
            .to_str()
            .map_err(|_| Failure(DdStatus::InvalidInput, "kink pattern is not UTF-8".into()))?;
        let placement = gen_phenylene_chain(h, &parse_kinks(pattern)?)?;
        let ph = build_phenylene(&placement)?;
        write(out, Box::into_raw(Box::new(DdPhenylene(ph))))
    })
}

/// Releases a phenylene. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dd_phenylene_free(p: *mut DdPhenylene) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// A copy of the phenylene's graph, to be released with `dd_graph_free`.
///
/// # Safety
/// `p` must be a live phenylene and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dd_phenylene_graph(
    p: *const DdPhenylene,
    out: *mut *mut DdGraph,
) -> DdStatus {
    guard(|| {
        let g = phenylene_ref(p)?.graph().clone();
        write(out, Box::into_raw(Box::new(DdGraph(g))))
    })
}

/// Degree distance and Gutman index of a phenylene in linear time.
///
/// # Safety
/// `p` must be a live phenylene; `dd` and `gut` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dd_phenylene_indices(
    p: *const DdPhenylene,
    dd: *mut i64,
    gut: *mut i64,
) -> DdStatus {
    guard(|| {
        let (x, y) = degdist::phenylene::dd_gut_via_trees(phenylene_ref(p)?);
        write_i64(dd, x)?;
        write_i64(gut, y)
    })
}
