//! Catacondensed benzenoid systems on the hexagonal lattice, the phenylenes
//! obtained from them by inserting a square between adjacent hexagons, and
//! the two structural routes to `DD` and `Gut` of a phenylene: the hexagonal
//! squeeze with its inner dual, and the four weighted quotient trees.
//!
//! Cells use axial coordinates `(q, r)` of a pointy-top lattice. A cell's
//! corners live on the integer grid `X = 2q + r + dx`, `Y = 3r + dy`, so
//! corners shared by neighbouring cells coincide exactly.

use std::collections::HashMap;
use std::fmt;

use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{degrees_as, Oracle};
use crate::theta::{quotient_masked, QuotientGraph};
use crate::tree::{tree_wiener_double_linear, tree_wiener_weighted_linear, TreeSums};

/// Corner `k` of a cell, relative to the cell's grid origin.
const CORNERS: [(i64, i64); 6] = [(0, -2), (1, -1), (1, 1), (0, 2), (-1, 1), (-1, -1)];

/// The neighbouring cell across side `k` (the edge from corner `k` to
/// corner `k + 1`). Opposite sides are `k` and `k + 3`.
pub const SIDE_OFFSETS: [(i32, i32); 6] = [(1, -1), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1)];

/// A hexagon of the lattice in axial coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub q: i32,
    pub r: i32,
}

impl Cell {
    pub const fn new(q: i32, r: i32) -> Self {
        Cell { q, r }
    }

    pub fn neighbor(self, side: usize) -> Cell {
        let (dq, dr) = SIDE_OFFSETS[side % 6];
        Cell::new(self.q + dq, self.r + dr)
    }

    fn corner(self, k: usize) -> (i64, i64) {
        let (dx, dy) = CORNERS[k];
        (
            2 * self.q as i64 + self.r as i64 + dx,
            3 * self.r as i64 + dy,
        )
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.q, self.r)
    }
}

/// An ordered set of lattice cells; hexagon `i` is `cells()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenzenoidPlacement {
    cells: Vec<Cell>,
}

impl BenzenoidPlacement {
    /// Rejects empty and repeated cells. Catacondensation is checked when the
    /// benzenoid is built.
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidPlacement("no cells".into()));
        }
        let mut seen = HashMap::with_capacity(cells.len());
        for (i, &c) in cells.iter().enumerate() {
            if let Some(j) = seen.insert(c, i) {
                return Err(Error::InvalidPlacement(format!(
                    "cell ({c}) listed twice (hexagons {j} and {i})"
                )));
            }
        }
        Ok(Self { cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Placement file text: one `q r` line per cell.
    pub fn to_text(&self) -> String {
        self.cells.iter().map(|c| format!("{c}\n")).collect()
    }
}

/// A catacondensed benzenoid system and its inner dual.
#[derive(Clone, Debug)]
pub struct Benzenoid {
    graph: Graph,
    inner_dual: Graph,
    hexagon_vertices: Vec<[usize; 6]>,
    edge_direction: Vec<u8>,
    // per inner-dual edge: the side of the lower-indexed hexagon
    dual_sides: Vec<usize>,
}

impl Benzenoid {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn inner_dual(&self) -> &Graph {
        &self.inner_dual
    }

    /// Lattice vertices of hexagon `i`, by corner.
    pub fn hexagon(&self, i: usize) -> [usize; 6] {
        self.hexagon_vertices[i]
    }

    /// Direction class `0..3` of each benzenoid edge.
    pub fn edge_direction(&self, e: usize) -> u8 {
        self.edge_direction[e]
    }
}

/// Builds the benzenoid graph on lattice vertices together with its inner
/// dual. Fails if a lattice vertex lies in three cells, or if the inner dual
/// is disconnected or has a cycle.
pub fn build_benzenoid(placement: &BenzenoidPlacement) -> Result<Benzenoid> {
    let cells = placement.cells();
    let h = cells.len();
    let mut vertex_of: HashMap<(i64, i64), usize> = HashMap::with_capacity(4 * h + 2);
    let mut multiplicity: Vec<u8> = Vec::with_capacity(4 * h + 2);
    let mut hexagon_vertices = Vec::with_capacity(h);
    for (i, &cell) in cells.iter().enumerate() {
        let mut corners = [0; 6];
        for (k, slot) in corners.iter_mut().enumerate() {
            let next = vertex_of.len();
            let v = *vertex_of.entry(cell.corner(k)).or_insert(next);
            if v == next {
                multiplicity.push(0);
            }
            multiplicity[v] += 1;
            if multiplicity[v] == 3 {
                return Err(Error::InvalidPlacement(format!(
                    "hexagon {i} at ({cell}) creates an internal vertex"
                )));
            }
            *slot = v;
        }
        hexagon_vertices.push(corners);
    }

    let mut edge_of: HashMap<(usize, usize), usize> = HashMap::with_capacity(5 * h + 1);
    let mut edges = Vec::with_capacity(5 * h + 1);
    let mut edge_direction = Vec::with_capacity(5 * h + 1);
    for corners in &hexagon_vertices {
        for k in 0..6 {
            let (u, v) = (corners[k], corners[(k + 1) % 6]);
            let key = (u.min(v), u.max(v));
            if let std::collections::hash_map::Entry::Vacant(slot) = edge_of.entry(key) {
                slot.insert(edges.len());
                edges.push(key);
                edge_direction.push((k % 3) as u8);
            }
        }
    }
    let graph = Graph::new(vertex_of.len(), edges).map_err(|e| match e {
        Error::Disconnected { .. } => Error::InvalidPlacement("hexagons are not connected".into()),
        other => other,
    })?;

    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dual_edges = Vec::with_capacity(h.saturating_sub(1));
    let mut dual_sides = Vec::with_capacity(h.saturating_sub(1));
    for (i, &cell) in cells.iter().enumerate() {
        for side in 0..6 {
            if let Some(&j) = index.get(&cell.neighbor(side)) {
                if j > i {
                    dual_edges.push((i, j));
                    dual_sides.push(side);
                }
            }
        }
    }
    if dual_edges.len() + 1 != h {
        return Err(Error::InvalidPlacement(
            "inner dual is not a tree (the hexagons enclose a ring)".into(),
        ));
    }
    let inner_dual = Graph::new(h, dual_edges).map_err(|e| match e {
        Error::Disconnected { .. } => Error::InvalidPlacement("hexagons are not connected".into()),
        other => other,
    })?;

    Ok(Benzenoid {
        graph,
        inner_dual,
        hexagon_vertices,
        edge_direction,
        dual_sides,
    })
}

/// Kind of a phenylene edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// A hexagon edge; the direction class `0..3` of its benzenoid edge.
    Hexagon(u8),
    /// One of the two edges of a square joining adjacent hexagons.
    Connector,
}

/// A phenylene: every hexagon gets its own six vertices and every pair of
/// adjacent hexagons is joined by a square.
///
/// Vertex `6i + k` is corner `k` of hexagon `i`.
#[derive(Clone, Debug)]
pub struct Phenylene {
    graph: Graph,
    placement: BenzenoidPlacement,
    benzenoid: Benzenoid,
    edge_kind: Vec<EdgeKind>,
}

impl Phenylene {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn placement(&self) -> &BenzenoidPlacement {
        &self.placement
    }

    /// The hexagonal squeeze together with its inner dual.
    pub fn squeeze(&self) -> &Benzenoid {
        &self.benzenoid
    }

    pub fn hexagon_count(&self) -> usize {
        self.graph.vertex_count() / 6
    }

    pub fn hexagon_of_vertex(&self, v: usize) -> usize {
        v / 6
    }

    pub fn edge_kind(&self, e: usize) -> EdgeKind {
        self.edge_kind[e]
    }

    /// The edge sets `E_1, E_2, E_3` (hexagon edges by direction) and `E_4`
    /// (connectors), as masks over the edge ids.
    pub fn edge_classes(&self) -> [Vec<bool>; 4] {
        let m = self.graph.edge_count();
        let mut masks = [
            vec![false; m],
            vec![false; m],
            vec![false; m],
            vec![false; m],
        ];
        for (e, kind) in self.edge_kind.iter().enumerate() {
            let i = match kind {
                EdgeKind::Hexagon(d) => *d as usize,
                EdgeKind::Connector => 3,
            };
            masks[i][e] = true;
        }
        masks
    }
}

/// Builds the phenylene whose hexagonal squeeze is the given benzenoid.
/// `|V| = 6h`, `|E| = 8h - 2`.
pub fn build_phenylene(placement: &BenzenoidPlacement) -> Result<Phenylene> {
    let benzenoid = build_benzenoid(placement)?;
    let h = placement.len();
    let mut edges = Vec::with_capacity(8 * h);
    let mut edge_kind = Vec::with_capacity(8 * h);
    for i in 0..h {
        for k in 0..6 {
            edges.push((6 * i + k, 6 * i + (k + 1) % 6));
            edge_kind.push(EdgeKind::Hexagon((k % 3) as u8));
        }
    }
    for (e, &(i, j)) in benzenoid.inner_dual.edges().iter().enumerate() {
        // side k of hexagon i is side k + 3 of hexagon j; corner k of i meets
        // corner k + 4 of j and corner k + 1 of i meets corner k + 3 of j
        let k = benzenoid.dual_sides[e];
        debug_assert_eq!(
            benzenoid.hexagon_vertices[i][k],
            benzenoid.hexagon_vertices[j][(k + 4) % 6]
        );
        edges.push((6 * i + k, 6 * j + (k + 4) % 6));
        edges.push((6 * i + (k + 1) % 6, 6 * j + (k + 3) % 6));
        edge_kind.push(EdgeKind::Connector);
        edge_kind.push(EdgeKind::Connector);
    }
    let graph = Graph::new(6 * h, edges)?;
    Ok(Phenylene {
        graph,
        placement: placement.clone(),
        benzenoid,
        edge_kind,
    })
}

/// Vertex weights on the squeeze `B` and the inner dual `T`:
/// `w1 = 4deg - 6`, `w2 = deg - 1` on `B`; `w3 = 2deg + 12`, `w4 = 6` on `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqueezeWeights {
    pub w1: Vec<i128>,
    pub w2: Vec<i128>,
    pub w3: Vec<i128>,
    pub w4: Vec<i128>,
}

pub fn squeeze_weights(benzenoid: &Graph, inner_dual: &Graph) -> SqueezeWeights {
    let deg_b = degrees_as::<i128>(benzenoid);
    let deg_t = degrees_as::<i128>(inner_dual);
    SqueezeWeights {
        w1: deg_b.iter().map(|d| 4 * d - 6).collect(),
        w2: deg_b.iter().map(|d| d - 1).collect(),
        w3: deg_t.iter().map(|d| 2 * d + 12).collect(),
        w4: vec![6; deg_t.len()],
    }
}

/// `(DD, Gut)` of the phenylene on `placement` from its squeeze and inner
/// dual: `DD = W(B,w1,w2) + W(T,w3,w4)`, `Gut = W(B,w1) + W(T,w3)`.
pub fn dd_gut_via_squeeze(placement: &BenzenoidPlacement) -> Result<(i128, i128)> {
    dd_gut_of_squeeze(&build_benzenoid(placement)?)
}

/// As [`dd_gut_via_squeeze`], from an already built squeeze.
pub fn dd_gut_of_squeeze(benzenoid: &Benzenoid) -> Result<(i128, i128)> {
    let (b, t) = (benzenoid.graph(), benzenoid.inner_dual());
    let w = squeeze_weights(b, t);
    let oracle = Oracle::new(b);
    let dd = oracle.wiener_double(&w.w1, &w.w2)? + tree_wiener_double_linear(t, &w.w3, &w.w4)?;
    let gut = oracle.wiener_weighted(&w.w1)? + tree_wiener_weighted_linear(t, &w.w3)?;
    Ok((dd, gut))
}

/// A quotient tree `T_i = G/E_i` with `a_i` the degree sum and `b_i` the size
/// of each component of `G \ E_i`.
#[derive(Clone, Debug)]
pub struct QuotientTree {
    quotient: QuotientGraph,
    pub a: Vec<i128>,
    pub b: Vec<i128>,
}

impl QuotientTree {
    pub fn tree(&self) -> &Graph {
        self.quotient.graph()
    }

    pub fn quotient(&self) -> &QuotientGraph {
        &self.quotient
    }

    /// `W(T_i, a_i, b_i)`.
    pub fn wiener_double(&self) -> i128 {
        tree_wiener_double_linear(self.tree(), &self.a, &self.b).expect("quotient tree")
    }

    /// `W(T_i, a_i)`.
    pub fn wiener_weighted(&self) -> i128 {
        tree_wiener_weighted_linear(self.tree(), &self.a).expect("quotient tree")
    }

    /// `W(T_i, b_i)`.
    pub fn wiener_sizes(&self) -> i128 {
        tree_wiener_weighted_linear(self.tree(), &self.b).expect("quotient tree")
    }
}

/// The four double-weighted quotient trees, `E_1..E_3` by direction and
/// `E_4` the connectors. Linear in the size of the phenylene.
pub fn quotient_trees(ph: &Phenylene) -> [QuotientTree; 4] {
    let g = ph.graph();
    ph.edge_classes().map(|mask| {
        let quotient = quotient_masked(g, &mask);
        let components = quotient.components();
        let a = components.aggregate(|x| g.degree(x) as i128);
        let b = components.aggregate(|_| 1i128);
        debug_assert!(quotient.graph().is_tree());
        QuotientTree { quotient, a, b }
    })
}

/// Per-tree contributions to `DD` and `Gut`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeBreakdown {
    pub degree_distance: [i128; 4],
    pub gutman: [i128; 4],
}

impl TreeBreakdown {
    pub fn totals(&self) -> (i128, i128) {
        (self.degree_distance.iter().sum(), self.gutman.iter().sum())
    }
}

pub fn tree_breakdown(ph: &Phenylene) -> TreeBreakdown {
    let trees = quotient_trees(ph);
    TreeBreakdown {
        degree_distance: [0, 1, 2, 3].map(|i| trees[i].wiener_double()),
        gutman: [0, 1, 2, 3].map(|i| trees[i].wiener_weighted()),
    }
}

/// `(DD, Gut)` as sums over the four quotient trees, in `O(n)`.
///
/// Works at hexagon granularity. Deleting the connectors leaves the hexagons,
/// so the connector tree is the inner dual. Deleting one hexagon direction
/// cuts every hexagon into two three-corner halves that the connectors glue
/// together; each hexagon then contributes one tree edge between its halves.
pub fn dd_gut_via_trees(ph: &Phenylene) -> (i128, i128) {
    let b = &ph.benzenoid;
    let h = ph.hexagon_count();
    let dual = b.inner_dual.edges();
    // degree of each corner: 2, plus one per connector meeting it
    let mut corner_degree = vec![[2u8; 6]; h];
    for (&(i, j), &k) in dual.iter().zip(&b.dual_sides) {
        corner_degree[i][k] += 1;
        corner_degree[i][(k + 1) % 6] += 1;
        corner_degree[j][(k + 3) % 6] += 1;
        corner_degree[j][(k + 4) % 6] += 1;
    }
    let mut sums = TreeSums::default();

    let a: Vec<i128> = corner_degree
        .iter()
        .map(|c| c.iter().map(|&d| i128::from(d)).sum())
        .collect();
    let mut total = sums.run(a, vec![6; h], dual.iter().copied());

    for class in 0..3 {
        // half 0 holds corners class+1..=class+3, half 1 the other three
        let half = |i: usize, k: usize| 2 * i + usize::from((k + 5 - class) % 6 >= 3);
        let mut halves = DisjointSet::new(2 * h);
        for (&(i, j), &k) in dual.iter().zip(&b.dual_sides) {
            halves.union(half(i, k), half(j, (k + 4) % 6));
            halves.union(half(i, (k + 1) % 6), half(j, (k + 3) % 6));
        }
        let mut label = vec![u32::MAX; 2 * h];
        let mut a = Vec::new();
        for x in 0..2 * h {
            let root = halves.find(x);
            if label[root] == u32::MAX {
                label[root] = a.len() as u32;
                a.push(0);
            }
            label[x] = label[root];
            let c = &corner_degree[x / 2];
            let first = class + 1 + 3 * (x % 2);
            a[label[x] as usize] += (first..first + 3)
                .map(|k| i128::from(c[k % 6]))
                .sum::<i128>();
        }
        let mut sizes = vec![0i128; a.len()];
        for &l in &label {
            sizes[l as usize] += 3;
        }
        let edges = (0..h).map(|i| (label[2 * i] as usize, label[2 * i + 1] as usize));
        let (dd, gut) = sums.run(a, sizes, edges);
        total.0 += dd;
        total.1 += gut;
    }
    total
}

/// The phenylene used as the worked example for the quotient-tree method:
/// six hexagons whose inner dual is a five-vertex path with a pendant hexagon
/// on its second vertex. Among the isomers of that shape it is the only one
/// (up to symmetry) whose hexagon-edge trees give
/// `W(T_i,a_i,b_i) = {5208, 2976, 4416}` and `W(T_i,a_i) = {6484, 3600, 5520}`.
/// With this orientation the directions come out as `T_1, T_2, T_3 =
/// 5208, 4416, 2976`; the connector tree gives `5784` and `7252`. Totals:
/// `DD = 18384`, `Gut = 22856`.
pub fn phe6() -> BenzenoidPlacement {
    BenzenoidPlacement::new(PHE6_CELLS.iter().map(|&(q, r)| Cell::new(q, r)).collect())
        .expect("fixture")
}

const PHE6_CELLS: [(i32, i32); 6] = [(0, 0), (1, 0), (1, 1), (1, 2), (2, 2), (2, -1)];
