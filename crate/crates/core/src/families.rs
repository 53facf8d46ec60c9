//! Deterministic generators for the graph families used in tests, the CLI and
//! benchmarks.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::phenylene::{build_benzenoid, BenzenoidPlacement, Cell};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BasicFamily {
    /// `P_n`.
    Path,
    /// `C_n`, `n >= 3`.
    Cycle,
    /// `K_n`.
    Complete,
    /// `Q_n` on `2^n` vertices.
    Hypercube,
    /// `K_{1,n-1}`.
    Star,
    /// `K_{m,n}` with the given `m`.
    CompleteBipartite(usize),
    /// `n` triangles sharing one vertex.
    Windmill,
    /// A random spanning tree plus every other pair with probability
    /// `density`.
    Random { seed: u64, density: f64 },
}

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what.to_string()))
    }
}

pub fn gen_basic(kind: BasicFamily, n: usize) -> Result<Graph> {
    need(n >= 1, "n must be at least 1")?;
    let mut edges = Vec::new();
    let vertices = match kind {
        BasicFamily::Path => {
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        BasicFamily::Cycle => {
            need(n >= 3, "a cycle needs at least 3 vertices")?;
            edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            n
        }
        BasicFamily::Complete => {
            for u in 0..n {
                edges.extend(((u + 1)..n).map(|v| (u, v)));
            }
            n
        }
        BasicFamily::Hypercube => {
            need(n <= 20, "hypercube dimension must be at most 20")?;
            let size = 1usize << n;
            for u in 0..size {
                for bit in 0..n {
                    let v = u ^ (1 << bit);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            size
        }
        BasicFamily::Star => {
            edges.extend((1..n).map(|i| (0, i)));
            n
        }
        BasicFamily::CompleteBipartite(m) => {
            need(m >= 1, "both sides of K_{m,n} must be non-empty")?;
            for u in 0..m {
                edges.extend((0..n).map(|v| (u, m + v)));
            }
            m + n
        }
        BasicFamily::Windmill => {
            for k in 0..n {
                let (x, y) = (2 * k + 1, 2 * k + 2);
                edges.extend([(0, x), (0, y), (x, y)]);
            }
            2 * n + 1
        }
        BasicFamily::Random { seed, density } => {
            need((0.0..=1.0).contains(&density), "density must lie in [0, 1]")?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_edges(&mut rng, n, density, &mut edges);
            n
        }
    };
    Graph::new(vertices, edges)
}

fn random_edges(rng: &mut ChaCha8Rng, n: usize, density: f64, edges: &mut Vec<(usize, usize)>) {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut present = HashSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let e = (label[i].min(label[j]), label[i].max(label[j]));
        present.insert(e);
        edges.push(e);
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !present.contains(&(u, v)) && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
}

/// A connected graph on `n` vertices whose density is itself drawn from the
/// seed, ranging from trees to dense graphs.
pub fn random_connected(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = match rng.gen_range(0..4) {
        0 => 0.0,
        1 => rng.gen_range(0.0..2.0 / n.max(2) as f64),
        2 => rng.gen_range(0.0..0.2),
        _ => rng.gen_range(0.2..0.8),
    };
    gen_basic(
        BasicFamily::Random {
            seed: rng.gen(),
            density,
        },
        n,
    )
    .expect("valid parameters")
}

/// The house family `H_n`: the ladder `P_n □ K_2` (rails `u_1..u_n`,
/// `v_1..v_n`, rungs `u_i v_i`) with an apex joined to `u_1` and `v_1`.
///
/// Vertex `i - 1` is `u_i`, `n + i - 1` is `v_i` and `2n` is the apex.
/// `|V| = 2n + 1`, `|E| = 3n`.
pub fn gen_house(n: usize) -> Result<Graph> {
    need(n >= 2, "the house family needs n >= 2")?;
    let apex = 2 * n;
    let mut edges = Vec::with_capacity(3 * n);
    edges.extend([(apex, 0), (apex, n)]);
    for i in 0..n {
        edges.push((i, n + i));
        if i + 1 < n {
            edges.push((i, i + 1));
            edges.push((n + i, n + i + 1));
        }
    }
    Graph::new(2 * n + 1, edges)
}

/// How a chain continues at an inner hexagon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kink {
    /// Para attachment: the next hexagon sits opposite the previous one.
    Linear,
    /// Angular attachment, turning one side counterclockwise.
    AngularPlus,
    /// Angular attachment, turning one side clockwise.
    AngularMinus,
}

impl Kink {
    fn turn(self) -> usize {
        match self {
            Kink::Linear => 0,
            Kink::AngularPlus => 5,
            Kink::AngularMinus => 1,
        }
    }
}

/// Parses a kink pattern: `L` for linear, `+`/`A+` and `-`/`A-` for the two
/// angular turns. Whitespace and commas are ignored.
pub fn parse_kinks(pattern: &str) -> Result<Vec<Kink>> {
    let mut kinks = Vec::new();
    let mut chars = pattern
        .chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .peekable();
    while let Some(c) = chars.next() {
        let kink = match c.to_ascii_uppercase() {
            'L' => Kink::Linear,
            '+' => Kink::AngularPlus,
            '-' => Kink::AngularMinus,
            'A' => match chars.next() {
                Some('+') => Kink::AngularPlus,
                Some('-') => Kink::AngularMinus,
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "bad kink pattern {pattern:?}"
                    )))
                }
            },
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "bad kink pattern {pattern:?}"
                )))
            }
        };
        kinks.push(kink);
    }
    Ok(kinks)
}

impl fmt::Display for Kink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kink::Linear => "L",
            Kink::AngularPlus => "+",
            Kink::AngularMinus => "-",
        })
    }
}

/// A chain of `h` hexagons. `kinks` describes hexagons `2..h-1` and must
/// have length `h - 2`; an empty pattern means a linear chain.
pub fn gen_phenylene_chain(h: usize, kinks: &[Kink]) -> Result<BenzenoidPlacement> {
    need(h >= 1, "a chain needs at least one hexagon")?;
    let inner = h.saturating_sub(2);
    need(
        kinks.is_empty() || kinks.len() == inner,
        &format!("kink pattern must have length {inner}"),
    )?;
    let mut cells = vec![Cell::new(0, 0)];
    let mut seen: HashSet<Cell> = cells.iter().copied().collect();
    let mut side = 1;
    for i in 1..h {
        if i >= 2 {
            side = (side + kinks.get(i - 2).map_or(0, |k| k.turn())) % 6;
        }
        let next = cells[i - 1].neighbor(side);
        if !seen.insert(next) {
            return Err(Error::InvalidPlacement(format!(
                "kink pattern places hexagon {i} on occupied cell ({next})"
            )));
        }
        cells.push(next);
    }
    let placement = BenzenoidPlacement::new(cells)?;
    build_benzenoid(&placement)?;
    Ok(placement)
}

/// Replaces vertex `v` of `base` by `sizes[v]` twins: a clique when
/// `clique[v]` (closed-neighbourhood twins) and an independent set otherwise
/// (open-neighbourhood twins). Twins of adjacent vertices are fully joined.
pub fn gen_blowup(base: &Graph, sizes: &[usize], clique: &[bool]) -> Result<Graph> {
    let n = base.vertex_count();
    need(
        sizes.len() == n && clique.len() == n,
        "one size per base vertex",
    )?;
    need(
        sizes.iter().all(|&s| s >= 1),
        "blowup sizes must be positive",
    )?;
    let mut start = vec![0; n + 1];
    for v in 0..n {
        start[v + 1] = start[v] + sizes[v];
    }
    let mut edges = Vec::new();
    for v in 0..n {
        if clique[v] {
            for x in start[v]..start[v + 1] {
                edges.extend(((x + 1)..start[v + 1]).map(|y| (x, y)));
            }
        }
    }
    for &(u, v) in base.edges() {
        for x in start[u]..start[u + 1] {
            edges.extend((start[v]..start[v + 1]).map(|y| (x, y)));
        }
    }
    Graph::new(start[n], edges)
}

/// A random blowup of a small random connected graph; at least one vertex is
/// blown up into two or more twins.
pub fn random_blowup(base_n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = random_connected(base_n, rng.gen());
    let mut sizes: Vec<usize> = (0..base_n)
        .map(|_| {
            if rng.gen_bool(0.4) {
                rng.gen_range(2..5)
            } else {
                1
            }
        })
        .collect();
    let forced = rng.gen_range(0..base_n);
    sizes[forced] = sizes[forced].max(2);
    let clique: Vec<bool> = (0..base_n).map(|_| rng.gen_bool(0.5)).collect();
    gen_blowup(&base, &sizes, &clique).expect("valid parameters")
}

/// A named family with its size parameter, as accepted by the CLI.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub n: usize,
    pub m: Option<usize>,
    pub seed: u64,
    pub kinks: Vec<Kink>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyName {
    Path,
    Cycle,
    Complete,
    Hypercube,
    Star,
    CompleteBipartite,
    Windmill,
    Random,
    Blowup,
    House,
    Phenylene,
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "path" => FamilyName::Path,
            "cycle" => FamilyName::Cycle,
            "complete" => FamilyName::Complete,
            "hypercube" => FamilyName::Hypercube,
            "star" => FamilyName::Star,
            "complete-bipartite" | "bipartite" => FamilyName::CompleteBipartite,
            "windmill" | "friendship" => FamilyName::Windmill,
            "random" => FamilyName::Random,
            "blowup" => FamilyName::Blowup,
            "house" => FamilyName::House,
            "phenylene" | "phenylene-chain" | "chain" => FamilyName::Phenylene,
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        })
    }
}

/// What a family generates: a plain graph or a hexagon placement.
#[derive(Clone, Debug)]
pub enum Generated {
    Graph(Graph),
    Placement(BenzenoidPlacement),
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Generated> {
        let n = self.n;
        let basic = |kind| gen_basic(kind, n).map(Generated::Graph);
        match self.name {
            FamilyName::Path => basic(BasicFamily::Path),
            FamilyName::Cycle => basic(BasicFamily::Cycle),
            FamilyName::Complete => basic(BasicFamily::Complete),
            FamilyName::Hypercube => basic(BasicFamily::Hypercube),
            FamilyName::Star => basic(BasicFamily::Star),
            FamilyName::CompleteBipartite => {
                basic(BasicFamily::CompleteBipartite(self.m.unwrap_or(n)))
            }
            FamilyName::Windmill => basic(BasicFamily::Windmill),
            FamilyName::Random => {
                need(n >= 1, "n must be at least 1")?;
                Ok(Generated::Graph(random_connected(n, self.seed)))
            }
            FamilyName::Blowup => {
                need(n >= 1, "n must be at least 1")?;
                Ok(Generated::Graph(random_blowup(n, self.seed)))
            }
            FamilyName::House => gen_house(n).map(Generated::Graph),
            FamilyName::Phenylene => gen_phenylene_chain(n, &self.kinks).map(Generated::Placement),
        }
    }
}
