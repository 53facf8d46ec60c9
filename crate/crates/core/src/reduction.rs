//! Collapsing twin classes while tracking exact Wiener-index corrections.
//!
//! Vertices `x`, `y` are R-related when `N(x) = N(y)` (open twins, at
//! distance 2) and S-related when `N[x] = N[y]` (closed twins, adjacent).
//! Deleting all of a class but one representative `c`, and giving `c` the
//! summed weights of the class, changes `W(G,a,b)` by a correction that
//! depends only on the class weights.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{check_weights, DoubleWeightedGraph};
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Relation {
    /// `N(x) = N(y)`.
    R,
    /// `N[x] = N[y]`.
    S,
}

impl Relation {
    /// Distance between two distinct class members.
    fn member_distance(self) -> u64 {
        match self {
            Relation::R => 2,
            Relation::S => 1,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::R => "R",
            Relation::S => "S",
        })
    }
}

fn classes_by_key(g: &Graph, closed: bool) -> Vec<Vec<usize>> {
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for u in 0..g.vertex_count() {
        let mut key: Vec<usize> = g.neighbors(u).collect();
        if closed {
            let pos = key.partition_point(|&v| v < u);
            key.insert(pos, u);
        }
        let next = classes.len();
        let slot = *index.entry(key).or_insert(next);
        if slot == next {
            classes.push(Vec::new());
        }
        classes[slot].push(u);
    }
    classes
}

/// Classes of `N(x) = N(y)`, ordered by smallest member.
pub fn r_classes(g: &Graph) -> Vec<Vec<usize>> {
    classes_by_key(g, false)
}

/// Classes of `N[x] = N[y]`, ordered by smallest member.
pub fn s_classes(g: &Graph) -> Vec<Vec<usize>> {
    classes_by_key(g, true)
}

fn class_of(g: &Graph, relation: Relation, c: usize) -> Result<Vec<usize>> {
    if c >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: c,
            n: g.vertex_count(),
        });
    }
    let classes = match relation {
        Relation::R => r_classes(g),
        Relation::S => s_classes(g),
    };
    Ok(classes
        .into_iter()
        .find(|cl| cl.contains(&c))
        .expect("classes cover V"))
}

/// `Σ_{i<j} (a_i b_j + a_j b_i)` over the class.
fn pair_double<T: Weight>(class: &[usize], a: &[T], b: &[T]) -> T {
    let mut acc = T::zero();
    for (i, &x) in class.iter().enumerate() {
        for &y in &class[i + 1..] {
            acc += a[x] * b[y] + a[y] * b[x];
        }
    }
    acc
}

/// `Σ_{i<j} w_i w_j` over the class.
fn pair_single<T: Weight>(class: &[usize], w: &[T]) -> T {
    let mut acc = T::zero();
    for (i, &x) in class.iter().enumerate() {
        for &y in &class[i + 1..] {
            acc += w[x] * w[y];
        }
    }
    acc
}

/// A collapsed graph, its weight vectors and the new index of every old
/// vertex.
type Collapsed<T> = (Graph, Vec<Vec<T>>, Vec<Option<usize>>);

/// Deletes `class \ {c}` and moves the class weight sums onto `c`.
/// Returns the new graph, the new weight vectors and the new index of every
/// surviving vertex.
fn collapse<T: Weight>(
    g: &Graph,
    weights: &[&[T]],
    class: &[usize],
    c: usize,
) -> Result<Collapsed<T>> {
    let mut removed = vec![false; g.vertex_count()];
    for &x in class {
        removed[x] = x != c;
    }
    let (reduced, map) = g.remove_vertices(&removed)?;
    let new_weights = weights
        .iter()
        .map(|w| {
            let mut out: Vec<T> = (0..g.vertex_count())
                .filter(|&x| !removed[x])
                .map(|x| w[x])
                .collect();
            let c_new = map[c].expect("representative survives");
            out[c_new] = class.iter().map(|&x| w[x]).sum();
            out
        })
        .collect();
    Ok((reduced, new_weights, map))
}

/// The result of collapsing one class.
#[derive(Clone, Debug)]
pub struct Reduction<G, T> {
    pub reduced: G,
    pub correction: T,
    /// Members of the collapsed class, in the input's vertex indices.
    pub class: Vec<usize>,
    /// For each input vertex, its index in the reduced graph.
    pub map: Vec<Option<usize>>,
}

fn reduce_double<T: Weight>(
    dwg: &DoubleWeightedGraph<T>,
    c: usize,
    relation: Relation,
) -> Result<Reduction<DoubleWeightedGraph<T>, T>> {
    let g = dwg.graph();
    let class = class_of(g, relation, c)?;
    let (a, b) = (dwg.a(), dwg.b());
    let factor = T::from_count(relation.member_distance());
    let correction = factor * pair_double(&class, a, b);
    let (graph, mut w, map) = collapse(g, &[a, b], &class, c)?;
    let b2 = w.pop().expect("two weights");
    let a2 = w.pop().expect("two weights");
    Ok(Reduction {
        reduced: DoubleWeightedGraph::new(graph, a2, b2)?,
        correction,
        class,
        map,
    })
}

fn reduce_single<T: Weight>(
    g: &Graph,
    w: &[T],
    c: usize,
    relation: Relation,
) -> Result<Reduction<(Graph, Vec<T>), T>> {
    check_weights(g, w)?;
    let class = class_of(g, relation, c)?;
    let factor = T::from_count(relation.member_distance());
    let correction = factor * pair_single(&class, w);
    let (graph, mut ws, map) = collapse(g, &[w], &class, c)?;
    Ok(Reduction {
        reduced: (graph, ws.pop().expect("one weight")),
        correction,
        class,
        map,
    })
}

/// Collapses `[c]_R` onto `c`:
/// `W(G,a,b) = W(G',a',b') + Σ_{i<j} 2(a(c_i)b(c_j) + a(c_j)b(c_i))`.
pub fn reduce_once_r<T: Weight>(
    dwg: &DoubleWeightedGraph<T>,
    c: usize,
) -> Result<Reduction<DoubleWeightedGraph<T>, T>> {
    reduce_double(dwg, c, Relation::R)
}

/// Collapses `[c]_S` onto `c`:
/// `W(G,a,b) = W(G',a',b') + Σ_{i<j} (a(c_i)b(c_j) + a(c_j)b(c_i))`.
pub fn reduce_once_s<T: Weight>(
    dwg: &DoubleWeightedGraph<T>,
    c: usize,
) -> Result<Reduction<DoubleWeightedGraph<T>, T>> {
    reduce_double(dwg, c, Relation::S)
}

/// Single-weight R-collapse: `W(G,w) = W(G',w') + Σ_{i<j} 2w(c_i)w(c_j)`.
pub fn reduce_once_r_single<T: Weight>(
    g: &Graph,
    w: &[T],
    c: usize,
) -> Result<Reduction<(Graph, Vec<T>), T>> {
    reduce_single(g, w, c, Relation::R)
}

/// Single-weight S-collapse: `W(G,w) = W(G',w') + Σ_{i<j} w(c_i)w(c_j)`.
pub fn reduce_once_s_single<T: Weight>(
    g: &Graph,
    w: &[T],
    c: usize,
) -> Result<Reduction<(Graph, Vec<T>), T>> {
    reduce_single(g, w, c, Relation::S)
}

/// One collapse performed by [`reduce_fully`].
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ReductionStep<T> {
    pub relation: Relation,
    /// The collapsed class, as vertex ids of the original graph.
    pub class: Vec<usize>,
    pub representative: usize,
    /// Correction to `W(G,a,b)`.
    pub correction_double: T,
    /// Correction to `W(G,a)`.
    pub correction_single: T,
}

#[derive(Clone, Debug)]
pub struct FullReduction<T> {
    pub reduced: DoubleWeightedGraph<T>,
    /// Original vertex id of every reduced vertex.
    pub labels: Vec<usize>,
    /// `W(G,a,b) - W(G',a',b')`.
    pub total_double: T,
    /// `W(G,a) - W(G',a')`.
    pub total_single: T,
    pub steps: Vec<ReductionStep<T>>,
}

/// Collapses nontrivial R-classes, then S-classes, recomputing classes after
/// every collapse, until neither relation has a class of size two or more.
/// The representative of each class is its lowest-indexed vertex.
pub fn reduce_fully<T: Weight>(dwg: &DoubleWeightedGraph<T>) -> FullReduction<T> {
    let mut current = dwg.clone();
    let mut labels: Vec<usize> = (0..dwg.graph().vertex_count()).collect();
    let mut steps = Vec::new();
    let mut total_double = T::zero();
    let mut total_single = T::zero();
    loop {
        let mut changed = false;
        for relation in [Relation::R, Relation::S] {
            loop {
                let classes = match relation {
                    Relation::R => r_classes(current.graph()),
                    Relation::S => s_classes(current.graph()),
                };
                let Some(class) = classes.into_iter().find(|c| c.len() >= 2) else {
                    break;
                };
                let c = class[0];
                let factor = T::from_count(relation.member_distance());
                let single = factor * pair_single(&class, current.a());
                let step = reduce_double(&current, c, relation)
                    .expect("twin classes of a connected graph collapse to a connected graph");
                total_double += step.correction;
                total_single += single;
                steps.push(ReductionStep {
                    relation,
                    class: class.iter().map(|&x| labels[x]).collect(),
                    representative: labels[c],
                    correction_double: step.correction,
                    correction_single: single,
                });
                let mut next_labels = vec![0; step.reduced.graph().vertex_count()];
                for (old, new) in step.map.iter().enumerate() {
                    if let Some(new) = new {
                        next_labels[*new] = labels[old];
                    }
                }
                labels = next_labels;
                current = step.reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    FullReduction {
        reduced: current,
        labels,
        total_double,
        total_single,
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_basic, BasicFamily};
    use crate::indices::{wiener, wiener_double, wiener_weighted};

    fn unit(g: Graph) -> DoubleWeightedGraph<i128> {
        let n = g.vertex_count();
        DoubleWeightedGraph::new(g, vec![1; n], vec![1; n]).unwrap()
    }

    #[test]
    fn class_examples() {
        let star = gen_basic(BasicFamily::Star, 4).unwrap();
        assert_eq!(r_classes(&star), vec![vec![0], vec![1, 2, 3]]);
        let c5 = gen_basic(BasicFamily::Cycle, 5).unwrap();
        assert_eq!(r_classes(&c5).len(), 5);
        let k23 = gen_basic(BasicFamily::CompleteBipartite(2), 3).unwrap();
        assert_eq!(r_classes(&k23), vec![vec![0, 1], vec![2, 3, 4]]);
        let k4 = gen_basic(BasicFamily::Complete, 4).unwrap();
        assert_eq!(s_classes(&k4), vec![vec![0, 1, 2, 3]]);
        let p3 = gen_basic(BasicFamily::Path, 3).unwrap();
        assert_eq!(s_classes(&p3).len(), 3);
        let c4 = gen_basic(BasicFamily::Cycle, 4).unwrap();
        assert_eq!(r_classes(&c4), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(s_classes(&c4).len(), 4);
    }

    #[test]
    fn r_collapse_on_star() {
        let star = unit(gen_basic(BasicFamily::Star, 4).unwrap());
        let step = reduce_once_r(&star, 1).unwrap();
        assert_eq!(step.reduced.graph().vertex_count(), 2);
        assert_eq!(step.reduced.a(), &[1, 3]);
        assert_eq!(step.reduced.b(), &[1, 3]);
        assert_eq!(step.correction, 12);
        assert_eq!(wiener_double(&step.reduced) + step.correction, 18);

        let singleton = reduce_once_r(&star, 0).unwrap();
        assert_eq!(singleton.correction, 0);
        assert_eq!(singleton.reduced, star);
    }

    #[test]
    fn uniform_class_weights() {
        let k = gen_basic(BasicFamily::CompleteBipartite(3), 4).unwrap();
        let (k1, k2) = (5i128, 7i128);
        let dwg = DoubleWeightedGraph::new(k.clone(), vec![k1; 7], vec![k2; 7]).unwrap();
        let step = reduce_once_r(&dwg, 3).unwrap();
        let size = 4i128;
        assert_eq!(step.correction, 2 * k1 * k2 * size * (size - 1));
        assert_eq!(
            wiener_double(&dwg),
            wiener_double(&step.reduced) + step.correction
        );
    }

    #[test]
    fn single_weight_r() {
        let star = gen_basic(BasicFamily::Star, 4).unwrap();
        let step = reduce_once_r_single(&star, &[1i128; 4], 2).unwrap();
        let (g, w) = &step.reduced;
        assert_eq!(w, &vec![1, 3]);
        assert_eq!(step.correction, 6);
        assert_eq!(
            wiener_weighted(g, w).unwrap() + step.correction,
            wiener(&star)
        );
        let id = reduce_once_r_single(&star, &[1i128; 4], 0).unwrap();
        assert_eq!(id.correction, 0);
        let k = 3i128;
        let step = reduce_once_r_single(&star, &[k; 4], 1).unwrap();
        assert_eq!(step.correction, k * k * 3 * 2);
    }

    #[test]
    fn s_collapse_on_cliques() {
        let k3 = unit(gen_basic(BasicFamily::Complete, 3).unwrap());
        let step = reduce_once_s(&k3, 0).unwrap();
        assert_eq!(step.reduced.graph().vertex_count(), 1);
        assert_eq!(step.correction, 6);
        let k4 = unit(gen_basic(BasicFamily::Complete, 4).unwrap());
        let step = reduce_once_s(&k4, 2).unwrap();
        assert_eq!(step.correction, 12);
        assert_eq!(wiener_double(&k4), 12);
        let p3 = unit(gen_basic(BasicFamily::Path, 3).unwrap());
        assert_eq!(reduce_once_s(&p3, 1).unwrap().correction, 0);
    }

    #[test]
    fn out_of_range_vertex() {
        let p3 = unit(gen_basic(BasicFamily::Path, 3).unwrap());
        assert!(matches!(
            reduce_once_r(&p3, 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn full_reductions() {
        let path = unit(gen_basic(BasicFamily::Path, 6).unwrap());
        let full = reduce_fully(&path);
        assert!(full.steps.is_empty());
        assert_eq!(full.total_double, 0);

        let kmn = unit(gen_basic(BasicFamily::CompleteBipartite(3), 5).unwrap());
        let full = reduce_fully(&kmn);
        assert!(full.steps.len() >= 2);
        assert_eq!(full.steps[0].relation, Relation::R);
        assert_eq!(full.steps[1].relation, Relation::R);
        assert_eq!(
            wiener_double(&kmn),
            wiener_double(&full.reduced) + full.total_double
        );

        let windmill = unit(gen_basic(BasicFamily::Windmill, 4).unwrap());
        let full = reduce_fully(&windmill);
        assert!(full.steps.iter().any(|s| s.relation == Relation::S));
        assert_eq!(
            wiener_double(&windmill),
            wiener_double(&full.reduced) + full.total_double
        );
        assert_eq!(
            wiener(windmill.graph()),
            wiener_weighted(full.reduced.graph(), full.reduced.a()).unwrap() + full.total_single
        );
    }
}
