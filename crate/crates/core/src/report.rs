//! Index reports: one entry point that runs a chosen method on a graph or a
//! phenylene and records values, per-part contributions and timing.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::cut::CutDecomposition;
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};
use crate::hamming::HammingStructure;
use crate::indices::{degrees_as, DoubleWeightedGraph, Oracle};
use crate::io::VertexWeights;
use crate::phenylene::{quotient_trees, Phenylene};
use crate::reduction::reduce_fully;
use crate::theta::{theta_star_classes_with, EdgePartition};
use crate::tree::{tree_wiener_double_linear, tree_wiener_weighted_linear};
use crate::weight::{ones, Rational};

/// An exact value. Serializes as a JSON integer when integral and as a
/// `"p/q"` string otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Exact(pub Rational);

impl From<i128> for Exact {
    fn from(x: i128) -> Self {
        Exact(Rational::from_integer(x))
    }
}

impl From<Rational> for Exact {
    fn from(x: Rational) -> Self {
        Exact(x)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            s.serialize_i128(*self.0.numer())
        } else {
            s.collect_str(self)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Cuts,
    Trees,
    Reduce,
    Hamming,
    Auto,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Oracle,
        Method::Cuts,
        Method::Trees,
        Method::Reduce,
        Method::Hamming,
        Method::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Cuts => "cuts",
            Method::Trees => "trees",
            Method::Reduce => "reduce",
            Method::Hamming => "hamming",
            Method::Auto => "auto",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s || (s == "reduction" && *m == Method::Reduce))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown method `{s}`")))
    }
}

/// What the indices are computed on.
#[derive(Clone, Debug)]
pub enum Subject {
    Graph(Graph),
    Phenylene(Box<Phenylene>),
}

impl Subject {
    pub fn graph(&self) -> &Graph {
        match self {
            Subject::Graph(g) => g,
            Subject::Phenylene(ph) => ph.graph(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Input {
    pub descriptor: String,
    pub subject: Subject,
    pub weights: Option<VertexWeights>,
}

impl Input {
    pub fn graph(descriptor: impl Into<String>, g: Graph) -> Self {
        Input {
            descriptor: descriptor.into(),
            subject: Subject::Graph(g),
            weights: None,
        }
    }

    pub fn phenylene(descriptor: impl Into<String>, ph: Phenylene) -> Self {
        Input {
            descriptor: descriptor.into(),
            subject: Subject::Phenylene(Box::new(ph)),
            weights: None,
        }
    }

    pub fn with_weights(mut self, weights: VertexWeights) -> Result<Self> {
        let n = self.subject.graph().vertex_count();
        if weights.a.len() != n || weights.b.len() != n {
            return Err(Error::WeightLength {
                expected: n,
                found: weights.a.len().min(weights.b.len()),
            });
        }
        self.weights = Some(weights);
        Ok(self)
    }
}

/// Indices under user weights `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedValues {
    /// `W(G,a)`.
    pub wiener_weighted: Exact,
    /// `W₊(G,a) = W(G,a,1)`.
    pub wiener_plus: Exact,
    /// `W(G,a,b)`.
    pub wiener_double: Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Values {
    pub wiener: Exact,
    pub degree_distance: Exact,
    pub gutman: Exact,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weighted: Option<WeightedValues>,
}

/// Contribution of one block, tree, class or reduction step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BreakdownLine {
    pub label: String,
    pub terms: BTreeMap<String, Exact>,
}

impl BreakdownLine {
    fn new(label: String, terms: impl IntoIterator<Item = (&'static str, Exact)>) -> Self {
        BreakdownLine {
            label,
            terms: terms.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub agrees: bool,
    pub oracle: Values,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub input: String,
    pub vertices: usize,
    pub edges: usize,
    pub method: Method,
    pub values: Values,
    pub breakdown: Vec<BreakdownLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<Check>,
    pub elapsed_us: u64,
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {}", self.input);
        let _ = writeln!(out, "vertices: {}  edges: {}", self.vertices, self.edges);
        let _ = writeln!(out, "method: {}", self.method);
        write_values(&mut out, &self.values);
        if !self.breakdown.is_empty() {
            let _ = writeln!(out, "breakdown:");
            for line in &self.breakdown {
                let terms: Vec<String> =
                    line.terms.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "  {}: {}", line.label, terms.join(" "));
            }
        }
        if let Some(check) = &self.check {
            if check.agrees {
                let _ = writeln!(out, "check: oracle agrees");
            } else {
                let _ = writeln!(out, "check: MISMATCH, oracle gives");
                write_values(&mut out, &check.oracle);
            }
        }
        let _ = writeln!(out, "time: {} us", self.elapsed_us);
        out
    }
}

fn write_values(out: &mut String, v: &Values) {
    let _ = writeln!(out, "W = {}", v.wiener);
    let _ = writeln!(out, "DD = {}", v.degree_distance);
    let _ = writeln!(out, "Gut = {}", v.gutman);
    if let Some(w) = &v.weighted {
        let _ = writeln!(out, "W(a) = {}", w.wiener_weighted);
        let _ = writeln!(out, "W+(a) = {}", w.wiener_plus);
        let _ = writeln!(out, "W(a,b) = {}", w.wiener_double);
    }
}

/// Picks the method `auto` stands for.
pub fn resolve(method: Method, subject: &Subject) -> Method {
    match method {
        Method::Auto => match subject {
            Subject::Phenylene(_) => Method::Trees,
            Subject::Graph(g) if HammingStructure::new(g).is_partial_hamming() => Method::Hamming,
            Subject::Graph(_) => Method::Cuts,
        },
        m => m,
    }
}

pub fn compute(input: &Input, method: Method, check: bool) -> Result<Report> {
    let start = Instant::now();
    let method = resolve(method, &input.subject);
    let (values, breakdown) = evaluate(input, method)?;
    let check = if check {
        let (oracle, _) = evaluate(input, Method::Oracle)?;
        Some(Check {
            agrees: oracle == values,
            oracle,
        })
    } else {
        None
    };
    let g = input.subject.graph();
    Ok(Report {
        input: input.descriptor.clone(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        method,
        values,
        breakdown,
        check,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

type Evaluation = (Values, Vec<BreakdownLine>);

/// Runs one concrete method.
pub fn evaluate(input: &Input, method: Method) -> Result<Evaluation> {
    let g = input.subject.graph();
    let weights = input.weights.as_ref();
    if g.vertex_count() == 1 {
        if method == Method::Trees {
            return Err(Error::NotAPhenylene);
        }
        return Ok((zero_values(weights.is_some()), Vec::new()));
    }
    match method {
        Method::Oracle => Ok((by_oracle(g, weights)?, Vec::new())),
        Method::Cuts => by_cuts(g, weights),
        Method::Trees => match &input.subject {
            Subject::Phenylene(ph) => by_trees(ph, weights),
            Subject::Graph(_) => Err(Error::NotAPhenylene),
        },
        Method::Reduce => by_reduce(g, weights),
        Method::Hamming => by_hamming(g, weights),
        Method::Auto => evaluate(input, resolve(method, &input.subject)),
    }
}

fn zero_values(weighted: bool) -> Values {
    let z = Exact::from(0);
    Values {
        wiener: z,
        degree_distance: z,
        gutman: z,
        weighted: weighted.then_some(WeightedValues {
            wiener_weighted: z,
            wiener_plus: z,
            wiener_double: z,
        }),
    }
}

fn by_oracle(g: &Graph, weights: Option<&VertexWeights>) -> Result<Values> {
    let oracle = Oracle::new(g);
    let weighted = weights
        .map(|w| -> Result<WeightedValues> {
            Ok(WeightedValues {
                wiener_weighted: oracle.wiener_weighted(&w.a)?.into(),
                wiener_plus: oracle.wiener_plus(&w.a)?.into(),
                wiener_double: oracle.wiener_double(&w.a, &w.b)?.into(),
            })
        })
        .transpose()?;
    Ok(Values {
        wiener: oracle.wiener().into(),
        degree_distance: oracle.degree_distance().into(),
        gutman: oracle.gutman().into(),
        weighted,
    })
}

fn by_cuts(g: &Graph, weights: Option<&VertexWeights>) -> Result<Evaluation> {
    let d = all_pairs_distances(g);
    let partition = EdgePartition::finest(&theta_star_classes_with(g, &d));
    let cuts = CutDecomposition::new(g, &partition)?;
    let n = g.vertex_count();
    let deg = degrees_as::<i128>(g);
    let unit = ones::<i128>(n);
    let w_terms = cuts.wiener_weighted_terms(&unit)?;
    let dd_terms = cuts.wiener_double_terms(&deg, &unit)?;
    let gut_terms = cuts.wiener_weighted_terms(&deg)?;
    let mut breakdown: Vec<BreakdownLine> = (0..partition.len())
        .map(|i| {
            let r = cuts.blocks()[i].quotient().graph().vertex_count();
            BreakdownLine::new(
                format!(
                    "block {i} ({} edges, quotient on {r} vertices)",
                    partition.block(i).len()
                ),
                [
                    ("W", w_terms[i].into()),
                    ("DD", dd_terms[i].into()),
                    ("Gut", gut_terms[i].into()),
                ],
            )
        })
        .collect();
    let weighted = match weights {
        Some(w) => {
            let runit = ones::<Rational>(n);
            let ws = cuts.wiener_weighted_terms(&w.a)?;
            let wp = cuts.wiener_double_terms(&w.a, &runit)?;
            let wd = cuts.wiener_double_terms(&w.a, &w.b)?;
            for (i, line) in breakdown.iter_mut().enumerate() {
                line.terms.insert("W(a)".into(), ws[i].into());
                line.terms.insert("W+(a)".into(), wp[i].into());
                line.terms.insert("W(a,b)".into(), wd[i].into());
            }
            Some(WeightedValues {
                wiener_weighted: ws.into_iter().sum::<Rational>().into(),
                wiener_plus: wp.into_iter().sum::<Rational>().into(),
                wiener_double: wd.into_iter().sum::<Rational>().into(),
            })
        }
        None => None,
    };
    let values = Values {
        wiener: w_terms.iter().sum::<i128>().into(),
        degree_distance: dd_terms.iter().sum::<i128>().into(),
        gutman: gut_terms.iter().sum::<i128>().into(),
        weighted,
    };
    Ok((values, breakdown))
}

fn by_trees(ph: &Phenylene, weights: Option<&VertexWeights>) -> Result<Evaluation> {
    let trees = quotient_trees(ph);
    let mut breakdown = Vec::with_capacity(4);
    let (mut w, mut dd, mut gut) = (0i128, 0i128, 0i128);
    let mut weighted = weights.map(|_| [Rational::zero(); 3]);
    for (i, t) in trees.iter().enumerate() {
        let (tw, tdd, tgut) = (t.wiener_sizes(), t.wiener_double(), t.wiener_weighted());
        w += tw;
        dd += tdd;
        gut += tgut;
        let label = if i < 3 {
            format!("T{} (hexagon edges, direction {})", i + 1, i + 1)
        } else {
            "T4 (connector edges)".to_string()
        };
        let mut line = BreakdownLine::new(
            label,
            [("W", tw.into()), ("DD", tdd.into()), ("Gut", tgut.into())],
        );
        if let (Some(wts), Some(acc)) = (weights, weighted.as_mut()) {
            let comps = t.quotient().components();
            let a = comps.aggregate(|x| wts.a[x]);
            let b = comps.aggregate(|x| wts.b[x]);
            let sizes = comps.aggregate(|_| Rational::one());
            let terms = [
                tree_wiener_weighted_linear(t.tree(), &a)?,
                tree_wiener_double_linear(t.tree(), &a, &sizes)?,
                tree_wiener_double_linear(t.tree(), &a, &b)?,
            ];
            for (k, name) in ["W(a)", "W+(a)", "W(a,b)"].into_iter().enumerate() {
                acc[k] += terms[k];
                line.terms.insert(name.into(), terms[k].into());
            }
        }
        breakdown.push(line);
    }
    let values = Values {
        wiener: w.into(),
        degree_distance: dd.into(),
        gutman: gut.into(),
        weighted: weighted.map(|[a, b, c]| WeightedValues {
            wiener_weighted: a.into(),
            wiener_plus: b.into(),
            wiener_double: c.into(),
        }),
    };
    Ok((values, breakdown))
}

fn by_reduce(g: &Graph, weights: Option<&VertexWeights>) -> Result<Evaluation> {
    let n = g.vertex_count();
    // (deg, 1) gives DD through the double total and Gut through the single one.
    let deg = DoubleWeightedGraph::new(g.clone(), degrees_as::<i128>(g), ones(n))?;
    let full = reduce_fully(&deg);
    let oracle = Oracle::new(full.reduced.graph());
    let dd = oracle.wiener_double(full.reduced.a(), full.reduced.b())? + full.total_double;
    let gut = oracle.wiener_weighted(full.reduced.a())? + full.total_single;
    let unit = reduce_fully(&DoubleWeightedGraph::new(
        g.clone(),
        ones::<i128>(n),
        ones(n),
    )?);
    let w =
        Oracle::new(unit.reduced.graph()).wiener_weighted(unit.reduced.a())? + unit.total_single;
    let breakdown = full
        .steps
        .iter()
        .map(|s| {
            BreakdownLine::new(
                format!(
                    "{} class {:?} onto {} (size {})",
                    s.relation,
                    s.class,
                    s.representative,
                    s.class.len()
                ),
                [
                    ("DD", s.correction_double.into()),
                    ("Gut", s.correction_single.into()),
                ],
            )
        })
        .collect();
    let weighted = match weights {
        Some(wt) => {
            let ab = reduce_fully(&DoubleWeightedGraph::new(
                g.clone(),
                wt.a.clone(),
                wt.b.clone(),
            )?);
            let o = Oracle::new(ab.reduced.graph());
            let wd = o.wiener_double(ab.reduced.a(), ab.reduced.b())? + ab.total_double;
            let ws = o.wiener_weighted(ab.reduced.a())? + ab.total_single;
            let a1 = reduce_fully(&DoubleWeightedGraph::new(g.clone(), wt.a.clone(), ones(n))?);
            let o = Oracle::new(a1.reduced.graph());
            let wp = o.wiener_double(a1.reduced.a(), a1.reduced.b())? + a1.total_double;
            Some(WeightedValues {
                wiener_weighted: ws.into(),
                wiener_plus: wp.into(),
                wiener_double: wd.into(),
            })
        }
        None => None,
    };
    let values = Values {
        wiener: w.into(),
        degree_distance: dd.into(),
        gutman: gut.into(),
        weighted,
    };
    Ok((values, breakdown))
}

fn by_hamming(g: &Graph, weights: Option<&VertexWeights>) -> Result<Evaluation> {
    let hs = HammingStructure::new(g);
    if !hs.is_partial_hamming() {
        return Err(Error::NotPartialHamming);
    }
    let n = g.vertex_count();
    let deg = degrees_as::<i128>(g);
    let unit = ones::<i128>(n);
    let deg1: Vec<i128> = deg.iter().map(|d| d + 1).collect();
    let w_terms = hs.bound_terms(&unit)?;
    let gut_terms = hs.bound_terms(&deg)?;
    // W(G,a,b) = W(G,a+b) - W(G,a) - W(G,b), class by class.
    let dd_terms: Vec<i128> = hs
        .bound_terms(&deg1)?
        .into_iter()
        .zip(&gut_terms)
        .zip(&w_terms)
        .map(|((s, g), w)| s - g - w)
        .collect();
    let breakdown = hs
        .quotients()
        .iter()
        .enumerate()
        .map(|(i, q)| {
            BreakdownLine::new(
                format!(
                    "class {i} ({} edges, quotient K{})",
                    hs.classes().class(i).len(),
                    q.graph().vertex_count()
                ),
                [
                    ("W", w_terms[i].into()),
                    ("DD", dd_terms[i].into()),
                    ("Gut", gut_terms[i].into()),
                ],
            )
        })
        .collect();
    let weighted = match weights {
        Some(wt) => {
            let bound =
                |v: &[Rational]| -> Result<Rational> { Ok(hs.bound_terms(v)?.into_iter().sum()) };
            let runit = ones::<Rational>(n);
            let sum = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
                x.iter().zip(y).map(|(p, q)| *p + *q).collect()
            };
            let wa = bound(&wt.a)?;
            let wb = bound(&wt.b)?;
            let w1 = bound(&runit)?;
            Some(WeightedValues {
                wiener_weighted: wa.into(),
                wiener_plus: (bound(&sum(&wt.a, &runit))? - wa - w1).into(),
                wiener_double: (bound(&sum(&wt.a, &wt.b))? - wa - wb).into(),
            })
        }
        None => None,
    };
    let values = Values {
        wiener: w_terms.iter().sum::<i128>().into(),
        degree_distance: dd_terms.iter().sum::<i128>().into(),
        gutman: gut_terms.iter().sum::<i128>().into(),
        weighted,
    };
    Ok((values, breakdown))
}
