//! Plain-text formats.
//!
//! Edge lists hold one `u v` pair per line, vertices numbered from 0. An
//! optional first line `n m` is taken as a header when exactly `m` edge lines
//! follow and every endpoint is below `n`. Weight files hold `v a [b]` lines
//! where `b` defaults to 1 and values are integers or `p/q`. Placement files
//! hold one `q r` hexagon per line. `#` starts a comment everywhere.

use std::fmt::Write as _;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::phenylene::{BenzenoidPlacement, Cell};
use crate::weight::Rational;

/// Non-empty lines with comments stripped, numbered from 1.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn number<T: std::str::FromStr>(line: usize, field: &str, what: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found `{field}`")))
}

fn pairs(text: &str) -> Result<Vec<(usize, i64, i64)>> {
    data_lines(text)
        .map(|(line, fields)| {
            if fields.len() != 2 {
                return Err(Error::parse(
                    line,
                    format!("expected 2 fields, found {}", fields.len()),
                ));
            }
            Ok((
                line,
                number(line, fields[0], "an integer")?,
                number(line, fields[1], "an integer")?,
            ))
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let rows = pairs(text)?;
    let Some(&(_, h0, h1)) = rows.first() else {
        return Err(Error::EmptyGraph);
    };
    for &(line, u, v) in &rows {
        if u < 0 || v < 0 {
            return Err(Error::parse(line, "vertex ids must be non-negative"));
        }
    }
    let rest = &rows[1..];
    let is_header =
        h1 as usize == rest.len() && h0 > 0 && rest.iter().all(|&(_, u, v)| u < h0 && v < h0);
    let (n, edges) = if is_header {
        (h0 as usize, rest)
    } else {
        let n = rows.iter().map(|&(_, u, v)| u.max(v)).max().unwrap_or(0) as usize + 1;
        (n, &rows[..])
    };
    if is_header && n == 1 && edges.is_empty() {
        return Ok(Graph::singleton());
    }
    Graph::new(n, edges.iter().map(|&(_, u, v)| (u as usize, v as usize)))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i128 = p.parse().ok()?;
            let q: i128 = q.parse().ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => s.parse::<i128>().ok().map(Rational::from_integer),
    }
}

/// Vertex weights `a` and `b` read from a weights file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexWeights {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

/// Every vertex `0..n` must appear exactly once.
pub fn parse_weights(text: &str, n: usize) -> Result<VertexWeights> {
    let mut a: Vec<Option<Rational>> = vec![None; n];
    let mut b = vec![Rational::from_integer(1); n];
    for (line, fields) in data_lines(text) {
        if !(2..=3).contains(&fields.len()) {
            return Err(Error::parse(
                line,
                format!("expected `v a [b]`, found {} fields", fields.len()),
            ));
        }
        let v: usize = number(line, fields[0], "a vertex id")?;
        if v >= n {
            return Err(Error::parse(
                line,
                format!("vertex {v} out of range for {n} vertices"),
            ));
        }
        if a[v].is_some() {
            return Err(Error::parse(line, format!("vertex {v} listed twice")));
        }
        let value = |f: &str| {
            parse_rational(f)
                .ok_or_else(|| Error::parse(line, format!("expected a number or p/q, found `{f}`")))
        };
        a[v] = Some(value(fields[1])?);
        if let Some(f) = fields.get(2) {
            b[v] = value(f)?;
        }
    }
    let a = a
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| Error::parse(0, format!("no weight for vertex {v}"))))
        .collect::<Result<_>>()?;
    Ok(VertexWeights { a, b })
}

pub fn parse_placement(text: &str) -> Result<BenzenoidPlacement> {
    let cells = pairs(text)?
        .into_iter()
        .map(|(line, q, r)| match (i32::try_from(q), i32::try_from(r)) {
            (Ok(q), Ok(r)) => Ok(Cell::new(q, r)),
            _ => Err(Error::parse(line, "coordinate out of range")),
        })
        .collect::<Result<_>>()?;
    BenzenoidPlacement::new(cells)
}
