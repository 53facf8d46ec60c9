use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use degdist::error::ErrorKind;
use degdist::families::{gen_phenylene_chain, parse_kinks, FamilyName, FamilySpec, Generated};
use degdist::hamming::HammingStructure;
use degdist::indices::{degrees_as, DoubleWeightedGraph, Oracle};
use degdist::io::{parse_edge_list, parse_placement, parse_weights, write_edge_list};
use degdist::phenylene::{build_phenylene, BenzenoidPlacement};
use degdist::reduction::reduce_fully;
use degdist::report::{compute, Exact, Input, Method, Subject};
use degdist::theta::{quotient, theta_star_classes};
use degdist::verify::{verify, verify_random};
use degdist::weight::{ones, Rational};
use degdist::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INAPPLICABLE: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(
    name = "degdist",
    version,
    about = "Exact degree distance, Gutman and weighted Wiener indices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute W, DD, Gut and, with --weights, the weighted indices.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        /// oracle, cuts, trees, reduce, hamming or auto.
        #[arg(long, default_value = "auto")]
        method: Method,
        /// Also run the all-pairs reference and compare.
        #[arg(long)]
        check: bool,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// List the Θ*-classes, one per line.
    Classes {
        #[command(flatten)]
        input: InputArgs,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print the quotient by an edge set.
    Quotient {
        #[command(flatten)]
        input: InputArgs,
        /// Index of a Θ*-class, as listed by `classes`.
        #[arg(long, conflicts_with = "edges")]
        class: Option<usize>,
        /// Comma-separated edge ids (input order, from 0).
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<usize>>,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run every applicable method and compare against the reference.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Check this many seeded random graphs instead of one input.
        #[arg(long)]
        random: Option<usize>,
        /// Largest vertex count for --random.
        #[arg(long, default_value_t = 40)]
        max_n: usize,
        /// Random coarser partitions tried per graph.
        #[arg(long, default_value_t = 3)]
        partitions: usize,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Collapse twin classes and print the step log.
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Emit a generated graph as an edge list.
    Generate {
        /// `phenylene` to build from --cells or --chain.
        kind: Option<String>,
        #[command(flatten)]
        input: InputArgs,
        /// For phenylenes, print the hexagon placement instead.
        #[arg(long)]
        placement: bool,
    },
    /// Partial Hamming test, per-class quotient sizes and the lower bound.
    Hamming {
        #[command(flatten)]
        input: InputArgs,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Default)]
struct InputArgs {
    /// Edge-list file, `-` for stdin.
    graph: Option<PathBuf>,
    /// Phenylene from a hexagon placement file.
    #[arg(long)]
    cells: Option<PathBuf>,
    /// Phenylene chain with this many hexagons.
    #[arg(long)]
    chain: Option<usize>,
    /// Chain attachments: L, + or - per inner hexagon.
    #[arg(long)]
    kinks: Option<String>,
    /// Generated family: path, cycle, complete, hypercube, star,
    /// complete-bipartite, windmill, random, blowup, house, phenylene.
    #[arg(long)]
    family: Option<String>,
    /// Family size parameter.
    #[arg(long)]
    n: Option<usize>,
    /// First part size for complete-bipartite (defaults to --n).
    #[arg(long)]
    m: Option<usize>,
    /// Seed for the random families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vertex weights file: `v a [b]` per line.
    #[arg(long)]
    weights: Option<PathBuf>,
}

enum Failure {
    Lib(Error),
    Io(String),
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<String, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn phenylene_input(descriptor: String, placement: &BenzenoidPlacement) -> Result<Input, Failure> {
    Ok(Input::phenylene(descriptor, build_phenylene(placement)?))
}

fn load(args: &InputArgs) -> Result<Input, Failure> {
    let sources = [
        args.graph.is_some(),
        args.cells.is_some(),
        args.chain.is_some(),
        args.family.is_some(),
    ]
    .iter()
    .filter(|&&x| x)
    .count();
    if sources != 1 {
        return Err(Failure::Usage(
            "give exactly one of GRAPH, --cells, --chain or --family".into(),
        ));
    }
    let input = if let Some(path) = &args.graph {
        Input::graph(
            path.display().to_string(),
            parse_edge_list(&read_text(path)?)?,
        )
    } else if let Some(path) = &args.cells {
        let placement = parse_placement(&read_text(path)?)?;
        phenylene_input(format!("phenylene from {}", path.display()), &placement)?
    } else if let Some(h) = args.chain {
        let kinks = parse_kinks(args.kinks.as_deref().unwrap_or(""))?;
        let placement = gen_phenylene_chain(h, &kinks)?;
        phenylene_input(format!("phenylene chain h={h}"), &placement)?
    } else {
        let name: FamilyName = args.family.as_deref().unwrap_or_default().parse()?;
        let n = args
            .n
            .ok_or_else(|| Failure::Usage("--family needs --n".into()))?;
        let spec = FamilySpec {
            name,
            n,
            m: args.m,
            seed: args.seed,
            kinks: parse_kinks(args.kinks.as_deref().unwrap_or(""))?,
        };
        let descriptor = format!("{} n={n}", args.family.as_deref().unwrap_or_default());
        match spec.generate()? {
            Generated::Graph(g) => Input::graph(descriptor, g),
            Generated::Placement(p) => phenylene_input(descriptor, &p)?,
        }
    };
    match &args.weights {
        Some(path) => {
            let n = input.subject.graph().vertex_count();
            Ok(input.with_weights(parse_weights(&read_text(path)?, n)?)?)
        }
        None => Ok(input),
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_compute(input: &InputArgs, method: Method, check: bool, as_json: bool) -> Outcome {
    let report = compute(&load(input)?, method, check)?;
    let out = if as_json {
        to_json(&report)
    } else {
        report.to_text()
    };
    match &report.check {
        Some(c) if !c.agrees => Err(Failure::Mismatch(out)),
        _ => Ok(out),
    }
}

fn cmd_classes(input: &InputArgs, as_json: bool) -> Outcome {
    let input = load(input)?;
    let g = input.subject.graph();
    let classes = theta_star_classes(g);
    if as_json {
        let list: Vec<Vec<(usize, usize)>> = classes
            .iter()
            .map(|c| c.iter().map(|&e| g.edges()[e]).collect())
            .collect();
        Ok(to_json(&json!({ "count": classes.len(), "classes": list })))
    } else {
        Ok(format!("{} classes\n{}", classes.len(), classes.dump(g)))
    }
}

fn cmd_quotient(
    input: &InputArgs,
    class: Option<usize>,
    edges: Option<Vec<usize>>,
    as_json: bool,
) -> Outcome {
    let input = load(input)?;
    let g = input.subject.graph();
    let edge_set = match (class, edges) {
        (Some(i), None) => {
            let classes = theta_star_classes(g);
            if i >= classes.len() {
                return Err(Error::InvalidParameter(format!(
                    "class {i} out of range, graph has {} classes",
                    classes.len()
                ))
                .into());
            }
            classes.class(i).to_vec()
        }
        (None, Some(e)) => e,
        _ => return Err(Failure::Usage("give --class or --edges".into())),
    };
    let q = quotient(g, &edge_set)?;
    let members: Vec<&[usize]> = q.components().iter().collect();
    if as_json {
        return Ok(to_json(&json!({
            "vertices": q.graph().vertex_count(),
            "edges": q.graph().edges(),
            "components": members,
        })));
    }
    let mut out = write_edge_list(q.graph());
    out.push_str("# components\n");
    for (c, m) in members.iter().enumerate() {
        let list: Vec<String> = m.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "# {c}: {}", list.join(" "));
    }
    Ok(out)
}

fn cmd_verify(
    input: &InputArgs,
    random: Option<usize>,
    max_n: usize,
    partitions: usize,
    as_json: bool,
) -> Outcome {
    if let Some(count) = random {
        let r = verify_random(count, max_n, input.seed)?;
        let witness = r.smallest_witness.as_ref().map(write_edge_list);
        let out = if as_json {
            to_json(&json!({
                "checked": r.checked,
                "failures": r.failures,
                "smallest_witness": witness,
            }))
        } else {
            let mut s = format!("checked {} graphs, {} failures\n", r.checked, r.failures);
            if let Some(w) = &witness {
                s.push_str("smallest failing graph:\n");
                s.push_str(w);
            }
            s
        };
        return if r.failures == 0 {
            Ok(out)
        } else {
            Err(Failure::Mismatch(out))
        };
    }
    let input = load(input)?;
    let v = verify(&input, partitions, input_seed(&input))?;
    let out = if as_json {
        to_json(&v)
    } else {
        let mut s = String::new();
        for row in &v.rows {
            let _ = write!(
                s,
                "{:<20} W={} DD={} Gut={}",
                row.method, row.values.wiener, row.values.degree_distance, row.values.gutman
            );
            if let Some(w) = &row.values.weighted {
                let _ = write!(
                    s,
                    " W(a)={} W+(a)={} W(a,b)={}",
                    w.wiener_weighted, w.wiener_plus, w.wiener_double
                );
            }
            s.push_str(if row.agrees { "  ok\n" } else { "  MISMATCH\n" });
        }
        for (method, why) in &v.skipped {
            let _ = writeln!(s, "{method:<20} skipped: {why}");
        }
        let _ = writeln!(
            s,
            "distance decomposition: {}",
            if v.distances_agree { "ok" } else { "MISMATCH" }
        );
        s
    };
    if v.all_agree() {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}

fn input_seed(input: &Input) -> u64 {
    let g = input.subject.graph();
    (g.vertex_count() as u64) << 32 | g.edge_count() as u64
}

fn cmd_reduce(input: &InputArgs, as_json: bool) -> Outcome {
    let input = load(input)?;
    let g = input.subject.graph().clone();
    let n = g.vertex_count();
    if n == 1 {
        return Err(Error::InvalidParameter("nothing to reduce on a single vertex".into()).into());
    }
    let (label, dwg) = match &input.weights {
        Some(w) => (
            "W(a,b)",
            DoubleWeightedGraph::new(g, w.a.clone(), w.b.clone())?,
        ),
        None => {
            let deg = degrees_as::<Rational>(&g);
            ("DD", DoubleWeightedGraph::new(g, deg, ones(n))?)
        }
    };
    let single_label = if input.weights.is_some() {
        "W(a)"
    } else {
        "Gut"
    };
    let full = reduce_fully(&dwg);
    let oracle = Oracle::new(full.reduced.graph());
    let rest_double = oracle.wiener_double(full.reduced.a(), full.reduced.b())?;
    let rest_single = oracle.wiener_weighted(full.reduced.a())?;
    let total_double = Exact(rest_double + full.total_double);
    let total_single = Exact(rest_single + full.total_single);
    if as_json {
        return Ok(to_json(&json!({
            "steps": full.steps.iter().map(|s| json!({
                "relation": s.relation,
                "class": s.class,
                "representative": s.representative,
                "correction_double": Exact(s.correction_double),
                "correction_single": Exact(s.correction_single),
            })).collect::<Vec<_>>(),
            "reduced_vertices": full.reduced.graph().vertex_count(),
            "reduced_edges": full.reduced.graph().edge_count(),
            "labels": full.labels,
            "total_correction_double": Exact(full.total_double),
            "total_correction_single": Exact(full.total_single),
            "double": total_double,
            "single": total_single,
        })));
    }
    let mut out = String::new();
    let (mut run_d, mut run_s) = (Rational::from_integer(0), Rational::from_integer(0));
    for (i, s) in full.steps.iter().enumerate() {
        run_d += s.correction_double;
        run_s += s.correction_single;
        let class: Vec<String> = s.class.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "step {i}: {} class {{{}}} onto {} (size {}): {label} +{} {single_label} +{}  running {} / {}",
            s.relation,
            class.join(","),
            s.representative,
            s.class.len(),
            Exact(s.correction_double),
            Exact(s.correction_single),
            Exact(run_d),
            Exact(run_s),
        );
    }
    let _ = writeln!(
        out,
        "reduced graph: {} vertices, {} edges",
        full.reduced.graph().vertex_count(),
        full.reduced.graph().edge_count()
    );
    let _ = writeln!(
        out,
        "{label} = {} + {} = {total_double}",
        Exact(rest_double),
        Exact(full.total_double)
    );
    let _ = writeln!(
        out,
        "{single_label} = {} + {} = {total_single}",
        Exact(rest_single),
        Exact(full.total_single)
    );
    Ok(out)
}

fn cmd_generate(kind: Option<String>, input: &InputArgs, placement: bool) -> Outcome {
    match kind.as_deref() {
        None => {}
        Some("phenylene") => {
            if input.cells.is_none() && input.chain.is_none() {
                return Err(Failure::Usage(
                    "generate phenylene needs --cells or --chain".into(),
                ));
            }
        }
        Some(other) => return Err(Failure::Usage(format!("unknown generator `{other}`"))),
    }
    let loaded = load(input)?;
    match (&loaded.subject, placement) {
        (Subject::Phenylene(ph), true) => Ok(ph.placement().to_text()),
        (_, true) => Err(Failure::Usage(
            "--placement applies to phenylenes only".into(),
        )),
        (subject, false) => Ok(write_edge_list(subject.graph())),
    }
}

fn cmd_hamming(input: &InputArgs, as_json: bool) -> Outcome {
    let input = load(input)?;
    let g = input.subject.graph();
    let hs = HammingStructure::new(g);
    let w: Vec<Rational> = match &input.weights {
        Some(w) => w.a.clone(),
        None => degrees_as(g),
    };
    let what = if input.weights.is_some() {
        "W(a)"
    } else {
        "Gut"
    };
    let bound: Rational = hs.bound_terms(&w)?.into_iter().sum();
    let exact = Oracle::new(g).wiener_weighted(&w)?;
    let partial = hs.is_partial_hamming();
    if as_json {
        return Ok(to_json(&json!({
            "partial_hamming": partial,
            "index": what,
            "factor_sizes": hs.factor_sizes(),
            "bound": Exact(bound),
            "oracle": Exact(exact),
            "gap": Exact(exact - bound),
        })));
    }
    let sizes: Vec<String> = hs.factor_sizes().iter().map(ToString::to_string).collect();
    Ok(format!(
        "partial Hamming: {}\nclasses: {}\nquotient sizes: {}\n{what} lower bound: {}\n{what} (all pairs): {}\ngap: {}\n",
        if partial { "yes" } else { "no" },
        sizes.len(),
        sizes.join(" "),
        Exact(bound),
        Exact(exact),
        Exact(exact - bound),
    ))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute {
            input,
            method,
            check,
            json,
        } => cmd_compute(&input, method, check, json),
        Command::Classes { input, json } => cmd_classes(&input, json),
        Command::Quotient {
            input,
            class,
            edges,
            json,
        } => cmd_quotient(&input, class, edges, json),
        Command::Verify {
            input,
            random,
            max_n,
            partitions,
            json,
        } => cmd_verify(&input, random, max_n, partitions, json),
        Command::Reduce { input, json } => cmd_reduce(&input, json),
        Command::Generate {
            kind,
            input,
            placement,
        } => cmd_generate(kind, &input, placement),
        Command::Hamming { input, json } => cmd_hamming(&input, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            eprintln!("error: methods disagree");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Input => EXIT_PARSE,
                ErrorKind::Inapplicable => EXIT_INAPPLICABLE,
            })
        }
    }
}
