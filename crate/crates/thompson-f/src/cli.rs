//! Command-line driver: argument parsing, dispatch, and serialization.
//!
//! Exit codes: `0` success, `2` verified-impossible findings
//! (`NoSolutionInBounds`, `NotDivisible`), `1` anything else. JSON documents
//! carry a top-level `"schema": "1"` and render polynomials, group elements,
//! and exact rationals with the same text grammar the parsers accept, so
//! every output can be fed back in.

use crate::config::{parse_field, Config, OutputMode};
use crate::error::{Error, Result};
use crate::field::FieldTag;
use crate::forests;
use crate::graphs::{self, CayleySubgraph, FlowAssignment, Side};
use crate::group::{gig_translate, reduce_word, GroupElement};
use crate::monoid::monomials_up_to;
use crate::relations::relation_to_solution;
use crate::ring::Polynomial;
use crate::search::{build_system, minimal_chain_search};
use crate::solve::{
    basis_u, chain_solve, decompose_solution, divide_by_v0, phi_relation, solve_x0_b,
};
use crate::text::{parse_group_element, parse_monomial, parse_poly, parse_rational, parse_word};
use clap::{Parser, Subcommand, ValueEnum};
use num::rational::BigRational;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(
    name = "thf",
    version,
    about = "Exact computer algebra for R. Thompson's group F"
)]
struct Cli {
    /// TOML config file (default: the file named by THF_CONFIG, if set)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Coefficient field: q (rationals) or fp (prime field)
    #[arg(long, global = true, value_name = "q|fp")]
    field: Option<String>,
    /// Modulus for --field fp (a prime below 2^31)
    #[arg(long, global = true, value_name = "P")]
    prime: Option<u32>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized post-processing (basis sparsification restarts)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rewrite a polynomial into graded-lex normal form
    Normalize {
        /// Polynomial in the text grammar, e.g. "x1*x0" or "1 - 2/3*x0^2"
        poly: String,
    },
    /// Multiply two polynomials
    Mul { a: String, b: String },
    /// Reduce a group word to its normal form p * (q)^-1
    Reduce {
        /// Word in x<i> / X<i> letters, e.g. "x0*X1*x2^-2"
        word: String,
    },
    /// Least common right multiple of two monomials
    Lcm { a: String, b: String },
    /// Common positive multiplier carrying group elements into the monoid
    Gig {
        /// Group words g_i; prints g with every g_i * g positive
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Apply the shift endomorphism x_i -> x_{i+t}
    Phi {
        poly: String,
        #[arg(short, long, default_value_t = 1)]
        t: u32,
    },
    /// Find v_0..v_m, not all zero, with sum_t phi^t(b) v_t = 0
    PhiRelation {
        #[arg(short)]
        b: String,
    },
    /// Solve (1 - x0) u = b v with v nonzero
    SolveX0b {
        #[arg(short)]
        b: String,
    },
    /// Solve the chain (1 - x0) u_0 = (1 - x1) u_1 = ... = (1 - x_m) u_m
    Chain {
        #[arg(short)]
        m: usize,
    },
    /// Divide by the basic v0: v = v0 w1 + x0 w2 + w3 with w2, w3 shifted
    DivideV0 { poly: String },
    /// Decompose a solution of (1 - x0) u = (1 - x1) v over the u-basis
    Decompose {
        #[arg(short)]
        u: String,
        #[arg(short)]
        v: String,
    },
    /// The k-th basis solution u_k
    BasisU {
        #[arg(short)]
        k: usize,
    },
    /// Turn a relation word (reducing to 1) into a verified solution pair
    Relation2solution { word: String },
    /// Density metrics of a finite Cayley subgraph (always JSON)
    Density {
        /// File with one group word per line
        #[arg(long, value_name = "FILE")]
        set: PathBuf,
        /// Comma-separated generator words, e.g. x0,x1,x2
        #[arg(long)]
        gens: String,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
    },
    /// Exact growth ratio |A Y| / |Y| (always JSON)
    AyRatio {
        #[arg(long, value_name = "FILE")]
        set: PathBuf,
        #[arg(long)]
        gens: String,
        /// Adjoin the identity to A first
        #[arg(long)]
        include_identity: bool,
    },
    /// Verify an exact flow on the internal edges of a subgraph (always JSON)
    FlowCheck {
        #[arg(long, value_name = "FILE")]
        set: PathBuf,
        #[arg(long)]
        gens: String,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// File with lines "<from-word> <+i|-i> <rational>"
        #[arg(long, value_name = "FILE")]
        flow: PathBuf,
        /// Required inflow at every vertex
        #[arg(long, default_value = "0")]
        eps: String,
    },
    /// Count or enumerate binary forests
    Forest {
        #[command(subcommand)]
        action: ForestAction,
    },
    /// Bounded brute-force searches
    Search {
        #[command(subcommand)]
        what: SearchCommand,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ForestKind {
    /// Binary trees by caret count
    Trees,
    /// Forests by leaf count
    Forests,
    /// Forests with fixed root and leaf counts
    S,
    /// Height-bounded marked forests by leaf count
    Bb,
}

#[derive(Debug, Clone, Copy, clap::Args)]
struct ForestDims {
    #[arg(long, value_enum)]
    kind: ForestKind,
    /// Caret count (kind trees)
    #[arg(long)]
    carets: Option<usize>,
    /// Leaf count (kinds forests, s, bb)
    #[arg(long)]
    leaves: Option<usize>,
    /// Root count (kind s)
    #[arg(long)]
    roots: Option<usize>,
    /// Height cap (kind bb)
    #[arg(long)]
    height: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum ForestAction {
    /// Count without enumerating
    Count {
        #[command(flatten)]
        dims: ForestDims,
    },
    /// List every object, one per line
    Enumerate {
        #[command(flatten)]
        dims: ForestDims,
    },
}

#[derive(Debug, Subcommand)]
enum SearchCommand {
    /// Nullspace search for chain solutions over a bounded support
    Chain {
        #[arg(short)]
        m: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        max_index: u32,
        /// Also write the assembled sparse system as "row col value" lines
        #[arg(long, value_name = "FILE")]
        triplets: Option<PathBuf>,
    },
}

/// Parses `args` and runs one command, writing results to `out` and errors to
/// `err`; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            }
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            if e.is_finding() {
                2
            } else {
                1
            }
        }
    }
}

fn effective_config(cli: &Cli) -> Result<Config> {
    let mut config = Config::load(cli.config.as_deref())?;
    match (&cli.field, cli.prime) {
        (Some(name), prime) => config.field = parse_field(name, prime)?,
        (None, Some(_)) => {
            return Err(Error::InvalidConfig(
                "--prime requires --field fp".into(),
            ))
        }
        (None, None) => {}
    }
    if cli.json {
        config.output = OutputMode::Json;
    }
    Ok(config)
}

fn field_value(tag: FieldTag) -> Value {
    match tag {
        FieldTag::Rational => json!("Q"),
        FieldTag::Prime(_) => json!("Fp"),
    }
}

/// Builds the standard solution document: an equation, named unknowns, and
/// the verification flag.
fn solution_doc(
    equation: &str,
    names: &[&str],
    polys: &[Polynomial],
    tag: FieldTag,
    extra: &[(&str, Value)],
) -> Value {
    let mut doc = serde_json::Map::new();
    doc.insert("schema".into(), json!("1"));
    doc.insert("equation".into(), json!(equation));
    doc.insert(
        "unknowns".into(),
        Value::Array(polys.iter().map(|p| json!(p.to_string())).collect()),
    );
    doc.insert(
        "names".into(),
        Value::Array(names.iter().map(|n| json!(n)).collect()),
    );
    doc.insert("verified".into(), json!(true));
    doc.insert("field".into(), field_value(tag));
    if let FieldTag::Prime(p) = tag {
        doc.insert("prime".into(), json!(p));
    }
    for (key, value) in extra {
        doc.insert((*key).into(), value.clone());
    }
    Value::Object(doc)
}

fn emit_solution(
    out: &mut dyn Write,
    mode: OutputMode,
    equation: &str,
    names: &[&str],
    polys: &[Polynomial],
    tag: FieldTag,
    extra: &[(&str, Value)],
) -> Result<()> {
    match mode {
        OutputMode::Json => writeln!(
            out,
            "{}",
            solution_doc(equation, names, polys, tag, extra)
        )
        .map_err(io_error),
        OutputMode::Text => {
            for (name, poly) in names.iter().zip(polys) {
                writeln!(out, "{name} = {poly}").map_err(io_error)?;
            }
            writeln!(out, "verified: true").map_err(io_error)
        }
    }
}

fn emit_value(out: &mut dyn Write, mode: OutputMode, key: &str, text: String) -> Result<()> {
    match mode {
        OutputMode::Json => {
            writeln!(out, "{}", json!({ "schema": "1", key: text })).map_err(io_error)
        }
        OutputMode::Text => writeln!(out, "{text}").map_err(io_error),
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn rational_str(r: &BigRational) -> String {
    r.to_string()
}

/// Reads a vertex-set file: one group word per line; blank lines and lines
/// starting with `#` are skipped.
fn read_vertex_set(path: &Path) -> Result<BTreeSet<GroupElement>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut set = BTreeSet::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        set.insert(reduce_word(&parse_word(line)?));
    }
    Ok(set)
}

fn parse_gens(text: &str) -> Result<Vec<GroupElement>> {
    let gens: Result<Vec<GroupElement>> = text
        .split(',')
        .map(|part| parse_group_element(part.trim()))
        .collect();
    let gens = gens?;
    if gens.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(gens)
}

/// Reads a flow file: each line `<from-word> <label> <value>` with the label
/// a signed 1-based generator index; the word may contain spaces as long as
/// the last two fields are the label and the value.
fn read_flow(path: &Path, num_gens: usize) -> Result<FlowAssignment> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut flow = FlowAssignment::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 3 {
            return Err(Error::Syntax {
                position: lineno + 1,
                message: "flow line needs <from-word> <label> <value>".into(),
            });
        }
        let value = parse_rational(fields[fields.len() - 1])?;
        let label: i32 = fields[fields.len() - 2].parse().map_err(|_| Error::Syntax {
            position: lineno + 1,
            message: format!("bad edge label {:?}", fields[fields.len() - 2]),
        })?;
        if label == 0 || label.unsigned_abs() as usize > num_gens {
            return Err(Error::Syntax {
                position: lineno + 1,
                message: format!("edge label {label} out of range for {num_gens} generators"),
            });
        }
        let word = fields[..fields.len() - 2].join("");
        let from = parse_group_element(&word)?;
        flow.set(from, label, value);
    }
    Ok(flow)
}

fn forest_dims(dims: &ForestDims) -> Result<(usize, usize)> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| {
            Error::InvalidConfig(format!("--{flag} is required for this forest kind"))
        })
    };
    match dims.kind {
        ForestKind::Trees => Ok((need(dims.carets, "carets")?, 0)),
        ForestKind::Forests => Ok((need(dims.leaves, "leaves")?, 0)),
        ForestKind::S => Ok((need(dims.roots, "roots")?, need(dims.leaves, "leaves")?)),
        ForestKind::Bb => Ok((need(dims.leaves, "leaves")?, need(dims.height, "height")?)),
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let config = effective_config(&cli)?;
    let tag = config.field;
    let limits = &config.limits;
    let mode = config.output;
    match cli.command {
        Command::Normalize { poly } => {
            let p = parse_poly(&poly, tag)?;
            emit_value(out, mode, "poly", p.to_string())
        }
        Command::Mul { a, b } => {
            let p = &parse_poly(&a, tag)? * &parse_poly(&b, tag)?;
            emit_value(out, mode, "poly", p.to_string())
        }
        Command::Reduce { word } => {
            let element = reduce_word(&parse_word(&word)?);
            emit_value(out, mode, "element", element.to_string())
        }
        Command::Lcm { a, b } => {
            let l = crate::group::lcm(&parse_monomial(&a)?, &parse_monomial(&b)?);
            emit_value(out, mode, "monomial", l.to_string())
        }
        Command::Gig { words } => {
            let elements: Result<Vec<GroupElement>> =
                words.iter().map(|w| parse_group_element(w)).collect();
            let (g, images) = gig_translate(&elements?);
            match mode {
                OutputMode::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "schema": "1",
                        "g": g.to_string(),
                        "images": images.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    })
                )
                .map_err(io_error),
                OutputMode::Text => {
                    writeln!(out, "g = {g}").map_err(io_error)?;
                    for image in &images {
                        writeln!(out, "{image}").map_err(io_error)?;
                    }
                    Ok(())
                }
            }
        }
        Command::Phi { poly, t } => {
            let p = parse_poly(&poly, tag)?.shift_up(t);
            emit_value(out, mode, "poly", p.to_string())
        }
        Command::PhiRelation { b } => {
            let b = parse_poly(&b, tag)?;
            let vs = phi_relation(&b, limits)?;
            let names: Vec<String> = (0..vs.len()).map(|t| format!("v{t}")).collect();
            let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
            emit_solution(
                out,
                mode,
                "sum_t phi^t(b) v_t = 0",
                &name_refs,
                &vs,
                tag,
                &[("b", json!(b.to_string()))],
            )
        }
        Command::SolveX0b { b } => {
            let b = parse_poly(&b, tag)?;
            let sol = solve_x0_b(&b, limits)?;
            emit_solution(
                out,
                mode,
                "(1 - x0) u = b v",
                &["u", "v"],
                &[sol.u, sol.v],
                tag,
                &[("b", json!(b.to_string()))],
            )
        }
        Command::Chain { m } => {
            let sol = chain_solve(m, tag, limits)?;
            let names: Vec<String> = (0..sol.us.len()).map(|j| format!("u{j}")).collect();
            let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let equation = format!("(1 - x0) u0 = (1 - x1) u1 = ... = (1 - x{m}) u{m}");
            emit_solution(
                out,
                mode,
                &equation,
                &name_refs,
                &sol.us,
                tag,
                &[("common", json!(sol.common.to_string()))],
            )?;
            if mode == OutputMode::Text {
                writeln!(out, "w = {}", sol.common).map_err(io_error)?;
            }
            Ok(())
        }
        Command::DivideV0 { poly } => {
            let v = parse_poly(&poly, tag)?;
            let (w1, w2, w3) = divide_by_v0(&v, limits)?;
            emit_solution(
                out,
                mode,
                "v = v0 w1 + x0 w2 + w3",
                &["w1", "w2", "w3"],
                &[w1, w2, w3],
                tag,
                &[("v", json!(v.to_string()))],
            )
        }
        Command::Decompose { u, v } => {
            let u = parse_poly(&u, tag)?;
            let v = parse_poly(&v, tag)?;
            let rs = decompose_solution(&u, &v, limits)?;
            let names: Vec<String> = (0..rs.len()).map(|k| format!("r{k}")).collect();
            let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
            emit_solution(
                out,
                mode,
                "u = sum_k u_k r_k",
                &name_refs,
                &rs,
                tag,
                &[],
            )
        }
        Command::BasisU { k } => {
            let p = basis_u(k, tag, limits)?;
            emit_value(out, mode, "poly", p.to_string())
        }
        Command::Relation2solution { word } => {
            let letters = parse_word(&word)?;
            let sol = relation_to_solution(&letters, tag)?;
            emit_solution(
                out,
                mode,
                "(1 - x0) u = (1 - x1) v",
                &["u", "v"],
                &[sol.u, sol.v],
                tag,
                &[("word", json!(word))],
            )
        }
        Command::Density { set, gens, side } => {
            let vertices = read_vertex_set(&set)?;
            let graph = CayleySubgraph::new(vertices, parse_gens(&gens)?, side.into())?;
            let metrics = graph.metrics()?;
            writeln!(
                out,
                "{}",
                json!({
                    "schema": "1",
                    "delta": rational_str(&metrics.delta),
                    "iota": rational_str(&metrics.iota),
                    "m": metrics.m,
                    "identity_ok": true,
                    "vertices": graph.num_vertices(),
                    "internal_edges": metrics.internal_edges,
                    "external_edges": metrics.external_edges,
                    "inner_boundary": metrics.inner_boundary,
                })
            )
            .map_err(io_error)
        }
        Command::AyRatio {
            set,
            gens,
            include_identity,
        } => {
            let ys = read_vertex_set(&set)?;
            let gens = parse_gens(&gens)?;
            let include = include_identity || config.include_identity;
            let ratio = graphs::ay_ratio(&gens, &ys, include)?;
            writeln!(
                out,
                "{}",
                json!({
                    "schema": "1",
                    "ratio": rational_str(&ratio),
                    "m": gens.len(),
                    "identity_included": include,
                    "vertices": ys.len(),
                })
            )
            .map_err(io_error)
        }
        Command::FlowCheck {
            set,
            gens,
            side,
            flow,
            eps,
        } => {
            let vertices = read_vertex_set(&set)?;
            let gens = parse_gens(&gens)?;
            let assignment = read_flow(&flow, gens.len())?;
            let graph = CayleySubgraph::new(vertices, gens, side.into())?;
            let eps = parse_rational(&eps)?;
            let report = graphs::flow_check(&graph, &assignment, &eps)?;
            writeln!(
                out,
                "{}",
                json!({
                    "schema": "1",
                    "ok": report.ok,
                    "antisymmetric": report.antisymmetric,
                    "min_inflow": rational_str(&report.min_inflow),
                    "max_abs": rational_str(&report.max_abs),
                    "eps": rational_str(&eps),
                    "m": graph.gens().len(),
                })
            )
            .map_err(io_error)
        }
        Command::Forest { action } => match action {
            ForestAction::Count { dims } => {
                let (a, b) = forest_dims(&dims)?;
                let count = match dims.kind {
                    ForestKind::Trees => forests::count_trees(a),
                    ForestKind::Forests => forests::count_forests(a),
                    ForestKind::S => forests::count_s(a, b),
                    ForestKind::Bb => forests::count_bb(a, b),
                };
                emit_value(out, mode, "count", count.to_string())
            }
            ForestAction::Enumerate { dims } => {
                let (a, b) = forest_dims(&dims)?;
                let lines: Vec<String> = match dims.kind {
                    ForestKind::Trees => forests::enumerate_trees(a)?
                        .iter()
                        .map(|t| t.to_string())
                        .collect(),
                    ForestKind::Forests => forests::enumerate_forests(a)?
                        .iter()
                        .map(|f| f.to_string())
                        .collect(),
                    ForestKind::S => forests::enumerate_s(a, b)?
                        .iter()
                        .map(|f| f.to_string())
                        .collect(),
                    ForestKind::Bb => forests::enumerate_bb(a, b)?
                        .iter()
                        .map(|f| f.to_string())
                        .collect(),
                };
                match mode {
                    OutputMode::Json => {
                        writeln!(out, "{}", json!({ "schema": "1", "items": lines }))
                            .map_err(io_error)
                    }
                    OutputMode::Text => {
                        for line in lines {
                            writeln!(out, "{line}").map_err(io_error)?;
                        }
                        Ok(())
                    }
                }
            }
        },
        Command::Search { what } => match what {
            SearchCommand::Chain {
                m,
                max_degree,
                max_index,
                triplets,
            } => {
                if let Some(path) = triplets {
                    let support = monomials_up_to(max_degree, max_index);
                    let lefts: Vec<Polynomial> = (0..=m as u32)
                        .map(|i| Polynomial::one_minus(tag, i))
                        .collect();
                    let sys = build_system(&lefts, &vec![support; m + 1])?;
                    std::fs::write(&path, sys.to_triplets())
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                }
                let candidates = minimal_chain_search(m, max_degree, max_index, tag, cli.seed, limits)?;
                let docs: Vec<Value> = candidates
                    .iter()
                    .map(|c| {
                        json!({
                            "us": c.us.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                            "common": c.common.to_string(),
                            "support": c.us.iter().map(|p| p.num_terms()).sum::<usize>(),
                        })
                    })
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({
                        "schema": "1",
                        "m": m,
                        "max_degree": max_degree,
                        "max_index": max_index,
                        "field": field_value(tag),
                        "seed": cli.seed,
                        "candidates": docs,
                    })
                )
                .map_err(io_error)
            }
        },
    }
}
