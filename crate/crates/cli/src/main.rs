use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sumrank::codes::LinearizedRsCode;
use sumrank::field::{make_field, FieldDescriptor, FieldKind};
use sumrank::metrics::{self, Metric, SearchOptions, DEFAULT_BUDGET};
use sumrank::skew::{format_poly, parse_poly};
use sumrank::spec_file::CodeSpecFile;
use sumrank::{geometry, search, with_code, with_field, Centralizer, Field, GaloisField, SkewRing};

/// Skew polynomials, conjugacy classes and linearized Reed-Solomon codes.
///
/// Output is one record per line: `key value` text by default, or one JSON
/// object per line with --machine.
#[derive(Parser)]
#[command(name = "sumrank", version)]
struct Cli {
    /// Emit JSON lines instead of text records.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Field parameters and the conjugacy-class census.
    Field(FieldArgs),
    /// The conjugacy class and centralizer of one element.
    Class {
        #[command(flatten)]
        field: FieldArgs,
        element: String,
    },
    /// Skew polynomial arithmetic. Polynomials are `;`-separated
    /// coefficients, constant term first; point lists are `,`-separated.
    Poly {
        #[command(flatten)]
        field: FieldArgs,
        #[command(subcommand)]
        op: PolyOp,
    },
    /// Linearized Reed-Solomon codes from a TOML spec file.
    Code {
        #[command(subcommand)]
        op: CodeOp,
    },
}

#[derive(Args)]
struct FieldArgs {
    /// Characteristic.
    #[arg(long)]
    p: u32,
    /// Extension degree of GF(p^s).
    #[arg(long, default_value_t = 1)]
    s: usize,
    /// σ(a) = a^(p^r).
    #[arg(long, default_value_t = 0)]
    r: usize,
    /// Inner derivation δ = γ(Id − σ).
    #[arg(long)]
    gamma: Option<String>,
    /// Use F_p(z) with σ = Id and δ = d/dz.
    #[arg(long, conflicts_with_all = ["s", "r", "gamma"])]
    rational: bool,
}

impl FieldArgs {
    fn descriptor(&self) -> anyhow::Result<FieldDescriptor> {
        let kind = if self.rational {
            FieldKind::Rational
        } else {
            FieldKind::Finite
        };
        Ok(make_field(kind, self.p, self.s, self.r, self.gamma.as_deref(), self.rational)?)
    }
}

#[derive(Subcommand)]
enum PolyOp {
    /// F(a), the remainder of F on right division by x − a.
    Eval { poly: String, point: String },
    Mul { a: String, b: String },
    /// Right division a = q b + r.
    Divmod { a: String, b: String },
    /// The unique F of degree < n with F(points[i]) = values[i].
    Interp { points: String, values: String },
    /// Minimal skew polynomial of a point set.
    Minpoly { points: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Hamming,
    SumRank,
    Skew,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Hamming => Metric::Hamming,
            MetricArg::SumRank => Metric::SumRank,
            MetricArg::Skew => Metric::Skew,
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    /// Maximum number of nonzero messages in an exhaustive search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker shards (default: available parallelism).
    #[arg(long)]
    workers: Option<usize>,
    /// Random messages drawn over F_p(z).
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Numerator and denominator degree bound for sampled messages.
    #[arg(long, default_value_t = 4)]
    degree_bound: usize,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            budget: self.budget,
            workers: self.workers,
        }
    }
}

#[derive(Subcommand)]
enum CodeOp {
    /// Print the generator matrix.
    Gen {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Minimum distance in one metric.
    Distance {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "sum-rank")]
        metric: MetricArg,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check MSRD, MDS, MSD and per-block MRD; exit 1 if any fails.
    Verify {
        #[arg(long)]
        spec: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Sweep random codes with the spec's block shape and dimension,
    /// keep those that are MDS with MRD block projections, and report
    /// which of them are not MSRD.
    Search {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
}

/// Collects output records; each has a text and a JSON rendering.
struct Out {
    machine: bool,
    lines: Vec<String>,
}

impl Out {
    fn record(&mut self, text: impl Into<String>, value: Value) {
        self.lines.push(if self.machine {
            value.to_string()
        } else {
            text.into()
        });
    }

    fn kv(&mut self, key: &str, value: impl std::fmt::Display, json: Value) {
        self.record(format!("{key} {value}").trim_end(), json!({ "record": key, "value": json }));
    }
}

fn split_list(s: &str) -> Vec<&str> {
    if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split(',').map(str::trim).collect()
    }
}

fn parse_list<F: Field>(f: &F, s: &str) -> anyhow::Result<Vec<F::Elem>> {
    split_list(s)
        .into_iter()
        .map(|x| f.parse_elem(x).map_err(Into::into))
        .collect()
}

fn centralizer_name(desc: &FieldDescriptor, k: Centralizer) -> String {
    match (desc, k) {
        (_, Centralizer::Whole) => "whole".to_string(),
        (FieldDescriptor::Finite(f), Centralizer::Fixed) => format!("GF({})", f.q()),
        (FieldDescriptor::Rational(f), Centralizer::Fixed) => format!("F_{0}(z^{0})", f.p()),
    }
}

fn describe_finite(f: &GaloisField, out: &mut Out) {
    out.kv("field", format!("GF({}^{})", f.p(), f.s()), json!(format!("GF({}^{})", f.p(), f.s())));
    let modulus = f.modulus().to_digit_string();
    out.kv("modulus", &modulus, json!(modulus));
    out.kv("sigma", format!("a^({}^{})", f.p(), f.r()), json!(f.r()));
    let delta = f.gamma().map_or("0".to_string(), |g| format!("gamma*(Id-sigma) gamma={}", f.format_elem(g)));
    out.kv("delta", &delta, json!(delta));
    out.kv("q", f.q(), json!(f.q()));
    out.kv("m", f.m(), json!(f.m()));
    out.kv("fixed_subfield", format!("GF({})", f.q()), json!(format!("GF({})", f.q())));
}

fn cmd_field(args: &FieldArgs, out: &mut Out) -> anyhow::Result<()> {
    match args.descriptor()? {
        FieldDescriptor::Finite(f) => {
            describe_finite(&f, out);
            let classes = geometry::conjugacy_classes(&f)?;
            out.kv("classes", classes.len(), json!(classes.len()));
            let mut nontrivial = Vec::new();
            for (i, c) in classes.iter().enumerate() {
                let size = c.len().unwrap_or(0);
                if size > 1 {
                    nontrivial.push(size);
                }
                let rep = f.format_elem(&c.rep);
                let k = match c.centralizer {
                    Centralizer::Whole => "whole".to_string(),
                    Centralizer::Fixed => format!("GF({})", f.q()),
                };
                out.record(
                    format!("class {i} rep={rep} size={size} centralizer={k}"),
                    json!({ "record": "class", "index": i, "rep": rep, "size": size, "centralizer": k }),
                );
            }
            out.kv("nontrivial_classes", nontrivial.len(), json!(nontrivial.len()));
            let sizes: Vec<String> = nontrivial.iter().map(ToString::to_string).collect();
            out.kv("nontrivial_sizes", sizes.join(","), json!(nontrivial));
        }
        FieldDescriptor::Rational(f) => {
            let p = f.p();
            out.kv("field", format!("F_{p}(z)"), json!(format!("F_{p}(z)")));
            out.kv("sigma", "Id", json!("Id"));
            out.kv("delta", "d/dz", json!("d/dz"));
            out.kv("fixed_subfield", format!("F_{p}(z^{p})"), json!(format!("F_{p}(z^{p})")));
            out.kv("degree_over_fixed", p, json!(p));
            out.kv("classes", "infinite", json!(null));
        }
    }
    Ok(())
}

fn cmd_class(args: &FieldArgs, element: &str, out: &mut Out) -> anyhow::Result<()> {
    let desc = args.descriptor()?;
    with_field!(&desc, f => {
        let a = f.parse_elem(element)?;
        let rep = f.format_elem(&a);
        let k = centralizer_name(&desc, f.centralizer_of(&a));
        out.kv("element", &rep, json!(rep));
        out.kv("centralizer", &k, json!(k));
        match f.elements() {
            Some(all) => {
                let members: Vec<String> = all
                    .iter()
                    .filter(|c| geometry::are_conjugate(f, &a, c).unwrap_or(false))
                    .map(|c| f.format_elem(c))
                    .collect();
                out.kv("size", members.len(), json!(members.len()));
                out.kv("members", members.join(","), json!(members));
            }
            None => out.kv("size", "infinite", json!(null)),
        }
    });
    Ok(())
}

fn poly_op<F: Field>(f: &F, op: &PolyOp, out: &mut Out) -> anyhow::Result<()> {
    let ring = SkewRing::new(f);
    let poly = |s: &str| parse_poly(f, s);
    match op {
        PolyOp::Eval { poly: p, point } => {
            let v = ring.evaluate(&poly(p)?, &f.parse_elem(point)?);
            let s = f.format_elem(&v);
            out.record(s.clone(), json!({ "record": "eval", "value": s }));
        }
        PolyOp::Mul { a, b } => {
            let s = format_poly(f, &ring.mul(&poly(a)?, &poly(b)?));
            out.record(s.clone(), json!({ "record": "mul", "value": s }));
        }
        PolyOp::Divmod { a, b } => {
            let (q, r) = ring.right_divmod(&poly(a)?, &poly(b)?)?;
            let (q, r) = (format_poly(f, &q), format_poly(f, &r));
            out.record(format!("{q}\n{r}"), json!({ "record": "divmod", "quotient": q, "remainder": r }));
        }
        PolyOp::Interp { points, values } => {
            let pts = parse_list(f, points)?;
            let vals = parse_list(f, values)?;
            let s = format_poly(f, &geometry::lagrange_interpolate(f, &pts, &vals)?);
            out.record(s.clone(), json!({ "record": "interp", "value": s }));
        }
        PolyOp::Minpoly { points } => {
            let closed = geometry::minimal_skew_poly(f, &parse_list(f, points)?);
            let s = format_poly(f, closed.min_poly());
            let basis: Vec<String> = closed.basis().iter().map(|b| f.format_elem(b)).collect();
            out.record(
                s.clone(),
                json!({ "record": "minpoly", "value": s, "rank": closed.rank(), "basis": basis }),
            );
        }
    }
    Ok(())
}

fn load(path: &PathBuf) -> anyhow::Result<sumrank::spec_file::AnyCode> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    CodeSpecFile::load(&text).with_context(|| path.display().to_string())
}

fn code_header<F: Field>(code: &LinearizedRsCode<F>, out: &mut Out) {
    let lengths: Vec<String> = code.spec.lengths().iter().map(ToString::to_string).collect();
    out.kv("n", code.n(), json!(code.n()));
    out.kv("k", code.k(), json!(code.k()));
    out.kv("lengths", lengths.join(","), json!(code.spec.lengths()));
    let conj = if code.spec.conjugacy_asserted() { "asserted" } else { "checked" };
    out.kv("conjugacy", conj, json!(conj));
}

fn report_distance(r: &metrics::DistanceReport, out: &mut Out) {
    let min = r.minimum.map_or("none".to_string(), |d| d.to_string());
    let blocks: Vec<String> = r.witness_codeword.iter().map(|b| b.join(",")).collect();
    out.record(
        format!(
            "distance metric={} minimum={min} bound={} evidence={} examined={} witness={} codeword={}",
            r.metric,
            r.bound,
            r.evidence.to_string().replace(' ', "_"),
            r.examined,
            r.witness_message.join(","),
            blocks.join("|"),
        ),
        json!({ "record": "distance", "report": r }),
    );
}

/// Returns whether every requested verification passed.
fn cmd_code(op: &CodeOp, out: &mut Out) -> anyhow::Result<bool> {
    match op {
        CodeOp::Gen { spec } => {
            let code = load(spec)?;
            with_code!(&code, c => {
                code_header(c, out);
                let f = c.field();
                for (l, row) in c.generator.rows.iter().enumerate() {
                    let blocks = sumrank::metrics::BlockVector::from_flat(row.clone(), &c.generator.lengths, c.generator.centralizers.clone());
                    let text: Vec<Vec<String>> = blocks.blocks.iter().map(|b| b.iter().map(|x| f.format_elem(x)).collect()).collect();
                    let joined: Vec<String> = text.iter().map(|b| b.join(",")).collect();
                    out.record(format!("row {l} {}", joined.join(" | ")), json!({ "record": "row", "index": l, "blocks": text }));
                }
            });
            Ok(true)
        }
        CodeOp::Distance { spec, metric, search } => {
            let code = load(spec)?;
            let metric = Metric::from(*metric);
            let report = with_code!(&code, c => {
                code_header(c, out);
                if c.field().is_finite() {
                    metrics::min_distance(c, metric, search.options())?
                } else {
                    metrics::sample_weight_floor(c.field(), &c.generator, metric, search.samples, search.degree_bound, search.seed)?
                }
            });
            report_distance(&report, out);
            Ok(true)
        }
        CodeOp::Verify { spec, search } => {
            let code = load(spec)?;
            with_code!(&code, c => {
                code_header(c, out);
                if c.field().is_finite() {
                    let rep = metrics::verify_optimal(c, search.options())?;
                    for r in [&rep.sum_rank, &rep.hamming, &rep.skew] {
                        report_distance(r, out);
                    }
                    for b in &rep.blocks {
                        let mrd = b.mrd.map_or("n/a".to_string(), |x| x.to_string());
                        let min = b.minimum.map_or("none".to_string(), |d| d.to_string());
                        out.record(
                            format!("block {} length={} dimension={} rank_distance={min} bound={} mrd={mrd}", b.block, b.length, b.dimension, b.bound),
                            json!({ "record": "block", "projection": b }),
                        );
                    }
                    out.kv("msrd", rep.msrd, json!(rep.msrd));
                    out.kv("mds", rep.mds, json!(rep.mds));
                    out.kv("msd", rep.msd, json!(rep.msd));
                    out.kv("blocks_mrd", rep.all_blocks_mrd(), json!(rep.all_blocks_mrd()));
                    out.kv("passed", rep.passed(), json!(rep.passed()));
                    Ok(rep.passed())
                } else {
                    let r = metrics::sample_weight_floor(c.field(), &c.generator, Metric::SumRank, search.samples, search.degree_bound, search.seed)?;
                    report_distance(&r, out);
                    let ok = r.minimum.map_or(true, |d| d >= r.bound);
                    out.kv("floor_consistent", ok, json!(ok));
                    Ok(ok)
                }
            })
        }
        CodeOp::Search { spec, trials, search } => {
            let code = load(spec)?;
            let sumrank::spec_file::AnyCode::Finite(c) = &code else {
                bail!("search needs a finite field");
            };
            let rep = search::search_mds_mrd_vs_msrd(
                c.field(),
                &c.generator.lengths,
                &c.generator.centralizers,
                c.k(),
                *trials,
                search.seed,
                search.options(),
            )?;
            code_header(c, out);
            for v in &rep.violators {
                let rows: Vec<String> = v.rows.iter().map(|r| r.join(",")).collect();
                let d = v.sum_rank_distance.map_or("none".to_string(), |d| d.to_string());
                out.record(
                    format!("violator trial={} sum_rank={d} bound={} rows={}", v.trial, v.bound, rows.join(";")),
                    json!({ "record": "violator", "violator": v }),
                );
            }
            out.record(
                format!(
                    "search trials={} seed={} mds={} candidates={} msrd={} violators={}",
                    rep.trials,
                    rep.seed,
                    rep.mds,
                    rep.candidates,
                    rep.msrd,
                    rep.violators.len()
                ),
                json!({ "record": "search", "trials": rep.trials, "seed": rep.seed, "mds": rep.mds,
                        "candidates": rep.candidates, "msrd": rep.msrd, "violators": rep.violators.len() }),
            );
            Ok(true)
        }
    }
}

fn run(cli: &Cli, out: &mut Out) -> anyhow::Result<bool> {
    match &cli.command {
        Command::Field(args) => cmd_field(args, out).map(|_| true),
        Command::Class { field, element } => cmd_class(field, element, out).map(|_| true),
        Command::Poly { field, op } => {
            let desc = field.descriptor()?;
            with_field!(&desc, f => poly_op(f, op, out))?;
            Ok(true)
        }
        Command::Code { op } => cmd_code(op, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        machine: cli.machine,
        lines: Vec::new(),
    };
    let result = run(&cli, &mut out);
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    for line in &out.lines {
        let _ = writeln!(lock, "{line}");
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            if cli.machine {
                let _ = writeln!(lock, "{}", json!({ "record": "error", "message": format!("{e:#}") }));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
