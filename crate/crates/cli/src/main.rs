//! `mpg4`: command-line front end for the maximal planar graph toolkit.

mod input;
mod report;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use input::load_graph;
use mpg4_core::chrompoly::{chromatic_polynomial, Golden, DEFAULT_BITS};
use mpg4_core::coloring::{enumerate_partitions, find_coloring, is_uniquely_colorable, ColorPartition};
use mpg4_core::corpus::{
    enumerate_by_flips, enumerate_mpg_capped, load_slice, mismatch_count, save_slice, slice_path, theorem_sweep,
    verify_appendix1, verify_appendix2, verify_fwf22_counts, verify_order13_existence, verify_table_counts,
    CorpusSlice, VerificationReport, DEFAULT_CAP,
};
use mpg4_core::fwf::{enumerate_fwf22, fwf22_from_color_sequence, gamma_formula, is_fwf, is_fwf22, ColorSequence, Fwf22};
use mpg4_core::triangulation::{canonical_certificate, encode_graph6, to_dot, Triangulation, VertexId};
use mpg4_core::wheelops::{all_colored_contractions, colored_contract, contract_wheel_with, extend_wheel, reduce_to_k3, ExtendSite};
use report::Envelope;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "mpg4", version, about = "Four-colouring toolkit for maximal planar graphs")]
struct Cli {
    /// Output format; defaults to json for `verify` and text otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Leave the `generated_at_unix` field out of JSON output.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Worker threads for enumeration and sweeps (default: all cores).
    #[arg(long, global = true, env = "MPG4_WORKERS")]
    workers: Option<usize>,
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Suppress progress messages on standard error.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate triangulations of one order up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Chromatic polynomial of a graph, or its value at a point.
    Poly {
        graph: String,
        /// Integer, `tau2` (tau squared) or `tau-sqrt5` (tau times sqrt 5).
        #[arg(long)]
        at: Option<String>,
        /// Fixed-point precision for decimal output of golden-ratio values.
        #[arg(long, default_value_t = DEFAULT_BITS)]
        bits: u32,
    },
    /// Colour-class partitions into at most k classes.
    Partitions {
        graph: String,
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Whether the graph has exactly one colour-class partition.
    Unique {
        graph: String,
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Recursive (FWF) graphs.
    #[command(subcommand)]
    Fwf(FwfCommand),
    /// Wheel contractions, extensions and reduction to K3.
    #[command(subcommand)]
    Wheel(WheelCommand),
    /// Audit the published counts, listings and theorems.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// Largest order swept by `theorems`.
        #[arg(long, default_value_t = 11)]
        max_order: usize,
    },
    /// Convert a graph to another format.
    Export {
        #[arg(value_enum)]
        to: ExportFormat,
        graph: String,
    },
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    order: usize,
    #[arg(long, default_value_t = 3)]
    min_degree: usize,
    #[arg(long, value_enum, default_value_t = Strategy::Closure)]
    strategy: Strategy,
    /// Largest order accepted.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Save the slice as a graph6 file in this directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Reuse a slice already saved in `--out` instead of enumerating.
    #[arg(long, requires = "out")]
    resume: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Strategy {
    /// Closure from K3 under wheel extensions.
    Closure,
    /// Breadth-first search of the edge-flip graph.
    Flips,
}

#[derive(Subcommand, Debug)]
enum FwfCommand {
    /// Degree-3 peeling order down to K4, if one exists.
    Check { graph: String },
    /// Build the (2,2)-FWF graph spelled by a colour sequence.
    FromSeq {
        sequence: String,
        #[arg(long, value_enum)]
        export: Option<ExportFormat>,
    },
    /// All (2,2)-FWF graphs of one order.
    Enumerate22 {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Subcommand, Debug)]
enum WheelCommand {
    /// Contract the wheel centred at a vertex.
    Contract {
        graph: String,
        #[arg(long)]
        vertex: VertexId,
        /// Index of the link pair to merge, in link order.
        #[arg(long, conflicts_with = "colored")]
        choice: Option<usize>,
        /// Merge same-coloured link vertices of a 4-colouring instead.
        #[arg(long)]
        colored: bool,
        /// With `--colored`, list every admissible merge set.
        #[arg(long, requires = "colored")]
        all: bool,
    },
    /// Grow a new wheel at a site: `edge:a,b`, `face:a,b,c`, `path:x,u,y`
    /// or `funnel:top,stem,b1,b2`.
    Extend {
        graph: String,
        #[arg(long)]
        site: String,
    },
    /// Contract wheels until K3 remains.
    Reduce { graph: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    #[value(name = "table5.1")]
    Table,
    Appendix1,
    Appendix2,
    Theorems,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
    Graph6,
}

/// Bad input rather than a failed computation.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(Usage(msg.into()))
}

/// A command's result in both renderings.
struct Output {
    json: Value,
    text: String,
}

impl Output {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Output { json, text: text.into() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    if let Some(n) = cli.workers {
        if n == 0 {
            return Err(usage("--workers must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("starting worker pool")?;
    }
    let progress = |m: &str| {
        if !cli.quiet {
            eprintln!("[mpg4] {m}");
        }
    };
    let (name, out) = dispatch(&cli.command, &progress)?;
    let format = cli.format.unwrap_or(if matches!(cli.command, Command::Verify { .. }) { Format::Json } else { Format::Text });
    let mut rendered = match format {
        Format::Json => {
            let env = Envelope { command: name, timestamp: !cli.no_timestamp };
            serde_json::to_string_pretty(&env.wrap(out.json))?
        }
        Format::Text => out.text.trim_end().to_string(),
    };
    rendered.push('\n');
    match &cli.output {
        Some(p) => std::fs::write(p, rendered).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn dispatch(cmd: &Command, progress: &dyn Fn(&str)) -> Result<(String, Output)> {
    Ok(match cmd {
        Command::Enumerate(a) => (format!("enumerate --order {} --min-degree {}", a.order, a.min_degree), enumerate(a, progress)?),
        Command::Poly { graph, at, bits } => ("poly".into(), poly(&load(graph)?, at.as_deref(), *bits)?),
        Command::Partitions { graph, k } => ("partitions".into(), partitions(&load(graph)?, *k)),
        Command::Unique { graph, k } => ("unique".into(), unique(&load(graph)?, *k)?),
        Command::Fwf(FwfCommand::Check { graph }) => ("fwf check".into(), fwf_check(&load(graph)?)),
        Command::Fwf(FwfCommand::FromSeq { sequence, export }) => ("fwf from-seq".into(), fwf_from_seq(sequence, *export)?),
        Command::Fwf(FwfCommand::Enumerate22 { order }) => ("fwf enumerate22".into(), fwf_enumerate22(*order)?),
        Command::Wheel(WheelCommand::Contract { graph, vertex, choice, colored, all }) => {
            ("wheel contract".into(), wheel_contract(&load(graph)?, *vertex, *choice, *colored, *all)?)
        }
        Command::Wheel(WheelCommand::Extend { graph, site }) => ("wheel extend".into(), wheel_extend(&load(graph)?, site)?),
        Command::Wheel(WheelCommand::Reduce { graph }) => ("wheel reduce".into(), wheel_reduce(&load(graph)?)?),
        Command::Verify { target, max_order } => {
            let name = target.to_possible_value().expect("no skipped variants").get_name().to_string();
            (format!("verify {name}"), verify(*target, *max_order, progress)?)
        }
        Command::Export { to, graph } => ("export".into(), export(&load(graph)?, *to)),
    })
}

fn load(arg: &str) -> Result<Triangulation> {
    load_graph(arg).map_err(|e| usage(format!("{e:#}")))
}

fn graph_json(g: &Triangulation) -> Value {
    json!({"order": g.order(), "graph6": encode_graph6(g), "certificate": canonical_certificate(g).to_hex()})
}

// ------------------------------------------------------------------ corpus

fn enumerate(a: &EnumerateArgs, progress: &dyn Fn(&str)) -> Result<Output> {
    if a.order > a.cap {
        return Err(usage(format!("order {} exceeds --cap {}", a.order, a.cap)));
    }
    let saved = a.out.as_ref().map(|d| slice_path(d, a.order, a.min_degree));
    let resumed = a.resume && saved.as_ref().is_some_and(|p| p.is_file());
    let slice: CorpusSlice = match &a.out {
        Some(dir) if resumed => {
            progress(&format!("loading {}", slice_path(dir, a.order, a.min_degree).display()));
            load_slice(dir, a.order, a.min_degree)?
        }
        _ => {
            progress(&format!("enumerating order {} (min degree {}, {:?})", a.order, a.min_degree, a.strategy));
            match a.strategy {
                Strategy::Closure => enumerate_mpg_capped(a.order, a.min_degree, a.cap)?,
                Strategy::Flips => enumerate_by_flips(a.order, a.min_degree)?,
            }
        }
    };
    if let (Some(dir), false) = (&a.out, resumed) {
        let p = save_slice(&slice, dir)?;
        progress(&format!("saved {} graphs to {}", slice.len(), p.display()));
    }
    let g6: Vec<String> = slice.graphs.iter().map(encode_graph6).collect();
    let text = g6.join("\n");
    Ok(Output::new(
        json!({
            "order": slice.n,
            "min_degree": slice.min_degree,
            "count": slice.len(),
            "file": saved.map(|p| p.display().to_string()),
            "graph6": g6,
            "certificates": slice.certificates.iter().map(|c| c.to_hex()).collect::<Vec<_>>(),
        }),
        text,
    ))
}

// ----------------------------------------------------------- per-graph queries

fn poly(g: &Triangulation, at: Option<&str>, bits: u32) -> Result<Output> {
    let p = chromatic_polynomial(g)?;
    let coeffs = p.to_strings();
    let Some(at) = at else {
        return Ok(Output::new(json!({"coefficients": coeffs, "polynomial": p.to_string()}), p.to_string()));
    };
    let golden = match at {
        "tau2" => Some(Golden::tau_sq()),
        "tau-sqrt5" => Some(Golden::tau_sqrt5()),
        _ => None,
    };
    if let Some(x) = golden {
        let v = p.eval_golden(&x);
        let approx = v.to_real(bits).to_f64();
        let exact = format!("{} + {}*tau", v.a, v.b);
        return Ok(Output::new(
            json!({"coefficients": coeffs, "at": at, "value": {"a": v.a.to_string(), "b": v.b.to_string(), "approx": approx}}),
            format!("{exact} ~ {approx}"),
        ));
    }
    let t: i64 = at.parse().map_err(|_| usage(format!("--at expects an integer, tau2 or tau-sqrt5, got {at:?}")))?;
    let v = p.eval_i64(t);
    Ok(Output::new(json!({"coefficients": coeffs, "at": t, "value": v.to_string()}), v.to_string()))
}

fn show_partition(p: &ColorPartition) -> String {
    p.classes
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect()
}

fn partitions(g: &Triangulation, k: usize) -> Output {
    let set = enumerate_partitions(g, k);
    let lines: Vec<String> = set.partitions.iter().map(show_partition).collect();
    Output::new(
        json!({"k": k, "count": set.len(), "coloring_count": set.coloring_count().to_string(), "partitions": set.partitions}),
        lines.join("\n"),
    )
}

fn unique(g: &Triangulation, k: usize) -> Result<Output> {
    let u = is_uniquely_colorable(g, k)?;
    Ok(Output::new(json!({"k": k, "uniquely_colorable": u}), u.to_string()))
}

fn export(g: &Triangulation, to: ExportFormat) -> Output {
    let s = match to {
        ExportFormat::Dot => to_dot(g, "G"),
        ExportFormat::Graph6 => encode_graph6(g),
    };
    Output::new(json!({"format": format!("{to:?}").to_lowercase(), "data": s}), s)
}

// --------------------------------------------------------------------- fwf

fn fwf_check(g: &Triangulation) -> Output {
    let peel = is_fwf(g);
    let two_two = peel.is_some() && is_fwf22(g);
    let seq = if two_two { Fwf22::from_graph(g).ok().map(|f| f.sequence.to_string()) } else { None };
    let text = match (&peel, &seq) {
        (None, _) => "not fwf".to_string(),
        (Some(p), Some(s)) => format!("fwf (2,2) sequence {s}; peel {p:?}"),
        (Some(p), None) => format!("fwf; peel {p:?}"),
    };
    Output::new(json!({"fwf": peel.is_some(), "peel_order": peel, "fwf22": two_two, "color_sequence": seq}), text)
}

fn fwf22_json(f: &Fwf22) -> Value {
    json!({
        "sequence": f.sequence.to_string(),
        "graph": graph_json(&f.graph),
        "coloring": f.coloring.colors,
        "x": f.x,
        "u": f.u,
        "y": f.y,
        "axis2": f.axis2,
        "adjacent_type": f.is_adjacent_type(),
    })
}

fn fwf_from_seq(seq: &str, export_as: Option<ExportFormat>) -> Result<Output> {
    let s: ColorSequence = seq.parse().map_err(|e| usage(format!("{e}")))?;
    let f = fwf22_from_color_sequence(&s).map_err(|e| usage(format!("{e}")))?;
    let text = match export_as {
        Some(ExportFormat::Dot) => to_dot(&f.graph, &format!("fwf_{seq}")),
        Some(ExportFormat::Graph6) | None => encode_graph6(&f.graph),
    };
    let mut j = fwf22_json(&f);
    if let Some(ExportFormat::Dot) = export_as {
        j["dot"] = json!(text);
    }
    Ok(Output::new(j, text))
}

fn fwf_enumerate22(n: usize) -> Result<Output> {
    if !(5..=14).contains(&n) {
        return Err(usage("--order must be between 5 and 14"));
    }
    let cat = enumerate_fwf22(n);
    let text = format!(
        "order {n}: {} graphs (closed form {})\n{}",
        cat.count,
        gamma_formula(n).map_or("-".into(), |x| x.to_string()),
        cat.sequences.iter().map(|s| s.clone().unwrap_or_else(|| "-".into())).collect::<Vec<_>>().join("\n")
    );
    Ok(Output::new(json!({"catalog": cat, "closed_form": gamma_formula(n)}), text))
}

// ------------------------------------------------------------------- wheels

fn check_vertex(g: &Triangulation, v: VertexId) -> Result<()> {
    if v >= g.order() {
        return Err(usage(format!("vertex {v} out of range for order {}", g.order())));
    }
    Ok(())
}

fn wheel_contract(g: &Triangulation, v: VertexId, choice: Option<usize>, colored: bool, all: bool) -> Result<Output> {
    check_vertex(g, v)?;
    if !colored {
        let (h, step) = contract_wheel_with(g, v, g.degree(v), choice)?;
        let text = encode_graph6(&h);
        return Ok(Output::new(json!({"graph": graph_json(&h), "step": step}), text));
    }
    let f = find_coloring(g, 4).ok_or_else(|| anyhow!("graph is not 4-colourable"))?;
    let results = if all { all_colored_contractions(g, &f, v)? } else { vec![colored_contract(g, &f, v)?] };
    let mut text = String::new();
    let mut items = Vec::new();
    for cc in &results {
        let count = enumerate_partitions(&cc.graph, 4).len();
        writeln!(text, "{} merges {:?} type {:?} partitions {count}", encode_graph6(&cc.graph), cc.step.merged_pairs, cc.six_wheel_type)?;
        items.push(json!({
            "graph": graph_json(&cc.graph),
            "coloring": cc.coloring.colors,
            "merged_pairs": cc.step.merged_pairs,
            "six_wheel_type": cc.six_wheel_type,
            "partition_count": count,
        }));
    }
    Ok(Output::new(json!({"input_coloring": f.colors, "contractions": items}), text))
}

fn parse_site(s: &str) -> Result<ExtendSite> {
    let (kind, rest) = s.split_once(':').ok_or_else(|| usage(format!("site {s:?}: expected KIND:v1,v2,...")))?;
    let vs: Vec<VertexId> = rest
        .split(',')
        .map(|x| x.trim().parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| usage(format!("site {s:?}: vertices must be integers")))?;
    let site = match (kind, vs.as_slice()) {
        ("edge", &[a, b]) => ExtendSite::Edge { a, b },
        ("face", &[a, b, c]) => ExtendSite::Face([a, b, c]),
        ("path", &[x, u, y]) => ExtendSite::Path { x, u, y },
        ("funnel", &[top, stem, b1, b2]) => ExtendSite::Funnel { top, stem, b1, b2 },
        _ => bail!(Usage(format!("site {s:?}: expected edge:a,b, face:a,b,c, path:x,u,y or funnel:top,stem,b1,b2"))),
    };
    Ok(site)
}

fn wheel_extend(g: &Triangulation, site: &str) -> Result<Output> {
    let site = parse_site(site)?;
    let (h, step) = extend_wheel(g, site).map_err(|e| usage(format!("{e}")))?;
    let text = encode_graph6(&h);
    Ok(Output::new(json!({"graph": graph_json(&h), "inverse": step}), text))
}

fn wheel_reduce(g: &Triangulation) -> Result<Output> {
    let trace = reduce_to_k3(g)?;
    let text = format!("{} steps, wheel sizes {:?}", trace.steps.len(), trace.kinds());
    Ok(Output::new(json!({"kinds": trace.kinds(), "trace": trace}), text))
}

// ------------------------------------------------------------------ verify

fn verify(target: VerifyTarget, max_order: usize, progress: &dyn Fn(&str)) -> Result<Output> {
    use VerifyTarget::*;
    if matches!(target, Theorems | All) && !(4..=12).contains(&max_order) {
        return Err(usage("--max-order must be between 4 and 12"));
    }
    let mut reports: Vec<VerificationReport> = Vec::new();
    if matches!(target, Table | All) {
        progress("counting minimum-degree-4 triangulations, orders 6-11");
        reports.extend(verify_table_counts()?);
    }
    if target == All {
        progress("counting (2,2)-FWF graphs, orders 5-12");
        reports.extend(verify_fwf22_counts());
    }
    if matches!(target, Appendix1 | All) {
        progress("auditing the minimum-degree-4 partition listings");
        reports.extend(verify_appendix1()?);
    }
    if matches!(target, Appendix2 | All) {
        progress("enumerating order 13 and auditing its listing");
        reports.extend(verify_order13_existence()?);
        reports.extend(verify_appendix2()?);
    }
    if matches!(target, Theorems | All) {
        progress(&format!("sweeping theorems over orders up to {max_order}"));
        reports.extend(theorem_sweep(max_order)?);
    }
    let mismatches = mismatch_count(&reports);
    let mut text = String::new();
    for r in &reports {
        writeln!(text, "{:<24} {}  computed={} claimed={}", format!("{:?}", r.status), r.claim, r.computed, r.claimed)?;
    }
    writeln!(text, "mismatch_count {mismatches}")?;
    Ok(Output::new(json!({"mismatch_count": mismatches, "reports": reports}), text))
}
