//! Command-line front end: generate graphs, build and validate
//! decompositions, run the exhaustive checks, and evaluate bound formulas.
//!
//! Exit codes are a stable contract: 0 = holds/pass, 1 = fails,
//! 2 = operational error (bad input, size limit, budget). All file output is
//! byte-deterministic for fixed flags and seed; timing appears only on
//! stdout, never in files.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use clusterkit::bounds::{self, BoundParams};
use clusterkit::coloring::{
    check_recolor_bound, exact_min_max_mono, forall_colorings_check, td_two_coloring, Coloring,
    ComponentPredicate, ForallOutcome, DEFAULT_BUDGET, DEFAULT_EXACT_COLORING_LIMIT,
};
use clusterkit::corpus;
use clusterkit::decomp::{
    exact_treewidth, necklace_td, validate_td, TreeDecomposition, DEFAULT_EXACT_LIMIT,
};
use clusterkit::extremal::{
    build_gadget, build_line_family, hex_check, verify_gadget, verify_line_family, GadgetParams,
    DEFAULT_SIZE_CAP,
};
use clusterkit::graph::{random_regular_with_girth, Graph, NecklaceSpec};
use clusterkit::io;
use rand::Rng;

const DEFAULT_MAX_ATTEMPTS: usize = 200;
/// Practical cap on the Euler genus accepted by the bounds table; the exact
/// value at g = 12 already has hundreds of thousands of digits.
const MAX_CLI_GENUS: u32 = 12;

#[derive(Parser)]
#[command(name = "clusterkit", version, about = "Clustered-coloring toolkit")]
struct Cli {
    /// RNG seed for randomized generators and trials.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum number of canonical colorings an exhaustive check may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for exhaustive enumeration; verdicts and witnesses are
    /// thread-count invariant.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Output file for the primary artifact (graph, decomposition, report).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format for generated graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family and write it to --out.
    #[command(subcommand)]
    Gen(GenFamily),
    /// Build, compute or validate tree decompositions.
    #[command(subcommand)]
    Td(TdMode),
    /// Run a verification check; exit 0 = holds/pass, 1 = fails.
    #[command(subcommand)]
    Check(CheckKind),
    /// Evaluate every bound formula on the given parameters.
    Bounds(BoundsArgs),
}

#[derive(Subcommand)]
enum GenFamily {
    /// k x k triangular grid.
    Grid {
        #[arg(long)]
        k: usize,
    },
    /// Path on n vertices.
    Path {
        #[arg(long)]
        n: usize,
    },
    /// Cycle on n vertices.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Recursive diameter gadget.
    Gadget {
        #[arg(long)]
        level: usize,
        #[arg(long)]
        d: usize,
        /// Vertices in the level-1 path; defaults to d + 2.
        #[arg(long)]
        base_path_length: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        size_cap: usize,
    },
    /// Necklace graph from a spec file or inline parameters.
    Necklace {
        /// Spec file {"n":..,"q":..,"cliques":[[..],..]}.
        #[arg(long, conflicts_with_all = ["n", "q", "cliques"])]
        spec: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Cliques as semicolon-separated comma lists, e.g. "0,2,4;1,5".
        #[arg(long)]
        cliques: Option<String>,
    },
    /// Line graph of a 2k-regular graph of girth >= the component bound.
    Line {
        #[arg(long)]
        k: usize,
        /// The component bound N; the base graph needs girth >= N.
        #[arg(long)]
        component_bound: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
        max_attempts: usize,
        /// Also write the base graph here.
        #[arg(long)]
        base_out: Option<PathBuf>,
    },
    /// Regular graph of prescribed degree and girth.
    Regular {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        girth: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
        max_attempts: usize,
    },
}

#[derive(Subcommand)]
enum TdMode {
    /// Exact treewidth with a witness decomposition.
    Exact {
        #[arg(long)]
        r#in: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
    /// Constructive decomposition of a necklace spec.
    Necklace {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Validate a decomposition file against a graph file.
    Validate {
        #[arg(long)]
        r#in: PathBuf,
        #[arg(long)]
        td: PathBuf,
    },
}

#[derive(Subcommand)]
enum CheckKind {
    /// Every 2-coloring of the k x k triangular grid has a component of
    /// size >= k.
    Hex {
        #[arg(long)]
        k: usize,
    },
    /// Every level-coloring of the gadget has a component of diameter > d.
    Gadget {
        #[arg(long)]
        level: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        base_path_length: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        size_cap: usize,
        /// Verify this graph instead of building the gadget.
        #[arg(long)]
        r#in: Option<PathBuf>,
    },
    /// Every k-coloring of the line-family graph has a component of
    /// size >= the bound.
    Line {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        component_bound: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
        max_attempts: usize,
        #[arg(long)]
        r#in: Option<PathBuf>,
    },
    /// Seeded random recoloring trials of the |Z|(Delta k + 1) bound.
    Recolor {
        #[arg(long)]
        r#in: PathBuf,
        /// Colors in the random base colorings.
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        zsize: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Exhaustive predicate check over all k-colorings.
    Forall {
        #[arg(long)]
        r#in: PathBuf,
        #[arg(long)]
        k: usize,
        /// "size:N" (component of size >= N) or "diam:D" (diameter > D).
        #[arg(long)]
        pred: String,
    },
    /// Run the layered 2-coloring and verify it against 24 w Delta.
    Bound24 {
        #[arg(long)]
        r#in: PathBuf,
        #[arg(long)]
        td: PathBuf,
    },
    /// Exact minimum of the largest monochromatic component.
    Exact {
        #[arg(long)]
        r#in: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_EXACT_COLORING_LIMIT)]
        limit: usize,
    },
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, default_value_t = 1)]
    delta: u64,
    #[arg(long, default_value_t = 0)]
    g: u32,
    #[arg(long, default_value_t = 1)]
    w: u64,
    #[arg(long, default_value_t = 3)]
    q: u64,
    #[arg(long, default_value_t = 0)]
    rho: u64,
    #[arg(long, default_value_t = 1)]
    theta: u64,
    /// |Z| for the recoloring budget row.
    #[arg(long, default_value_t = 0)]
    z: u64,
    /// Component-size bound k for the recoloring budget row.
    #[arg(long, default_value_t = 1)]
    ksize: u64,
    /// Inject d directly instead of deriving it from (delta, g).
    #[arg(long)]
    d_hook: Option<u64>,
    /// Inject M directly instead of deriving it.
    #[arg(long)]
    m_hook: Option<u64>,
}

enum Outcome {
    Good,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Good) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let started = Instant::now();
    match cli.command {
        Command::Gen(ref family) => {
            let (graph, provenance, base) = generate(family, cli.seed)?;
            let out = cli
                .out
                .as_deref()
                .ok_or_else(|| anyhow!("gen requires --out <path> for the graph file"))?;
            let payload = match cli.format {
                Format::Json => io::graph_to_json(&graph),
                Format::Dot => io::graph_to_dot(&graph),
            };
            std::fs::write(out, payload).with_context(|| format!("writing {}", out.display()))?;
            if let (Some(base), GenFamily::Line { base_out: Some(base_out), .. }) = (&base, family)
            {
                std::fs::write(base_out, io::graph_to_json(base))
                    .with_context(|| format!("writing {}", base_out.display()))?;
            }
            let mut report = provenance;
            attach(&mut report, "out", json!(out.display().to_string()));
            attach(&mut report, "elapsed_ms", json!(started.elapsed().as_millis() as u64));
            println!("{report}");
            Ok(Outcome::Good)
        }
        Command::Td(ref mode) => run_td(mode, &cli, started),
        Command::Check(ref check) => run_check(check, &cli, started),
        Command::Bounds(ref args) => run_bounds(args, &cli),
    }
}

fn attach(report: &mut Value, key: &str, value: Value) {
    report.as_object_mut().expect("reports are objects").insert(key.to_string(), value);
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::graph_from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_td(path: &Path) -> Result<TreeDecomposition> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::td_from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_spec(path: &Path) -> Result<NecklaceSpec> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::necklace_spec_from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn generate(family: &GenFamily, seed: u64) -> Result<(Graph, Value, Option<Graph>)> {
    let (graph, family_name, params, mut audit, base) = match family {
        GenFamily::Grid { k } => {
            (Graph::triangular_grid(*k), "grid", json!({ "k": k }), json!({}), None)
        }
        GenFamily::Path { n } => (Graph::path(*n), "path", json!({ "n": n }), json!({}), None),
        GenFamily::Cycle { n } => (Graph::cycle(*n), "cycle", json!({ "n": n }), json!({}), None),
        GenFamily::Gadget { level, d, base_path_length, size_cap } => {
            let params = GadgetParams {
                level: *level,
                d: *d,
                base_path_length: base_path_length.unwrap_or(d + 2),
                size_cap: *size_cap,
            };
            let g = build_gadget(&params)?;
            let audit = if g.vertex_count() <= 13 {
                let tw = exact_treewidth(&g, DEFAULT_EXACT_LIMIT)?;
                json!({ "treewidth": tw.width })
            } else {
                json!({})
            };
            (
                g,
                "gadget",
                json!({
                    "level": level,
                    "d": d,
                    "base_path_length": params.base_path_length,
                    "size_cap": size_cap,
                }),
                audit,
                None,
            )
        }
        GenFamily::Necklace { spec, n, q, cliques } => {
            let spec = match spec {
                Some(path) => read_spec(path)?,
                None => {
                    let n = n.ok_or_else(|| anyhow!("necklace needs --spec or --n/--q"))?;
                    let q = q.ok_or_else(|| anyhow!("necklace needs --spec or --n/--q"))?;
                    let cliques = cliques
                        .as_deref()
                        .map(parse_cliques)
                        .transpose()?
                        .unwrap_or_default();
                    NecklaceSpec::new(n, q, cliques)?
                }
            };
            (
                spec.graph(),
                "necklace",
                json!({ "n": spec.n, "q": spec.q, "cliques": spec.cliques }),
                json!({}),
                None,
            )
        }
        GenFamily::Line { k, component_bound, max_attempts, .. } => {
            let fam = build_line_family(*k, *component_bound, seed, *max_attempts)?;
            let audit = json!({
                "base_vertices": fam.base.vertex_count(),
                "base_degree": 2 * k,
                "base_girth": fam.base.girth(),
                "output_degree": 4 * k - 2,
                "output_regular": fam.graph.is_regular(4 * k - 2),
            });
            (
                fam.graph.clone(),
                "line",
                json!({ "k": k, "component_bound": component_bound, "max_attempts": max_attempts }),
                audit,
                Some(fam.base),
            )
        }
        GenFamily::Regular { degree, girth, max_attempts } => {
            let g = random_regular_with_girth(*degree, *girth, seed, *max_attempts)?;
            let audit = json!({ "girth": g.girth(), "regular": g.is_regular(*degree) });
            (
                g,
                "regular",
                json!({ "degree": degree, "girth": girth, "max_attempts": max_attempts }),
                audit,
                None,
            )
        }
    };
    if audit.as_object().map_or(false, |o| o.is_empty()) {
        audit = Value::Null;
    }
    let provenance = json!({
        "command": "gen",
        "family": family_name,
        "params": params,
        "seed": seed,
        "vertices": graph.vertex_count(),
        "edges": graph.edge_count(),
        "max_degree": graph.max_degree(),
        "audit": audit,
    });
    Ok((graph, provenance, base))
}

fn parse_cliques(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split(';')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            part.split(',')
                .map(|v| v.trim().parse::<usize>().map_err(|e| anyhow!("bad vertex {v:?}: {e}")))
                .collect()
        })
        .collect()
}

fn run_td(mode: &TdMode, cli: &Cli, started: Instant) -> Result<Outcome> {
    match mode {
        TdMode::Exact { r#in, limit } => {
            let g = read_graph(r#in)?;
            let result = exact_treewidth(&g, *limit)?;
            let valid = validate_td(&g, &result.decomposition).is_empty();
            let report = json!({
                "command": "td exact",
                "in": r#in.display().to_string(),
                "width": result.width,
                "adhesion": result.decomposition.adhesion(),
                "valid": valid,
            });
            if let Some(out) = &cli.out {
                std::fs::write(out, io::td_to_json(&result.decomposition))?;
            }
            finish_report(report, started);
            Ok(Outcome::Good)
        }
        TdMode::Necklace { spec } => {
            let spec = read_spec(spec)?;
            let td = necklace_td(&spec);
            let g = spec.graph();
            let violations = validate_td(&g, &td);
            let bound = bounds::necklace_bound(spec.q as u64) as i64;
            let report = json!({
                "command": "td necklace",
                "n": spec.n,
                "q": spec.q,
                "width": td.width(),
                "adhesion": td.adhesion(),
                "bound": bound,
                "within_bound": td.width() <= bound,
                "valid": violations.is_empty(),
            });
            if let Some(out) = &cli.out {
                std::fs::write(out, io::td_to_json(&td))?;
            }
            finish_report(report, started);
            if violations.is_empty() && td.width() <= bound {
                Ok(Outcome::Good)
            } else {
                Ok(Outcome::Failed)
            }
        }
        TdMode::Validate { r#in, td } => {
            let g = read_graph(r#in)?;
            let decomposition = read_td(td)?;
            let violations = validate_td(&g, &decomposition);
            let report = json!({
                "command": "td validate",
                "valid": violations.is_empty(),
                "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "width": decomposition.width(),
                "adhesion": decomposition.adhesion(),
            });
            if let Some(out) = &cli.out {
                std::fs::write(out, deterministic_file(&report))?;
            }
            finish_report(report, started);
            if violations.is_empty() {
                Ok(Outcome::Good)
            } else {
                Ok(Outcome::Failed)
            }
        }
    }
}

fn parse_predicate(text: &str) -> Result<ComponentPredicate> {
    let (kind, value) = text
        .split_once(':')
        .ok_or_else(|| anyhow!("predicate must be size:N or diam:D, got {text:?}"))?;
    let value: usize = value.parse().with_context(|| format!("bad predicate value in {text:?}"))?;
    match kind {
        "size" => Ok(ComponentPredicate::SizeAtLeast(value)),
        "diam" => Ok(ComponentPredicate::DiameterGreaterThan(value)),
        other => bail!("unknown predicate kind {other:?} (want size or diam)"),
    }
}

fn forall_details(outcome: &ForallOutcome) -> Value {
    json!({
        "verdict": if outcome.holds { "holds" } else { "fails" },
        "canonical_total": outcome.canonical_total.to_string(),
        "witness": outcome.witness.as_ref().map(|w| w.colors().to_vec()),
        "witness_rank": outcome.witness_rank.map(|r| r.to_string()),
    })
}

fn run_check(check: &CheckKind, cli: &Cli, started: Instant) -> Result<Outcome> {
    let (report, good) = match check {
        CheckKind::Hex { k } => {
            let outcome = hex_check(*k, cli.budget, cli.threads)?;
            let mut report = forall_details(&outcome);
            attach(&mut report, "command", json!("check hex"));
            attach(&mut report, "k", json!(k));
            (report, outcome.holds)
        }
        CheckKind::Gadget { level, d, base_path_length, size_cap, r#in } => {
            let g = match r#in {
                Some(path) => read_graph(path)?,
                None => build_gadget(&GadgetParams {
                    level: *level,
                    d: *d,
                    base_path_length: base_path_length.unwrap_or(d + 2),
                    size_cap: *size_cap,
                })?,
            };
            let outcome = verify_gadget(&g, *level, *d, cli.budget, cli.threads)?;
            let mut report = forall_details(&outcome);
            attach(&mut report, "command", json!("check gadget"));
            attach(&mut report, "level", json!(level));
            attach(&mut report, "d", json!(d));
            attach(&mut report, "vertices", json!(g.vertex_count()));
            (report, outcome.holds)
        }
        CheckKind::Line { k, component_bound, max_attempts, r#in } => {
            let g = match r#in {
                Some(path) => read_graph(path)?,
                None => build_line_family(*k, *component_bound, cli.seed, *max_attempts)?.graph,
            };
            let outcome = verify_line_family(&g, *k, *component_bound, cli.budget, cli.threads)?;
            let mut report = forall_details(&outcome);
            attach(&mut report, "command", json!("check line"));
            attach(&mut report, "k", json!(k));
            attach(&mut report, "component_bound", json!(component_bound));
            (report, outcome.holds)
        }
        CheckKind::Recolor { r#in, k, zsize, trials } => {
            let g = read_graph(r#in)?;
            let (failures, worst) = recolor_trials(&g, *k, *zsize, *trials, cli.seed)?;
            let report = json!({
                "command": "check recolor",
                "verdict": if failures == 0 { "pass" } else { "fail" },
                "trials": trials,
                "failures": failures,
                "worst_union": worst,
            });
            (report, failures == 0)
        }
        CheckKind::Forall { r#in, k, pred } => {
            let g = read_graph(r#in)?;
            let predicate = parse_predicate(pred)?;
            let outcome = forall_colorings_check(&g, *k, predicate, cli.budget, cli.threads)?;
            let mut report = forall_details(&outcome);
            attach(&mut report, "command", json!("check forall"));
            attach(&mut report, "k", json!(k));
            attach(&mut report, "pred", json!(pred));
            (report, outcome.holds)
        }
        CheckKind::Bound24 { r#in, td } => {
            let g = read_graph(r#in)?;
            let decomposition = read_td(td)?;
            let result = td_two_coloring(&g, &decomposition)?;
            let report = json!({
                "command": "check bound24",
                "verdict": if result.within_bound { "pass" } else { "fail" },
                "width": result.width,
                "max_degree": result.max_degree,
                "block_size": result.block_size,
                "max_component": result.max_component,
                "bound": result.bound.to_string(),
            });
            (report, result.within_bound)
        }
        CheckKind::Exact { r#in, k, limit } => {
            let g = read_graph(r#in)?;
            let solution = exact_min_max_mono(&g, *k, &[], *limit)?;
            let report = json!({
                "command": "check exact",
                "verdict": "pass",
                "k": k,
                "optimum": solution.optimum,
                "witness": solution.witness.colors().to_vec(),
            });
            (report, true)
        }
    };
    if let Some(out) = &cli.out {
        std::fs::write(out, deterministic_file(&report))?;
    }
    finish_report(report, started);
    Ok(if good { Outcome::Good } else { Outcome::Failed })
}

/// Random recoloring trials; the base bound k_size is measured, so the
/// lemma's preconditions hold by construction.
fn recolor_trials(
    g: &Graph,
    k: usize,
    zsize: usize,
    trials: usize,
    seed: u64,
) -> Result<(usize, usize)> {
    let n = g.vertex_count();
    let mut rng = corpus::rng(seed);
    let mut failures = 0;
    let mut worst = 0;
    for _ in 0..trials {
        let base: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=k)).collect();
        let base = Coloring::new(k, base)?;
        let k_size = clusterkit::coloring::mono_components(g, &base)?.max_size;
        let mut z = Vec::new();
        for _ in 0..zsize.min(n) {
            let v = rng.gen_range(0..n);
            if !z.contains(&v) {
                z.push(v);
            }
        }
        let mut recolored = base.colors().to_vec();
        for &v in &z {
            recolored[v] = rng.gen_range(1..=k);
        }
        let recolored = Coloring::new(k, recolored)?;
        let check = check_recolor_bound(g, &base, k_size, &z, &recolored)?;
        if !check.pass {
            failures += 1;
        }
        worst = worst.max(check.union_meeting_z);
    }
    Ok((failures, worst))
}

fn run_bounds(args: &BoundsArgs, cli: &Cli) -> Result<Outcome> {
    if args.g > MAX_CLI_GENUS {
        bail!("genus {} over the practical cap {MAX_CLI_GENUS}", args.g);
    }
    let params = BoundParams {
        delta: args.delta,
        g: args.g,
        w: args.w,
        q: args.q,
        rho: args.rho,
        theta: args.theta,
        xi: None,
        kappa: None,
        d_hook: args.d_hook.map(BigUint::from),
        m_hook: args.m_hook.map(BigUint::from),
    };
    let constants = bounds::main_constants(&params);
    let mut rows: Vec<(&str, String, BigUint)> = vec![
        (
            "ej",
            format!("delta={} g={}", args.delta, args.g),
            bounds::ej_bound(args.delta, args.g),
        ),
        (
            "adov",
            format!("w={} delta={}", args.w, args.delta),
            bounds::adov_bound(args.w, args.delta),
        ),
        (
            "necklace",
            format!("q={}", args.q),
            BigUint::from(bounds::necklace_bound(args.q)),
        ),
        (
            "outgrowth",
            format!("d={} w={} delta={}", short(&constants.d), args.w, args.delta),
            bounds::outgrowth_bound(&constants.d, args.w, args.delta),
        ),
        ("d", format!("delta={} g={}", args.delta, args.g), constants.d.clone()),
        (
            "m",
            format!("rho={} delta={}", args.rho, args.delta),
            constants.m.clone(),
        ),
        (
            "eta",
            format!("rho={} theta={} delta={}", args.rho, args.theta, args.delta),
            constants.eta.clone(),
        ),
        (
            "recolor",
            format!("z={} delta={} k={}", args.z, args.delta, args.ksize),
            bounds::recolor_budget(args.z, args.delta, args.ksize),
        ),
    ];
    match bounds::combine_bound(args.q, args.w) {
        Ok(v) => rows.insert(3, ("combine", format!("q={} w={}", args.q, args.w), v)),
        Err(e) => bail!(e),
    }

    let mut json_rows = Vec::new();
    let mut text = String::new();
    for (name, inputs, value) in &rows {
        let digits = bounds::decimal_digits(value);
        text.push_str(&format!("{name:<10} {inputs:<28} {} digits={digits}\n", short(value)));
        json_rows.push(json!({
            "name": name,
            "inputs": inputs,
            "value": if digits <= 64 { Value::String(value.to_string()) } else { Value::Null },
            "value_digest": short(value),
            "digits": digits,
        }));
    }
    // Machine-readable line first, then the table; --out gets the JSON.
    let report = json!({ "command": "bounds", "rows": json_rows });
    if let Some(out) = &cli.out {
        std::fs::write(out, deterministic_file(&report))?;
    }
    println!("{report}");
    print!("{text}");
    Ok(Outcome::Good)
}

/// Full decimal expansion up to 64 digits, else head...tail with the count.
fn short(value: &BigUint) -> String {
    let s = value.to_string();
    if s.len() <= 64 {
        s
    } else {
        format!("{}...{}({} digits)", &s[..12], &s[s.len() - 12..], s.len())
    }
}

/// Report bytes for --out files: no timing, trailing newline.
fn deterministic_file(report: &Value) -> String {
    let mut s = report.to_string();
    s.push('\n');
    s
}

fn finish_report(mut report: Value, started: Instant) {
    attach(&mut report, "elapsed_ms", json!(started.elapsed().as_millis() as u64));
    println!("{report}");
}
