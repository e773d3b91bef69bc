//! Command-line front end: hypergraph generation, decomposition numbers,
//! verification grids, and the conjecture probe.
//!
//! Exit codes: 0 success, 1 invalid input, 2 budget exhausted (best bound
//! printed), 3 verification mismatch.

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hdecomp::{
    conjecture_probe, n_zero, phi, phi_matching_formula, phi_via_kfactor, sweep_degree_condition,
    sweep_ratio_inequality, theorem1_grid, verify_theorem1, verify_theorem2, monotonicity_suite,
    extremal_candidate, FactorStatus, Hypergraph, PatternH, SearchBudget, Source,
    VerificationReport,
};
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process;

#[derive(Parser)]
#[command(name = "hdecomp", version, about = "Decomposition numbers of uniform hypergraphs")]
struct Cli {
    /// Worker threads for verification grids (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a hypergraph: the complete r-graph, or with --k the canonical
    /// near-complete family member
    Gen(GenArgs),
    /// Compute the decomposition number of a graph
    Phi(PhiArgs),
    /// Run a theorem grid, an inequality sweep, or the monotonicity suite
    Verify(VerifyArgs),
    /// Compare the exact value against the conjectured formula for the
    /// common-intersection pattern
    Probe(ProbeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PatternArg {
    /// two edges intersecting in exactly k vertices
    TwoEdge,
    /// k pairwise-disjoint edges
    KMatching,
    /// k edges sharing one common i-set
    CommonI,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// When set, delete the forced number of colex-largest edges for this k
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct PhiArgs {
    /// Input hypergraph JSON; omit to use the complete r-graph from --n/--r
    #[arg(long, value_name = "PATH")]
    r#in: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, value_enum)]
    pattern: PatternArg,
    /// Intersection size (two-edge) or copy count (k-matching, common-i)
    #[arg(long)]
    k: usize,
    /// Common-intersection size (common-i only)
    #[arg(long)]
    i: Option<usize>,
    #[arg(long, default_value_t = 10_000_000)]
    budget_nodes: u64,
    #[arg(long)]
    budget_seconds: Option<f64>,
    /// Write the decomposition JSON here when one was constructed
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    theorem: Option<u8>,
    /// "6" for the degree condition, "ratio" for the binomial ratio chain
    #[arg(long)]
    inequality: Option<String>,
    /// Random-subgraph monotonicity property suite
    #[arg(long)]
    monotonicity: bool,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    rmax: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long)]
    kmax: Option<usize>,
    /// Length of the n-range above the threshold for the degree condition
    #[arg(long)]
    span: Option<usize>,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Seed determining all randomized sampling
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 10_000_000)]
    budget_nodes: u64,
    #[arg(long)]
    budget_seconds: Option<f64>,
    /// Write the JSON-lines report here
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ProbeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    i: usize,
    #[arg(long, default_value_t = 10_000_000)]
    budget_nodes: u64,
    #[arg(long)]
    budget_seconds: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("warning: could not set --jobs: {e}");
        }
    }
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Phi(args) => cmd_phi(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Probe(args) => cmd_probe(args),
    };
    match outcome {
        Ok(code) => process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            process::exit(1);
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn hypergraph_text(g: &Hypergraph) -> String {
    let mut s = format!(
        "# r-uniform hypergraph: n={} r={} m={}\n",
        g.vertex_count(),
        g.uniformity(),
        g.edge_count()
    );
    for e in g.edges() {
        let row: Vec<String> = e.vertices().iter().map(|v| v.to_string()).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

fn cmd_gen(args: GenArgs) -> anyhow::Result<i32> {
    let g = match args.k {
        Some(k) => extremal_candidate(args.n, args.r, k)?,
        None => Hypergraph::complete(args.n, args.r)?,
    };
    let content = match args.format {
        Format::Json => format!("{}\n", g.to_json_string()),
        Format::Text => hypergraph_text(&g),
    };
    emit(&args.out, &content)?;
    Ok(0)
}

fn build_pattern(kind: PatternArg, r: usize, k: usize, i: Option<usize>) -> anyhow::Result<PatternH> {
    let p = match kind {
        PatternArg::TwoEdge => PatternH::two_edge(r, k)?,
        PatternArg::KMatching => PatternH::independent_edges(r, k)?,
        PatternArg::CommonI => {
            let i = i.ok_or_else(|| anyhow::anyhow!("--pattern common-i requires --i"))?;
            PatternH::common_intersection(r, k, i)?
        }
    };
    Ok(p)
}

fn load_graph(args: &PhiArgs) -> anyhow::Result<Hypergraph> {
    match (&args.r#in, args.n, args.r) {
        (Some(path), _, _) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Ok(Hypergraph::from_json_str(&text)?)
        }
        (None, Some(n), Some(r)) => Ok(Hypergraph::complete(n, r)?),
        _ => bail!("either --in or both --n and --r are required"),
    }
}

fn source_tag(source: Source) -> &'static str {
    match source {
        Source::Constructive => "constructive",
        Source::Formula => "formula",
        Source::Oracle => "oracle",
    }
}

fn cmd_phi(args: PhiArgs) -> anyhow::Result<i32> {
    let g = load_graph(&args)?;
    let pattern = build_pattern(args.pattern, g.uniformity(), args.k, args.i)?;
    let mut budget = SearchBudget::nodes(args.budget_nodes);
    if let Some(secs) = args.budget_seconds {
        budget = budget.with_seconds(secs);
    }
    if args.pattern == PatternArg::KMatching {
        let (n, r, k) = (g.vertex_count(), g.uniformity(), args.k);
        if k >= 1 && r >= 2 && n < n_zero(k, r) {
            eprintln!(
                "warning: n={n} is below the proven threshold n0={}; the closed form is not guaranteed there",
                n_zero(k, r)
            );
        }
    }
    let started = std::time::Instant::now();

    // the k-matching pattern with k >= 3 tries the clique-factor route first
    let (value, source, optimal, status) = if args.pattern == PatternArg::KMatching && args.k >= 3
    {
        let via = phi_via_kfactor(&g, args.k, budget)?;
        match via.status {
            FactorStatus::Found => {
                let d = via.decomposition.expect("constructed");
                if let Some(path) = &args.out {
                    fs::write(path, format!("{}\n", d.to_json_string()))?;
                }
                (via.value.expect("constructed"), Source::Constructive, true, "constructed")
            }
            FactorStatus::CertifiedExistsNotConstructed => {
                (via.value.expect("certified"), Source::Formula, true, "certified")
            }
            FactorStatus::NotFoundWithinBudget => {
                let res = phi(&g, &pattern, budget)?;
                if let Some(path) = &args.out {
                    fs::write(path, format!("{}\n", res.decomposition.to_json_string()))?;
                }
                let status = if res.optimal { "search" } else { "bound" };
                (res.value, res.decomposition.source, res.optimal, status)
            }
        }
    } else {
        let res = phi(&g, &pattern, budget)?;
        if let Some(path) = &args.out {
            fs::write(path, format!("{}\n", res.decomposition.to_json_string()))?;
        }
        let status = if res.optimal { "exact" } else { "bound" };
        (res.value, res.decomposition.source, res.optimal, status)
    };

    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "phi": value,
                "pattern": pattern.label(),
                "source": source_tag(source),
                "optimal": optimal,
                "status": status,
            })
        ),
        Format::Text => {
            if optimal {
                println!("phi = {value} (pattern {}, source {}, {status})", pattern.label(), source_tag(source));
            } else {
                println!("phi <= {value} (pattern {}, budget exhausted, best bound)", pattern.label());
            }
        }
    }
    Ok(if optimal { 0 } else { 2 })
}

fn report_lines(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for rep in reports {
        s.push_str(&rep.to_json_line());
        s.push('\n');
    }
    s
}

fn summarize(reports: &[VerificationReport]) -> (String, bool) {
    let total = reports.len();
    let agreeing = reports.iter().filter(|r| r.agree).count();
    let check = reports.first().map_or("empty", |r| r.check);
    let mut text = format!("{check}: {agreeing}/{total} points agree\n");
    for rep in reports.iter().filter(|r| !r.agree).take(5) {
        writeln!(
            text,
            "  MISMATCH at n={} r={} k={:?} i={:?}: formula={:?} constructive={:?} oracle={:?} status={:?}",
            rep.n, rep.r, rep.k, rep.i, rep.formula, rep.constructive, rep.oracle, rep.status
        )
        .unwrap();
    }
    (text, agreeing == total)
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<i32> {
    let selectors =
        args.theorem.is_some() as u8 + args.inequality.is_some() as u8 + args.monotonicity as u8;
    if selectors != 1 {
        bail!("choose exactly one of --theorem, --inequality, --monotonicity");
    }
    let mut budget = SearchBudget::nodes(args.budget_nodes);
    if let Some(secs) = args.budget_seconds {
        budget = budget.with_seconds(secs);
    }
    let started = std::time::Instant::now();
    let reports = if let Some(which) = args.theorem {
        match which {
            1 => {
                let grid = theorem1_grid(args.rmax.unwrap_or(4), args.nmax.unwrap_or(9));
                verify_theorem1(&grid)
            }
            2 => {
                let r = args.r.unwrap_or(2);
                let k = args.k.unwrap_or(2);
                if k < 1 || r < 2 {
                    bail!("--theorem 2 needs k >= 1 and r >= 2");
                }
                let from = n_zero(k, r);
                let to = args.nmax.unwrap_or(from + 3);
                let ns: Vec<usize> = (from..=to).collect();
                if ns.is_empty() {
                    eprintln!("note: empty grid (nmax below the threshold n0={from})");
                }
                verify_theorem2(r, k, &ns, budget)
            }
            _ => unreachable!("clap range"),
        }
    } else if let Some(ineq) = &args.inequality {
        match ineq.as_str() {
            "6" => sweep_degree_condition(
                args.kmax.unwrap_or(6),
                args.rmax.unwrap_or(6),
                args.span.unwrap_or(1000),
            ),
            "ratio" => sweep_ratio_inequality(args.rmax.unwrap_or(6), args.nmax.unwrap_or(200)),
            other => bail!("unknown inequality {other:?}: expected 6 or ratio"),
        }
    } else {
        let grid = theorem1_grid(args.rmax.unwrap_or(4), args.nmax.unwrap_or(9));
        monotonicity_suite(&grid, args.samples, args.seed)
    };
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());

    let lines = report_lines(&reports);
    if let Some(path) = &args.out {
        fs::write(path, &lines).with_context(|| format!("writing {}", path.display()))?;
    }
    let (summary, all_agree) = summarize(&reports);
    match args.format {
        Format::Json => print!("{lines}"),
        Format::Text => print!("{summary}"),
    }
    Ok(if all_agree { 0 } else { 3 })
}

fn cmd_probe(args: ProbeArgs) -> anyhow::Result<i32> {
    let mut budget = SearchBudget::nodes(args.budget_nodes);
    if let Some(secs) = args.budget_seconds {
        budget = budget.with_seconds(secs);
    }
    let started = std::time::Instant::now();
    let report = conjecture_probe(args.n, args.r, args.k, args.i, budget)?;
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    if let Some(path) = &args.out {
        fs::write(path, format!("{}\n", report.to_json_line()))?;
    }
    let bounded = report.status.as_deref() == Some("bound");
    match args.format {
        Format::Json => println!("{}", report.to_json_line()),
        Format::Text => {
            let conjectured = phi_matching_formula(args.n, args.r, args.k);
            let verdict = if bounded {
                "inconclusive (budget exhausted)"
            } else if report.agree {
                "agree"
            } else {
                "DISAGREE"
            };
            println!(
                "probe n={} r={} k={} i={}: exact={} conjectured={} -> {verdict}",
                args.n,
                args.r,
                args.k,
                args.i,
                report
                    .constructive
                    .map_or_else(|| "?".into(), |v| v.to_string()),
                conjectured
            );
        }
    }
    // a disagreement is a finding, not an error; only budget exhaustion is
    Ok(if bounded { 2 } else { 0 })
}
