use std::collections::BTreeMap;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use edgering::betti::{betti_table, BettiOptions, Mode};
use edgering::binomial::{initial_ideal, minimal_generators, toric_ideal_with_order, OrderKind, TermOrder};
use edgering::graph::{connect_by_edge, contract_edge, triangle_sequence};
use edgering::homology::Field;
use edgering::lab::{
    attachment_vertices, check, lex_initial_totals, persist_counterexamples, random_search,
    read_reports, reproduce, CheckReport, Claim, ReportSink, SearchSpec, Surgery, EXAMPLE_IDS,
};
use edgering::walks::{enumerate_primitive_walks, walk_binomial};
use edgering::SimpleGraph;

/// Toric ideals of graphs and Betti numbers of their edge rings.
#[derive(Parser)]
#[command(name = "edgering", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct EngineArgs {
    /// `exact` for rational arithmetic, otherwise a prime modulus.
    #[arg(long, default_value = "32003")]
    field: Field,
    /// Shorthand for `--field exact`.
    #[arg(long)]
    exact: bool,
    /// `guided` (candidate degrees) or `exhaustive` (audit, needs --max-degree).
    #[arg(long, default_value = "guided")]
    mode: String,
    /// Largest coarse degree visited in exhaustive mode.
    #[arg(long)]
    max_degree: Option<u32>,
    /// Compute every fibre complex's homology in full.
    #[arg(long)]
    no_shortcuts: bool,
}

impl EngineArgs {
    fn options(&self) -> Result<BettiOptions> {
        let mode = match (self.mode.as_str(), self.max_degree) {
            ("guided", None) => Mode::Guided,
            ("guided", Some(_)) => bail!("--max-degree only applies to --mode exhaustive"),
            ("exhaustive", Some(d)) => Mode::Exhaustive { max_degree: d },
            ("exhaustive", None) => bail!("--mode exhaustive needs --max-degree"),
            (other, _) => bail!("unknown mode {other:?}"),
        };
        Ok(BettiOptions {
            field: if self.exact { Field::Rational } else { self.field },
            mode,
            shortcuts: !self.no_shortcuts,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Primitive even closed walks and their binomials.
    Walks { graph: PathBuf },
    /// Minimal generators, Gröbner basis and initial ideal of I_G.
    Ideal {
        graph: PathBuf,
        #[arg(long, default_value = "degrevlex")]
        order: OrderKind,
        /// Variable priority, largest first, as 1-based edge numbers: `3,1,2`.
        #[arg(long, value_delimiter = ',')]
        perm: Option<Vec<usize>>,
    },
    /// Betti table of K[G].
    Betti {
        graph: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
        /// Write the table as JSON to this file (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Recompute a worked example and compare with the printed tables.
    Example {
        /// One of the example ids, or `all`.
        id: String,
        #[command(flatten)]
        engine: EngineArgs,
        /// Also save the example's graphs as JSON files into this directory.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Check one claim on one graph.
    Check {
        /// thm-2.5, cor-2.6, thm-2.7, lem-2.3, thm-4.2, prop-4.3 or question-4.5.
        claim: Claim,
        graph: PathBuf,
        /// Path to contract, as vertices: `1,9,10`.
        #[arg(long, value_delimiter = ',')]
        path: Option<Vec<u32>>,
        /// Enclosing path q for thm-2.7.
        #[arg(long, value_delimiter = ',', requires = "path")]
        q: Option<Vec<u32>>,
        /// Connecting edge: `3,4`.
        #[arg(long, value_delimiter = ',', conflicts_with = "path")]
        edge: Option<Vec<u32>>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Seeded random search; reports go to a JSON-lines file.
    Search {
        spec: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        budget: usize,
        #[arg(long, default_value = "reports.jsonl")]
        out: PathBuf,
        /// Directory for reproducer graphs of counterexamples.
        #[arg(long, default_value = "counterexamples")]
        counterexamples: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Sequence of triangles T_n, optionally joined by an edge to T_m.
    Tn {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        connect: Option<u32>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Summarise a JSON-lines report file.
    Summary { reports: PathBuf },
}

fn load(path: &FsPath) -> Result<SimpleGraph> {
    SimpleGraph::load(path).with_context(|| format!("reading graph {}", path.display()))
}

fn show_totals(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Walks { graph } => {
            let g = load(&graph)?;
            let walks = enumerate_primitive_walks(&g);
            for w in &walks {
                println!("{w}  {}", walk_binomial(&g, w)?);
            }
            eprintln!("{} primitive walks", walks.len());
            Ok(true)
        }
        Command::Ideal { graph, order, perm } => {
            let g = load(&graph)?;
            let n = g.edge_count();
            let ord = match perm {
                Some(p) => TermOrder::new(order, p.iter().map(|&j| j.wrapping_sub(1)).collect())?,
                None => TermOrder::standard(order, n),
            };
            let gb = toric_ideal_with_order(&g, &ord)?;
            println!("order: {ord}");
            println!("edges:");
            for (j, (a, b)) in g.edges().iter().enumerate() {
                println!("  e{} = {{{a},{b}}}", j + 1);
            }
            println!("minimal generators:");
            for b in minimal_generators(&gb) {
                println!("  {b}");
            }
            println!("reduced Gröbner basis:");
            for b in gb.generators() {
                println!("  {b}");
            }
            println!("initial ideal:");
            for m in initial_ideal(&gb)? {
                println!("  {m}");
            }
            Ok(true)
        }
        Command::Betti { graph, engine, json } => {
            let g = load(&graph)?;
            let t = betti_table(&g, &engine.options()?)?;
            for w in &t.warnings {
                eprintln!("warning: {w}");
            }
            match json.as_deref() {
                Some(p) if p == FsPath::new("-") => println!("{}", serde_json::to_string_pretty(&t.to_json())?),
                Some(p) => {
                    std::fs::write(p, serde_json::to_string_pretty(&t.to_json())? + "\n")?;
                    println!("{t}");
                }
                None => println!("{t}"),
            }
            Ok(true)
        }
        Command::Example { id, engine, save } => {
            let opts = engine.options()?;
            let ids: Vec<&str> = if id == "all" { EXAMPLE_IDS.to_vec() } else { vec![id.as_str()] };
            let mut ok = true;
            for id in ids {
                let (report, tables) = reproduce(id, &opts)?;
                for (f, t) in &tables {
                    let mark = if t.totals == f.expected { "ok" } else { "MISMATCH" };
                    println!(
                        "{:<18} computed {:<22} expected {:<22} CM {:<5} {mark}",
                        f.id,
                        show_totals(&t.totals),
                        show_totals(&f.expected),
                        t.cm
                    );
                    if let Some(dir) = &save {
                        std::fs::create_dir_all(dir)?;
                        let name = f.id.replace(['/', '(', ')', ','], "_").replace('\'', "p");
                        f.graph.save(dir.join(format!("{name}.json")))?;
                    }
                }
                ok &= report.conclusion == Some(true);
            }
            Ok(ok)
        }
        Command::Check { claim, graph, path, q, edge, engine } => {
            let g = load(&graph)?;
            let surgery = match (path, q, edge) {
                (Some(p), Some(q), None) => Surgery::PathIn { p, q },
                (Some(p), None, None) => Surgery::Path(p),
                (None, None, Some(e)) if e.len() == 2 => Surgery::Edge(e[0], e[1]),
                (None, None, Some(_)) => bail!("--edge takes two vertices"),
                _ => bail!("give --path (with --q for thm-2.7) or --edge"),
            };
            let r = check(claim, &g, &surgery, &engine.options()?)?;
            print_report(&r);
            Ok(!r.is_counterexample() || claim == Claim::Q45)
        }
        Command::Search { spec, seed, budget, out, counterexamples, engine } => {
            let text = std::fs::read_to_string(&spec).with_context(|| format!("reading {}", spec.display()))?;
            let spec: SearchSpec = serde_json::from_str(&text).context("parsing the search spec")?;
            let claim: Claim = spec.claim.parse()?;
            let outcome = random_search(&spec, seed, budget, &engine.options()?)?;
            let sink = ReportSink::create(&out)?;
            for r in &outcome.reports {
                sink.write(r)?;
            }
            sink.flush()?;
            let written = persist_counterexamples(&outcome.reports, &counterexamples)?;
            println!(
                "{}: seed {seed}, {budget} instances, {} with hypotheses met, {} counterexamples",
                claim,
                outcome.valid(),
                written.len()
            );
            if claim == Claim::Q45 {
                print_delta_range(&outcome.reports);
            }
            for p in &written {
                println!("  reproducer: {}", p.display());
            }
            println!("reports: {}", out.display());
            Ok(written.is_empty() || claim == Claim::Q45)
        }
        Command::Tn { n, connect, engine } => {
            let opts = engine.options()?;
            let t = triangle_sequence(n)?;
            let tab = betti_table(&t, &opts)?;
            println!("T_{n}: {}  codim {}  dim {}  CM {}", show_totals(&tab.totals), tab.codim, tab.krull_dim, tab.cm);
            let Some(m) = connect else {
                return Ok(true);
            };
            let whole = betti_table(&triangle_sequence(n + m)?, &opts)?.totals;
            let initial = lex_initial_totals(n + m)?;
            println!("T_{}: {}  lex initial ideal: {}", n + m, show_totals(&whole), show_totals(&initial));
            let tm = triangle_sequence(m)?.shifted(2 * n + 1);
            let mut ok = whole == initial;
            for &x in &attachment_vertices(&t) {
                for &y in &attachment_vertices(&tm) {
                    let (g, _) = connect_by_edge(&t, x, &tm, y)?;
                    let joined = betti_table(&g, &opts)?;
                    let contracted = betti_table(&contract_edge(&g, x, y)?.graph, &opts)?;
                    let same = joined.totals == whole && contracted.totals == whole;
                    ok &= same;
                    println!(
                        "  e={{{x},{y}}}: G {}  G/e {}  CM {}  {}",
                        show_totals(&joined.totals),
                        show_totals(&contracted.totals),
                        joined.cm,
                        if same { "ok" } else { "MISMATCH" }
                    );
                }
            }
            Ok(ok)
        }
        Command::Summary { reports } => {
            let reports = read_reports(&reports)?;
            summarise(&reports);
            Ok(true)
        }
    }
}

fn print_report(r: &CheckReport) {
    println!("{} on {}: {}", r.claim, r.instance, r.status());
    if let Some(why) = &r.hypothesis_failure {
        println!("  {why}");
    }
    for (name, t) in &r.tables {
        println!("  {name:<8} {}", show_totals(t));
    }
    for n in &r.notes {
        println!("  {n}");
    }
}

fn deltas(r: &CheckReport) -> Option<Vec<i64>> {
    let (g, ge) = (r.tables.get("G")?, r.tables.get("G/e")?);
    let at = |v: &Vec<usize>, i: usize| v.get(i).copied().unwrap_or(0) as i64;
    Some((0..g.len().max(ge.len())).map(|i| at(g, i) - at(ge, i)).collect())
}

fn print_delta_range(reports: &[CheckReport]) {
    let mut range: BTreeMap<usize, (i64, i64)> = BTreeMap::new();
    for d in reports.iter().filter_map(deltas) {
        for (i, x) in d.into_iter().enumerate() {
            let e = range.entry(i).or_insert((x, x));
            e.0 = e.0.min(x);
            e.1 = e.1.max(x);
        }
    }
    println!("  β_i(G) - β_i(G/e):");
    for (i, (lo, hi)) in range {
        println!("    i={i}: min {lo}, max {hi}");
    }
}

fn summarise(reports: &[CheckReport]) {
    let mut by_claim: BTreeMap<&str, BTreeMap<&str, usize>> = BTreeMap::new();
    for r in reports {
        *by_claim.entry(&r.claim).or_default().entry(r.status()).or_default() += 1;
    }
    println!("{:<14} {:>7} {:>7} {:>9} {:>15}", "claim", "total", "holds", "unmet", "counterexamples");
    for (claim, counts) in &by_claim {
        let get = |k: &str| counts.get(k).copied().unwrap_or(0);
        let total: usize = counts.values().sum();
        println!(
            "{claim:<14} {total:>7} {:>7} {:>9} {:>15}",
            get("holds") + get("recorded"),
            get("hypotheses not met"),
            get("COUNTEREXAMPLE")
        );
    }
    if reports.iter().any(|r| r.claim == Claim::Q45.id()) {
        let q: Vec<CheckReport> = reports.iter().filter(|r| r.claim == Claim::Q45.id()).cloned().collect();
        print_delta_range(&q);
    }
    let seeds: Vec<u64> = {
        let mut s: Vec<u64> = reports.iter().filter_map(|r| r.seed).collect();
        s.dedup();
        s
    };
    if !seeds.is_empty() {
        println!("seeds: {seeds:?}");
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
