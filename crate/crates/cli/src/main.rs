//! `gfree`: solve, certify, construct, and scan from the command line.
//!
//! Graphs come in as graph6 (or sparse6) lines on stdin or a file; reports
//! go out as JSON (default) or a human-readable table. Identical invocations
//! on identical input produce byte-identical JSON, whatever `--jobs` says.
//!
//! Exit codes: 0 on success, 1 when a verification or scan finds a
//! violation, 2 on usage or input errors.

mod output;

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use gfree_core::constructions::{build_from_spec, ConstructionSpec};
use gfree_core::error::Error;
use gfree_core::g6::{parse_line, write_graph6};
use gfree_core::graph::{Graph, MAX_VERTICES};
use gfree_core::minimality::{is_edge_minimal, is_vertex_minimal};
use gfree_core::solver::{chi_g, is_uniquely_colorable_capped};
use gfree_core::subiso::Pattern;
use gfree_core::verify::{
    check_hstar, check_r_graph, check_theorem_b1, check_theorem_b2, check_theorem_b3,
    check_theorem_d, run_scannable_check, scan, BoundCheck, ConverseOptions, TheoremId,
};

use output::{ChiReport, Format, MinimalReport, UniqueReport};

#[derive(Parser)]
#[command(name = "gfree", version, about = "Exact solver and verifier for G-free graph coloring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Pattern: a builtin name (K2, P3, K3, P4, C4, K4, KmMinusPM:m) or a graph6 string
    #[arg(long)]
    pattern: String,

    /// Read graph6/sparse6 lines from this file instead of stdin
    #[arg(long)]
    input: Option<String>,

    /// Worker count; 1 disables parallelism
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the pattern-free chromatic number of each input graph
    Chi {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Decide unique colorability of each input graph
    Unique {
        #[command(flatten)]
        common: CommonOpts,
        /// Stop enumerating optimal partitions after this many (0 = no cap)
        #[arg(long, default_value_t = 2)]
        cap: usize,
    },
    /// Report vertex- and edge-minimality of each input graph
    Minimal {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Emit a named construction as graph6
    Construct {
        /// One of: theorem2, theorem2_extended, hstar, r_graph, theoremD
        name: String,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        steps: Option<usize>,
        /// Seed for the attachment choice (omit for the lowest-id choice)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a theorem: per-graph checks (A, C, Cor, VDel, T3, T4) run on
    /// input graphs; construction checks (B1, B2, B3, T5star, T5r, D) take
    /// parameters
    Verify {
        /// Check id: A, B1, B2, B3, C, Cor, VDel, T3, T4, T5star, T5r, D
        check: String,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        /// Sample size for the converse side of D above full-enumeration orders
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run selected checks over a stream of graphs and aggregate violations
    Scan {
        #[command(flatten)]
        common: CommonOpts,
        /// Comma-separated check ids from {A, C, Cor, VDel, T3, T4}
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
}

/// Compiled maximum, optionally lowered by GFREE_VERTEX_CAP.
fn vertex_cap() -> Result<usize, String> {
    match std::env::var("GFREE_VERTEX_CAP") {
        Err(_) => Ok(MAX_VERTICES),
        Ok(raw) => match raw.parse::<usize>() {
            Ok(cap) if cap >= 1 => Ok(cap.min(MAX_VERTICES)),
            _ => Err(format!("GFREE_VERTEX_CAP must be a positive integer, got {raw:?}")),
        },
    }
}

fn open_input(path: Option<&str>) -> io::Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(path) => Box::new(BufReader::new(File::open(path)?)),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

/// Parses every nonblank input line, enforcing the vertex cap.
fn read_graphs(path: Option<&str>, cap: usize) -> Result<Vec<Graph>, Error> {
    let reader = open_input(path).map_err(|e| Error::StreamParse {
        line: 0,
        reason: format!("cannot open input: {e}"),
    })?;
    let mut graphs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::StreamParse { line: line_no, reason: e.to_string() })?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let g = parse_line(trimmed)
            .map_err(|e| Error::StreamParse { line: line_no, reason: e.to_string() })?;
        if g.vertex_count() > cap {
            return Err(Error::StreamParse {
                line: line_no,
                reason: format!("graph order {} exceeds the vertex cap {cap}", g.vertex_count()),
            });
        }
        graphs.push(g);
    }
    Ok(graphs)
}

/// Applies `f` to every graph, in input order, parallel when jobs > 1.
fn map_ordered<T: Send>(graphs: &[Graph], jobs: usize, f: impl Fn(&Graph) -> T + Sync) -> Vec<T> {
    if jobs > 1 {
        graphs.par_iter().map(&f).collect()
    } else {
        graphs.iter().map(&f).collect()
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn init_pool(jobs: usize) {
    if jobs > 1 {
        // ignore failure: the pool can only be built once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => match err {
            Error::NotUnique(_) | Error::NoCopy { .. } => {
                eprintln!("finding: {err}");
                ExitCode::from(1)
            }
            other => usage_error(other),
        },
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Chi { common } => {
            init_pool(common.jobs);
            let cap = vertex_cap().map_err(|e| Error::StreamParse { line: 0, reason: e })?;
            let pat = Pattern::from_source(&common.pattern)?;
            let graphs = read_graphs(common.input.as_deref(), cap)?;
            let reports = map_ordered(&graphs, common.jobs, |g| {
                let solve = chi_g(g, &pat);
                ChiReport {
                    graph6: write_graph6(g),
                    pattern: pat.descriptor().to_string(),
                    chi: solve.chi,
                    witness: solve.witness,
                    nodes: solve.nodes_explored,
                }
            });
            for r in &reports {
                common.format.emit_chi(r);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Unique { common, cap } => {
            init_pool(common.jobs);
            let vcap = vertex_cap().map_err(|e| Error::StreamParse { line: 0, reason: e })?;
            let pat = Pattern::from_source(&common.pattern)?;
            let graphs = read_graphs(common.input.as_deref(), vcap)?;
            let enum_cap = if cap == 0 { None } else { Some(cap) };
            let reports = map_ordered(&graphs, common.jobs, |g| {
                let u = is_uniquely_colorable_capped(g, &pat, enum_cap);
                UniqueReport {
                    graph6: write_graph6(g),
                    pattern: pat.descriptor().to_string(),
                    chi: u.chi,
                    unique: u.unique,
                    partitions: u.partitions_found,
                    cap_hit: u.cap_hit,
                }
            });
            for r in &reports {
                common.format.emit_unique(r);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Minimal { common } => {
            init_pool(common.jobs);
            let cap = vertex_cap().map_err(|e| Error::StreamParse { line: 0, reason: e })?;
            let pat = Pattern::from_source(&common.pattern)?;
            let graphs = read_graphs(common.input.as_deref(), cap)?;
            // deletions parallelize inside the library; keep the outer loop
            // sequential so the jobs budget is not squared
            let reports: Vec<MinimalReport> = graphs
                .iter()
                .map(|g| {
                    let vertex = is_vertex_minimal(g, &pat, common.jobs);
                    let edge = is_edge_minimal(g, &pat, common.jobs).ok();
                    MinimalReport {
                        graph6: write_graph6(g),
                        pattern: pat.descriptor().to_string(),
                        base_chi: vertex.base_chi,
                        vertex,
                        edge,
                    }
                })
                .collect();
            for r in &reports {
                common.format.emit_minimal(r);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { name, pattern, m, k, t, steps, seed } => {
            let spec = construction_spec(&name, pattern, m, k, t, steps, seed)?;
            let g = build_from_spec(&spec)?;
            println!("{}", write_graph6(&g));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { check, pattern, input, m, k, t, steps, samples, seed, jobs, format } => {
            init_pool(jobs);
            let id: TheoremId = check.parse()?;
            let checks = run_verify(id, pattern, input, m, k, t, steps, samples, seed, jobs)?;
            format.emit_checks(&checks);
            if checks.iter().all(|c| c.holds) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Scan { common, checks } => {
            init_pool(common.jobs);
            let cap = vertex_cap().map_err(|e| Error::StreamParse { line: 0, reason: e })?;
            let pat = Pattern::from_source(&common.pattern)?;
            let ids = checks
                .iter()
                .map(|c| c.parse())
                .collect::<Result<Vec<TheoremId>, _>>()?;
            if ids.is_empty() {
                return Err(Error::BadParams("scan needs at least one check id".into()));
            }
            let reader = open_input(common.input.as_deref()).map_err(|e| Error::StreamParse {
                line: 0,
                reason: format!("cannot open input: {e}"),
            })?;
            let report = scan(reader, &pat, &ids, cap, common.jobs)?;
            common.format.emit_scan(&report);
            if report.violations.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn construction_spec(
    name: &str,
    pattern: Option<String>,
    m: Option<usize>,
    k: Option<usize>,
    t: Option<usize>,
    steps: Option<usize>,
    seed: Option<u64>,
) -> Result<ConstructionSpec, Error> {
    let need = |opt: Option<usize>, flag: &str| {
        opt.ok_or_else(|| Error::BadParams(format!("{name} needs --{flag}")))
    };
    let need_pattern = || {
        pattern
            .clone()
            .ok_or_else(|| Error::BadParams(format!("{name} needs --pattern")))
    };
    Ok(match name {
        "theorem2" => ConstructionSpec::Theorem2 {
            pattern: need_pattern()?,
            k: need(k, "k")?,
            attachment_seed: seed,
        },
        "theorem2_extended" => ConstructionSpec::Theorem2Extended {
            pattern: need_pattern()?,
            k: need(k, "k")?,
            steps: need(steps, "steps")?,
            attachment_seed: seed,
        },
        "hstar" => ConstructionSpec::Hstar { m: need(m, "m")?, k: need(k, "k")? },
        "r_graph" => ConstructionSpec::RGraph { m: need(m, "m")?, k: need(k, "k")?, t: need(t, "t")? },
        "theoremD" => ConstructionSpec::TheoremD { m: need(m, "m")?, k: need(k, "k")? },
        other => {
            return Err(Error::BadParams(format!(
                "unknown construction {other:?}; expected theorem2, theorem2_extended, hstar, r_graph, or theoremD"
            )))
        }
    })
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    id: TheoremId,
    pattern: Option<String>,
    input: Option<String>,
    m: Option<usize>,
    k: Option<usize>,
    t: Option<usize>,
    steps: usize,
    samples: usize,
    seed: u64,
    jobs: usize,
) -> Result<Vec<BoundCheck>, Error> {
    let need = |opt: Option<usize>, flag: &str| {
        opt.ok_or_else(|| Error::BadParams(format!("verify {id} needs --{flag}")))
    };
    let need_pattern = |pattern: &Option<String>| -> Result<Pattern, Error> {
        match pattern {
            Some(s) => Pattern::from_source(s),
            None => Err(Error::BadParams(format!("verify {id} needs --pattern"))),
        }
    };
    match id {
        TheoremId::A | TheoremId::C | TheoremId::Cor | TheoremId::VDel | TheoremId::T3 | TheoremId::T4 => {
            let cap = vertex_cap().map_err(|e| Error::StreamParse { line: 0, reason: e })?;
            let pat = need_pattern(&pattern)?;
            let graphs = read_graphs(input.as_deref(), cap)?;
            if graphs.is_empty() {
                return Err(Error::BadParams(format!("verify {id} needs at least one input graph")));
            }
            let per_graph: Result<Vec<Vec<BoundCheck>>, Error> = if jobs > 1 {
                graphs.par_iter().map(|g| run_scannable_check(id, g, &pat)).collect()
            } else {
                graphs.iter().map(|g| run_scannable_check(id, g, &pat)).collect()
            };
            Ok(per_graph?.into_iter().flatten().collect())
        }
        TheoremId::B1 => Ok(vec![check_theorem_b1(&need_pattern(&pattern)?, need(k, "k")?)?]),
        TheoremId::B2 => Ok(vec![check_theorem_b2(&need_pattern(&pattern)?, need(k, "k")?)?]),
        TheoremId::B3 => Ok(vec![check_theorem_b3(&need_pattern(&pattern)?, need(k, "k")?, steps)?]),
        TheoremId::T5star => {
            let pat = match &pattern {
                Some(s) => Some(Pattern::from_source(s)?),
                None => None,
            };
            Ok(vec![check_hstar(need(m, "m")?, need(k, "k")?, pat.as_ref())?])
        }
        TheoremId::T5r => Ok(vec![check_r_graph(need(m, "m")?, need(k, "k")?, need(t, "t")?)?]),
        TheoremId::D => check_theorem_d(
            need(m, "m")?,
            need(k, "k")?,
            ConverseOptions { samples, seed, ..ConverseOptions::default() },
        ),
    }
}
