//! Command line front end for `.scx` weighted complexes.
//!
//! Exit codes: 0 success, 1 domain failure (validation violations, an
//! unreachable target, weights a search rejects), 2 usage, IO, or parse
//! problems.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Duration, Instant};

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use scx::{format, generate, DistanceMap, GeneratorConfig, Simplex, WeightedComplex};

#[derive(Parser)]
#[command(name = "scx", version, about = "Shortest d-paths in weighted simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a .scx file and report any violations
    Validate {
        file: PathBuf,
        /// Require strictly positive weights
        #[arg(long)]
        strict_positive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Distances from a source (d-1)-simplex to everything it reaches
    Sssp {
        file: PathBuf,
        /// Source simplex as comma-separated vertex ids, e.g. 1,3
        #[arg(long)]
        source: String,
        /// Also print `inf` rows for unreachable incident (d-1)-simplices
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Shortest d-path between two (d-1)-simplices
    Path {
        file: PathBuf,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// Sample a seeded random complex and write it as .scx
    Generate(GenerateArgs),
    /// Time generated instances across a size sweep, CSV on stdout
    Bench {
        /// Dimension of the generated complexes
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Target top-simplex counts, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        target_m: Vec<u64>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Timings reported as the median of this many runs
        #[arg(long, default_value_t = 1)]
        repeat: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 1.0)]
    wmin: f64,
    #[arg(long, default_value_t = 10.0)]
    wmax: f64,
    /// Round weights to integers
    #[arg(long = "int")]
    integer: bool,
    /// Output file; stdout when omitted
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            classify(&err)
        }
    }
}

/// Domain-level failures exit 1, everything else (usage, IO, parse) exits 2.
fn classify(err: &anyhow::Error) -> ExitCode {
    match err.downcast_ref::<scx::Error>() {
        Some(scx::Error::InvalidWeights(_)) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Validate { file, strict_positive, json } => {
            cmd_validate(&file, strict_positive, json)
        }
        Command::Sssp { file, source, all, json } => cmd_sssp(&file, &source, all, json),
        Command::Path { file, source, target, json } => cmd_path(&file, &source, &target, json),
        Command::Generate(args) => cmd_generate(&args),
        Command::Bench { d, target_m, p, repeat, seed } => cmd_bench(d, &target_m, p, repeat, seed),
    }
}

fn load_complex(file: &Path) -> Result<WeightedComplex> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    format::parse(&text).map_err(|e| match e {
        scx::Error::Parse { line, reason } => anyhow!("{}:{line}: {reason}", file.display()),
        other => other.into(),
    })
}

fn parse_simplex(flag: &str, value: &str) -> Result<Simplex> {
    Simplex::from_str(value).with_context(|| format!("bad --{flag} value `{value}`"))
}

fn cmd_validate(file: &Path, strict_positive: bool, json: bool) -> Result<ExitCode> {
    let cx = load_complex(file)?;
    let report = cx.validate(strict_positive);
    if json {
        let violations: Vec<String> =
            report.violations().iter().map(|v| v.to_string()).collect();
        println!(
            "{}",
            json!({ "valid": report.is_valid(), "violations": violations })
        );
    } else if report.is_valid() {
        println!("ok");
    } else {
        for violation in report.violations() {
            println!("{violation}");
        }
    }
    Ok(if report.is_valid() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn sssp_rows(cx: &WeightedComplex, map: &DistanceMap, all: bool) -> Vec<(Simplex, f64, Option<Simplex>)> {
    let mut rows: Vec<(Simplex, f64, Option<Simplex>)> = map
        .iter()
        .map(|(s, e)| (s.clone(), e.distance, e.predecessor.as_ref().map(|(p, _)| p.clone())))
        .collect();
    if all {
        for facet in cx.incident_facets() {
            if map.get(facet).is_none() {
                rows.push((facet.clone(), f64::INFINITY, None));
            }
        }
    }
    rows.sort_by(|a, b| {
        a.1.partial_cmp(&b.1)
            .expect("distances are never NaN")
            .then_with(|| a.0.cmp(&b.0))
    });
    rows
}

fn cmd_sssp(file: &Path, source: &str, all: bool, json: bool) -> Result<ExitCode> {
    let cx = load_complex(file)?;
    let source = parse_simplex("source", source)?;
    let map = cx.sssp(&source)?;
    let rows = sssp_rows(&cx, &map, all);
    if json {
        let rows: Vec<_> = rows
            .iter()
            .map(|(s, d, p)| {
                json!({
                    "simplex": s.to_string(),
                    "distance": if d.is_finite() { Some(*d) } else { None },
                    "predecessor": p.as_ref().map(|p| p.to_string()),
                })
            })
            .collect();
        println!("{}", json!({ "source": map.source().to_string(), "rows": rows }));
    } else {
        for (s, d, p) in &rows {
            let pred = p.as_ref().map_or("-".to_string(), |p| p.to_string());
            println!("{s} {d} {pred}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_path(file: &Path, source: &str, target: &str, json: bool) -> Result<ExitCode> {
    let cx = load_complex(file)?;
    let source = parse_simplex("source", source)?;
    let target = parse_simplex("target", target)?;
    match cx.shortest_path(&source, &target)? {
        Some(path) => {
            if json {
                let simplices: Vec<String> =
                    path.simplices().iter().map(|s| s.to_string()).collect();
                let via: Vec<String> = path.via().iter().map(|s| s.to_string()).collect();
                println!(
                    "{}",
                    json!({
                        "found": true,
                        "simplices": simplices,
                        "via": via,
                        "hops": path.hops(),
                        "total": path.total(),
                    })
                );
            } else {
                println!("path {}", join_spaced(path.simplices()));
                println!("via {}", join_spaced(path.via()));
                println!("hops {}", path.hops());
                println!("total {}", path.total());
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            if json {
                println!("{}", json!({ "found": false }));
            } else {
                println!("unreachable");
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn join_spaced(simplices: &[Simplex]) -> String {
    simplices
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_generate(args: &GenerateArgs) -> Result<ExitCode> {
    let cfg = GeneratorConfig {
        n: args.n,
        d: args.d,
        p: args.p,
        weight_low: args.wmin,
        weight_high: args.wmax,
        integer_weights: args.integer,
        seed: args.seed,
    };
    let cx = generate(&cfg)?;
    let text = format::serialize(&cx);
    match &args.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

/// Smallest vertex count whose expected top-simplex count reaches `target`.
fn vertex_count_for(d: usize, p: f64, target: u64) -> Result<u32> {
    let mut n = d as u32 + 1;
    loop {
        let cfg = GeneratorConfig {
            n,
            d,
            p,
            weight_low: 1.0,
            weight_high: 10.0,
            integer_weights: true,
            seed: 0,
        };
        if let Ok(candidates) = cfg.candidate_count() {
            if p * candidates as f64 >= target as f64 {
                return Ok(n);
            }
        } else if n > d as u32 + 1 {
            return Err(anyhow!("target m {target} not reachable with d={d} p={p}"));
        }
        n += 1;
        if n > 1_000_000 {
            return Err(anyhow!("target m {target} not reachable with d={d} p={p}"));
        }
    }
}

fn median_ms(mut samples: Vec<Duration>) -> f64 {
    samples.sort();
    let mid = samples.len() / 2;
    let median = if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    };
    median.as_secs_f64() * 1e3
}

fn cmd_bench(d: usize, target_m: &[u64], p: f64, repeat: usize, seed: u64) -> Result<ExitCode> {
    let repeat = repeat.max(1);
    println!("n_simplices,d,m,build_ms,sssp_ms");
    for (i, &target) in target_m.iter().enumerate() {
        let n = vertex_count_for(d, p, target)?;
        let cfg = GeneratorConfig {
            n,
            d,
            p,
            weight_low: 1.0,
            weight_high: 10.0,
            integer_weights: true,
            seed: seed.wrapping_add(i as u64),
        };
        let cx = generate(&cfg)?;
        let entries: Vec<(Simplex, f64)> =
            cx.entries().map(|(s, w)| (s.clone(), w)).collect();
        let source = cx
            .incident_facets()
            .first()
            .cloned()
            .ok_or_else(|| anyhow!("generated complex is empty; raise --p or the target"))?;

        let mut build_times = Vec::with_capacity(repeat);
        let mut sssp_times = Vec::with_capacity(repeat);
        for _ in 0..repeat {
            let t0 = Instant::now();
            let rebuilt = WeightedComplex::new(d, n, entries.clone())?;
            build_times.push(t0.elapsed());

            let t1 = Instant::now();
            let map = rebuilt.sssp(&source)?;
            sssp_times.push(t1.elapsed());
            std::hint::black_box(map.len());
        }
        println!(
            "{},{},{},{:.3},{:.3}",
            cx.incident_facets().len(),
            d,
            cx.simplex_count(),
            median_ms(build_times),
            median_ms(sssp_times)
        );
    }
    Ok(ExitCode::SUCCESS)
}
