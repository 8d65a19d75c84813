use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use striclcs::frontier::{build_frontier, FrontierTable};
use striclcs::harness::{run_bench, run_selftest, BenchConfig, SelftestConfig};
use striclcs::lcs::lcs_length;
use striclcs::report::{run, RunOptions};
use striclcs::{Algorithm, OccurrenceStrategy};

#[derive(Parser)]
#[command(
    name = "striclcs",
    version,
    about = "Longest common subsequence containing a pattern"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance.
    Solve(SolveArgs),
    /// Time the space-efficient solver over a list of sizes.
    Bench(BenchArgs),
    /// Randomized cross-check of all solvers.
    Selftest(SelftestArgs),
    /// Print a frontier table.
    DumpTable(DumpArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    SpaceEfficient,
    Deorowicz,
    Brute,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::SpaceEfficient => Algorithm::SpaceEfficient,
            AlgoArg::Deorowicz => Algorithm::Deorowicz,
            AlgoArg::Brute => Algorithm::Brute,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, conflicts_with = "a_file")]
    a: Option<String>,
    #[arg(long, conflicts_with = "b_file")]
    b: Option<String>,
    /// Pattern; empty or omitted means plain LCS.
    #[arg(long, conflicts_with = "p_file", allow_hyphen_values = true)]
    p: Option<String>,
    #[arg(long)]
    a_file: Option<PathBuf>,
    #[arg(long)]
    b_file: Option<PathBuf>,
    #[arg(long)]
    p_file: Option<PathBuf>,
    /// Reconstruct a witness string.
    #[arg(long)]
    witness: bool,
    #[arg(long, value_enum, default_value = "space-efficient")]
    algo: AlgoArg,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Use the dense next-occurrence table when building frontiers.
    #[arg(long)]
    dense_occ: bool,
    /// Leave elapsed time out of the report.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "500,1000,2000,4000", value_parser = positive)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=26))]
    sigma: u8,
    /// Make B a copy of A with this many substitutions.
    #[arg(long)]
    mutations: Option<usize>,
    #[arg(long, default_value_t = 8)]
    pattern_len: usize,
    #[arg(long, default_value_t = 3, value_parser = positive)]
    reps: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    dense_occ: bool,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 10_000)]
    cases: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Random pairs checked for the frontier visibility properties.
    #[arg(long, default_value_t = 200)]
    frontier_pairs: usize,
    /// Corrupt the quadratic reference to exercise failure reporting.
    #[arg(long, hide = true)]
    inject_fault: bool,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct DumpArgs {
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    /// Dump the table of B against A instead.
    #[arg(long)]
    transpose: bool,
    /// Build over the reversed strings.
    #[arg(long)]
    reversed: bool,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => solve(args),
        Command::Bench(args) => bench(args),
        Command::Selftest(args) => selftest(args),
        Command::DumpTable(args) => dump(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

type CliResult = Result<ExitCode, String>;

fn read_file(path: &PathBuf) -> Result<Vec<u8>, String> {
    let mut data = fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    if data.last() == Some(&b'\n') {
        data.pop();
        if data.last() == Some(&b'\r') {
            data.pop();
        }
    }
    Ok(data)
}

fn pick(inline: Option<String>, file: Option<&PathBuf>) -> Result<Option<Vec<u8>>, String> {
    match (inline, file) {
        (Some(s), _) => Ok(Some(s.into_bytes())),
        (None, Some(path)) => read_file(path).map(Some),
        (None, None) => Ok(None),
    }
}

type Triple = (Vec<u8>, Vec<u8>, Vec<u8>);

/// A, B and P from flags, files, or three lines of standard input.
fn inputs(args: &SolveArgs) -> Result<Triple, String> {
    let a = pick(args.a.clone(), args.a_file.as_ref())?;
    let b = pick(args.b.clone(), args.b_file.as_ref())?;
    let p = pick(args.p.clone(), args.p_file.as_ref())?;
    match (a, b) {
        (Some(a), Some(b)) => Ok((a, b, p.unwrap_or_default())),
        (None, None) => {
            let mut lines = Vec::new();
            for line in io::stdin().lock().split(b'\n') {
                let mut line = line.map_err(|e| format!("stdin: {e}"))?;
                if line.last() == Some(&b'\r') {
                    line.pop();
                }
                lines.push(line);
            }
            let mut lines = lines.into_iter();
            let (Some(a), Some(b)) = (lines.next(), lines.next()) else {
                return Err("expected A and B on the first two lines of standard input".into());
            };
            let p = p.or_else(|| lines.next()).unwrap_or_default();
            Ok((a, b, p))
        }
        _ => Err("both A and B are required".into()),
    }
}

fn occurrence(dense: bool) -> OccurrenceStrategy {
    if dense {
        OccurrenceStrategy::Dense
    } else {
        OccurrenceStrategy::Sorted
    }
}

fn solve(args: SolveArgs) -> CliResult {
    let (a, b, p) = inputs(&args)?;
    let opts = RunOptions {
        algo: args.algo.into(),
        witness: args.witness,
        occurrence: occurrence(args.dense_occ),
        timing: !args.no_timing,
    };
    let report = run(&a, &b, &p, opts).map_err(|e| e.to_string())?;
    match args.format {
        Format::Json => println!("{}", report.to_record()),
        Format::Human => print!("{}", report.render_human()),
    }
    Ok(ExitCode::SUCCESS)
}

fn bench(args: BenchArgs) -> CliResult {
    let cfg = BenchConfig {
        sizes: args.sizes,
        sigma: args.sigma,
        pattern_len: args.pattern_len,
        mutations: args.mutations,
        reps: args.reps,
        seed: args.seed,
        occurrence: occurrence(args.dense_occ),
    };
    let summary = run_bench(&cfg).map_err(|e| e.to_string())?;
    let mut out = io::stdout().lock();
    let written = match args.format {
        Format::Json => summary
            .rows
            .iter()
            .try_for_each(|row| writeln!(out, "{}", row.to_record()))
            .and_then(|_| writeln!(out, "{}", summary.slope_record())),
        Format::Human => {
            let _ = writeln!(
                out,
                "{:>8} {:>8} {:>8} {:>12} {:>14} {:>12} {:>12}",
                "n", "length", "ell", "cells", "full-table", "pairs", "time(ms)"
            );
            summary
                .rows
                .iter()
                .try_for_each(|r| {
                    writeln!(
                        out,
                        "{:>8} {:>8} {:>8} {:>12} {:>14} {:>12} {:>12.3}",
                        r.n,
                        r.length,
                        r.ell,
                        r.cells_allocated,
                        r.quadratic_cells,
                        r.candidate_pairs,
                        r.elapsed_ns as f64 / 1e6
                    )
                })
                .and_then(|_| writeln!(out, "log-log slope: {}", fmt_slope(summary.slope, "n/a")))
        }
    };
    written.map_err(|e| format!("stdout: {e}"))?;
    Ok(ExitCode::SUCCESS)
}

fn fmt_slope(slope: Option<f64>, missing: &str) -> String {
    slope.map_or_else(|| missing.to_string(), |s| format!("{s:.3}"))
}

fn selftest(args: SelftestArgs) -> CliResult {
    let cfg = SelftestConfig {
        cases: args.cases,
        seed: args.seed,
        frontier_pairs: args.frontier_pairs,
        inject_fault: args.inject_fault,
        ..Default::default()
    };
    let summary = run_selftest(&cfg);
    match args.format {
        Format::Json => println!("{}", summary.to_record()),
        Format::Human => match &summary.failure {
            None => println!(
                "ok: {} cases ({} brute-forced, {} witnesses, {} bottom), {} frontier pairs",
                summary.cases,
                summary.brute_checked,
                summary.witnesses_checked,
                summary.bottoms,
                summary.frontier_pairs
            ),
            Some(c) => println!(
                "FAILED after {} cases: {}\n  A = {:?}\n  B = {:?}\n  P = {:?}",
                summary.cases, c.detail, c.a, c.b, c.p
            ),
        },
    }
    Ok(if summary.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn dump(args: DumpArgs) -> CliResult {
    let (mut x, mut y) = (args.a.into_bytes(), args.b.into_bytes());
    if args.transpose {
        std::mem::swap(&mut x, &mut y);
    }
    if args.reversed {
        x.reverse();
        y.reverse();
    }
    let ell = lcs_length(&x, &y);
    let table: FrontierTable = build_frontier(&x, &y, ell);
    println!(
        "X = {}  Y = {}  ell = {}  diagonals = {}  stored cells = {}",
        String::from_utf8_lossy(&x),
        String::from_utf8_lossy(&y),
        ell,
        table.diagonals(),
        table.stored_cells()
    );
    print!("{}", table.render());
    Ok(ExitCode::SUCCESS)
}
