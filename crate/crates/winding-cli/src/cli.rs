//! Command-line interface: realize winding vectors, validate and
//! inspect drawing files, run the theorem fuzzers, render SVG.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use winding_core::constructor::realize;
use winding_core::polyline::winding_closed;
use winding_core::{Drawing, Error};

use crate::error::CliError;
use crate::format::{parse_drawing, serialize_drawing};
use crate::svg::{render_svg, SvgOptions};
use crate::verify::{fuzz, write_failures, GraphKind};
use crate::atomic_write;

#[derive(Parser)]
#[command(
    name = "winding",
    about = "Exact winding-number toolkit for piecewise-linear graph drawings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a K4 almost embedding with the given winding vector.
    Realize(RealizeArgs),
    /// Validate a drawing file and report its winding invariant.
    Check { file: PathBuf },
    /// Winding number of a vertex cycle's image around a vertex image.
    Winding(WindingArgs),
    /// Fuzz random almost embeddings against the proved invariants.
    Sample(SampleArgs),
    /// Render a drawing file to SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct RealizeArgs {
    /// Target winding vector; the sum must be odd.
    #[arg(long = "w", num_args = 4, allow_negative_numbers = true)]
    w: Vec<i64>,
    /// Write the drawing as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Render the drawing as SVG.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct WindingArgs {
    file: PathBuf,
    /// Comma-separated vertex ids forming the cycle, e.g. 1,2,3.
    #[arg(long)]
    cycle: String,
    /// The vertex whose image is the winding basepoint.
    #[arg(long)]
    vertex: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    K4,
    K5m45,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, value_enum)]
    graph: GraphArg,
    #[arg(long)]
    count: u64,
    /// Sampling seed; falls back to $WINDING_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    /// Check the theorem invariant on every sample.
    #[arg(long)]
    check: bool,
    /// Where to persist failing seeds for replay.
    #[arg(long)]
    failures_out: Option<PathBuf>,
}

fn default_seed() -> u64 {
    std::env::var("WINDING_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

fn load_drawing(path: &Path) -> Result<Drawing, CliError> {
    parse_drawing(&std::fs::read_to_string(path)?)
}

fn cmd_realize(args: &RealizeArgs) -> Result<ExitCode, CliError> {
    let [n1, n2, n3, n4]: [i64; 4] = args.w[..]
        .try_into()
        .map_err(|_| CliError::Schema("--w takes exactly four integers".into()))?;
    let drawing = match realize(n1, n2, n3, n4) {
        Ok(d) => d,
        Err(Error::ParityViolation) => {
            eprintln!(
                "({n1}, {n2}, {n3}, {n4}) sums to {}, but a K4 almost embedding \
                 always has an odd winding-vector sum",
                n1 + n2 + n3 + n4
            );
            return Ok(ExitCode::from(2));
        }
        Err(e) => return Err(e.into()),
    };
    let report = drawing.is_almost_embedding();
    let w = drawing.winding_vector_k4()?;
    if !report.is_almost_embedding {
        return Err(Error::NotAlmostEmbedding.into());
    }
    println!("w = {w}");
    if let Some(path) = &args.out {
        atomic_write(path, serialize_drawing(&drawing).as_bytes())?;
    }
    if let Some(path) = &args.svg {
        atomic_write(path, render_svg(&drawing, &SvgOptions::default()).as_bytes())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(path: &Path) -> Result<ExitCode, CliError> {
    let drawing = load_drawing(path)?;
    let report = drawing.is_almost_embedding();
    if !report.is_almost_embedding {
        println!("not an almost embedding: {} violation(s)", report.violations.len());
        for v in &report.violations {
            println!("  {} meets {} at {}", v.first, v.second, v.witness);
        }
        return Ok(ExitCode::FAILURE);
    }
    println!("almost embedding: ok");
    let graph = drawing.graph();
    if *graph == winding_core::Graph::k4() {
        println!("winding vector {}", drawing.winding_vector_k4()?);
    } else if *graph == winding_core::Graph::k5_minus_45() {
        println!("winding difference {}", drawing.k5_difference()?);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_winding(args: &WindingArgs) -> Result<ExitCode, CliError> {
    let drawing = load_drawing(&args.file)?;
    let cycle_vertices = args
        .cycle
        .split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Schema("--cycle takes comma-separated vertex ids".into()))?;
    let cycle = drawing.restriction_to_cycle(&cycle_vertices)?;
    let w = winding_closed(&cycle, drawing.vertex_pos(args.vertex))?;
    println!("{w}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_sample(args: &SampleArgs) -> Result<ExitCode, CliError> {
    let kind = match args.graph {
        GraphArg::K4 => GraphKind::K4Parity,
        GraphArg::K5m45 => GraphKind::K5Pm1,
    };
    let seed = args.seed.unwrap_or_else(default_seed);
    let report = fuzz(kind, args.count, seed)?;
    println!("{report}");
    if let Some(path) = &args.failures_out {
        write_failures(&report, path)?;
    }
    if args.check && !report.failures.is_empty() {
        for f in &report.failures {
            eprintln!("seed {} observed {}: {}", f.seed, f.observed, f.summary);
        }
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_render(file: &Path, out: &Path) -> Result<ExitCode, CliError> {
    let drawing = load_drawing(file)?;
    atomic_write(out, render_svg(&drawing, &SvgOptions::default()).as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

pub fn run<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version exit zero; usage errors exit two per clap.
            return match e.print() {
                Ok(()) => ExitCode::from(e.exit_code() as u8),
                Err(_) => ExitCode::FAILURE,
            };
        }
    };
    let result = match &cli.command {
        Command::Realize(args) => cmd_realize(args),
        Command::Check { file } => cmd_check(file),
        Command::Winding(args) => cmd_winding(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Render { file, out } => cmd_render(file, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
