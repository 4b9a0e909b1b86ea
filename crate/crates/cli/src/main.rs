use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use fracmesh::run::{self, MeshSettings, Source};
use fracmesh_core::estimate::StopRule;
use fracmesh_core::generators::{FractalKind, PrefractalSpec, DEFAULT_DEPTH_CAP};
use fracmesh_core::mesh::{MeshOptions, ModeRequest};
use fracmesh_core::{CellMode, Diagonal, MeshKind};

/// Box-counting dimension with square and triangle δ-meshes.
#[derive(Parser)]
#[command(name = "fracmesh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a prefractal as a fracgeo file.
    Generate {
        #[arg(long)]
        fractal: FractalKind,
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = DEFAULT_DEPTH_CAP)]
        depth_cap: u32,
        #[arg(long)]
        out: PathBuf,
        /// Also write the per-stage construction report (bradley only).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Write the 3·2^k+1 cover triangles of stage k and verify count and area.
    Decompose {
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = DEFAULT_DEPTH_CAP)]
        depth_cap: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Count one mesh over a schedule and write counts.csv.
    Count {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        mesh: MeshKind,
        #[command(flatten)]
        mesh_args: MeshArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Fit log-log lines to a counts.csv and write fit.csv.
    Estimate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Count both meshes, fit both, check N <= T <= 2N, plot.
    Compare {
        #[arg(long = "in", conflicts_with = "fractal", required_unless_present = "fractal")]
        input: Option<PathBuf>,
        #[arg(long)]
        fractal: Option<FractalKind>,
        /// Stage of the generated fractal; omitted means deep enough for the finest delta.
        #[arg(long, requires = "fractal")]
        depth: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_DEPTH_CAP)]
        depth_cap: u32,
        #[command(flatten)]
        mesh_args: MeshArgs,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Tabulate the cover-count ratio until it stops.
    Ratio {
        #[arg(long, default_value_t = 0.1)]
        tol: f64,
        #[arg(long, default_value_t = 60)]
        k_max: u32,
        /// Stop at the first B >= 2.
        #[arg(long)]
        reach_two: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Exact,
    Approx,
}

#[derive(Args)]
struct MeshArgs {
    /// dyadic:J0:J1, stage:K0:K1 or linear:D0:D1:N
    #[arg(long)]
    schedule: String,
    #[arg(long, default_value = "closed")]
    cells: CellMode,
    #[arg(long, default_value = "ne")]
    diagonal: Diagonal,
    /// Grid origin as X,Y (dyadic or decimal).
    #[arg(long)]
    offset: Option<String>,
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    mode: Mode,
}

impl MeshArgs {
    fn settings(&self) -> Result<MeshSettings> {
        let mut options = MeshOptions {
            cell_mode: self.cells,
            diagonal: self.diagonal,
            ..MeshOptions::default()
        };
        if let Some(o) = &self.offset {
            options.offset = run::parse_offset(o)?;
        }
        Ok(MeshSettings {
            schedule: run::parse_schedule(&self.schedule)?,
            options,
            mode: match self.mode {
                Mode::Auto => ModeRequest::Auto,
                Mode::Exact => ModeRequest::Exact,
                Mode::Approx => ModeRequest::Approx,
            },
        })
    }
}

fn warn_all(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

/// `Ok(false)` means the command ran but a verification failed.
fn execute(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Generate {
            fractal,
            depth,
            depth_cap,
            out,
            trace,
        } => {
            let spec = PrefractalSpec {
                depth_cap,
                ..PrefractalSpec::new(fractal, depth)
            };
            let set = run::generate(&spec, &out, trace.as_deref())?;
            println!("{} primitives written to {}", set.len(), out.display());
            Ok(true)
        }
        Command::Decompose {
            depth,
            depth_cap,
            out,
        } => {
            let outcome = run::decompose(depth, depth_cap, &out)?;
            println!("{outcome}");
            Ok(outcome.pass)
        }
        Command::Count {
            input,
            mesh,
            mesh_args,
            out,
        } => {
            let outcome = run::count(&input, mesh, &mesh_args.settings()?, &out)?;
            warn_all(&outcome.warnings);
            println!("{} rows written to {}", outcome.records.len(), out.display());
            Ok(true)
        }
        Command::Estimate { input, out } => {
            for f in run::estimate(&input, &out)? {
                println!(
                    "{}: slope {:.6}, r^2 {:.6}, {} points",
                    f.mesh, f.slope, f.r_squared, f.n_points
                );
            }
            Ok(true)
        }
        Command::Compare {
            input,
            fractal,
            depth,
            depth_cap,
            mesh_args,
            out_dir,
        } => {
            let source = match (input, fractal) {
                (Some(p), _) => Source::File(p),
                (None, Some(kind)) => Source::Fractal {
                    kind,
                    depth,
                    depth_cap,
                },
                (None, None) => unreachable!("clap requires --in or --fractal"),
            };
            let outcome = run::compare(&source, &mesh_args.settings()?, &out_dir)?;
            warn_all(&outcome.warnings);
            for f in &outcome.fits {
                println!("{}: slope {:.6}, r^2 {:.6}", f.mesh, f.slope, f.r_squared);
            }
            let ok = outcome.inequality_holds();
            if !ok {
                eprintln!("error: N <= T <= 2N violated; see {}", out_dir.join("report.txt").display());
            }
            Ok(ok)
        }
        Command::Ratio {
            tol,
            k_max,
            reach_two,
        } => {
            let rule = if reach_two {
                StopRule::ReachTwo
            } else {
                StopRule::Tolerance(tol)
            };
            let outcome = run::ratio(rule, k_max)?;
            // a closed pipe (`| head`) is not an error
            let _ = write!(std::io::stdout().lock(), "{outcome}");
            Ok(outcome.stop.is_ok())
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
