//! Command-line front end: parse covering files, run analyses, emit
//! reports and Hasse diagrams.
//!
//! Exit codes: 0 success, 1 input or size error, 2 property violation.

mod input;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use covlat::verify::{verify_exhaustive_capped, verify_random};
use covlat::{ApproxSpace, FamilyKind, FixedPointFamily};

/// Hard cap for any `--max-n` override of the subset-scan guards.
const MAX_N_HARD_CAP: usize = 24;

#[derive(Parser)]
#[command(
    name = "covlat",
    about = "Covering-based rough set approximations and their fixed-point lattices",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpName {
    Fl,
    Fh,
    Xl,
    Xh,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    P,
    F,
}

impl From<FamilyName> for FamilyKind {
    fn from(f: FamilyName) -> FamilyKind {
        match f {
            FamilyName::P => FamilyKind::NeighborhoodFixedPoints,
            FamilyName::F => FamilyKind::CoveringFixedPoints,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Neighborhoods, minimal descriptions, unary flag and reduct of a
    /// covering file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Apply one approximation operator to a set.
    Approx {
        file: PathBuf,
        /// fl/fh: block lower/upper; xl/xh: neighborhood lower/upper.
        #[arg(long, value_enum, ignore_case = true)]
        op: OpName,
        /// The argument set, e.g. "{1,4}", "1,4" or "" for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Build a fixed-point family, classify it, optionally render the
    /// Hasse diagram as DOT.
    Lattice {
        file: PathBuf,
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyName,
        /// Write a deterministic DOT Hasse diagram to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check every structural law on a covering file, on all coverings
    /// of a small universe, or on seeded random coverings.
    Verify {
        file: Option<PathBuf>,
        /// Check every covering of a universe of this size.
        #[arg(long, conflicts_with = "file", conflicts_with = "random")]
        exhaustive: Option<usize>,
        /// Check seeded random coverings of a universe of this size.
        #[arg(long, conflicts_with = "file")]
        random: Option<usize>,
        /// Block-inclusion probability for random coverings.
        #[arg(long, default_value_t = 0.05)]
        density: f64,
        /// First seed of the random sweep.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random coverings to check.
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Raise the size guards (refused above 24).
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn load_space(path: &Path) -> Result<ApproxSpace, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let covering = input::parse_covering(&text).map_err(|e| e.to_string())?;
    Ok(ApproxSpace::new(covering))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze { file, json } => {
            let space = load_space(&file)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&render::analyze_json(&space)).unwrap()
                );
            } else {
                print!("{}", render::analyze_text(&space));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Approx { file, op, set } => {
            let space = load_space(&file)?;
            let set = parse_set_spec(&space, &set)?;
            let result = match op {
                OpName::Fl => space.fl(&set),
                OpName::Fh => space.fh(&set),
                OpName::Xl => space.xl(&set),
                OpName::Xh => space.xh(&set),
            }
            .map_err(|e| e.to_string())?;
            println!("{result}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Lattice {
            file,
            family,
            dot,
            json,
        } => {
            let space = load_space(&file)?;
            let family = FixedPointFamily::build(&space, family.into());
            let report = family.classify();
            if let Some(path) = dot {
                std::fs::write(&path, family.hasse().to_dot())
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&render::lattice_json(&family, &report)).unwrap()
                );
            } else {
                print!("{}", render::lattice_text(&family, &report));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            file,
            exhaustive,
            random,
            density,
            seed,
            trials,
            max_n,
            json,
        } => {
            if let Some(n) = max_n {
                if n > MAX_N_HARD_CAP {
                    return Err(format!(
                        "SizeLimit: --max-n {n} exceeds the hard cap of {MAX_N_HARD_CAP}"
                    ));
                }
            }
            if let Some(path) = file {
                // Single covering: print one line per law.
                let space = load_space(&path)?;
                let cap = max_n.unwrap_or(covlat::verify::SUITE_DEFAULT_CAP);
                let reports =
                    covlat::run_theorem_suite_capped(&space, cap).map_err(|e| e.to_string())?;
                let all_hold = reports.iter().all(|r| r.conclusion_holds);
                if json {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&render::file_report_json(&space, &reports))
                            .unwrap()
                    );
                } else {
                    print!("{}", render::file_report_text(&space, &reports));
                }
                return Ok(if all_hold {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(2)
                });
            }

            let (summary, mode) = if let Some(n) = exhaustive {
                let cap = max_n.unwrap_or(covlat::verify::ENUM_DEFAULT_CAP);
                let summary = verify_exhaustive_capped(n, None, cap).map_err(|e| e.to_string())?;
                (summary, format!("exhaustive n={n}"))
            } else if let Some(n) = random {
                if !(0.0..1.0).contains(&density) || density == 0.0 {
                    return Err("density must lie strictly between 0 and 1".into());
                }
                let summary = verify_random(n, density, seed, trials).map_err(|e| e.to_string())?;
                (summary, format!("random n={n} seed={seed} trials={trials}"))
            } else {
                return Err("verify needs a file, --exhaustive <n> or --random <n>".into());
            };

            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&render::summary_json(&summary, &mode)).unwrap()
                );
            } else {
                print!("{}", render::summary_text(&summary, &mode));
            }
            Ok(if summary.all_hold() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn parse_set_spec(space: &ApproxSpace, spec: &str) -> Result<covlat::Subset, String> {
    let trimmed = spec.trim();
    let inner = trimmed
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(trimmed);
    let labels: Vec<&str> = inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    space
        .universe()
        .subset_from_labels(labels)
        .map_err(|e| e.to_string())
}
