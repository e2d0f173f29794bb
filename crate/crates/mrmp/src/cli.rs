//! `mrmp` command line. Exit codes: 0 ok, 1 infeasible or invalid, 2 usage
//! or parse error, 3 unsupported variant or search limit reached.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use mrmp_core::generate::Family;
use mrmp_core::hardness::{pivot_to_pc, sat_to_pivot};
use mrmp_core::instance::{classify, validate};
use mrmp_core::oracle::{
    oracle_solve, oracle_solve_pc, OracleOutcome, SearchLimits, DEFAULT_MAX_STATES,
};
use mrmp_core::plan::verify_plan;
use mrmp_core::solver::{solve, SolveOutcome, SolverError};
use thiserror::Error;

use crate::format::{self, FormatError};
use crate::{bench, dimacs, gen};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mrmp", version, about = "Plan robots along fixed paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide an instance and write a plan or a deadlock certificate.
    Solve {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a plan against an instance.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        plan: PathBuf,
    },
    /// Exhaustive search, optionally with gadget order constraints.
    Oracle {
        #[arg(short, long, required_unless_present = "pc", conflicts_with = "pc")]
        input: Option<PathBuf>,
        /// Constrained instance file (instance plus gadgets).
        #[arg(long)]
        pc: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
        max_states: usize,
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Report validation problems and variant parameters.
    Classify {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Write the pivot and constrained planning images of a DIMACS formula.
    Reduce {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Time the solver on a family at several total path lengths.
    Bench {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        repetitions: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// Straight-path robots on a grid, compact format.
    Grid {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        width: u32,
        #[arg(long, default_value_t = 6)]
        height: u32,
        #[arg(long, default_value_t = 5)]
        robots: usize,
        #[arg(long, default_value_t = 6)]
        max_path: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// One blocking cycle with private exits.
    Cycle {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        robots: usize,
        #[arg(long, default_value_t = 6)]
        max_path: usize,
        /// Give one robot a private vertex on its cycle path.
        #[arg(long)]
        scout: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Bare graph composed of paths, random or a named fixture.
    Pathgraph {
        #[arg(long)]
        preset: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        robots: usize,
        #[arg(long, default_value_t = 3)]
        max_interior: usize,
        #[arg(long)]
        knot: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Constrained planning instance for a formula (random unless --cnf).
    Sat {
        #[arg(long)]
        cnf: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        vars: u32,
        #[arg(long, default_value_t = 3)]
        clauses: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Chain,
    Cycle,
    Grid,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Chain => Family::Chain,
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::Grid => Family::Grid,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Dimacs(#[from] dimacs::DimacsError),
    #[error("{0}")]
    Gen(#[from] gen::GenError),
    #[error("internal solver error: {0}")]
    Solver(#[from] SolverError),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Solver(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_with<T>(
    path: &Path,
    f: impl FnOnce(&str) -> Result<T, FormatError>,
) -> Result<T, CliError> {
    let text = read(path)?;
    f(&text).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, CliError> {
    match cmd {
        Command::Solve { input, output } => cmd_solve(&input, output.as_deref()),
        Command::Verify { input, plan } => {
            let inst = parse_with(&input, format::load_instance)?;
            let plan = parse_with(&plan, |t| format::parse_plan(t, &inst))?;
            let verdict = verify_plan(&inst, &plan);
            print!("{}", format::verdict_json(&verdict));
            Ok(if verdict.is_complete() {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
        Command::Oracle {
            input,
            pc,
            max_states,
            max_depth,
        } => {
            let limits = SearchLimits {
                max_states,
                max_depth,
            };
            let (base, result) = match (input, pc) {
                (_, Some(pc)) => {
                    let pc = parse_with(&pc, format::parse_pc)?;
                    let r = oracle_solve_pc(&pc, limits);
                    (pc.base, r)
                }
                (Some(input), None) => {
                    let inst = parse_with(&input, format::load_instance)?;
                    let r = oracle_solve(&inst, limits);
                    (inst, r)
                }
                (None, None) => return Err(CliError::Usage("need -i or --pc".into())),
            };
            log::info!("oracle stored {} states", result.states);
            print!("{}", format::oracle_json(&base, &result));
            Ok(match result.outcome {
                OracleOutcome::Feasible(_) => EXIT_OK,
                OracleOutcome::Infeasible => EXIT_FAIL,
                OracleOutcome::Exhausted { states } => {
                    eprintln!("search limit reached after {states} states");
                    EXIT_UNSUPPORTED
                }
            })
        }
        Command::Classify { input } => {
            let inst = parse_with(&input, format::parse_instance)?;
            let violations = validate(&inst);
            print!(
                "{}",
                format::classify_json(&inst, &classify(&inst), &violations)
            );
            Ok(if violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
        Command::Gen { kind } => cmd_gen(kind),
        Command::Reduce { cnf, output } => {
            let phi = dimacs::parse_dimacs(&read(&cnf)?)?;
            let pivot = sat_to_pivot(&phi);
            let pc = pivot_to_pc(&pivot);
            fs::create_dir_all(&output).map_err(|source| CliError::Io {
                path: output.clone(),
                source,
            })?;
            write(&output.join("pivot.json"), &format::pivot_json(&pivot))?;
            write(&output.join("pc.json"), &format::pc_json(&pc))?;
            eprintln!(
                "{} jobs, {} constraints, {} robots, {} gadgets",
                pivot.jobs(),
                pivot.constraints().len(),
                pc.base.robot_count(),
                pc.gadgets.len()
            );
            Ok(EXIT_OK)
        }
        Command::Bench {
            family,
            sizes,
            repetitions,
            seed,
        } => {
            if sizes.is_empty() || sizes.contains(&0) {
                return Err(CliError::Usage("--sizes needs positive lengths".into()));
            }
            let report = bench::run(family.into(), &sizes, repetitions, seed)?;
            for s in &report.sizes {
                eprintln!(
                    "{} L={} robots={} {} median {:.3} ms",
                    report.family, s.total_length, s.robots, s.outcome, s.median_ms
                );
            }
            for r in &report.ratios {
                eprintln!("ratio {r:.3}");
            }
            print!("{}", format::canonical(&report));
            Ok(EXIT_OK)
        }
    }
}

fn cmd_solve(input: &Path, output: Option<&Path>) -> Result<i32, CliError> {
    let inst = parse_with(input, format::load_instance)?;
    match solve(&inst)? {
        SolveOutcome::Plan(plan) => {
            log::info!("plan with {} moves", plan.len());
            emit(output, &format::plan_json(&inst, &plan))?;
            Ok(EXIT_OK)
        }
        SolveOutcome::Infeasible { deadlock_cycle } => {
            emit(output, &format::infeasible_json(&inst, &deadlock_cycle))?;
            Ok(EXIT_FAIL)
        }
        SolveOutcome::Unsupported(reason) => {
            eprintln!("unsupported: {reason}");
            Ok(EXIT_UNSUPPORTED)
        }
    }
}

fn cmd_gen(kind: GenKind) -> Result<i32, CliError> {
    let (text, output) = match kind {
        GenKind::Grid {
            seed,
            width,
            height,
            robots,
            max_path,
            output,
        } => (gen::grid(seed, width, height, robots, max_path)?, output),
        GenKind::Cycle {
            seed,
            robots,
            max_path,
            scout,
            output,
        } => (gen::cycle(seed, robots, max_path, scout)?, output),
        GenKind::Pathgraph {
            preset,
            seed,
            robots,
            max_interior,
            knot,
            output,
        } => (
            gen::pathgraph(preset.as_deref(), seed, robots, max_interior, knot)?,
            output,
        ),
        GenKind::Sat {
            cnf,
            seed,
            vars,
            clauses,
            output,
        } => {
            let phi = match cnf {
                Some(path) => dimacs::parse_dimacs(&read(&path)?)?,
                None => gen::random_formula(seed, vars, clauses)?,
            };
            (gen::sat(&phi), output)
        }
    };
    emit(output.as_deref(), &text)?;
    Ok(EXIT_OK)
}
