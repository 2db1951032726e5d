use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ssg_cli::bench::{self, Suite};
use ssg_cli::commands::{self, Algorithm, RandomOptions};
use ssg_cli::format::{parse_edge_list, parse_instance, parse_solution};
use ssg_cli::{exit, read_file, CliError};
use ssg_core::gadgets::{BudgetRule, DEFAULT_ARC_PROBABILITY};
use ssg_core::graph::GraphClass;
use ssg_core::ProblemKind;

/// Subset sum with digraph constraints: solve, check, classify, generate and
/// benchmark instances.
///
/// Exit codes: 0 success, 1 internal error, 2 algorithm not applicable to
/// the input, 3 parse or input error, 4 checked solution infeasible.
#[derive(Parser)]
#[command(name = "ssg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file and print a solution file.
    Solve {
        instance: PathBuf,
        #[arg(long, default_value = "auto")]
        algorithm: Algorithm,
        /// Seed-set size for the approximation scheme.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a solution file against an instance file.
    Check {
        instance: PathBuf,
        solution: PathBuf,
    },
    /// Print the structural class of an instance's digraph.
    Classify { instance: PathBuf },
    /// Generate an instance file.
    Generate {
        #[command(subcommand)]
        what: Generate,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run a seeded random suite and write a CSV report.
    Bench(BenchArgs),
}

#[derive(Subcommand)]
enum Generate {
    /// Clique reduction from a regular connected graph (edge-list file).
    Clique {
        #[arg(long)]
        edges: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Reduction to the maximal problem; the source instance file gives the
    /// DAG, the weights and the target weight (its budget).
    Maximal {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        p: u64,
    },
    /// Independent-set reduction to the weak-closure problems.
    Ssgw {
        #[arg(long)]
        edges: PathBuf,
        /// Emit the maximal variant.
        #[arg(long)]
        maximal: bool,
    },
    /// Star whose leaves carry the given values.
    SubsetSum {
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<u64>,
        #[arg(long)]
        budget: u64,
        #[arg(long, default_value = "ssg")]
        problem: ProblemKind,
    },
    /// Seeded random instance.
    Random {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        weight_max: u64,
        /// Budget as a fraction of the total weight.
        #[arg(long, default_value_t = 0.5, conflicts_with = "budget")]
        budget_fraction: f64,
        /// Fixed budget.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_ARC_PROBABILITY)]
        arc_probability: f64,
        #[arg(long, default_value = "ssg")]
        problem: ProblemKind,
    },
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "dag")]
    classes: Vec<GraphClass>,
    #[arg(long, value_delimiter = ',', default_value = "12")]
    sizes: Vec<usize>,
    /// Number of seeds, starting at `--first-seed`.
    #[arg(long, default_value_t = 20)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    first_seed: u64,
    #[arg(long, value_delimiter = ',', default_value = "ssg,maximal-ssg")]
    kinds: Vec<ProblemKind>,
    #[arg(long, value_delimiter = ',', default_value = "ptas")]
    algorithms: Vec<Algorithm>,
    /// Seed sizes for the approximation scheme; `n` means the node count.
    #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
    ks: Vec<String>,
    #[arg(long, default_value_t = 10)]
    weight_max: u64,
    #[arg(long, default_value_t = 0.5)]
    budget_fraction: f64,
    /// Fill the elapsed-ms column (otherwise left blank so that reports
    /// are reproducible byte for byte).
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_instance(path: &Path) -> Result<ssg_cli::format::LabeledInstance, CliError> {
    parse_instance(&read_file(path)?).map_err(|e| match e {
        CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Solve {
            instance,
            algorithm,
            k,
            out,
        } => {
            let inst = load_instance(&instance)?;
            write_output(out.as_deref(), &commands::cmd_solve(&inst, algorithm, k)?)?;
        }
        Command::Check { instance, solution } => {
            let inst = load_instance(&instance)?;
            let sol = parse_solution(&read_file(&solution)?)?;
            let set = sol.resolve(&inst)?;
            let (text, feasible) = commands::cmd_check(&inst, &set);
            print!("{text}");
            if !feasible {
                return Ok(exit::INFEASIBLE);
            }
        }
        Command::Classify { instance } => {
            print!("{}", commands::cmd_classify(&load_instance(&instance)?));
        }
        Command::Generate { what, out } => {
            let text = match what {
                Generate::Clique { edges, k } => {
                    commands::generate_clique(&parse_edge_list(&read_file(&edges)?)?, k)?
                }
                Generate::Maximal { instance, p } => {
                    commands::generate_maximal(&load_instance(&instance)?, p)?
                }
                Generate::Ssgw { edges, maximal } => {
                    let kind = if maximal {
                        ProblemKind::MaximalSsgw
                    } else {
                        ProblemKind::Ssgw
                    };
                    commands::generate_ssgw(&parse_edge_list(&read_file(&edges)?)?, kind)?
                }
                Generate::SubsetSum {
                    values,
                    budget,
                    problem,
                } => commands::generate_subset_sum(&values, budget, problem)?,
                Generate::Random {
                    class,
                    n,
                    seed,
                    weight_max,
                    budget_fraction,
                    budget,
                    arc_probability,
                    problem,
                } => commands::generate_random(&RandomOptions {
                    class,
                    n,
                    seed,
                    weight_max,
                    budget: budget.map_or(BudgetRule::Fraction(budget_fraction), BudgetRule::Fixed),
                    arc_probability,
                    kind: problem,
                })?,
            };
            write_output(out.as_deref(), &text)?;
        }
        Command::Bench(a) => {
            let ks =
                a.ks.iter()
                    .map(|k| match k.as_str() {
                        "n" => Ok(None),
                        s => s
                            .parse()
                            .map(Some)
                            .map_err(|_| CliError::Parse(format!("invalid k {s:?}"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
            let suite = Suite {
                classes: a.classes,
                sizes: a.sizes,
                seeds: (a.first_seed..a.first_seed + a.count).collect(),
                kinds: a.kinds,
                algorithms: a.algorithms,
                ks,
                weight_max: a.weight_max,
                budget_fraction: a.budget_fraction,
                timing: a.timing,
            };
            let report = bench::run(&suite)?;
            if report.skipped > 0 {
                eprintln!(
                    "skipped {} runs where the algorithm does not apply",
                    report.skipped
                );
            }
            write_output(a.out.as_deref(), &bench::to_csv(&report)?)?;
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::PARSE
            } else {
                exit::OK
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
