use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use strongrat::fptas::{knapsack_fptas, ApproxParams};
use strongrat::gadgets::{all_same_gadget, one_in_three_gadget};
use strongrat::primes::{first_n_primes, unary_size_of_first_primes};
use strongrat::reduction::build_instance;
use strongrat::sat::parse_dimacs;
use strongrat::solvers::{
    decide_with_budget, measure_sizes, oracle_decide_with_limit, verify_witness, Instance,
    SizeReport, Witness, DEFAULT_DP_BUDGET, DEFAULT_NODE_LIMIT,
};
use strongrat::{Error, Rational};

/// Exit status when a decision or output was produced.
const EXIT_OK: u8 = 0;
/// Malformed input or arguments.
const EXIT_INPUT: u8 = 2;
/// DP budget or search limit exceeded.
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "strongrat",
    version,
    about = "Rational subset-sum/knapsack solvers and SAT reductions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    OneInThree,
    AllSame,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first N primes
    Primes {
        n: usize,
        /// Print only the total unary size of the primes
        #[arg(long)]
        unary_size: bool,
    },
    /// Apply a formula gadget to a DIMACS file ('-' for stdin)
    Gadget {
        kind: GadgetKind,
        input: String,
        /// Reject inputs where a variable occurs more than four times
        #[arg(long)]
        require_le4: bool,
    },
    /// Build the prime-denominator subset-sum instance for a formula
    Reduce {
        input: String,
        /// Emit a partition instance instead of unbounded subset sum
        #[arg(long)]
        partition: bool,
    },
    /// Decide an instance file
    Solve {
        instance: String,
        /// Use exhaustive search instead of dynamic programming
        #[arg(long)]
        oracle: bool,
        /// DP table budget in cells (or node limit with --oracle)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check a witness file against an instance file
    Verify { instance: String, witness: String },
    /// Approximate a knapsack-01 instance within relative performance RHO
    Approx {
        instance: String,
        #[arg(long)]
        rho: String,
    },
    /// Print binary/unary sizes before and after scaling to integers
    Size { instance: String },
}

fn read_input(path: &str) -> Result<String, Error> {
    let io_err = |e: io::Error| Error::Parse {
        line: 0,
        message: format!("{path}: {e}"),
    };
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Error> {
    let mut emit = |s: &str| {
        out.write_all(s.as_bytes()).map_err(|e| Error::Parse {
            line: 0,
            message: format!("stdout: {e}"),
        })
    };
    match cli.command {
        Command::Primes { n, unary_size } => {
            if n == 0 {
                return Err(Error::EmptyInput("n must be at least 1"));
            }
            if unary_size {
                emit(&format!("{}\n", unary_size_of_first_primes(n)?))?;
            } else {
                let list: Vec<String> = first_n_primes(n)?
                    .as_slice()
                    .iter()
                    .map(u64::to_string)
                    .collect();
                emit(&format!("{}\n", list.join(" ")))?;
            }
        }
        Command::Gadget {
            kind,
            input,
            require_le4,
        } => {
            let f = parse_dimacs(&read_input(&input)?)?;
            let text = match kind {
                GadgetKind::OneInThree => one_in_three_gadget(&f, require_le4)?.to_dimacs(),
                GadgetKind::AllSame => all_same_gadget(&f).to_dimacs(),
            };
            emit(&text)?;
        }
        Command::Reduce { input, partition } => {
            let f = parse_dimacs(&read_input(&input)?)?;
            let ri = build_instance(&f)?;
            let inst = if partition {
                ri.as_partition_instance()
            } else {
                ri.as_subset_sum_instance()
            };
            emit(&inst.to_text_with_comments(&ri.certificate.comment_lines()))?;
        }
        Command::Solve {
            instance,
            oracle,
            budget,
        } => {
            let inst = Instance::parse(&read_input(&instance)?)?;
            let decision = if oracle {
                oracle_decide_with_limit(&inst, budget.unwrap_or(DEFAULT_NODE_LIMIT))?
            } else {
                decide_with_budget(&inst, budget.unwrap_or(DEFAULT_DP_BUDGET))?
            };
            match decision.witness {
                Some(w) => emit(&format!("YES\n{w}\n"))?,
                None => emit("NO\n")?,
            }
        }
        Command::Verify { instance, witness } => {
            let inst = Instance::parse(&read_input(&instance)?)?;
            let w = Witness::parse(&read_input(&witness)?)?;
            let valid = match verify_witness(&inst, &w) {
                Ok(v) => v,
                Err(Error::InvalidWitness(msg)) => {
                    eprintln!("strongrat: {msg}");
                    false
                }
                Err(e) => return Err(e),
            };
            emit(if valid { "VALID\n" } else { "INVALID\n" })?;
        }
        Command::Approx { instance, rho } => {
            let inst = Instance::parse(&read_input(&instance)?)?;
            let rho: Rational = rho
                .parse()
                .map_err(|_| Error::Parameter(format!("rho {rho:?} is not a rational")))?;
            let result = knapsack_fptas(&inst, &ApproxParams::new(rho)?)?;
            emit(&format!(
                "{}\nprofit: {}\n",
                result.subset, result.achieved_profit
            ))?;
        }
        Command::Size { instance } => {
            let inst = Instance::parse(&read_input(&instance)?)?;
            let report = measure_sizes(&inst);
            emit(&format!(
                "{}\n{}\n",
                SizeReport::CSV_HEADER,
                report.csv_row()
            ))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(e) => {
            let _ = out.flush();
            eprintln!("strongrat: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit(_) => EXIT_RESOURCE,
                _ => EXIT_INPUT,
            })
        }
    }
}
