//! `exreal`: evaluate and compare exact real expressions, and run the
//! construction demos.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 sign not certified,
//! 3 indeterminate comparison, 4 internal invariant violation.

mod report;
mod selftest;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use exact_real::expr::{self, eval_budget, random_expr, to_real, ExprShape};
use exact_real::sequences::families;
use exact_real::{
    check_convergence, compare, diagonalize, liouville_check, rational, Budget, Comparison,
    Interval, Rational, Real, RealSequence,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use report::Failure;

#[derive(Parser)]
#[command(
    name = "exreal",
    version,
    about = "Exact real arithmetic on the command line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an expression to a fixed number of decimal places.
    Eval {
        #[arg(long, default_value_t = 10)]
        digits: u32,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Print {decimal, center, radius} as JSON.
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Certify `<` or `>` between two expressions; equality is never certified.
    Compare {
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Diagonalize against pseudo-random expressions; one JSON certificate per line.
    Diag {
        #[arg(long)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a Liouville approximation exactly.
    Liouville {
        #[arg(long)]
        check: u32,
    },
    /// Convergence evidence for a built-in sequence: 1/n, 1-1/n, (-1)^n, factorial-sums.
    Limit {
        #[arg(long)]
        horizon: u64,
        /// Smallest member radius sampled from the candidate.
        #[arg(long, default_value = "1/64", value_parser = parse_positive)]
        sample_floor: Rational,
        /// Precision floor for each membership decision.
        #[arg(long, default_value = "1e-20", value_parser = parse_positive)]
        budget_eps: Rational,
        sequence: String,
        #[arg(allow_hyphen_values = true)]
        candidate: String,
    },
    /// Run the built-in invariant checks.
    Selftest,
}

#[derive(Args)]
struct BudgetArgs {
    /// Refinement floor, as a rational or `1e-N`.
    #[arg(long, value_parser = parse_positive)]
    budget_eps: Option<Rational>,
    /// Maximum number of refinements.
    #[arg(long)]
    budget_steps: Option<u32>,
}

impl BudgetArgs {
    fn resolve(&self, default: Budget) -> Budget {
        match (&self.budget_eps, self.budget_steps) {
            (None, None) => default,
            (Some(e), None) => Budget::min_epsilon(e.clone()),
            (None, Some(k)) => Budget::max_steps(k),
            (Some(e), Some(k)) => Budget::min_epsilon(e.clone()).with_max_steps(k),
        }
    }
}

fn parse_positive(s: &str) -> Result<Rational, String> {
    let q = match s.strip_prefix("1e-") {
        Some(k) => rational::ten_to_minus(k.parse().map_err(|_| format!("bad exponent in {s:?}"))?),
        None => rational::parse_rational(s).map_err(|e| e.to_string())?,
    };
    if q <= rational::int(0) {
        return Err(format!("{s} is not positive"));
    }
    Ok(q)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("{failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Eval {
            digits,
            budget,
            json,
            expr: src,
        } => {
            let budget = budget.resolve(eval_budget(digits));
            let tree = expr::parse(&src).map_err(|e| Failure::parse(&src, e))?;
            let d = expr::eval(&tree, digits, &budget).map_err(|e| Failure::eval(&src, e))?;
            if json {
                let out = EvalJson {
                    decimal: d.to_string(),
                    center: d.interval.center().to_string(),
                    radius: d.interval.radius().to_string(),
                };
                println!("{}", serde_json::to_string(&out).expect("serializable"));
            } else {
                println!("{d}");
            }
            Ok(0)
        }
        Command::Compare {
            budget,
            left,
            right,
        } => {
            let budget = budget.resolve(Budget::decimal(40));
            let a = real_of(&left, &budget)?;
            let b = real_of(&right, &budget)?;
            match compare(&a, &b, &budget)? {
                Comparison::Less { .. } => println!("less"),
                Comparison::Greater { .. } => println!("greater"),
                Comparison::Indeterminate { gap_bound } => {
                    println!("indeterminate gap<={gap_bound}");
                    return Ok(3);
                }
            }
            Ok(0)
        }
        Command::Diag { count, seed } => {
            diag(count, seed)?;
            Ok(0)
        }
        Command::Liouville { check } => {
            let report = liouville_check(check)?;
            println!("{}", serde_json::to_string(&report).expect("serializable"));
            Ok(0)
        }
        Command::Limit {
            horizon,
            sample_floor,
            budget_eps,
            sequence,
            candidate,
        } => {
            let seq = sequence_family(&sequence)?;
            let budget = Budget::min_epsilon(budget_eps.clone());
            let b = real_of(&candidate, &budget)?;
            let ev = check_convergence(&seq, &b, horizon, &sample_floor, &budget)?;
            println!("{}", serde_json::to_string(&ev).expect("serializable"));
            Ok(0)
        }
        Command::Selftest => Ok(if selftest::run() { 0 } else { 4 }),
    }
}

#[derive(Serialize)]
struct EvalJson {
    decimal: String,
    center: String,
    radius: String,
}

#[derive(Serialize)]
struct DiagLine {
    index: u64,
    term: String,
    trap: Interval,
    avoided: Interval,
}

fn real_of(src: &str, budget: &Budget) -> Result<Real, Failure> {
    let tree = expr::parse(src).map_err(|e| Failure::parse(src, e))?;
    to_real(&tree, budget).map_err(|e| Failure::eval(src, e))
}

fn sequence_family(name: &str) -> Result<RealSequence, Failure> {
    Ok(match name {
        "1/n" => families::reciprocals(),
        "1-1/n" => families::one_minus_reciprocals(),
        "(-1)^n" => families::alternating(),
        "factorial-sums" => families::factorial_sums(),
        _ => {
            return Err(Failure::usage(format!(
                "unknown sequence {name:?}; expected one of 1/n, 1-1/n, (-1)^n, factorial-sums"
            )))
        }
    })
}

/// Terms are small generated expressions; term `n` is the `n`-th one drawn
/// from the seeded generator.
fn diag(count: u64, seed: u64) -> Result<(), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = ExprShape {
        max_depth: 3,
        lit_bound: 2,
        max_denominator: 9,
        irrationals: true,
    };
    let exprs: Vec<_> = (0..count).map(|_| random_expr(&mut rng, &shape)).collect();
    let budget = Budget::default();
    let reals = exprs
        .iter()
        .map(|e| to_real(e, &budget).map_err(|err| Failure::eval(&e.to_string(), err)))
        .collect::<Result<Vec<_>, _>>()?;
    let seq = RealSequence::new(move |n| reals[(n - 1) as usize % reals.len()].clone());
    let i0 = Interval::new(rational::int(0), rational::int(2)).expect("positive radius");
    let (_, diagonal) = diagonalize(&seq, i0);
    for c in diagonal.certificates(count)? {
        let line = DiagLine {
            index: c.index,
            term: exprs[c.index as usize - 1].to_string(),
            trap: c.trap,
            avoided: c.avoided,
        };
        println!("{}", serde_json::to_string(&line).expect("serializable"));
    }
    Ok(())
}
