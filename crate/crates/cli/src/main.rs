use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ratinf::defaults::{self, DefaultBase, Mode, SubsetOrder};
use ratinf::logic::{parse_formula, render_models, AtomEnv, Formula};
use ratinf::oracle::{verify_round_trips, verify_theorems, Report, Seed};
use ratinf::ranked::assertion_rank;
use ratinf::Error;

/// Rational inference from prioritized default bases, and randomized
/// checks of the correspondence between orderings, chains and relations.
#[derive(Parser)]
#[command(name = "ratinf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Answer `yes` or `no` to "α |~ β".
    Query {
        #[command(flatten)]
        base: BaseArgs,
        /// Assertion, with whitespace around `|~`.
        assertion: String,
    },
    /// Print the extension of a formula, or `INCONSISTENT`.
    Extension {
        #[command(flatten)]
        base: BaseArgs,
        formula: String,
    },
    /// Dump the induced ordering, highest level first.
    Ordering {
        #[command(flatten)]
        base: BaseArgs,
    },
    /// Rank and range of "α |~ β" in the chain of the base.
    Rank {
        #[command(flatten)]
        base: BaseArgs,
        assertion: String,
    },
    /// Run every representation check on random chains.
    Check {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run only the round-trip checks on random chains.
    Roundtrip {
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct BaseArgs {
    /// Default-base file.
    #[arg(long)]
    base: PathBuf,
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = OrderArg::Mirrored)]
    subset_order: OrderArg,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    atoms: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Strict,
    Liberal,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Mirrored,
    Literal,
}

enum Failure {
    Error(Error),
    Io(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

struct Loaded {
    base: DefaultBase,
    mode: Mode,
    order: SubsetOrder,
}

impl BaseArgs {
    fn load(&self) -> Result<Loaded, Failure> {
        let text =
            std::fs::read_to_string(&self.base).map_err(|e| Failure::Io(format!("{}: {e}", self.base.display())))?;
        Ok(Loaded {
            base: defaults::parse_base(&text)?,
            mode: match self.mode {
                ModeArg::Strict => Mode::Strict,
                ModeArg::Liberal => Mode::Liberal,
            },
            order: match self.subset_order {
                OrderArg::Mirrored => SubsetOrder::Mirrored,
                OrderArg::Literal => SubsetOrder::Literal,
            },
        })
    }
}

/// Splits "α |~ β" at a `|~` surrounded by whitespace.
fn split_assertion(text: &str, env: &AtomEnv) -> Result<(Formula, Formula), Error> {
    let bytes = text.as_bytes();
    let at = text
        .match_indices("|~")
        .map(|(i, _)| i)
        .find(|&i| i > 0 && bytes[i - 1].is_ascii_whitespace() && bytes.get(i + 2).is_some_and(u8::is_ascii_whitespace))
        .ok_or_else(|| Error::Syntax {
            offset: 0,
            message: "expected `α |~ β` with whitespace around `|~`".into(),
        })?;
    let lhs = parse_formula(&text[..at], env)?;
    let rhs = parse_formula(&text[at + 2..], env).map_err(|e| match e {
        Error::Syntax { offset, message } => Error::Syntax {
            offset: offset + at + 2,
            message,
        },
        Error::UnknownAtom { name, offset } => Error::UnknownAtom {
            name,
            offset: offset + at + 2,
        },
        other => other,
    })?;
    Ok((lhs, rhs))
}

fn print_report(report: &Report) -> Result<(), Failure> {
    print!("{}", report.render());
    if report.is_ok() {
        println!("OK {}/{}", report.passed(), report.trials);
        Ok(())
    } else {
        println!("FAIL {}/{}", report.passed(), report.trials);
        Err(Failure::Checks)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Query { base, assertion } => {
            let l = base.load()?;
            let (a, b) = split_assertion(&assertion, l.base.env())?;
            let yes = defaults::query(&l.base, l.mode, l.order, &a, &b)?;
            println!("{}", if yes { "yes" } else { "no" });
        }
        Command::Extension { base, formula } => {
            let l = base.load()?;
            let input = parse_formula(&formula, l.base.env())?;
            let ext = defaults::extension(&l.base, l.mode, l.order, &input)?;
            if ext.theory.is_consistent() {
                println!("{}", render_models(ext.theory.models(), l.base.env()));
            } else {
                println!("INCONSISTENT");
            }
        }
        Command::Ordering { base } => {
            let l = base.load()?;
            print!("{}", defaults::ordering_from_base(&l.base, l.mode, l.order)?.dump());
        }
        Command::Rank { base, assertion } => {
            let l = base.load()?;
            let (a, b) = split_assertion(&assertion, l.base.env())?;
            let chain = defaults::chain_for(&l.base, l.mode, l.order)?;
            println!("{}", assertion_rank(&chain, &a, &b)?);
        }
        Command::Check { run } => {
            let env = AtomEnv::standard(run.atoms)?;
            print_report(&verify_theorems(&env, run.trials, Seed(run.seed))?)?;
        }
        Command::Roundtrip { run } => {
            let env = AtomEnv::standard(run.atoms)?;
            print_report(&verify_round_trips(&env, run.trials, Seed(run.seed))?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Error(e)) if e.is_parse_error() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
