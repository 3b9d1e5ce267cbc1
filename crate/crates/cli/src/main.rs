//! `wzt`: arithmetic, orderings and property suites for tree-diagram groups.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use wzt_core::braid::BraidWord;
use wzt_core::cloning::{CloningSystem, OrderKind};
use wzt_core::expr::{eval_expression_as, Action};
use wzt_core::harness::{run_suite, Suite, TrialConfig};
use wzt_core::instances::AnyInstance;
use wzt_core::pure_braid::comb;
use wzt_core::{with_instance, WztError};

#[derive(Parser, Debug)]
#[command(
    name = "wzt",
    version,
    about = "Tree-diagram groups over cloning systems"
)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ExprArgs {
    /// Instance (f, v, bv, bf, dirpow[:int[:phi1=..,phi2=..]]); inferred from the literals if omitted.
    #[arg(long)]
    instance: Option<String>,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[arg(long, default_value = "bv")]
    instance: String,
    /// Largest degree drawn.
    #[arg(long, default_value_t = 6)]
    n: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bound on word length of middle elements.
    #[arg(long, default_value_t = 20)]
    len: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression such as `{Λ; b2: s1; Λ} * {Λ; b2: s1; Λ}^-1`.
    Eval {
        expr: String,
        #[command(flatten)]
        opts: ExprArgs,
    },
    /// Multiply two diagrams.
    Mul {
        a: String,
        b: String,
        #[command(flatten)]
        opts: ExprArgs,
    },
    /// Compare two diagrams.
    Cmp {
        a: String,
        b: String,
        #[command(flatten)]
        opts: ExprArgs,
    },
    /// Sign of a diagram in the instance's order.
    Sign {
        expr: String,
        #[command(flatten)]
        opts: ExprArgs,
    },
    /// Artin combing of a pure braid word such as `b3: s1 s1`.
    Comb { word: String },
    /// Image of a diagram in Thompson's V.
    Project {
        expr: String,
        #[command(flatten)]
        opts: ExprArgs,
    },
    /// Run the cloning-axiom suite.
    Axioms {
        #[command(flatten)]
        cfg: SuiteArgs,
    },
    /// Run the ordering suite.
    OrderCheck {
        #[command(flatten)]
        cfg: SuiteArgs,
    },
    /// Run suites by name (axioms, order, laws, structure); `all` skips
    /// the order suite for unordered instances.
    Suite {
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[command(flatten)]
        cfg: SuiteArgs,
    },
}

enum Failure {
    Usage(WztError),
    Properties,
}

impl From<WztError> for Failure {
    fn from(e: WztError) -> Self {
        Failure::Usage(e)
    }
}

fn instance(opts: &ExprArgs) -> Result<Option<AnyInstance>, WztError> {
    opts.instance
        .as_deref()
        .map(AnyInstance::from_name)
        .transpose()
}

fn print_value(json: bool, value: &str) {
    if json {
        println!("{}", serde_json::json!({ "result": value }));
    } else {
        println!("{value}");
    }
}

fn expression(json: bool, text: &str, opts: &ExprArgs, action: Action) -> Result<(), Failure> {
    let out = eval_expression_as(text, instance(opts)?.as_ref(), action)?;
    print_value(json, &out);
    Ok(())
}

fn suite(json: bool, suites: Vec<Suite>, args: &SuiteArgs) -> Result<(), Failure> {
    let cfg = TrialConfig {
        instance: args.instance.clone(),
        max_degree: args.n,
        max_len: args.len,
        trials: args.trials,
        seed: args.seed,
        suites,
    };
    let start = Instant::now();
    let report = run_suite(&cfg)?;
    eprintln!("wall time: {:.2?}", start.elapsed());
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Properties)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Eval { expr, opts } => expression(json, &expr, &opts, Action::Show),
        Command::Mul { a, b, opts } => {
            expression(json, &format!("({a}) * ({b})"), &opts, Action::Show)
        }
        Command::Cmp { a, b, opts } => {
            expression(json, &format!("({a}) <=> ({b})"), &opts, Action::Show)
        }
        Command::Sign { expr, opts } => expression(json, &expr, &opts, Action::Sign),
        Command::Project { expr, opts } => expression(json, &expr, &opts, Action::Project),
        Command::Comb { word } => {
            let w = BraidWord::parse(&word)?;
            print_value(json, &comb(&w)?.to_string());
            Ok(())
        }
        Command::Axioms { cfg } => suite(json, vec![Suite::Axioms], &cfg),
        Command::OrderCheck { cfg } => suite(json, vec![Suite::Order], &cfg),
        Command::Suite { suite: names, cfg } => {
            let suites = if names.iter().any(|s| s == "all") {
                let inst = AnyInstance::from_name(&cfg.instance)?;
                let ordered = with_instance!(inst, sys => sys.order_kind()) != OrderKind::None;
                Suite::ALL
                    .into_iter()
                    .filter(|s| ordered || *s != Suite::Order)
                    .collect()
            } else {
                names
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<Vec<Suite>, _>>()?
            };
            suite(json, suites, &cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Properties) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
