use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use yangian_core::lift::{lift_t, lift_trace};
use yangian_core::matrix::{eval_entry, eval_trace, MatrixTuple};
use yangian_core::scalar::{fmt_rational, Scalar};
use yangian_core::stable::{normal_to_json, normalize_relation, relation_to_json, stable_comm, NormalOrder};
use yangian_core::verify::{run_suite, Suite, SuiteConfig};
use yangian_core::words::{circular_canonical, Word};
use yangian_core::Error;

#[derive(Parser)]
#[command(name = "yangian", version, about = "Exact computations in Yangian-type centralizer algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Universal commutation relation of two special elements.
    Stable(StableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Lifted element t̃_ij(w;N;s), or t_ij(w;N;s) with --shifted.
    Lift(LiftArgs),
    /// Evaluate p_ij(w) or p(ŵ) on a matrix tuple.
    Eval(EvalArgs),
}

#[derive(Args)]
struct StableArgs {
    #[arg(long = "L")]
    l: usize,
    #[arg(long)]
    w: String,
    #[arg(long)]
    wt: String,
    #[arg(long, default_value_t = 1)]
    form: u8,
    /// Normal order such as IJ<IL<KJ<KL, optionally prefixed with "length:".
    #[arg(long)]
    normal: Option<String>,
    /// Write the JSON here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    #[arg(long = "L")]
    l: Option<usize>,
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long = "N", num_args = 1..)]
    n: Vec<usize>,
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    s: Vec<i64>,
    #[arg(long, env = "YANGIAN_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct LiftArgs {
    #[arg(long = "L")]
    l: usize,
    #[arg(long)]
    w: String,
    /// Row index; omit together with --j for the trace.
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long = "N")]
    n: usize,
    /// A rational or a polynomial in s, e.g. 0, -2, s, (s - 1/2).
    #[arg(long, allow_hyphen_values = true, default_value = "s")]
    s: String,
    #[arg(long)]
    shifted: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// JSON file: one array of rows of rational strings per letter.
    #[arg(long)]
    matrices: PathBuf,
    #[arg(long)]
    w: String,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
}

fn parse_suite(text: &str) -> Result<Suite, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Usage(_) | Error::Parse(_) | Error::Domain(_) => 2,
        _ => 1,
    }
}

fn stable(args: StableArgs) -> Result<(), Error> {
    let w = Word::parse(&args.w, args.l)?;
    let wt = Word::parse(&args.wt, args.l)?;
    let rel = stable_comm(args.l, &w, &wt, args.form)?;
    let text = match args.normal {
        Some(order) => normal_to_json(&normalize_relation(&rel, &order.parse::<NormalOrder>()?)),
        None => relation_to_json(&rel),
    };
    match args.json {
        Some(path) => fs::write(&path, text + "\n").map_err(|e| Error::Usage(format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn verify(args: VerifyArgs) -> Result<bool, Error> {
    let cfg = SuiteConfig {
        l: args.l,
        max_len: args.max_len,
        max_degree: args.max_degree,
        ns: args.n,
        ss: args.s,
        seed: args.seed,
    };
    let reports = run_suite(args.suite, &cfg)?;
    for r in &reports {
        println!("{r}");
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn lift(args: LiftArgs) -> Result<(), Error> {
    let w = Word::parse(&args.w, args.l)?;
    let s: Scalar = args.s.parse()?;
    let value = match (args.i, args.j) {
        (Some(i), Some(j)) => lift_t(i, j, &w, args.n, &s, args.shifted)?.value,
        (None, None) => lift_trace(&w, args.n, &s, args.shifted)?,
        _ => return Err(Error::Usage("give both --i and --j, or neither for the trace".into())),
    };
    println!("{value}");
    Ok(())
}

fn eval(args: EvalArgs) -> Result<(), Error> {
    let text =
        fs::read_to_string(&args.matrices).map_err(|e| Error::Usage(format!("{}: {e}", args.matrices.display())))?;
    let t = MatrixTuple::from_json(&text)?;
    let w = Word::parse(&args.w, t.alphabet())?;
    let value = match (args.i, args.j) {
        (Some(i), Some(j)) => eval_entry(i, j, &w, &t)?,
        (None, None) => eval_trace(&circular_canonical(&w)?, &t)?,
        _ => return Err(Error::Usage("give both --i and --j, or neither for the trace".into())),
    };
    println!("{}", fmt_rational(&value));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Stable(a) => stable(a).map(|_| true),
        Command::Verify(a) => verify(a),
        Command::Lift(a) => lift(a).map(|_| true),
        Command::Eval(a) => eval(a).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
