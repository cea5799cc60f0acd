//! Command-line interface for the integration engine: compute integrals,
//! check capacity structure, evaluate norms, run verification suites, and
//! search for counterexamples.
//!
//! Exit codes: 0 success / nothing found wrong, 1 input error, 2 a verify
//! suite recorded violations.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use panint::generate::Family;
use panint::json as wire;
use panint::lp_space;
use panint::pan;
use panint::verify::{self, SuiteConfig};
use panint::{Capacity, Mode, RealFunction};

#[derive(Parser)]
#[command(name = "panint", version, about = "Integrals for monotone (non-additive) measures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an integral of a function against a capacity.
    Compute(ComputeArgs),
    /// Report the structural predicates and minimal atoms of a capacity.
    Check(CheckArgs),
    /// Compute the p-norm of a function.
    Norm(NormArgs),
    /// Run a randomized verification suite.
    Verify(VerifyArgs),
    /// Search for counterexamples on a fixed capacity.
    Search(SearchArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Parse inputs as exact rationals and compute exactly.
    #[arg(long)]
    exact: bool,
    /// Write the JSON output here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    /// Capacity JSON file.
    #[arg(long)]
    capacity: PathBuf,
    /// Function JSON file.
    #[arg(long)]
    function: PathBuf,
    /// Which integral to compute.
    #[arg(long, value_enum)]
    kind: Kind,
    /// Include the optimality witness in the output.
    #[arg(long)]
    witness: bool,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Pan-integral of a nonnegative function.
    Pan,
    /// Symmetric pan-integral of a signed function.
    PanSigned,
    /// Choquet integral of a nonnegative function.
    Choquet,
    /// Symmetric Choquet integral.
    ChoquetSym,
    /// Asymmetric Choquet integral.
    ChoquetAsym,
    /// Concave integral of a nonnegative function.
    Concave,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    capacity: PathBuf,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct NormArgs {
    #[arg(long)]
    capacity: PathBuf,
    #[arg(long)]
    function: PathBuf,
    /// Exponent p >= 1.
    #[arg(long)]
    p: f64,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 200)]
    trials: u32,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Largest ground-set size to draw.
    #[arg(long, default_value_t = 6)]
    n: usize,
    /// Capacity family to draw from.
    #[arg(long, default_value = "clipped-additive")]
    family: String,
    /// Run every trial on this fixed capacity instead of generated ones.
    #[arg(long)]
    capacity: Option<PathBuf>,
    /// Exponent for the metric suite.
    #[arg(long, default_value_t = 2.0)]
    p: f64,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Additivity,
    SetAdditivity,
    Disjoint,
    Linearity,
    Singleton,
    Ae,
    Levi,
    Fatou,
    Coincide,
    Lp,
    Metric,
    All,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    capacity: PathBuf,
    #[arg(long, value_enum)]
    mode: SearchMode,
    /// Search signed (symmetric-integral) additivity instead of nonnegative.
    #[arg(long)]
    signed: bool,
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchMode {
    Additivity,
    Comonotone,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("PANINT_THREADS") {
        if let Ok(k) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
    let cli = Cli::parse();
    let (io, result) = match cli.command {
        Command::Compute(args) => (take_io(&args.io), cmd_compute(&args)),
        Command::Check(args) => (take_io(&args.io), cmd_check(&args)),
        Command::Norm(args) => (take_io(&args.io), cmd_norm(&args)),
        Command::Verify(args) => (take_io(&args.io), cmd_verify(&args)),
        Command::Search(args) => (take_io(&args.io), cmd_search(&args)),
    };
    match result {
        Ok((json, code)) => {
            emit(&io, &json);
            code
        }
        Err(err) => {
            emit(&io, &error_json(&err));
            ExitCode::from(1)
        }
    }
}

fn take_io(io: &IoArgs) -> (bool, Option<PathBuf>) {
    (io.exact, io.output.clone())
}

fn emit(io: &(bool, Option<PathBuf>), json: &Json) {
    let text = serde_json::to_string_pretty(json).expect("serializable");
    match &io.1 {
        Some(path) => fs::write(path, text + "\n").expect("write output file"),
        None => {
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{text}");
        }
    }
}

fn error_json(err: &panint::Error) -> Json {
    let mut obj = json!({
        "error": {
            "kind": error_kind(err),
            "message": err.to_string(),
        }
    });
    if let panint::Error::NonMonotone { smaller, larger } = err {
        obj["error"]["witness"] = json!([
            smaller.to_points(),
            larger.to_points(),
        ]);
    }
    obj
}

fn error_kind(err: &panint::Error) -> &'static str {
    use panint::Error::*;
    match err {
        BadSpaceSize(_) => "BadSpaceSize",
        DuplicateLabel(_) => "DuplicateLabel",
        MissingSet(_) => "MissingSet",
        NonMonotone { .. } => "NonMonotone",
        NegativeValue(_) => "NegativeValue",
        ZeroTotal => "ZeroTotal",
        NonFinite(_) => "NonFinite",
        SpaceMismatch => "SpaceMismatch",
        NegativeInput(_) => "NegativeInput",
        TooLarge { .. } => "TooLarge",
        BadExponent(_) => "BadExponent",
        NotSubadditive => "NotSubadditive",
        Parse(_) => "Parse",
    }
}

fn mode_of(exact: bool) -> Mode {
    if exact {
        Mode::Exact
    } else {
        Mode::Float
    }
}

fn load_capacity(path: &PathBuf, mode: Mode) -> panint::Result<Capacity> {
    let text = fs::read_to_string(path)
        .map_err(|e| panint::Error::Parse(format!("{}: {e}", path.display())))?;
    let json: Json = serde_json::from_str(&text)
        .map_err(|e| panint::Error::Parse(format!("{}: {e}", path.display())))?;
    wire::capacity_from_json(&json, mode)
}

fn load_function(path: &PathBuf, mu: &Capacity, mode: Mode) -> panint::Result<RealFunction> {
    let text = fs::read_to_string(path)
        .map_err(|e| panint::Error::Parse(format!("{}: {e}", path.display())))?;
    let json: Json = serde_json::from_str(&text)
        .map_err(|e| panint::Error::Parse(format!("{}: {e}", path.display())))?;
    wire::function_from_json(&json, mu.space(), mode)
}

type CmdResult = panint::Result<(Json, ExitCode)>;

fn cmd_compute(args: &ComputeArgs) -> CmdResult {
    let mode = mode_of(args.io.exact);
    let mu = load_capacity(&args.capacity, mode)?;
    let f = load_function(&args.function, &mu, mode)?;
    let result = match args.kind {
        Kind::Pan => pan::pan_pos(&f, &mu)?,
        Kind::PanSigned => pan::pan_signed(&f, &mu)?,
        Kind::Choquet => panint::choquet::choquet_pos(&f, &mu)?,
        Kind::ChoquetSym => scalar_result(panint::choquet::choquet_symmetric(&f, &mu)?),
        Kind::ChoquetAsym => scalar_result(panint::choquet::choquet_asymmetric(&f, &mu)?),
        Kind::Concave => panint::concave::concave_integral(&f, &mu)?,
    };
    let mut json = wire::integral_result_to_json(&result, args.witness);
    json["kind"] = json!(kind_name(args.kind));
    Ok((json, ExitCode::SUCCESS))
}

fn scalar_result(value: panint::Value) -> pan::IntegralResult {
    pan::IntegralResult {
        value,
        engine: pan::IntegralEngine::SortedLevels,
        witness: None,
    }
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Pan => "pan",
        Kind::PanSigned => "pan-signed",
        Kind::Choquet => "choquet",
        Kind::ChoquetSym => "choquet-sym",
        Kind::ChoquetAsym => "choquet-asym",
        Kind::Concave => "concave",
    }
}

fn cmd_check(args: &CheckArgs) -> CmdResult {
    let mode = mode_of(args.io.exact);
    let mu = load_capacity(&args.capacity, mode)?;
    let atoms: Vec<Json> = mu
        .minimal_atoms()
        .into_iter()
        .map(|a| json!(a.to_points()))
        .collect();
    let json = json!({
        "points": mu.space().labels(),
        "predicates": {
            "subadditive": wire::property_report_to_json(&mu.is_subadditive()),
            "submodular": wire::property_report_to_json(&mu.is_submodular()),
            "supermodular": wire::property_report_to_json(&mu.is_supermodular()),
            "null_additive": wire::property_report_to_json(&mu.is_null_additive()),
        },
        "additive": mu.is_additive(),
        "minimal_atoms": atoms,
    });
    Ok((json, ExitCode::SUCCESS))
}

fn cmd_norm(args: &NormArgs) -> CmdResult {
    let mode = mode_of(args.io.exact);
    let mu = load_capacity(&args.capacity, mode)?;
    let f = load_function(&args.function, &mu, mode)?;
    let norm = lp_space::p_norm(&f, &mu, args.p)?;
    Ok((
        json!({"p": args.p, "norm": wire::value_to_json(&norm)}),
        ExitCode::SUCCESS,
    ))
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let mode = mode_of(args.io.exact);
    let family = Family::parse(&args.family)?;
    let mut cfg = SuiteConfig::new(args.trials, args.seed, args.n, family, mode);
    if let Some(path) = &args.capacity {
        cfg = cfg.with_fixed_capacity(load_capacity(path, mode)?);
    }
    let mut reports = Vec::new();
    let mut run = |suite: Suite| -> panint::Result<()> {
        match suite {
            Suite::Additivity => reports.push(verify::check_additivity(&cfg)),
            Suite::SetAdditivity => reports.push(verify::check_set_additivity(&cfg)),
            Suite::Disjoint => {
                reports.push(verify::check_disjoint_superadditivity(&cfg));
                if family.subadditive_by_construction() || cfg.fixed_capacity.is_some() {
                    reports.push(verify::check_disjoint_additivity(&cfg));
                }
            }
            Suite::Linearity => reports.push(verify::check_linearity(&cfg)),
            Suite::Singleton => reports.push(verify::check_singleton_formula(&cfg)),
            Suite::Ae => reports.push(verify::check_ae_equality(&cfg)),
            Suite::Levi => reports.push(verify::check_levi(&cfg)),
            Suite::Fatou => reports.push(verify::check_fatou(&cfg)),
            Suite::Coincide => reports.push(verify::check_pan_equals_concave(&cfg)),
            Suite::Lp => {
                reports.push(verify::check_pan_oracle(&cfg));
                reports.push(verify::check_lp_duality(&cfg));
            }
            Suite::Metric => {
                let mu = match &cfg.fixed_capacity {
                    Some(mu) => mu.clone(),
                    None => panint::gen_capacity(
                        &panint::FiniteSpace::of_size(cfg.n_max.min(8))?,
                        cfg.seed,
                        family,
                        mode,
                    ),
                };
                reports.push(lp_space::metric_axioms_check(&mu, args.p, cfg.trials, cfg.seed)?);
            }
            Suite::All => unreachable!("expanded by the caller"),
        }
        Ok(())
    };
    match args.suite {
        Suite::All => {
            for suite in [
                Suite::Additivity,
                Suite::SetAdditivity,
                Suite::Disjoint,
                Suite::Linearity,
                Suite::Singleton,
                Suite::Ae,
                Suite::Levi,
                Suite::Fatou,
                Suite::Coincide,
                Suite::Lp,
                Suite::Metric,
            ] {
                run(suite)?;
            }
        }
        s => run(s)?,
    }
    let failures: u32 = reports.iter().map(|r| r.failures).sum();
    let json = json!({
        "reports": reports.iter().map(wire::report_to_json).collect::<Vec<_>>(),
        "failures_total": failures,
    });
    let code = if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    };
    Ok((json, code))
}

fn cmd_search(args: &SearchArgs) -> CmdResult {
    let mode = mode_of(args.io.exact);
    let mu = load_capacity(&args.capacity, mode)?;
    let witness = match args.mode {
        SearchMode::Additivity => {
            verify::find_additivity_counterexample(&mu, args.budget, args.seed, args.signed)?
        }
        SearchMode::Comonotone => {
            verify::find_comonotone_counterexample(&mu, args.budget, args.seed)?
        }
    };
    let json = match witness {
        Some(w) => wire::search_witness_to_json(&w),
        None => json!({"found": false}),
    };
    Ok((json, ExitCode::SUCCESS))
}
