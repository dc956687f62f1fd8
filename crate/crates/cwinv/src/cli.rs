//! Command-line front end: argument parsing, dispatch, and text/JSON
//! rendering. Exit codes: 0 success, 1 usage error, 2 validation failure,
//! 3 internal contract violation.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::{BigInt, ToPrimitive};
use serde_json::json;

use crate::alexander::SymmetricLaurent;
use crate::dedekind::{dedekind_sum, dedekind_sum_cotangent};
use crate::error::Error;
use crate::lens::{LensSpec, Route, SpinCLabel};
use crate::rational::{decimal_string, format_rational, Rational};
use crate::selftest::{run_selftest, Depth, SelftestReport};
use crate::surgery::{parse_chain, run_chain};

#[derive(Parser)]
#[command(
    name = "cwinv",
    version,
    about = "Exact calculator for Dedekind sums, lens-space eta invariants, \
             and the Casson-Walker invariant",
    arg_required_else_help = true
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Append N-digit decimal approximations to exact values.
    #[arg(long, global = true, value_name = "N")]
    decimal: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum DedekindMethod {
    /// Sawtooth double sum.
    Sawtooth,
    /// Cotangent sum in a cyclotomic field.
    Cotangent,
    /// Both routes, insisting they agree.
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum LensMode {
    /// Exact for p <= 64, float beyond.
    Auto,
    Exact,
    Float,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Functional {
    /// A(1), the sum of coefficients.
    Eval1,
    /// sum_{j>=1} j^2 a_j.
    Weight,
    /// theta(A, i); requires --i.
    Theta,
    /// Gamma(A) = sum e^2 a_e / 4 over doubled exponents.
    Gamma,
    /// Induced knot-complement polynomial; requires --d and --k.
    Induce,
    /// Parse and echo the normalized polynomial.
    Validate,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum DepthArg {
    Small,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Dedekind sum s(q,p).
    Dedekind {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value_t = DedekindMethod::Sawtooth)]
        method: DedekindMethod,
    },
    /// Eta invariants and the ntheta spectrum of the lens space L(p,q).
    Lens {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        /// Single Spin^c label in 0..p.
        #[arg(long, conflicts_with = "all")]
        alpha: Option<u64>,
        /// Whole spectrum.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = LensMode::Auto)]
        mode: LensMode,
    },
    /// Run the surgery chain described by a JSON file.
    Chain {
        /// Path to a chain file: {"steps": [{"p", "q", "d", "k",
        /// "alexander" | "weight"}, ...]}.
        path: PathBuf,
    },
    /// Functionals of a symmetric Alexander polynomial.
    Alexander {
        /// Polynomial as comma-separated `exp2:value` pairs over doubled
        /// exponents, e.g. the trefoil is "2:1,0:-1,-2:1".
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum)]
        functional: Functional,
        /// Index for --functional theta.
        #[arg(long)]
        i: Option<i64>,
        /// Divisibility for --functional induce.
        #[arg(long)]
        d: Option<u64>,
        /// Torsion order for --functional induce.
        #[arg(long)]
        k: Option<u64>,
    },
    /// Run the built-in invariant suites.
    Selftest {
        #[arg(long, value_enum, default_value_t = DepthArg::Small)]
        depth: DepthArg,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
    SelftestFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Parses and executes one invocation; returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                3
            } else {
                2
            }
        }
        Err(Failure::SelftestFailed) => 3,
    }
}

fn execute(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Dedekind { p, q, method } => dedekind_cmd(cli, *p, *q, *method),
        Command::Lens {
            p,
            q,
            alpha,
            all,
            mode,
        } => lens_cmd(cli, *p, *q, *alpha, *all, *mode),
        Command::Chain { path } => chain_cmd(cli, path),
        Command::Alexander {
            poly,
            functional,
            i,
            d,
            k,
        } => alexander_cmd(cli, poly, *functional, *i, *d, *k),
        Command::Selftest { depth } => selftest_cmd(cli, *depth),
    }
}

/// Exact value, optionally suffixed with its decimal rendering.
fn show(cli: &Cli, r: &Rational) -> String {
    match cli.decimal {
        None => format_rational(r),
        Some(n) => format!("{} ({})", format_rational(r), decimal_string(r, n)),
    }
}

fn json_rat(r: &Rational) -> serde_json::Value {
    serde_json::Value::String(format_rational(r))
}

/// Adds `<key>_decimal` fields next to rational-valued keys when the user
/// asked for decimals; rationals themselves stay exact strings.
fn attach_decimal(cli: &Cli, obj: &mut serde_json::Map<String, serde_json::Value>, key: &str, r: &Rational) {
    obj.insert(key.to_string(), json_rat(r));
    if let Some(n) = cli.decimal {
        obj.insert(format!("{key}_decimal"), json!(decimal_string(r, n)));
    }
}

fn check_pq(p: i64, q: i64) -> Result<(u64, i64), Failure> {
    if p == 0 {
        return Err(Failure::Lib(Error::InvalidArgument(
            "p must be nonzero".into(),
        )));
    }
    let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
    Ok((p as u64, q))
}

fn dedekind_cmd(cli: &Cli, p: i64, q: i64, method: DedekindMethod) -> Result<(), Failure> {
    let (pu, q) = check_pq(p, q)?;
    let (value, label) = match method {
        DedekindMethod::Sawtooth => (dedekind_sum(q, pu)?, "sawtooth"),
        DedekindMethod::Cotangent => (dedekind_sum_cotangent(q, pu)?, "cotangent"),
        DedekindMethod::Both => {
            let saw = dedekind_sum(q, pu)?;
            let cot = dedekind_sum_cotangent(q, pu)?;
            if saw != cot {
                return Err(Failure::Lib(Error::ContractViolation(format!(
                    "sawtooth gives {} but cotangent gives {} for s({q},{pu})",
                    format_rational(&saw),
                    format_rational(&cot)
                ))));
            }
            (saw, "both")
        }
    };
    if cli.json {
        let mut obj = serde_json::Map::new();
        obj.insert("p".into(), json!(pu));
        obj.insert("q".into(), json!(q));
        obj.insert("method".into(), json!(label));
        attach_decimal(cli, &mut obj, "value", &value);
        println!("{}", serde_json::Value::Object(obj));
    } else {
        println!("s({q},{pu}) = {}", show(cli, &value));
        if method == DedekindMethod::Both {
            println!("sawtooth and cotangent routes agree");
        }
    }
    Ok(())
}

const AUTO_EXACT_MAX_P: u64 = 64;

fn lens_cmd(
    cli: &Cli,
    p: i64,
    q: i64,
    alpha: Option<u64>,
    all: bool,
    mode: LensMode,
) -> Result<(), Failure> {
    if alpha.is_none() && !all {
        return Err(Failure::Usage(
            "lens needs either --alpha <N> or --all".into(),
        ));
    }
    let spec = LensSpec::new(p, q)?;
    let exact = match mode {
        LensMode::Exact => true,
        LensMode::Float => false,
        LensMode::Auto => spec.p() <= AUTO_EXACT_MAX_P,
    };
    match (alpha, exact) {
        (Some(alpha), true) => {
            let ctx = spec.context()?;
            let label = SpinCLabel(alpha);
            let eta_dirac = ctx.eta_dirac(label)?;
            let eta_sign = ctx.eta_signature();
            let corr = ctx.corr(label)?;
            let ntheta = ctx.ntheta(label, Route::EtaPipeline)?;
            if cli.json {
                let mut obj = serde_json::Map::new();
                obj.insert("p".into(), json!(spec.p()));
                obj.insert("q".into(), json!(spec.q()));
                obj.insert("alpha".into(), json!(alpha));
                obj.insert("mode".into(), json!("exact"));
                attach_decimal(cli, &mut obj, "eta_dirac", &eta_dirac);
                attach_decimal(cli, &mut obj, "eta_sign", &eta_sign);
                attach_decimal(cli, &mut obj, "corr", &corr);
                attach_decimal(cli, &mut obj, "ntheta", &ntheta);
                println!("{}", serde_json::Value::Object(obj));
            } else {
                println!("L({},{}), alpha = {alpha}, exact", spec.p(), spec.q());
                println!("eta_dirac = {}", show(cli, &eta_dirac));
                println!("eta_sign = {}", show(cli, &eta_sign));
                println!("corr = {}", show(cli, &corr));
                println!("ntheta = {}", show(cli, &ntheta));
            }
        }
        (Some(alpha), false) => {
            let entry = spec.entry_f64(SpinCLabel(alpha))?;
            let eta_sign = spec.eta_signature().to_f64().unwrap();
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "p": spec.p(),
                        "q": spec.q(),
                        "alpha": alpha,
                        "mode": "float",
                        "eta_dirac": entry.eta_dirac,
                        "eta_sign": eta_sign,
                        "corr": entry.corr,
                        "ntheta": entry.ntheta,
                    })
                );
            } else {
                println!("L({},{}), alpha = {alpha}, float", spec.p(), spec.q());
                println!("eta_dirac = {:.12e}", entry.eta_dirac);
                println!("eta_sign = {:.12e}", eta_sign);
                println!("corr = {:.12e}", entry.corr);
                println!("ntheta = {:.12e}", entry.ntheta);
            }
        }
        (None, true) => {
            let report = spec.spectrum()?;
            let lambda = &report.ntheta_sum * crate::rational::rat(2, 1)
                / Rational::from_integer(BigInt::from(report.p));
            if cli.json {
                let entries: Vec<serde_json::Value> = report
                    .entries
                    .iter()
                    .map(|e| {
                        let mut obj = serde_json::Map::new();
                        obj.insert("alpha".into(), json!(e.alpha));
                        attach_decimal(cli, &mut obj, "eta_dirac", &e.eta_dirac);
                        attach_decimal(cli, &mut obj, "corr", &e.corr);
                        attach_decimal(cli, &mut obj, "ntheta", &e.ntheta);
                        serde_json::Value::Object(obj)
                    })
                    .collect();
                let mut obj = serde_json::Map::new();
                obj.insert("p".into(), json!(report.p));
                obj.insert("q".into(), json!(report.q));
                obj.insert("mode".into(), json!("exact"));
                attach_decimal(cli, &mut obj, "eta_sign", &report.eta_sign);
                obj.insert("entries".into(), json!(entries));
                attach_decimal(cli, &mut obj, "ntheta_sum", &report.ntheta_sum);
                attach_decimal(cli, &mut obj, "lambda", &lambda);
                obj.insert("total_check".into(), json_rat(&report.total_check));
                println!("{}", serde_json::Value::Object(obj));
            } else {
                println!("L({},{}) spectrum, exact", report.p, report.q);
                println!("eta_sign = {}", show(cli, &report.eta_sign));
                for e in &report.entries {
                    println!(
                        "alpha {}: eta_dirac = {}, corr = {}, ntheta = {}",
                        e.alpha,
                        show(cli, &e.eta_dirac),
                        show(cli, &e.corr),
                        show(cli, &e.ntheta)
                    );
                }
                println!("ntheta_sum = {}", show(cli, &report.ntheta_sum));
                println!("lambda = {}", show(cli, &lambda));
                println!("total_check = {}", format_rational(&report.total_check));
            }
        }
        (None, false) => {
            let report = spec.spectrum_f64()?;
            let lambda = 2.0 * report.ntheta_sum / report.p as f64;
            if cli.json {
                let entries: Vec<serde_json::Value> = report
                    .entries
                    .iter()
                    .map(|e| {
                        json!({
                            "alpha": e.alpha,
                            "eta_dirac": e.eta_dirac,
                            "corr": e.corr,
                            "ntheta": e.ntheta,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "p": report.p,
                        "q": report.q,
                        "mode": "float",
                        "eta_sign": report.eta_sign,
                        "entries": entries,
                        "ntheta_sum": report.ntheta_sum,
                        "lambda": lambda,
                        "total_check": report.total_check,
                    })
                );
            } else {
                println!("L({},{}) spectrum, float", report.p, report.q);
                println!("eta_sign = {:.12e}", report.eta_sign);
                for e in &report.entries {
                    println!(
                        "alpha {}: eta_dirac = {:.12e}, corr = {:.12e}, ntheta = {:.12e}",
                        e.alpha, e.eta_dirac, e.corr, e.ntheta
                    );
                }
                println!("ntheta_sum = {:.12e}", report.ntheta_sum);
                println!("lambda = {:.12e}", lambda);
                println!("total_check = {:.12e}", report.total_check);
            }
        }
    }
    Ok(())
}

fn chain_cmd(cli: &Cli, path: &PathBuf) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Failure::Lib(Error::Parse(format!("cannot read {}: {e}", path.display())))
    })?;
    let steps = parse_chain(&text)?;
    let report = run_chain(&steps)?;
    if cli.json {
        let trace: Vec<serde_json::Value> = report
            .trace
            .iter()
            .map(|s| {
                let mut obj = serde_json::Map::new();
                attach_decimal(cli, &mut obj, "lambda_prime", &s.lambda_prime);
                obj.insert("h1_order".into(), json!(s.h1_order));
                serde_json::Value::Object(obj)
            })
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("steps".into(), json!(steps.len()));
        attach_decimal(cli, &mut obj, "lambda_prime", &report.lambda_prime);
        obj.insert("h1_order".into(), json!(report.h1_order));
        attach_decimal(cli, &mut obj, "lambda", &report.lambda);
        attach_decimal(cli, &mut obj, "ntheta_total", &report.ntheta_total);
        obj.insert("trace".into(), json!(trace));
        println!("{}", serde_json::Value::Object(obj));
    } else {
        println!("chain of {} steps", steps.len());
        for (i, s) in report.trace.iter().enumerate() {
            println!(
                "after step {}: lambda' = {}, |H1| = {}",
                i + 1,
                show(cli, &s.lambda_prime),
                s.h1_order
            );
        }
        println!("lambda_prime = {}", show(cli, &report.lambda_prime));
        println!("h1_order = {}", report.h1_order);
        println!("lambda = {}", show(cli, &report.lambda));
        println!("ntheta_total = {}", show(cli, &report.ntheta_total));
    }
    Ok(())
}

fn alexander_cmd(
    cli: &Cli,
    poly: &str,
    functional: Functional,
    i: Option<i64>,
    d: Option<u64>,
    k: Option<u64>,
) -> Result<(), Failure> {
    let a = SymmetricLaurent::from_str(poly)?;
    let scalar = |cli: &Cli, name: &str, value: &Rational| {
        if cli.json {
            let mut obj = serde_json::Map::new();
            obj.insert("poly".into(), json!(a.to_string()));
            obj.insert("functional".into(), json!(name));
            attach_decimal(cli, &mut obj, "value", value);
            println!("{}", serde_json::Value::Object(obj));
        } else {
            println!("{name} = {}", show(cli, value));
        }
    };
    match functional {
        Functional::Eval1 => scalar(cli, "eval1", &a.evaluate_at_one()),
        Functional::Weight => scalar(cli, "weight", &a.surgery_weight()?),
        Functional::Theta => {
            let i = i.ok_or_else(|| Failure::Usage("--functional theta needs --i".into()))?;
            let value = a.theta_zero_surgery(i)?;
            if cli.json {
                let mut obj = serde_json::Map::new();
                obj.insert("poly".into(), json!(a.to_string()));
                obj.insert("functional".into(), json!("theta"));
                obj.insert("i".into(), json!(i));
                attach_decimal(cli, &mut obj, "value", &value);
                println!("{}", serde_json::Value::Object(obj));
            } else {
                println!("theta({i}) = {}", show(cli, &value));
            }
        }
        Functional::Gamma => scalar(cli, "gamma", &a.gamma()),
        Functional::Induce => {
            let d = d.ok_or_else(|| Failure::Usage("--functional induce needs --d".into()))?;
            let k = k.ok_or_else(|| Failure::Usage("--functional induce needs --k".into()))?;
            let induced = a.induced_complement_poly(d, k)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "poly": a.to_string(),
                        "functional": "induce",
                        "d": d,
                        "k": k,
                        "result": induced.to_string(),
                    })
                );
            } else {
                println!("induced = {induced}");
            }
        }
        Functional::Validate => {
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "poly": a.to_string(),
                        "functional": "validate",
                        "valid": true,
                    })
                );
            } else {
                println!("valid: {a}");
            }
        }
    }
    Ok(())
}

fn selftest_cmd(cli: &Cli, depth: DepthArg) -> Result<(), Failure> {
    let depth = match depth {
        DepthArg::Small => Depth::Small,
        DepthArg::Full => Depth::Full,
    };
    let report = run_selftest(depth);
    print_selftest(cli, &report);
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::SelftestFailed)
    }
}

fn print_selftest(cli: &Cli, report: &SelftestReport) {
    if cli.json {
        let suites: Vec<serde_json::Value> = report
            .suites
            .iter()
            .map(|s| {
                json!({
                    "name": s.name,
                    "cases": s.cases,
                    "failures": s.failures,
                    "first_failure": s.first_failure,
                })
            })
            .collect();
        println!(
            "{}",
            json!({
                "depth": match report.depth { Depth::Small => "small", Depth::Full => "full" },
                "passed": report.passed(),
                "suites": suites,
            })
        );
    } else {
        for s in &report.suites {
            let status = if s.passed() { "ok" } else { "FAILED" };
            println!("{}: {} cases, {} failures, {status}", s.name, s.cases, s.failures);
            if let Some(first) = &s.first_failure {
                println!("  first failure: {first}");
            }
        }
        println!(
            "selftest: {}",
            if report.passed() { "PASS" } else { "FAIL" }
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(args: &[&str]) -> u8 {
        run(std::iter::once("cwinv").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(code(&["nonsense"]), 1);
        assert_eq!(code(&["dedekind", "--p", "3"]), 1);
        assert_eq!(code(&["dedekind", "--p", "x", "--q", "1"]), 1);
        assert_eq!(code(&["lens", "--p", "5", "--q", "1"]), 1);
        assert_eq!(code(&["alexander", "--poly", "0:1", "--functional", "theta"]), 1);
    }

    #[test]
    fn validation_errors_exit_two() {
        assert_eq!(code(&["dedekind", "--p", "4", "--q", "2"]), 2);
        assert_eq!(code(&["lens", "--p", "0", "--q", "1", "--all"]), 2);
        assert_eq!(code(&["lens", "--p", "5", "--q", "1", "--alpha", "9"]), 2);
        assert_eq!(code(&["alexander", "--poly", "1:1", "--functional", "weight"]), 2);
        assert_eq!(code(&["chain", "/nonexistent/chain.json"]), 2);
    }

    #[test]
    fn successes_exit_zero() {
        assert_eq!(code(&["dedekind", "--p", "3", "--q", "1"]), 0);
        assert_eq!(code(&["dedekind", "--p", "12", "--q", "5", "--method", "both"]), 0);
        assert_eq!(code(&["lens", "--p", "5", "--q", "1", "--all"]), 0);
        assert_eq!(code(&["lens", "--p", "5", "--q", "1", "--alpha", "2", "--json"]), 0);
        assert_eq!(code(&["lens", "--p", "100", "--q", "7", "--all"]), 0);
        assert_eq!(
            code(&["alexander", "--poly", "2:1,0:-1,-2:1", "--functional", "weight"]),
            0
        );
        assert_eq!(code(&["--help"]), 0);
        assert_eq!(code(&["lens", "--help"]), 0);
    }
}
