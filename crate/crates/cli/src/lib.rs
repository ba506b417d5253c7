//! Command-line front end: argument model, command implementations and exit
//! codes. `main.rs` only parses and dispatches.

pub mod output;
pub mod parse;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use koshliakov::identities::{self, SuiteCase, VerifyParams, VerifyReport};
use koshliakov::kzeta::{self, ZetaEval};
use koshliakov::roots::{build_table, EigenTable, KoshParam};
use koshliakov::{series, sigma, special, KoshError};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use output::{fmt_f64, fmt_p, Num, ReportOut};
use parse::{parse_complex, parse_p, parse_real, parse_sweep, ParseError};

/// Exit statuses.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NON_CONVERGENCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Profile {
    Fast,
    Desk,
    Deep,
}

impl Profile {
    /// `(eval eps, tolerance scale)`; the spectral horizon follows from the
    /// tolerance and never exceeds [`identities::SPECTRAL_MAX_T`].
    pub fn settings(self) -> (f64, f64) {
        match self {
            Profile::Fast => (1e-8, 10.0),
            Profile::Desk => (1e-12, 1.0),
            Profile::Deep => (1e-13, 0.1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Profile::Fast => "fast",
            Profile::Desk => "desk",
            Profile::Deep => "deep",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "koshliakov", version, about = "Koshliakov zeta functions and modular-relation verifiers")]
pub struct Cli {
    /// Precision profile.
    #[arg(long, global = true, value_enum, env = "KOSH_PROFILE", default_value = "desk")]
    pub profile: Profile,
    /// Output format (default: csv for `table`, json otherwise).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to a file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Roots of p·sin(πλ) + λ·cos(πλ) = 0 with weights and residuals.
    Roots {
        #[arg(long, default_value = "1")]
        p: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Evaluates one function.
    Eval {
        /// Function id (see `eval --help`): zeta_p, eta_p, omega_p, xi_p,
        /// big_xi_p, sigma_p, inv_sigma_exp, c1, c2, bernoulli, psi_1p, psi_2p,
        /// phi_1p, phi_2p, capital_phi, phi_sum, f_p_real, f_p_spectral, zeta,
        /// big_xi.
        function: String,
        #[arg(long, default_value = "1")]
        p: String,
        /// Complex argument `a+bi`.
        #[arg(long)]
        s: Option<String>,
        /// Real argument (x, t, α or n depending on the function).
        #[arg(long)]
        x: Option<String>,
        /// Index for `bernoulli`.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Runs one registered identity.
    Verify {
        id: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Runs the standard suite of all registered identities.
    Suite,
    /// Sweeps one parameter of an identity and emits a table.
    Table {
        id: String,
        /// `name=start:stop:count`, e.g. `alpha=0.5:2:7`.
        #[arg(long)]
        sweep: String,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i32>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    /// Adds the Ξ-integral side where optional.
    #[arg(long)]
    pub spectral: bool,
}

/// Failure of a command, mapped onto the exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] KoshError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numeric(e) if e.is_non_convergence() => EXIT_NON_CONVERGENCE,
            CliError::Io(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

/// Rendered output plus the exit status it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn verify_params(args: &ParamArgs, profile: Profile, id: &str) -> Result<VerifyParams, CliError> {
    let mut v = VerifyParams::default();
    if let Some(p) = &args.p {
        v.p = parse_p(p)?;
    }
    if let Some(m) = args.m {
        v.m = m;
    }
    if let Some(a) = &args.alpha {
        v.alpha = parse_real(a)?;
    }
    if let Some(a) = &args.a {
        v.a = parse_real(a)?;
    }
    if let Some(s) = &args.s {
        v.s = parse_complex(s)?;
    }
    if let Some(k) = args.k {
        v.k = k;
    }
    v.spectral = args.spectral;
    v.tol = Some(match args.tol {
        Some(t) => t,
        None => identities::default_tol(id)? * profile.settings().1,
    });
    Ok(v)
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let profile = cli.profile;
    match &cli.command {
        Command::Roots { p, count } => cmd_roots(parse_p(p)?, *count, cli.format.unwrap_or(Format::Json)),
        Command::Eval { function, p, s, x, k } => {
            let arg = EvalArg {
                s: s.as_deref().map(parse_complex).transpose()?,
                x: x.as_deref().map(parse_real).transpose()?,
                k: *k,
            };
            cmd_eval(function, parse_p(p)?, &arg, profile, cli.format.unwrap_or(Format::Json))
        }
        Command::Verify { id, params } => {
            let v = verify_params(params, profile, id)?;
            let report = identities::verify(id, &v)?;
            let fmt = cli.format.unwrap_or(Format::Json);
            let text = match fmt {
                Format::Json => to_json(&ReportOut::new(&report)),
                Format::Text => output::report_text(&report),
                Format::Csv => output::reports_csv_long(&[&report]),
            };
            let code = if report.pass { EXIT_PASS } else { EXIT_FAIL };
            Ok(Outcome { text, code })
        }
        Command::Suite => Ok(cmd_suite(profile, cli.format.unwrap_or(Format::Json))),
        Command::Table { id, sweep, params } => {
            cmd_table(id, sweep, params, profile, cli.format.unwrap_or(Format::Csv))
        }
    }
}

/// Writes the outcome to the requested sink and returns the exit status.
pub fn emit(cli: &Cli, outcome: &Outcome) -> Result<i32, CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, &outcome.text)?,
        None => std::io::stdout().write_all(outcome.text.as_bytes())?,
    }
    Ok(outcome.code)
}

// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct RootRow {
    j: usize,
    lambda: Num,
    weight: Num,
    residual: Num,
}

pub fn cmd_roots(p: KoshParam, count: usize, fmt: Format) -> Result<Outcome, CliError> {
    if count == 0 {
        return Err(CliError::Usage("count must be at least 1".into()));
    }
    let table = build_table(p, count, 1e-15)?;
    let rows: Vec<RootRow> = (0..count)
        .map(|i| RootRow {
            j: i + 1,
            lambda: Num(table.lambdas()[i]),
            weight: Num(table.weights()[i]),
            residual: Num(table.residuals()[i]),
        })
        .collect();
    let text = match fmt {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                p: String,
                roots: &'a [RootRow],
            }
            to_json(&Out { p: fmt_p(p), roots: &rows })
        }
        Format::Csv => output::csv_table(
            &["j", "lambda", "weight", "residual"],
            &rows
                .iter()
                .map(|r| vec![r.j.to_string(), fmt_f64(r.lambda.0), fmt_f64(r.weight.0), fmt_f64(r.residual.0)])
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = format!("p = {}\n", fmt_p(p));
            for r in &rows {
                let _ = writeln!(s, "{:4} {} {} {}", r.j, fmt_f64(r.lambda.0), fmt_f64(r.weight.0), fmt_f64(r.residual.0));
            }
            s
        }
    };
    Ok(Outcome { text, code: EXIT_PASS })
}

/// Arguments accepted by `eval`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EvalArg {
    pub s: Option<Complex64>,
    pub x: Option<f64>,
    pub k: Option<usize>,
}

/// The value of one function evaluation with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub method: Option<&'static str>,
}

/// Function ids understood by `eval`.
pub const FUNCTION_IDS: [&str; 20] = [
    "zeta_p", "eta_p", "omega_p", "xi_p", "big_xi_p", "sigma_p", "inv_sigma_exp", "c1", "c2",
    "bernoulli", "psi_1p", "psi_2p", "phi_1p", "phi_2p", "capital_phi", "phi_sum", "f_p_real",
    "f_p_spectral", "zeta", "big_xi",
];

fn need<T>(v: Option<T>, what: &str, f: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("`{f}` needs --{what}")))
}

fn from_eval(z: ZetaEval<f64>) -> Evaluation {
    Evaluation {
        value: z.value,
        method: Some(z.method.as_str()),
    }
}

fn real(v: f64) -> Evaluation {
    Evaluation {
        value: Complex64::new(v, 0.0),
        method: None,
    }
}

/// Evaluates function `f` at `p`.
pub fn evaluate(f: &str, p: KoshParam, arg: &EvalArg, eps: f64) -> Result<Evaluation, CliError> {
    if !FUNCTION_IDS.contains(&f) {
        return Err(KoshError::UnknownId(f.to_string()).into());
    }
    let table = || EigenTable::new(p);
    let s = || need(arg.s, "s", f);
    let x = || need(arg.x, "x", f);
    Ok(match f {
        "zeta_p" => from_eval(kzeta::zeta_p(&table()?, s()?, eps)?),
        "eta_p" => from_eval(kzeta::eta_p(&table()?, s()?, eps)?),
        "omega_p" => Evaluation {
            value: kzeta::omega_p(&table()?, s()?, eps)?,
            method: None,
        },
        "xi_p" => Evaluation {
            value: kzeta::xi_p(&table()?, s()?, eps)?,
            method: None,
        },
        "big_xi_p" => real(kzeta::big_xi_p(&table()?, x()?, eps)?),
        "sigma_p" => Evaluation {
            value: sigma::sigma_p(&table()?, s()?, eps)?,
            method: None,
        },
        "inv_sigma_exp" => real(sigma::inv_sigma_exp(p, x()?)?),
        "c1" => real(special::euler_const_1(&table()?, eps)?),
        "c2" => real(special::euler_const_2(&table()?, eps)?),
        "bernoulli" => real(special::gen_bernoulli(&table()?, need(arg.k, "k", f)?, eps)?),
        "psi_1p" => real(special::psi_1p(&table()?, x()?, eps)?),
        "psi_2p" => real(special::psi_2p(&table()?, x()?, eps)?),
        "phi_1p" => real(special::phi_1p(&table()?, x()?, eps)?),
        "phi_2p" => real(special::phi_2p(&table()?, x()?, eps)?),
        "capital_phi" => real(special::capital_phi(&table()?, x()?, eps)?),
        "phi_sum" => real(series::phi_sum(&table()?, x()?, eps)?),
        "f_p_real" => real(identities::f_p_real(p, x()?, eps.max(1e-12))?.value),
        "f_p_spectral" => real(identities::f_p_spectral(p, x()?, eps.max(1e-12))?.value),
        "zeta" => Evaluation {
            value: kzeta::classical_zeta(s()?)?,
            method: None,
        },
        "big_xi" => real(kzeta::classical_big_xi(x()?)),
        _ => unreachable!("checked against FUNCTION_IDS"),
    })
}

pub fn cmd_eval(f: &str, p: KoshParam, arg: &EvalArg, profile: Profile, fmt: Format) -> Result<Outcome, CliError> {
    let eps = profile.settings().0;
    let e = evaluate(f, p, arg, eps)?;
    let argument = match (arg.s, arg.x, arg.k) {
        (Some(s), _, _) => output::fmt_param(&identities::ParamValue::Complex(s)),
        (_, Some(x), _) => fmt_f64(x),
        (_, _, Some(k)) => k.to_string(),
        _ => String::new(),
    };
    let text = match fmt {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                function: &'a str,
                p: String,
                argument: String,
                re: Num,
                im: Num,
                #[serde(skip_serializing_if = "Option::is_none")]
                method: Option<&'static str>,
            }
            to_json(&Out {
                function: f,
                p: fmt_p(p),
                argument,
                re: Num(e.value.re),
                im: Num(e.value.im),
                method: e.method,
            })
        }
        Format::Csv => output::csv_table(
            &["function", "p", "argument", "re", "im"],
            &[vec![f.to_string(), fmt_p(p), argument, fmt_f64(e.value.re), fmt_f64(e.value.im)]],
        ),
        Format::Text => {
            if e.value.im == 0.0 {
                format!("{}\n", fmt_f64(e.value.re))
            } else {
                format!("{} {:+.16e}i\n", fmt_f64(e.value.re), e.value.im)
            }
        }
    };
    Ok(Outcome { text, code: EXIT_PASS })
}

/// One suite entry: its report, or the error that prevented it.
pub type SuiteEntry = (SuiteCase, Result<VerifyReport, KoshError>);

/// Runs every suite case on the rayon pool; results keep registry order.
pub fn run_suite(profile: Profile) -> Vec<SuiteEntry> {
    let scale = profile.settings().1;
    identities::suite_cases()
        .into_par_iter()
        .map(|mut case| {
            let r = identities::default_tol(case.id).and_then(|tol| {
                case.params.tol = Some(tol * scale);
                identities::verify(case.id, &case.params)
            });
            (case, r)
        })
        .collect()
}

/// Exit status for a set of suite results.
pub fn suite_code(entries: &[SuiteEntry]) -> i32 {
    let non_converged = entries
        .iter()
        .any(|(_, r)| matches!(r, Err(e) if e.is_non_convergence()));
    if non_converged {
        EXIT_NON_CONVERGENCE
    } else if entries.iter().all(|(_, r)| matches!(r, Ok(rep) if rep.pass)) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn cmd_suite(profile: Profile, fmt: Format) -> Outcome {
    let entries = run_suite(profile);
    let passed = entries.iter().filter(|(_, r)| matches!(r, Ok(rep) if rep.pass)).count();
    let failed = entries.len() - passed;
    let summary = format!("suite ({}): {passed} passed, {failed} failed", profile.name());
    let text = match fmt {
        Format::Json => {
            #[derive(Serialize)]
            #[serde(untagged)]
            enum Item<'a> {
                Report(ReportOut<'a>),
                Error { id: &'a str, error: String },
            }
            #[derive(Serialize)]
            struct Out<'a> {
                profile: &'a str,
                reports: Vec<Item<'a>>,
                passed: usize,
                failed: usize,
                summary: &'a str,
            }
            let reports = entries
                .iter()
                .map(|(c, r)| match r {
                    Ok(rep) => Item::Report(ReportOut::new(rep)),
                    Err(e) => Item::Error {
                        id: c.id,
                        error: e.to_string(),
                    },
                })
                .collect();
            to_json(&Out {
                profile: profile.name(),
                reports,
                passed,
                failed,
                summary: &summary,
            })
        }
        Format::Csv => {
            let ok: Vec<&VerifyReport> = entries.iter().filter_map(|(_, r)| r.as_ref().ok()).collect();
            output::reports_csv_long(&ok)
        }
        Format::Text => {
            let mut s = String::new();
            for (c, r) in &entries {
                match r {
                    Ok(rep) => s.push_str(&output::report_text(rep)),
                    Err(e) => {
                        let _ = writeln!(s, "{} ERROR {e}", c.id);
                    }
                }
            }
            s.push_str(&summary);
            s.push('\n');
            s
        }
    };
    if fmt != Format::Text {
        eprintln!("{summary}");
    }
    Outcome {
        text,
        code: suite_code(&entries),
    }
}

fn cmd_table(id: &str, sweep: &str, params: &ParamArgs, profile: Profile, fmt: Format) -> Result<Outcome, CliError> {
    let sweep = parse_sweep(sweep)?;
    let base = verify_params(params, profile, id)?;
    let cases: Vec<VerifyParams> = sweep
        .values
        .iter()
        .map(|&v| {
            let mut c = base.clone();
            match sweep.name.as_str() {
                "alpha" => c.alpha = v,
                "a" => c.a = v,
                "s" => c.s = Complex64::new(v, 0.0),
                "p" => c.p = KoshParam::finite(v)?,
                "m" => c.m = v.round() as i32,
                "k" => c.k = v.round().max(0.0) as usize,
                other => {
                    return Err(KoshError::InvalidParameter(format!("cannot sweep `{other}`")));
                }
            }
            Ok(c)
        })
        .collect::<Result<_, KoshError>>()?;
    let reports: Vec<VerifyReport> = cases
        .par_iter()
        .map(|c| identities::verify(id, c))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&VerifyReport> = reports.iter().collect();
    let text = match fmt {
        Format::Csv => output::reports_csv_wide(&refs),
        Format::Json => to_json(&refs.iter().map(|r| ReportOut::new(r)).collect::<Vec<_>>()),
        Format::Text => refs.iter().map(|r| output::report_text(r)).collect(),
    };
    let code = if reports.iter().all(|r| r.pass) { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome { text, code })
}
