//! `knotsurg`: Alexander polynomials, Torres specializations, Seiberg-Witten
//! data and unboundedness certificates from the command line.
//!
//! Exit codes: 0 success, 1 usage or parse error (also a rejected
//! certificate), 2 internal inconsistency.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use knotsurg_core::surgery::{link_variables, SwResultJson};
use knotsurg_core::{
    alexander_expr, analyze_family_with_cap, certify_unbounded, sw_specialized,
    sw_specialized_with_link, torres_specialize, verify_certificate, KnotExpr, LaurentPoly,
    SurgerySpec, UnboundednessCertificate, VariableSet, DEFAULT_P_CAP,
};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "knotsurg", version)]
#[command(about = "Exact knot and knot-surgery invariants with reproducible output")]
struct Cli {
    /// Output format. `csv` is only available for `family`.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander polynomial of a knot expression: unknot, torus(p,q),
    /// mirror(E), sum(E,E)
    Alexander {
        expr: String,
        /// Print the ordinary-polynomial representative (lowest exponent 0)
        /// instead of the symmetrized one
        #[arg(long)]
        no_symmetrize: bool,
    },
    /// Torres specialization (1 + y + ... + y^(lk-1)) * Δ(y)
    Torres {
        #[arg(long)]
        lk: u64,
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
        /// Variable to use when the polynomial is a constant
        #[arg(long, default_value = "y")]
        var: String,
    },
    /// Seiberg-Witten data of X_p = E(n,1;L_p)
    Sw {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: u64,
        /// Two-variable link polynomial Δ_L(x,y), if known
        #[arg(long, allow_hyphen_values = true)]
        link_poly: Option<String>,
    },
    /// Per-p report of Δ_Γp, lower bounds, genus and span
    Family {
        #[arg(long, default_value_t = 1)]
        n: u64,
        #[arg(long = "pmin")]
        p_min: u64,
        #[arg(long = "pmax")]
        p_max: u64,
        #[arg(long, default_value_t = DEFAULT_P_CAP)]
        cap: u64,
    },
    /// Emit an unboundedness certificate, or re-check one with --verify
    Certify {
        #[arg(long, required_unless_present = "verify", conflicts_with = "verify")]
        target: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_P_CAP)]
        cap: u64,
        /// Certificate file to re-check
        #[arg(long)]
        verify: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        n: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<knotsurg_core::Error> for Failure {
    fn from(e: knotsurg_core::Error) -> Self {
        Failure {
            code: if e.is_internal() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn to_json<T: Serialize>(value: &T) -> CmdResult {
    serde_json::to_string_pretty(value).map_err(|e| Failure {
        code: 2,
        message: e.to_string(),
    })
}

fn only_text_or_json(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::usage(format!("`{command}` has no csv output")));
    }
    Ok(())
}

fn poly_output(p: &LaurentPoly, format: Format) -> CmdResult {
    match format {
        Format::Json => to_json(p),
        _ => Ok(p.to_string()),
    }
}

fn cmd_alexander(expr: &str, no_symmetrize: bool, format: Format) -> CmdResult {
    only_text_or_json(format, "alexander")?;
    let k: KnotExpr = expr.parse()?;
    let mut poly = alexander_expr(&k)?;
    if no_symmetrize {
        poly = poly.unit_normalize()?;
    }
    poly_output(&poly, format)
}

fn cmd_torres(lk: u64, text: &str, var: &str, format: Format) -> CmdResult {
    only_text_or_json(format, "torres")?;
    let mut poly = LaurentPoly::parse_inferred(text)?;
    match poly.variables().len() {
        0 => {
            let vars = VariableSet::new([var])?;
            poly = LaurentPoly::parse(text, &vars)?;
        }
        1 => {}
        k => {
            return Err(Failure::usage(format!(
                "torres needs a polynomial in one variable, got {k}"
            )))
        }
    }
    poly_output(&torres_specialize(&poly, lk)?, format)
}

fn cmd_sw(p: u64, n: u64, link_poly: Option<&str>, format: Format) -> CmdResult {
    only_text_or_json(format, "sw")?;
    let spec = SurgerySpec::family(n, p)?;
    let result = match link_poly {
        Some(text) => {
            let dl = LaurentPoly::parse(text, link_variables())?;
            sw_specialized_with_link(&spec, &dl)?
        }
        None => sw_specialized(&spec)?,
    };
    if format == Format::Json {
        return to_json(&SwResultJson::from(&result));
    }
    let mut out = String::new();
    let full = result
        .polynomial
        .as_ref()
        .map_or_else(|| "unavailable".to_string(), ToString::to_string);
    writeln!(
        out,
        "X_{p} = E({n},1;L_{p}), Gamma_{p} = torus({p},{})",
        p + 1
    )
    .unwrap();
    writeln!(
        out,
        "SW at t_K = 1:           {}",
        result.specialization_at_tk1
    )
    .unwrap();
    writeln!(
        out,
        "Delta_L(1, t_G^2):       {}",
        result.torres_specialization
    )
    .unwrap();
    writeln!(
        out,
        "basic class lower bound: {}",
        result.basic_class_lower_bound
    )
    .unwrap();
    write!(out, "full SW polynomial:      {full}").unwrap();
    Ok(out)
}

fn cmd_family(n: u64, p_min: u64, p_max: u64, cap: u64, format: Format) -> CmdResult {
    let report = analyze_family_with_cap(n, p_min, p_max, cap)?;
    match format {
        Format::Json => Ok(report.to_json()?),
        Format::Csv => Ok(report.to_csv()?.trim_end().to_string()),
        Format::Text => {
            let mut out = format!("n = {n}\n");
            writeln!(
                out,
                "{:>5} {:>11} {:>10} {:>6} {:>6}  delta_gamma",
                "p", "lower_bound", "lemma63_ok", "genus", "span"
            )
            .unwrap();
            for r in &report.rows {
                writeln!(
                    out,
                    "{:>5} {:>11} {:>10} {:>6} {:>6}  {}",
                    r.p, r.lower_bound, r.lemma63_ok, r.genus, r.span, r.delta_gamma
                )
                .unwrap();
            }
            Ok(out.trim_end().to_string())
        }
    }
}

#[derive(Serialize)]
struct VerifyOutput {
    valid: bool,
    target: u64,
    witnesses: usize,
}

fn cmd_certify(
    target: Option<u64>,
    cap: u64,
    verify: Option<&PathBuf>,
    n: u64,
    format: Format,
) -> CmdResult {
    only_text_or_json(format, "certify")?;
    if let Some(path) = verify {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let cert = UnboundednessCertificate::from_json(&text)?;
        let valid = verify_certificate(&cert, n);
        let out = VerifyOutput {
            valid,
            target: cert.target,
            witnesses: cert.witnesses.len(),
        };
        let rendered = match format {
            Format::Json => to_json(&out)?,
            _ => format!(
                "certificate {}: target {}, {} witnesses",
                if valid { "valid" } else { "rejected" },
                out.target,
                out.witnesses
            ),
        };
        if !valid {
            return Err(Failure::usage(rendered));
        }
        return Ok(rendered);
    }
    let target = target.expect("clap requires --target without --verify");
    Ok(certify_unbounded(target, cap)?.to_json()?)
}

fn run(cli: Cli) -> CmdResult {
    let format = cli.format;
    match cli.command {
        Command::Alexander {
            expr,
            no_symmetrize,
        } => cmd_alexander(&expr, no_symmetrize, format),
        Command::Torres {
            lk,
            polynomial,
            var,
        } => cmd_torres(lk, &polynomial, &var, format),
        Command::Sw { p, n, link_poly } => cmd_sw(p, n, link_poly.as_deref(), format),
        Command::Family {
            n,
            p_min,
            p_max,
            cap,
        } => cmd_family(n, p_min, p_max, cap, format),
        Command::Certify {
            target,
            cap,
            verify,
            n,
        } => cmd_certify(target, cap, verify.as_ref(), n, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
