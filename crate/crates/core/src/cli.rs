//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a computation
//! errors, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::covariants::verify_section3;
use crate::equivariant::{
    equivariant_numeric, equivariant_symbolic, fmt_partition, schur_dimension, schur_name,
    verify_table2, ConfigExponent, SymbolicMatch,
};
use crate::error::Error;
use crate::exact::{series_expand, RatFun, UV};
use crate::groups::{CharId, GroupId};
use crate::mckay::stratum_series_mckay;
use crate::molien::molien_series_g2;
use crate::strata::{euler_char, f1, f2, verify_table1};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "genus2",
    version,
    about = "Euler characteristics of local systems on M_{1,1} and M_2"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The generating function f_1(u) for M_{1,1}.
    F1,
    /// The generating function f_2(u, v) for M_2.
    F2,
    /// A single Euler characteristic e_2(1^k 2^l).
    Coeff {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
    /// The invariant series of one stratum.
    StratumSeries {
        #[arg(long)]
        group: String,
        #[arg(long)]
        rho: String,
    },
    /// Compare the McKay series of a stratum with the element average.
    OracleCompare {
        #[arg(long)]
        group: String,
        #[arg(long)]
        rho: String,
        #[arg(long, default_value_t = 30)]
        max_u: usize,
        #[arg(long, default_value_t = 12)]
        max_v: usize,
    },
    /// Compare the stratum series with the embedded stratum table.
    VerifyTable1,
    /// Check the covariant identities of binary sextics.
    VerifyCovariants,
    /// The S_n-equivariant Euler characteristic of M_{2,n}.
    Equivariant {
        #[arg(long)]
        n: usize,
        /// Leave the coefficients as combinations of e_2(1^k 2^l).
        #[arg(long)]
        symbolic: bool,
        /// Include the factor d! in the exponents.
        #[arg(long)]
        with_factorial: bool,
    },
    /// Compare the equivariant Euler characteristics with the embedded equivariant table.
    Table2,
}

/// Result of a subcommand before rendering.
enum Outcome {
    Ok,
    Failed,
}

fn ratfun_json(f: &RatFun) -> serde_json::Value {
    let (num, den) = f.factored_parts(&UV);
    json!({ "num": num, "den": den })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn emit_ratfun(out: &mut dyn Write, f: &RatFun, format: OutputFormat) -> std::io::Result<()> {
    match format {
        OutputFormat::Text => writeln!(out, "{}", f.fmt_factored(&UV)),
        OutputFormat::Json => writeln!(out, "{}", ratfun_json(f)),
        OutputFormat::Csv => {
            let (num, den) = f.factored_parts(&UV);
            writeln!(out, "num,den")?;
            writeln!(out, "{},{}", csv_field(&num), csv_field(&den))
        }
    }
}

fn stratum_args(group: &str, rho: &str) -> crate::Result<(GroupId, CharId)> {
    let g: GroupId = group.parse()?;
    let r = CharId::parse_for(rho, g)?;
    crate::groups::group(g)?.char_exponents(r)?;
    Ok((g, r))
}

#[derive(Serialize)]
struct CoeffEntry {
    partition: Vec<usize>,
    coefficient: serde_json::Value,
}

fn execute(cli: &Cli, out: &mut dyn Write) -> crate::Result<Outcome> {
    let format = if cli.json {
        OutputFormat::Json
    } else {
        cli.format
    };
    match &cli.command {
        Command::F1 => emit_ratfun(out, &f1()?, format)?,
        Command::F2 => emit_ratfun(out, f2()?, format)?,
        Command::Coeff { k, ell } => {
            let v = euler_char(*k, *ell)?;
            match format {
                OutputFormat::Text => writeln!(out, "{v}"),
                OutputFormat::Json => {
                    writeln!(out, "{}", json!({ "k": k, "ell": ell, "value": v }))
                }
                OutputFormat::Csv => writeln!(out, "k,ell,value\n{k},{ell},{v}"),
            }?;
        }
        Command::StratumSeries { group, rho } => {
            let (g, r) = stratum_args(group, rho)?;
            emit_ratfun(out, &stratum_series_mckay(g, r)?, format)?;
        }
        Command::OracleCompare {
            group,
            rho,
            max_u,
            max_v,
        } => {
            let (g, r) = stratum_args(group, rho)?;
            let mckay = series_expand(&stratum_series_mckay(g, r)?, *max_u, *max_v)?;
            let oracle = molien_series_g2(g, r, *max_u, *max_v)?;
            let diff = oracle.first_difference(&mckay);
            match format {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "group": g.name(),
                        "rho": r.name(),
                        "max_u": max_u,
                        "max_v": max_v,
                        "agree": diff.is_none(),
                        "first_difference": diff.map(|(i, j)| json!({
                            "k": i,
                            "ell": j,
                            "oracle": crate::exact::rat::fmt(oracle.get(i, j)),
                            "mckay": crate::exact::rat::fmt(mckay.get(i, j)),
                        })),
                    })
                ),
                OutputFormat::Csv => {
                    writeln!(out, "group,rho,max_u,max_v,agree")?;
                    writeln!(
                        out,
                        "{g},{},{max_u},{max_v},{}",
                        csv_field(&r.name()),
                        diff.is_none()
                    )
                }
                OutputFormat::Text => match diff {
                    None => writeln!(out, "agree up to u^{max_u} v^{max_v}"),
                    Some((i, j)) => writeln!(
                        out,
                        "disagree at u^{i} v^{j}: oracle {}, mckay {}",
                        crate::exact::rat::fmt(oracle.get(i, j)),
                        crate::exact::rat::fmt(mckay.get(i, j))
                    ),
                },
            }?;
            if diff.is_some() {
                return Ok(Outcome::Failed);
            }
        }
        Command::VerifyTable1 => {
            let checks = verify_table1()?;
            match format {
                OutputFormat::Json => {
                    let rows: Vec<_> = checks
                        .iter()
                        .map(|c| json!({ "id": c.id, "passed": c.passed, "ratio": c.ratio }))
                        .collect();
                    writeln!(out, "{}", serde_json::Value::from(rows))
                }
                OutputFormat::Csv => {
                    writeln!(out, "id,passed,ratio")?;
                    for c in &checks {
                        writeln!(
                            out,
                            "{},{},{}",
                            csv_field(&c.id),
                            c.passed,
                            csv_field(c.ratio.as_deref().unwrap_or(""))
                        )?;
                    }
                    Ok(())
                }
                OutputFormat::Text => {
                    for c in &checks {
                        match &c.ratio {
                            None => writeln!(out, "PASS {}", c.id)?,
                            Some(r) => writeln!(out, "FAIL {}: computed/printed = {r}", c.id)?,
                        }
                    }
                    Ok(())
                }
            }?;
            if checks.iter().any(|c| !c.passed) {
                return Ok(Outcome::Failed);
            }
        }
        Command::VerifyCovariants => {
            let report = verify_section3()?;
            match format {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    json!({ "passed": report.all_passed(), "report": report })
                ),
                OutputFormat::Csv => {
                    writeln!(out, "name,gated,passed,detail")?;
                    for e in &report.entries {
                        writeln!(
                            out,
                            "{},{},{},{}",
                            csv_field(&e.name),
                            e.gated,
                            e.passed,
                            csv_field(&e.detail)
                        )?;
                    }
                    Ok(())
                }
                OutputFormat::Text => writeln!(out, "{report}"),
            }?;
            if !report.all_passed() {
                return Ok(Outcome::Failed);
            }
        }
        Command::Equivariant {
            n,
            symbolic,
            with_factorial,
        } => {
            let variant = if *with_factorial {
                ConfigExponent::WithFactorial
            } else {
                ConfigExponent::Mobius
            };
            let rows: Vec<(Vec<usize>, String, serde_json::Value)>;
            let mut dimension = None;
            if *symbolic {
                let v = equivariant_symbolic(*n, variant)?;
                rows = v
                    .coeffs
                    .iter()
                    .map(|(p, c)| (p.clone(), c.to_string(), json!(c.to_string())))
                    .collect();
            } else {
                let v = equivariant_numeric(*n, variant)?;
                dimension = Some(schur_dimension(&v));
                rows = v
                    .coeffs
                    .iter()
                    .map(|(p, c)| (p.clone(), c.to_string(), json!(c)))
                    .collect();
            }
            match format {
                OutputFormat::Json => {
                    let entries: Vec<CoeffEntry> = rows
                        .into_iter()
                        .map(|(partition, _, coefficient)| CoeffEntry {
                            partition,
                            coefficient,
                        })
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        json!({ "n": n, "coefficients": entries, "dimension": dimension })
                    )
                }
                OutputFormat::Csv => {
                    writeln!(out, "partition,coefficient")?;
                    for (p, c, _) in &rows {
                        writeln!(out, "{},{}", csv_field(&fmt_partition(p)), csv_field(c))?;
                    }
                    Ok(())
                }
                OutputFormat::Text => {
                    let width = rows
                        .iter()
                        .map(|r| schur_name(&r.0).len())
                        .max()
                        .unwrap_or(0);
                    for (p, c, _) in &rows {
                        writeln!(out, "{:<width$}  {c}", schur_name(p))?;
                    }
                    match dimension {
                        Some(d) => writeln!(out, "dimension {d}"),
                        None => Ok(()),
                    }
                }
            }?;
        }
        Command::Table2 => {
            let report = verify_table2()?;
            let mut failed = !report.numeric_ok();
            match format {
                OutputFormat::Json => {
                    let entries: Vec<_> = report
                        .entries
                        .iter()
                        .map(|e| {
                            json!({
                                "n": e.n,
                                "partition": e.partition,
                                "numeric_table": e.table_numeric,
                                "numeric_computed": e.computed_numeric,
                                "symbolic_table": e.table_symbolic,
                                "symbolic_computed": e.computed_symbolic,
                                "symbolic": symbolic_label(&e.symbolic),
                            })
                        })
                        .collect();
                    let dims: Vec<_> = report
                        .dims
                        .iter()
                        .map(|(n, t, c)| json!({ "n": n, "table": t, "computed": c }))
                        .collect();
                    writeln!(out, "{}", json!({ "entries": entries, "dimensions": dims }))
                }
                OutputFormat::Csv => {
                    writeln!(out, "n,partition,numeric_table,numeric_computed,symbolic")?;
                    for e in &report.entries {
                        writeln!(
                            out,
                            "{},{},{},{},{}",
                            e.n,
                            csv_field(&fmt_partition(&e.partition)),
                            e.table_numeric,
                            e.computed_numeric,
                            symbolic_label(&e.symbolic)
                        )?;
                    }
                    Ok(())
                }
                OutputFormat::Text => {
                    for (n, t, c) in &report.dims {
                        let row: Vec<_> = report.entries.iter().filter(|e| e.n == *n).collect();
                        let numeric = row.iter().all(|e| e.numeric_ok()) && t == c;
                        writeln!(
                            out,
                            "n={n}: numeric {}, dimension {c} (table {t})",
                            if numeric { "match" } else { "MISMATCH" }
                        )?;
                        for e in row.iter().filter(|e| e.symbolic != SymbolicMatch::Match) {
                            writeln!(
                                out,
                                "  {} symbolic {}: table [{}] computed [{}]",
                                schur_name(&e.partition),
                                symbolic_label(&e.symbolic),
                                e.table_symbolic,
                                e.computed_symbolic
                            )?;
                        }
                    }
                    Ok(())
                }
            }?;
            failed |= report.symbolic_mismatches().next().is_some();
            if failed {
                return Ok(Outcome::Failed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn symbolic_label(m: &SymbolicMatch) -> &'static str {
    match m {
        SymbolicMatch::Match => "match",
        SymbolicMatch::Mismatch => "mismatch",
        SymbolicMatch::Ambiguous(true) => "match-reading-constant-as-e_2",
        SymbolicMatch::Ambiguous(false) => "ambiguous",
    }
}

fn is_usage_error(e: &Error) -> bool {
    matches!(e, Error::Parse(_) | Error::CharacterUndefined { .. })
}

/// Run the CLI on the given arguments, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if is_usage_error(&e) {
                2
            } else {
                1
            }
        }
    }
}
