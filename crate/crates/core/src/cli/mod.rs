//! The `ospcoh` command line. Exit codes: 0 all checks pass, 1 a
//! mathematical mismatch, 2 a usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::algebra::{audit_and_repair, jacobi_report, repaired_table, AuditReport, StructureTable};
use crate::cochain::{cup_cocycle, make_f_k, make_ftilde_k, make_h_lambda, restrict_sl2, Cochain, ExplicitCocycle};
use crate::engine::{compute_report, gelfand_fuchs_check, CohomologyReport, ReportConfig};
use crate::error::{Error, Result};
use crate::module::DensityModule;
use crate::rational::{parse_rational, q, to_fraction, Rational};
use crate::realization::{format_operator, Operator};
use crate::selftest::{parameter_grid, run_selftest, Suite};

#[derive(Parser, Debug)]
#[command(name = "ospcoh", version, about = "Cohomology of osp(1|2) with coefficients in density operator modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableChoice {
    Printed,
    Repaired,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    H,
    F,
    Ftilde,
    Cup,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the bracket table and search for the smallest consistent repair.
    Audit {
        #[arg(long, value_enum, default_value = "printed")]
        table: TableChoice,
        /// Only report Jacobi failures of the chosen table.
        #[arg(long)]
        no_repair: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cohomology dimensions of D_{λ,μ} against the closed-form predictions.
    Dims {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// `halfints:A..B` for all pairs from {A, A+1/2, …, B}, or `l,m;l,m;…`.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(0..=6))]
        nmax: u32,
        /// Weight window |w| ≤ wmax.
        #[arg(long, default_value = "2")]
        wmax: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Re-derive and verify an explicit cocycle or the cup product Ω_k.
    Cocycles {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run invariant suites.
    Selftest {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// Result of a command: its output and whether every check passed.
struct Outcome {
    text: String,
    passed: bool,
}

fn json_text(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn audit(table: TableChoice, no_repair: bool, format: Format) -> Result<Outcome> {
    let input = match table {
        TableChoice::Printed => StructureTable::printed(),
        TableChoice::Repaired => repaired_table().clone(),
    };
    if no_repair {
        let failures = jacobi_report(&input);
        let text = match format {
            Format::Json => json_text(&json!({ "variant": input.label(), "jacobi_failures": failures })),
            Format::Csv => csv_text(
                &["kind", "item", "from", "to"],
                failures.iter().map(|f| vec!["jacobi_failure".into(), f.triple.clone(), f.defect.clone(), String::new()]),
            )?,
        };
        return Ok(Outcome { text, passed: failures.is_empty() });
    }
    let (adopted, report): (StructureTable, AuditReport) = audit_and_repair(&input)?;
    let mut module_ok = true;
    for (l, m) in parameter_grid() {
        module_ok &= DensityModule::new(l, m, 4).satisfies_module_axiom(&adopted, 4)?;
    }
    let text = match format {
        Format::Json => json_text(&json!({ "audit": report, "module_axiom": module_ok })),
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = report
                .jacobi_failures_printed
                .iter()
                .map(|f| vec!["jacobi_failure".into(), f.triple.clone(), f.defect.clone(), String::new()])
                .collect();
            rows.extend(report.changes.iter().map(|c| vec!["change".into(), c.pair.clone(), c.from.clone(), c.to.clone()]));
            rows.push(vec!["variant".into(), report.variant.clone(), String::new(), String::new()]);
            rows.push(vec!["module_axiom".into(), module_ok.to_string(), String::new(), String::new()]);
            csv_text(&["kind", "item", "from", "to"], rows)?
        }
    };
    Ok(Outcome { text, passed: module_ok && adopted.satisfies_jacobi() })
}

/// Parses `halfints:A..B` or `l,m;l,m;…`.
pub fn parse_grid(text: &str) -> Result<Vec<(Rational, Rational)>> {
    if let Some(range) = text.strip_prefix("halfints:") {
        let (a, b) = range.split_once("..").ok_or_else(|| Error::Parse(format!("bad range {range:?}")))?;
        let (a, b) = (parse_rational(a)?, parse_rational(b)?);
        let two = Rational::from_integer(2.into());
        if !(&a * &two).is_integer() || !(&b * &two).is_integer() || a > b {
            return Err(Error::Parse(format!("bad half-integer range {range:?}")));
        }
        let mut values = Vec::new();
        let mut x = a;
        while x <= b {
            values.push(x.clone());
            x += q(1, 2);
        }
        return Ok(values.iter().flat_map(|l| values.iter().map(move |m| (l.clone(), m.clone()))).collect());
    }
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (l, m) = pair.split_once(',').ok_or_else(|| Error::Parse(format!("bad pair {pair:?}")))?;
            Ok((parse_rational(l)?, parse_rational(m)?))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn dims(
    lambda: Option<String>,
    mu: Option<String>,
    grid: Option<String>,
    kmax: u32,
    nmax: u32,
    wmax: &str,
    format: Format,
    threads: Option<usize>,
) -> Result<Outcome> {
    let points = match (grid, lambda, mu) {
        (Some(g), None, None) => parse_grid(&g)?,
        (None, Some(l), Some(m)) => vec![(parse_rational(&l)?, parse_rational(&m)?)],
        _ => return Err(Error::Parse("give either --lambda and --mu, or --grid".into())),
    };
    let weight_bound = parse_rational(wmax)?;
    if weight_bound < Rational::from_integer(0.into()) {
        return Err(Error::Parse("--wmax must be nonnegative".into()));
    }
    let config = ReportConfig { kmax, nmax, weight_bound };
    let table = repaired_table();
    let work = || -> Result<Vec<CohomologyReport>> {
        points.par_iter().map(|(l, m)| compute_report(l, m, &config, table)).collect()
    };
    let reports = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Parse(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    let passed = reports.iter().all(|r| r.matches);
    let text = match format {
        Format::Json if reports.len() == 1 => json_text(&reports[0]),
        Format::Json => json_text(&reports),
        Format::Csv => csv_text(
            &CohomologyReport::CSV_HEADER,
            reports.iter().flat_map(|r| r.csv_rows()).map(|row| row.to_vec()),
        )?,
    };
    Ok(Outcome { text, passed })
}

fn slots(c: &Cochain) -> Value {
    Value::Object(
        c.values()
            .map(|(u, v)| (u.to_string(), Value::String(format_operator(&Operator::from_module_vector(v)))))
            .collect::<Map<_, _>>(),
    )
}

fn module_json(m: &DensityModule) -> Value {
    json!({ "lambda": to_fraction(m.lambda()), "mu": to_fraction(m.mu()), "K": m.kmax() })
}

fn explicit_json(e: &ExplicitCocycle, table: &StructureTable) -> Result<(Value, bool)> {
    let c = &e.cochain;
    let cocycle = c.coboundary(table)?.is_zero();
    let reduced = c.is_reduced();
    let nontrivial = cocycle && c.is_coboundary(table)?.is_none();
    let restriction_nontrivial = cocycle && restrict_sl2(c).is_coboundary(table)?.is_none();
    let passed = cocycle && reduced && nontrivial && restriction_nontrivial;
    let v = json!({
        "name": e.name,
        "module": module_json(c.module()),
        "parity": c.parity().bit(),
        "slots": slots(c),
        "values": c.to_json(),
        "ratios_to_printed": e.ratios,
        "checks": {
            "cocycle": cocycle,
            "reduced": reduced,
            "nontrivial": nontrivial,
            "restriction_nontrivial": restriction_nontrivial,
        },
        "passed": passed,
    });
    Ok((v, passed))
}

fn cocycles(kind: Kind, k: u32, lambda: &str) -> Result<Outcome> {
    let table = repaired_table();
    let (value, passed) = match kind {
        Kind::H => explicit_json(&make_h_lambda(&parse_rational(lambda)?)?, table)?,
        Kind::F => explicit_json(&make_f_k(k)?, table)?,
        Kind::Ftilde => explicit_json(&make_ftilde_k(k)?, table)?,
        Kind::Cup => {
            let f = make_f_k(k)?.cochain;
            let h = make_h_lambda(&q(-(k as i64), 2))?.cochain;
            let (omega, sign) = cup_cocycle(&f, &h, table)?;
            let gf = gelfand_fuchs_check(k, table)?;
            let passed = !gf.is_coboundary && !gf.sl2_restriction_is_coboundary;
            let v = json!({
                "name": format!("Omega_{k}"),
                "module": module_json(omega.module()),
                "cup_sign": sign.name(),
                "slots": slots(&omega),
                "values": omega.to_json(),
                "gelfand_fuchs": gf,
                "passed": passed,
            });
            (v, passed)
        }
    };
    Ok(Outcome { text: json_text(&value), passed })
}

fn selftest(suite: &str) -> Result<Outcome> {
    let report = run_selftest(suite.parse::<Suite>()?);
    Ok(Outcome { text: json_text(&report), passed: report.passed })
}

fn write_out(text: &str, out: Option<PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Error::Parse(e.to_string())),
    }
}

/// Runs the command line, writing results to `stdout` and diagnostics to
/// `stderr`; returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    let (result, out) = match cli.command {
        Command::Audit { table, no_repair, format, out } => (audit(table, no_repair, format), out),
        Command::Dims { lambda, mu, grid, kmax, nmax, wmax, format, out, threads } => {
            (dims(lambda, mu, grid, kmax, nmax, &wmax, format, threads), out)
        }
        Command::Cocycles { kind, k, lambda, out } => (cocycles(kind, k, &lambda), out),
        Command::Selftest { suite } => (selftest(&suite), None),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        }
    };
    if let Err(e) = write_out(&outcome.text, out, stdout) {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    if outcome.passed {
        0
    } else {
        1
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

#[cfg(test)]
mod tests;
