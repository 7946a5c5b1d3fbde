mod args;
mod resolve;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use hurwitz_core::algebra::json::PolyJson;
use hurwitz_core::algebra::scalar::format_rational;
use hurwitz_core::algebra::{Monomial, SparsePoly, VarKind};
use hurwitz_core::engine::default_cells;
use hurwitz_core::formulas::{display_over_denominator, f_table, m_max, HurwitzCount};
use hurwitz_core::oracle::table::{all_counts_with_budget, transitive_counts, Budget};
use hurwitz_core::{EPoly, HurwitzError, Partition, Rational, Result};
use num_traits::One;
use serde_json::{json, Value};

use args::{Basis, CacheAction, Cli, Command, ComputeArgs, Format, ModeArg, RouteChoice, TableArgs, VerifyArgs};
use resolve::{Resolved, Resolver, Route};

/// Failure with its exit code: 1 mismatch, 2 unavailable, 3 bad arguments.
struct Failure {
    code: u8,
    message: String,
}

impl From<HurwitzError> for Failure {
    fn from(e: HurwitzError) -> Self {
        use HurwitzError::*;
        let code = match &e {
            InvalidInput(_) => 3,
            Inconsistent(_) | Residual { .. } | RouteDisagreement { .. } | FitInconsistent { .. }
            | NotDivisible { .. } | NotVanishing { .. } | NotSymmetric(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn bad_args(message: impl Into<String>) -> Failure {
    Failure { code: 3, message: message.into() }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, message }) => {
            eprintln!("hurwitz: {message}");
            ExitCode::from(code)
        }
    }
}

fn cache_dir(cli: &Cli) -> Option<PathBuf> {
    cli.cache_dir.clone().or_else(|| std::env::var_os("HURWITZ_CACHE_DIR").map(PathBuf::from))
}

fn run(cli: Cli) -> std::result::Result<String, Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(bad_args("--jobs must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure { code: 2, message: e.to_string() })?;
    }
    let dir = cache_dir(&cli);
    match &cli.command {
        Command::Compute(a) => compute(a, dir, cli.format),
        Command::Table(a) => table(a, dir, cli.format),
        Command::Verify(a) => verify(a, dir),
        Command::Cache { action } => cache(action, dir, cli.format),
    }
}

fn comma(alpha: &Partition) -> String {
    alpha.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

const GRID_HEADER: &str = "alpha,n,m,g,f,mu,c,route\n";

fn text_line(h: &HurwitzCount, route: Route) -> String {
    format!(
        "alpha={} g={} f={} mu={} c={} route={}\n",
        comma(&h.alpha),
        h.g,
        format_rational(&h.f),
        format_rational(&h.mu),
        h.c,
        route.label()
    )
}

fn csv_line(h: &HurwitzCount, route: Route) -> String {
    format!(
        "{},{},{},{},{},{},{},{}\n",
        h.alpha.dashed(),
        h.alpha.n(),
        h.alpha.len(),
        h.g,
        format_rational(&h.f),
        format_rational(&h.mu),
        h.c,
        route.label()
    )
}

fn json_value(h: &HurwitzCount, route: Route) -> Value {
    let mut v = serde_json::to_value(h).expect("count serializes");
    v["route"] = json!(route.label());
    v
}

fn render(rows: &[Resolved], format: Format, single: bool) -> String {
    match format {
        Format::Text => rows.iter().map(|r| text_line(&r.count, r.route)).collect(),
        Format::Csv => {
            let mut out = String::from(GRID_HEADER);
            out.extend(rows.iter().map(|r| csv_line(&r.count, r.route)));
            out
        }
        Format::Json => {
            let values: Vec<Value> = rows.iter().map(|r| json_value(&r.count, r.route)).collect();
            let v = if single { values.into_iter().next().unwrap() } else { Value::Array(values) };
            format!("{v}\n")
        }
    }
}

fn compute(a: &ComputeArgs, dir: Option<PathBuf>, format: Format) -> std::result::Result<String, Failure> {
    let mut resolver = Resolver::new(dir, a.oracle);
    let row = resolver.resolve(&a.alpha, a.genus, a.route)?;
    Ok(render(&[row], format, true))
}

/// `f_m^(g)` as an e-polynomial with the route it came from.
fn e_polynomial(
    resolver: &mut Resolver,
    m: usize,
    g: u32,
    choice: RouteChoice,
) -> Result<(EPoly, &'static str)> {
    let engine_ok = resolver.engine_available(m, g as usize);
    let tabulated = g >= 1 && m_max(g).is_some_and(|top| m <= top);
    let use_engine = match choice {
        RouteChoice::Engine => true,
        RouteChoice::Auto => engine_ok,
        RouteChoice::Formula => false,
        RouteChoice::Oracle => {
            return Err(HurwitzError::Unavailable(
                "the oracle yields values, not polynomials; use --basis values".into(),
            ))
        }
    };
    if use_engine {
        return Ok((resolver.engine_poly(m, g as usize)?, Route::Engine.label()));
    }
    if tabulated {
        return Ok((f_table(g, m)?, Route::Table.label()));
    }
    if g == 0 && m >= 3 {
        let mut p = SparsePoly::zero(VarKind::E, m);
        p.add_term(Monomial::var(m, 0, (m - 3) as u16), Rational::one());
        return Ok((p, Route::Genus0.label()));
    }
    Err(HurwitzError::Unavailable(format!("no polynomial source for f_{m}^({g})")))
}

fn table(a: &TableArgs, dir: Option<PathBuf>, format: Format) -> std::result::Result<String, Failure> {
    if a.factorizations {
        return factorizations(a, format);
    }
    let (g, m) = (a.genus.unwrap(), a.m.unwrap());
    if m == 0 {
        return Err(bad_args("--m must be at least 1"));
    }
    let mut resolver = Resolver::new(dir, a.oracle);
    if a.values || a.basis == Basis::Values {
        let n_max = a.n_max.unwrap_or(m as u32 + 3);
        let mut rows = Vec::new();
        for n in m as u32..=n_max {
            for alpha in Partition::with_length(n, m) {
                rows.push(resolver.resolve(&alpha, g, a.route)?);
            }
        }
        return Ok(render(&rows, format, false));
    }
    let (poly, route) = e_polynomial(&mut resolver, m, g, a.route)?;
    let shown = display_over_denominator(&poly);
    Ok(match format {
        Format::Text => format!("{shown}\n"),
        Format::Csv => format!("g,m,f,route\n{g},{m},\"{shown}\",{route}\n"),
        Format::Json => {
            format!("{}\n", json!({ "g": g, "m": m, "f": PolyJson::from(&poly), "display": shown, "route": route }))
        }
    })
}

fn factorizations(a: &TableArgs, format: Format) -> std::result::Result<String, Failure> {
    let n_max = a.n_max.unwrap_or(5);
    let budget = Budget { n_max: a.oracle.n_max, j_max: a.oracle.j_max };
    let all = all_counts_with_budget(n_max, a.oracle.j_max, budget)?;
    let t = match a.mode {
        ModeArg::All => all,
        ModeArg::Transitive => transitive_counts(&all)?,
    };
    Ok(match format {
        Format::Text | Format::Csv => t.to_csv(),
        Format::Json => {
            let rows: Vec<Value> = t
                .entries
                .iter()
                .map(|((n, j, p), c)| {
                    json!({ "n": n, "j": j, "partition": p.dashed(), "mode": t.mode.to_string(), "count": c.to_string() })
                })
                .collect();
            format!("{}\n", Value::Array(rows))
        }
    })
}

fn verify(a: &VerifyArgs, dir: Option<PathBuf>) -> std::result::Result<String, Failure> {
    let mut resolver = Resolver::new(dir, a.oracle);
    let reports = verify::run(&mut resolver, a.suite, a.n_max, a.genus_max)?;
    let passed = reports.iter().all(|r| r.passed());
    let body = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        json!({ "passed": passed, "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>() })
    };
    let text = serde_json::to_string_pretty(&body).expect("report serializes") + "\n";
    if passed {
        return Ok(text);
    }
    print!("{text}");
    let (suite, first) = reports
        .iter()
        .find_map(|r| r.failures.first().map(|f| (r.suite, f)))
        .expect("a failing suite has a failure");
    Err(Failure {
        code: 1,
        message: format!("{suite}: {}: expected {}, got {}", first.check, first.expected, first.actual),
    })
}

fn cache(action: &CacheAction, dir: Option<PathBuf>, format: Format) -> std::result::Result<String, Failure> {
    let dir = dir.ok_or_else(|| bad_args("cache commands need --cache-dir or HURWITZ_CACHE_DIR"))?;
    let mut resolver = Resolver::new(Some(dir), args::OracleArgs { n_max: 0, j_max: 0 });
    let engine = &mut resolver.engine;
    let cells = match action {
        CacheAction::List => engine.cached_on_disk(),
        CacheAction::Clear => {
            let removed = engine.clear_cache()?;
            return Ok(format!("removed {removed}\n"));
        }
        CacheAction::Build { m, genus } => {
            let wanted = match (m, genus) {
                (Some(m), Some(g)) => vec![(*m, *g)],
                _ => default_cells(),
            };
            for &(m, g) in &wanted {
                engine.extract(m, g)?;
            }
            wanted
        }
    };
    Ok(match format {
        Format::Text => cells.iter().map(|(m, g)| format!("m={m} g={g}\n")).collect(),
        Format::Csv => {
            let mut out = String::from("m,g\n");
            out.extend(cells.iter().map(|(m, g)| format!("{m},{g}\n")));
            out
        }
        Format::Json => {
            let v: Vec<Value> = cells.iter().map(|(m, g)| json!({ "m": m, "g": g })).collect();
            format!("{}\n", Value::Array(v))
        }
    })
}
