//! Cross-validation suites with a JSON report.

use hurwitz_core::algebra::scalar::{format_rational, Rational};
use hurwitz_core::algebra::symmetric::evaluate_e_poly;
use hurwitz_core::algebra::{Monomial, SparsePoly, VarKind};
use hurwitz_core::engine::default_cells;
use hurwitz_core::formulas::{
    a_sequence, f1_conjecture, f1_simple, f1_two, f_genus0, f_one_part, f_table, f_table_verbatim,
    hurwitz, mu0_simple, pg_mu1, ERRATA,
};
use hurwitz_core::{EPoly, Partition, Result};
use num_traits::One;
use serde_json::{json, Value};

use crate::args::Suite;
use crate::resolve::Resolver;

#[derive(Debug, Clone)]
pub struct Mismatch {
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Default)]
pub struct Report {
    pub suite: &'static str,
    pub checks: usize,
    pub skipped: usize,
    pub failures: Vec<Mismatch>,
    pub notes: Vec<Value>,
}

impl Report {
    fn new(suite: &'static str) -> Self {
        Report { suite, ..Default::default() }
    }

    fn compare(&mut self, check: impl FnOnce() -> String, expected: &Rational, actual: &Rational) {
        self.checks += 1;
        if expected != actual {
            self.failures.push(Mismatch {
                check: check(),
                expected: format_rational(expected),
                actual: format_rational(actual),
            });
        }
    }

    fn compare_poly(&mut self, check: &str, expected: &EPoly, actual: &EPoly) {
        self.checks += 1;
        let diff = actual - expected;
        let first = diff.leading_term().map(|(m, _)| m.clone());
        if let Some(mono) = first {
            self.failures.push(Mismatch {
                check: format!("{check}: coefficient of {}", monomial_label(&mono)),
                expected: format_rational(&expected.coeff(&mono)),
                actual: format_rational(&actual.coeff(&mono)),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "checks": self.checks,
            "skipped": self.skipped,
            "failures": self.failures.iter().map(|f| json!({
                "check": f.check, "expected": f.expected, "actual": f.actual,
            })).collect::<Vec<_>>(),
            "notes": self.notes,
        })
    }
}

fn monomial_label(mono: &Monomial) -> String {
    SparsePoly::monomial(VarKind::E, mono.clone(), Rational::one()).to_string()
}

fn int(v: u64) -> Rational {
    Rational::from_integer(v.into())
}

fn point(alpha: &Partition) -> Vec<Rational> {
    alpha.parts().iter().map(|&p| int(p as u64)).collect()
}

/// Engine-extracted `f_m^(g)` against the tables for every tabulated cell.
pub fn appendix(resolver: &mut Resolver) -> Result<Report> {
    let mut report = Report::new("appendix");
    for (m, g) in default_cells() {
        let engine = resolver.engine_poly(m, g)?;
        let table = f_table(g as u32, m)?;
        report.compare_poly(&format!("f_{m}^({g})"), &table, &engine);
        let verbatim = f_table_verbatim(g as u32, m)?;
        if verbatim != table {
            let diff = &engine - &verbatim;
            report.notes.push(json!({
                "cell": { "m": m, "g": g },
                "printed_table_differs": true,
                "difference": diff.to_string(),
            }));
        }
    }
    for e in ERRATA {
        report.notes.push(json!({
            "erratum": { "g": e.g, "k": e.k, "printed": e.printed, "corrected": e.corrected },
        }));
    }
    Ok(report)
}

/// Oracle counts against every other route that covers the same cell.
pub fn oracle(resolver: &mut Resolver, n_max: u32, genus_max: u32) -> Result<Report> {
    let mut report = Report::new("oracle");
    for n in 1..=n_max {
        for alpha in Partition::all(n) {
            for g in 0..=genus_max {
                if !resolver.oracle_available(&alpha, g) {
                    report.skipped += 1;
                    continue;
                }
                let truth = resolver.oracle_f(&alpha, g)?;
                if let Some((f, route)) = Resolver::formula(&alpha, g) {
                    report.compare(|| format!("f({alpha}; g={g}) {}", route.label()), &truth, &f);
                }
                let m = alpha.len();
                if resolver.engine_available(m, g as usize) {
                    let poly = resolver.engine_poly(m, g as usize)?;
                    let f = evaluate_e_poly(&poly, &point(&alpha));
                    report.compare(|| format!("f({alpha}; g={g}) engine"), &truth, &f);
                }
            }
        }
    }
    report.notes.push(json!({ "n_max": n_max, "genus_max": genus_max }));
    Ok(report)
}

/// The genus-one sequence `a_n` three ways, and the Pandharipande-Graber
/// recurrence against the simple-partition formula.
pub fn recurrence(n_max: u32) -> Result<Report> {
    let mut report = Report::new("recurrence");
    let n_max = n_max as u64;
    match a_sequence(n_max) {
        Ok(a) => {
            report.checks += 1;
            let shown: Vec<String> = a.iter().skip(2).map(|v| v.to_string()).collect();
            report.notes.push(json!({ "a_n_from_2": shown }));
        }
        Err(e) => {
            report.checks += 1;
            report.failures.push(Mismatch { check: "a_n".into(), expected: String::new(), actual: e.to_string() });
        }
    }
    let mu1 = pg_mu1(n_max);
    for n in 1..=n_max {
        let ones = Partition::ones(n as u32);
        let h = hurwitz(&ones, 1, f1_simple(n))?;
        report.compare(|| format!("mu_{n}^(1)(1^{n})"), &mu1[n as usize], &h.mu);
    }
    Ok(report)
}

/// Closed forms against the tables and each other.
pub fn closedform(resolver: &mut Resolver, n_max: u32) -> Result<Report> {
    let mut report = Report::new("closedform");
    for g in 1..=4u32 {
        let table = f_table(g, 1)?;
        for n in 1..=n_max as u64 {
            let at = evaluate_e_poly(&table, &[int(n)]);
            report.compare(|| format!("one-part n={n} g={g}"), &at, &f_one_part(n, g));
        }
    }
    for n in 1..=n_max {
        for alpha in Partition::all(n) {
            let m = alpha.len();
            let conj = f1_conjecture(&alpha);
            if m <= 6 {
                let table = evaluate_e_poly(&f_table(1, m)?, &point(&alpha));
                report.compare(|| format!("genus-one table at {alpha}"), &table, &conj);
            }
            if m == 2 {
                let f = f1_two(n as u64, alpha.parts()[1] as u64)?;
                report.compare(|| format!("two-part at {alpha}"), &conj, &f);
            }
        }
        report.compare(|| format!("simple n={n}"), &f1_conjecture(&Partition::ones(n)), &f1_simple(n as u64));
        let ones = Partition::ones(n);
        let h = hurwitz(&ones, 0, f_genus0(&ones))?;
        report.compare(|| format!("mu_{n}^(0)(1^{n})"), &mu0_simple(n as u64), &h.mu);
    }
    for m in 3..=6usize {
        let engine = resolver.engine_poly(m, 0)?;
        let mut expected = SparsePoly::zero(VarKind::E, m);
        expected.add_term(Monomial::var(m, 0, (m - 3) as u16), Rational::one());
        report.compare_poly(&format!("f_{m}^(0)"), &expected, &engine);
    }
    Ok(report)
}

pub fn run(resolver: &mut Resolver, suite: Suite, n_max: Option<u32>, genus_max: u32) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Appendix) {
        out.push(appendix(resolver)?);
    }
    if wants(Suite::Oracle) {
        out.push(oracle(resolver, n_max.unwrap_or(5), genus_max)?);
    }
    if wants(Suite::Recurrence) {
        out.push(recurrence(n_max.unwrap_or(12))?);
    }
    if wants(Suite::Closedform) {
        out.push(closedform(resolver, n_max.unwrap_or(10))?);
    }
    Ok(out)
}
