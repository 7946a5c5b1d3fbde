//! Recovering `f_m^(g)` from `Psi_m^(g) = f(D_1, ..., D_m) V_m`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::basis::{xdx_basis_convert, ResidualTerm};
use crate::algebra::scalar::{factorial, format_rational, Rational};
use crate::algebra::series::y_power_x_coefficients;
use crate::algebra::symmetric::{e_monomials, fit_sym_e_poly, symmetric_to_elementary};
use crate::error::{HurwitzError, Result};
use crate::partition::Partition;
use crate::{EPoly, YPoly};

use super::psi::PsiRep;

/// Residual terms with string coefficients, for reports and the cache.
#[derive(Clone, Debug, PartialEq, Serialize, serde::Deserialize)]
pub struct ResidualEntry {
    pub w_vars: Vec<usize>,
    pub indices: Vec<u16>,
    pub coeff: String,
}

impl From<&ResidualTerm<Rational>> for ResidualEntry {
    fn from(t: &ResidualTerm<Rational>) -> Self {
        ResidualEntry { w_vars: t.w_vars.clone(), indices: t.indices.clone(), coeff: format_rational(&t.coeff) }
    }
}

#[derive(Clone, Debug)]
pub struct Extraction {
    pub m: usize,
    pub g: usize,
    pub f_e: EPoly,
    /// Terms outside the pure `x d/dx` span; empty in every known case.
    pub w_residual: Vec<ResidualEntry>,
    /// Partitions used by the evaluation route, held-out ones included.
    pub points: usize,
    /// Weighted degree of `f_e`, compared with `m + 3g - 3`.
    pub degree: Option<u32>,
}

impl Extraction {
    pub fn expected_degree(&self) -> i64 {
        (self.m + 3 * self.g) as i64 - 3
    }

    pub fn degree_matches(&self) -> bool {
        self.degree.map(|d| d as i64) == Some(self.expected_degree())
    }
}

/// Route (a): per-variable operator basis, then the e-basis.
pub fn extract_by_basis(psi: &PsiRep) -> Result<(EPoly, Vec<ResidualEntry>)> {
    let decomp = xdx_basis_convert(&psi.poly, psi.m)?;
    let op = decomp.operator_poly();
    let residual = decomp.w_residual.iter().map(ResidualEntry::from).collect();
    Ok((symmetric_to_elementary(&op)?, residual))
}

/// `[x^alpha] Psi`, using `[x^n] y^k`.
pub fn x_coefficient(poly: &YPoly, alpha: &[u32], table: &[Vec<Rational>]) -> Rational {
    let mut acc = Rational::from_integer(0.into());
    for (mono, c) in poly.terms() {
        let mut term = c.clone();
        for (i, &a) in alpha.iter().enumerate() {
            let k = mono.get(i) as usize;
            let t = &table[k][a as usize];
            if num_traits::Zero::is_zero(t) {
                term = Rational::from_integer(0.into());
                break;
            }
            term *= t;
        }
        acc += term;
    }
    acc
}

/// `f(alpha) = alpha! / alpha^alpha [x^alpha] Psi`.
pub fn f_value(poly: &YPoly, alpha: &Partition, table: &[Vec<Rational>]) -> Rational {
    let mut scale = Rational::from_integer(1.into());
    for &a in alpha.parts() {
        scale *= Rational::new(factorial(a as u64), num_traits::pow(BigInt::from(a), a as usize));
    }
    x_coefficient(poly, alpha.parts(), table) * scale
}

/// Route (b): evaluate at partitions with `m` parts and interpolate a
/// symmetric polynomial of weighted degree `m + 3g - 3`, checking one
/// extra level of partitions that was not used for the fit.
pub fn extract_by_values(psi: &PsiRep) -> Result<(EPoly, usize)> {
    let m = psi.m;
    let weight = ((m + 3 * psi.g) as i64 - 3).max(0) as u32;
    let unknowns = e_monomials(m, weight).len();
    let max_power = psi.poly.max_degree_per_var().unwrap_or(0) as usize;
    let n_limit = m as u32 + 4 * weight + 12;
    let table = y_power_x_coefficients::<Rational>(max_power, n_limit + 1);
    let mut evals: BTreeMap<Partition, Rational> = BTreeMap::new();
    let mut n = m as u32;
    loop {
        for alpha in Partition::with_length(n, m) {
            let v = f_value(&psi.poly, &alpha, &table);
            evals.insert(alpha, v);
        }
        if evals.len() >= unknowns {
            if let Ok(fit) = fit_sym_e_poly(&evals, m, weight) {
                let held: Vec<Partition> = Partition::with_length(n + 1, m);
                for alpha in &held {
                    let v = f_value(&psi.poly, alpha, &table);
                    let predicted = crate::algebra::symmetric::evaluate_e_poly(
                        &fit,
                        &alpha.parts().iter().map(|&p| Rational::from_integer(p.into())).collect::<Vec<_>>(),
                    );
                    if v != predicted {
                        return Err(HurwitzError::EFit(format!(
                            "held-out partition {alpha} disagrees with the degree-{weight} fit"
                        )));
                    }
                }
                return Ok((fit, evals.len() + held.len()));
            }
        }
        n += 1;
        if n > n_limit {
            return Err(HurwitzError::EFit(format!(
                "no full-rank system up to n = {n_limit} for m = {m}, weight {weight}"
            )));
        }
    }
}

/// Both routes; they must agree whenever the operator decomposition has no
/// residual.
pub fn extract_f(psi: &PsiRep) -> Result<Extraction> {
    let (by_basis, w_residual) = extract_by_basis(psi)?;
    let (by_values, points) = extract_by_values(psi)?;
    if w_residual.is_empty() && by_basis != by_values {
        return Err(HurwitzError::RouteDisagreement {
            m: psi.m,
            g: psi.g,
            detail: format!("basis route {by_basis}, value route {by_values}"),
        });
    }
    let degree = by_values.weighted_degree();
    Ok(Extraction { m: psi.m, g: psi.g, f_e: by_values, w_residual, points, degree })
}
