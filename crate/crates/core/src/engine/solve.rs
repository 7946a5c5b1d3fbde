//! Solving `(sum_i w_i d/dw_i + m + 2g - 2) Psi = K`.

use num_bigint::BigInt;

use crate::algebra::operators::apply_euler_wdw;
use crate::algebra::scalar::Rational;
use crate::algebra::series::{expand_y_to_w_capped, fit_y_poly, Caps, DegreeBound};
use crate::error::{HurwitzError, Result};
use crate::YPoly;

use super::psi::{PsiRep, RhsRep};

/// Extra degree-bound attempts, each two above the previous.
pub const BOUND_RETRIES: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub bound: u32,
    pub attempts: u32,
}

/// `(sum_i w_i d/dw_i + c) p`.
pub fn pde_operator(p: &YPoly, c: i64) -> YPoly {
    let mut out = apply_euler_wdw(p);
    out.add_scaled(p, &Rational::from_integer(BigInt::from(c)));
    out
}

/// Each `w^beta` of `K` is divided by `|beta| + c`, which is the integral
/// `int_0^1 K(t w) t^(c-1) dt`; the result is fitted back to y and the PDE
/// is checked exactly.
///
/// The operator raises the top total degree by exactly one (its top part
/// `sum_i y_i^2 d/dy_i` has no kernel in positive degree), so the total
/// degree of `Psi` is `deg K - 1`. The per-variable bound starts at
/// `2m + 6g - 5` and is widened on failure.
pub fn solve_pde(k: &RhsRep) -> Result<(PsiRep, SolveReport)> {
    let (m, g) = (k.m, k.g);
    let c = (m + 2 * g) as i64 - 2;
    if c < 1 {
        return Err(HurwitzError::InvalidInput(format!(
            "m + 2g - 2 must be positive, got {c}"
        )));
    }
    let total = k.poly.total_degree().unwrap_or(1).saturating_sub(1);
    let start = PsiRep::degree_bound(m, g);
    let mut last = start;
    for attempt in 0..=BOUND_RETRIES {
        let per_var = (start + 2 * attempt).min(total);
        last = per_var;
        let caps = Caps { per_var: per_var + 2, total: total + 2 };
        let jet = expand_y_to_w_capped(&k.poly, caps)?;
        let scaled = jet.scale_by_degree(|d| Rational::new(BigInt::from(1), BigInt::from(d as i64 + c)));
        let poly = match fit_y_poly(&scaled, m, DegreeBound::Box { per_var, total }) {
            Ok(p) => p,
            Err(HurwitzError::FitInconsistent { .. }) => continue,
            Err(e) => return Err(e),
        };
        let residual = &pde_operator(&poly, c) - &k.poly;
        if !residual.is_zero() {
            return Err(HurwitzError::Residual { m, g, terms: residual.len() });
        }
        return Ok((PsiRep::new(m, g, poly), SolveReport { bound: per_var, attempts: attempt + 1 }));
    }
    Err(HurwitzError::DegreeAnomaly { m, g, last_bound: last })
}
