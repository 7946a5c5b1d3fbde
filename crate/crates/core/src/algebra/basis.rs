//! Rewriting y-polynomials in terms of the operators `(x d/dx)^j` and
//! `w d/dw (x d/dx)^{j-1}` applied to `V_m = prod_i (y_i - 1)`.
//!
//! Per variable, `B_j = (x d/dx)^j (y - 1)` has degree `2j + 1` and
//! `W_j = w d/dw (x d/dx)^{j-1} (y - 1)` has degree `2j`, each with a
//! nonzero leading coefficient. Together with `1` they form a triangular
//! basis of the univariate polynomials, and the tensor products of these
//! give a basis of the multivariate ring.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::monomial::{Exponent, Monomial};
use super::operators::{apply_wdw, apply_xdx};
use super::poly::{SparsePoly, VarKind};
use super::scalar::Coeff;
use super::series::{substitute_each_variable, Caps, Substitution};
use crate::error::{HurwitzError, Result};

/// Univariate basis element with triangular label `d`: `d = 0` is `1`,
/// odd `d = 2j + 1` is `B_j`, even `d = 2j >= 2` is `W_j`.
pub fn basis_element<C: Coeff>(d: u32) -> SparsePoly<C> {
    let one = SparsePoly::one(VarKind::Y, 1);
    if d == 0 {
        return one;
    }
    let mut p = &SparsePoly::var(VarKind::Y, 1, 0) - &one;
    let j = d / 2;
    let xdx_count = if d % 2 == 1 { j } else { j - 1 };
    for _ in 0..xdx_count {
        p = apply_xdx(&p, 0);
    }
    if d % 2 == 0 {
        p = apply_wdw(&p, 0);
    }
    p
}

/// Rows `y^k = sum_{d <= k} rows[k][d] U_d`.
fn inverse_rows<C: Coeff>(max_k: u32) -> Vec<Vec<C>> {
    let mut rows: Vec<Vec<C>> = Vec::with_capacity(max_k as usize + 1);
    for k in 0..=max_k {
        let u = basis_element::<C>(k);
        let lead = u.coeff_of(&[k as Exponent]);
        // y^k = (U_k - sum_{d<k} [y^d]U_k y^d) / lead
        let mut row = vec![C::zero(); k as usize + 1];
        row[k as usize] = C::one();
        for d in 0..k {
            let c = u.coeff_of(&[d as Exponent]);
            if c.is_zero() {
                continue;
            }
            for (l, a) in rows[d as usize].iter().enumerate() {
                row[l] = row[l].sub(&c.mul(a));
            }
        }
        let inv = C::one().div(&lead);
        rows.push(row.into_iter().map(|c| c.mul(&inv)).collect());
    }
    rows
}

/// A term carrying at least one `w d/dw` factor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualTerm<C> {
    /// Variables whose factor is `w d/dw (x d/dx)^{j-1}`.
    pub w_vars: Vec<usize>,
    /// Per-variable `j`; for the other variables the factor is `(x d/dx)^j`.
    pub indices: Vec<Exponent>,
    pub coeff: C,
}

/// `p = sum_j b_terms[j] prod_i (x_i d/dx_i)^{j_i} V_m + residual`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorBasisDecomp<C> {
    pub arity: usize,
    pub b_terms: BTreeMap<Monomial, C>,
    pub w_residual: Vec<ResidualTerm<C>>,
}

impl<C: Coeff> OperatorBasisDecomp<C> {
    /// The operator polynomial `f(t_1, ..., t_m)` from the pure `x d/dx` part.
    pub fn operator_poly(&self) -> SparsePoly<C> {
        SparsePoly::from_terms(
            VarKind::X,
            self.arity,
            self.b_terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Evaluates the decomposition back to a y-polynomial.
    pub fn reconstruct(&self) -> SparsePoly<C> {
        let mut cache: BTreeMap<u32, SparsePoly<C>> = BTreeMap::new();
        let mut element = |d: u32| -> SparsePoly<C> {
            cache.entry(d).or_insert_with(|| basis_element(d)).clone()
        };
        let mut out = SparsePoly::zero(VarKind::Y, self.arity);
        let labelled = self
            .b_terms
            .iter()
            .map(|(m, c)| (m.exponents().iter().map(|&j| 2 * j as u32 + 1).collect::<Vec<_>>(), c))
            .chain(self.w_residual.iter().map(|t| {
                let labels = t
                    .indices
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| if t.w_vars.contains(&i) { 2 * j as u32 } else { 2 * j as u32 + 1 })
                    .collect::<Vec<_>>();
                (labels, &t.coeff)
            }));
        for (labels, c) in labelled {
            let mut term = SparsePoly::constant(VarKind::Y, self.arity, c.clone());
            for (i, &d) in labels.iter().enumerate() {
                term = term.mul_poly(&element(d).embed(&[i], self.arity));
            }
            out.add_assign_poly(&term);
        }
        out
    }
}

/// Decomposes `p` (which must vanish at each `y_i = 1`) in the operator
/// basis.
pub fn xdx_basis_convert<C: Coeff>(p: &SparsePoly<C>, m: usize) -> Result<OperatorBasisDecomp<C>> {
    assert_eq!(p.kind(), VarKind::Y);
    assert_eq!(p.arity(), m);
    let max_k = p.max_degree_per_var().unwrap_or(0) as u32;
    let rows = inverse_rows::<C>(max_k);
    let sub = Substitution::new(rows);
    let labelled = substitute_each_variable(p, VarKind::Y, &sub, Caps { per_var: u32::MAX, total: u32::MAX });
    let mut b_terms = BTreeMap::new();
    let mut w_residual = Vec::new();
    for (labels, c) in labelled.terms() {
        if let Some(var) = labels.exponents().iter().position(|&d| d == 0) {
            return Err(HurwitzError::NotVanishing { var: var + 1 });
        }
        let indices: Vec<Exponent> = labels.exponents().iter().map(|&d| d / 2).collect();
        let w_vars: Vec<usize> =
            labels.exponents().iter().enumerate().filter(|(_, &d)| d % 2 == 0).map(|(i, _)| i).collect();
        if w_vars.is_empty() {
            b_terms.insert(Monomial::from_slice(&indices), c.clone());
        } else {
            w_residual.push(ResidualTerm { w_vars, indices, coeff: c.clone() });
        }
    }
    Ok(OperatorBasisDecomp { arity: m, b_terms, w_residual })
}
