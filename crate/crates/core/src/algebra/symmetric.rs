//! Elementary symmetric functions: basis change, evaluation and
//! interpolation.

use std::collections::BTreeMap;

use super::monomial::{Exponent, Monomial};
use super::poly::{SparsePoly, VarKind};
use super::scalar::Coeff;
use crate::error::{HurwitzError, Result};
use crate::partition::Partition;

/// `e_k(t_1, ..., t_m)` as an X-polynomial.
pub fn elementary_poly<C: Coeff>(k: usize, m: usize) -> SparsePoly<C> {
    let mut out = SparsePoly::zero(VarKind::X, m);
    fn rec<C: Coeff>(start: usize, left: usize, m: usize, cur: &mut Vec<Exponent>, out: &mut SparsePoly<C>) {
        if left == 0 {
            out.add_term(Monomial::from_slice(cur), C::one());
            return;
        }
        for i in start..m {
            if m - i < left {
                break;
            }
            cur[i] = 1;
            rec(i + 1, left - 1, m, cur, out);
            cur[i] = 0;
        }
    }
    let mut cur = vec![0; m];
    rec(0, k, m, &mut cur, &mut out);
    out
}

/// Values `e_1(point), ..., e_m(point)` with `m = point.len()`.
pub fn elementary_values<C: Coeff>(point: &[C]) -> Vec<C> {
    // prod (1 + t_i z) coefficients
    let m = point.len();
    let mut e = vec![C::zero(); m + 1];
    e[0] = C::one();
    for t in point {
        for k in (1..=m).rev() {
            let add = e[k - 1].mul(t);
            e[k].add_assign(&add);
        }
    }
    e.into_iter().skip(1).collect()
}

/// Evaluates a polynomial in `e_1..e_m` at a point of `m` coordinates.
pub fn evaluate_e_poly<C: Coeff>(p: &SparsePoly<C>, point: &[C]) -> C {
    assert_eq!(p.kind(), VarKind::E);
    assert_eq!(p.arity(), point.len());
    p.evaluate(&elementary_values(point))
}

/// Expands a polynomial in `e_1..e_m` into the X-variables.
pub fn elementary_to_symmetric<C: Coeff>(p: &SparsePoly<C>) -> SparsePoly<C> {
    let m = p.arity();
    let es: Vec<SparsePoly<C>> = (1..=m).map(|k| elementary_poly(k, m)).collect();
    let mut out = SparsePoly::zero(VarKind::X, m);
    for (mono, c) in p.terms() {
        let mut term = SparsePoly::constant(VarKind::X, m, c.clone());
        for (k, &e) in mono.exponents().iter().enumerate() {
            for _ in 0..e {
                term = term.mul_poly(&es[k]);
            }
        }
        out.add_assign_poly(&term);
    }
    out
}

/// Rewrites a symmetric X-polynomial in `e_1..e_m`.
pub fn symmetric_to_elementary<C: Coeff>(p: &SparsePoly<C>) -> Result<SparsePoly<C>> {
    let m = p.arity();
    let es: Vec<SparsePoly<C>> = (1..=m).map(|k| elementary_poly(k, m)).collect();
    let mut rest = p.clone().with_kind(VarKind::X);
    let mut out = SparsePoly::zero(VarKind::E, m);
    // Peel off the lex-leading monomial, which is partition-shaped in a
    // symmetric polynomial: t^lambda is the leading term of
    // prod_k e_k^{lambda_k - lambda_{k+1}}.
    while let Some((lead, c)) = rest
        .terms()
        .max_by(|a, b| a.0.exponents().cmp(b.0.exponents()))
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        if !lead.is_partition_shaped() {
            return Err(HurwitzError::NotSymmetric(format!("leading monomial {lead:?}")));
        }
        let lambda = lead.exponents();
        let gamma: Vec<Exponent> =
            (0..m).map(|k| lambda[k] - if k + 1 < m { lambda[k + 1] } else { 0 }).collect();
        let mut prod = SparsePoly::constant(VarKind::X, m, c.clone());
        for (k, &g) in gamma.iter().enumerate() {
            for _ in 0..g {
                prod = prod.mul_poly(&es[k]);
            }
        }
        rest = &rest - &prod;
        out.add_term(Monomial::from_slice(&gamma), c);
    }
    Ok(out)
}

/// Exponent vectors over `e_1..e_m` of weighted degree at most `max_weight`.
pub fn e_monomials(m: usize, max_weight: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0 as Exponent; m];
    fn rec(k: usize, left: u32, cur: &mut Vec<Exponent>, out: &mut Vec<Monomial>) {
        if k == cur.len() {
            out.push(Monomial::from_slice(cur));
            return;
        }
        let w = k as u32 + 1;
        for e in 0..=left / w {
            cur[k] = e as Exponent;
            rec(k + 1, left - e * w, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, max_weight, &mut cur, &mut out);
    out.sort();
    out
}

/// Solves `A x = b` exactly; `A` is given row by row. Errors if the
/// system is inconsistent or does not determine `x`.
pub fn solve_exact<C: Coeff>(mut a: Vec<Vec<C>>, mut b: Vec<C>) -> Result<Vec<C>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            return Err(HurwitzError::EFit(format!("evaluation points do not determine unknown {col}")));
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = C::one().div(&a[r][col]);
        for j in col..cols {
            a[r][j] = a[r][j].mul(&inv);
        }
        b[r] = b[r].mul(&inv);
        for i in 0..rows {
            if i == r || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in col..cols {
                let d = f.mul(&a[r][j]);
                a[i][j] = a[i][j].sub(&d);
            }
            let d = f.mul(&b[r]);
            b[i] = b[i].sub(&d);
        }
        pivot_cols.push(col);
        r += 1;
    }
    if let Some(i) = (r..rows).find(|&i| !b[i].is_zero()) {
        return Err(HurwitzError::EFit(format!("evaluation {i} is inconsistent with the others")));
    }
    Ok(b.into_iter().take(cols).collect())
}

/// Interpolates a polynomial in `e_1..e_m` of weighted degree at most
/// `total_degree` through the given evaluations at partitions with `m`
/// parts. Every evaluation, including any beyond the number of unknowns,
/// must be reproduced.
pub fn fit_sym_e_poly<C: Coeff>(
    evals: &BTreeMap<Partition, C>,
    m: usize,
    total_degree: u32,
) -> Result<SparsePoly<C>> {
    let monos = e_monomials(m, total_degree);
    if evals.len() < monos.len() {
        return Err(HurwitzError::EFit(format!(
            "{} evaluations for {} unknowns",
            evals.len(),
            monos.len()
        )));
    }
    let mut matrix = Vec::with_capacity(evals.len());
    let mut rhs = Vec::with_capacity(evals.len());
    for (alpha, value) in evals {
        if alpha.len() != m {
            return Err(HurwitzError::EFit(format!("{alpha} does not have {m} parts")));
        }
        let point: Vec<C> = alpha.parts().iter().map(|&p| C::from_i64(p as i64)).collect();
        let e = elementary_values(&point);
        let row = monos
            .iter()
            .map(|mono| {
                let mut v = C::one();
                for (k, &g) in mono.exponents().iter().enumerate() {
                    for _ in 0..g {
                        v = v.mul(&e[k]);
                    }
                }
                v
            })
            .collect();
        matrix.push(row);
        rhs.push(value.clone());
    }
    let sol = solve_exact(matrix, rhs)?;
    Ok(SparsePoly::from_terms(VarKind::E, m, monos.into_iter().zip(sol)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, Rational};

    fn e(m: usize, exps: &[Exponent], c: Rational) -> SparsePoly<Rational> {
        assert_eq!(exps.len(), m);
        SparsePoly::monomial(VarKind::E, Monomial::from_slice(exps), c)
    }

    #[test]
    fn elementary_values_match_polys() {
        let pt = vec![rat(2, 1), rat(3, 1), rat(5, 1)];
        let vals = elementary_values(&pt);
        assert_eq!(vals, vec![rat(10, 1), rat(31, 1), rat(30, 1)]);
        for k in 1..=3 {
            assert_eq!(elementary_poly::<Rational>(k, 3).evaluate(&pt), vals[k - 1]);
        }
    }

    #[test]
    fn round_trip_through_x_variables() {
        // (e1^2 - e1 - e2)/24 with m = 2
        let mut f = e(2, &[2, 0], rat(1, 24));
        f.add_assign_poly(&e(2, &[1, 0], rat(-1, 24)));
        f.add_assign_poly(&e(2, &[0, 1], rat(-1, 24)));
        let x = elementary_to_symmetric(&f);
        assert!(x.is_symmetric());
        assert_eq!(symmetric_to_elementary(&x).unwrap(), f);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let p = SparsePoly::<Rational>::var(VarKind::X, 2, 1);
        assert!(matches!(symmetric_to_elementary(&p), Err(HurwitzError::NotSymmetric(_))));
    }

    #[test]
    fn fit_genus_one_two_parts() {
        // f_2^(1)((n-r, r)) = (n^2 - (r+1) n + r^2)/24
        let mut evals = BTreeMap::new();
        for n in 2..=7u32 {
            for r in 1..=n / 2 {
                let (n_, r_) = (n as i64, r as i64);
                let alpha = Partition::new(vec![n - r, r]).unwrap();
                evals.insert(alpha, rat(n_ * n_ - (r_ + 1) * n_ + r_ * r_, 24));
            }
        }
        let f = fit_sym_e_poly(&evals, 2, 2).unwrap();
        assert_eq!(f.to_string(), "1/24*e1^2 - 1/24*e1 - 1/24*e2");
        assert_eq!(f.coeff_of(&[1, 0]), rat(-1, 24));
    }

    #[test]
    fn fit_constant_and_genus_zero() {
        let mut evals = BTreeMap::new();
        for alpha in (3..=7).flat_map(|n| Partition::with_length(n, 3)) {
            evals.insert(alpha, rat(1, 1));
        }
        let f = fit_sym_e_poly(&evals, 3, 0).unwrap();
        assert_eq!(f, SparsePoly::one(VarKind::E, 3));
    }

    #[test]
    fn fit_detects_inconsistency() {
        let mut evals = BTreeMap::new();
        for n in 1..=6u32 {
            evals.insert(Partition::new(vec![n]).unwrap(), rat((n * n) as i64, 1));
        }
        assert!(fit_sym_e_poly(&evals, 1, 1).is_err());
        assert!(fit_sym_e_poly(&evals, 1, 2).is_ok());
    }
}
