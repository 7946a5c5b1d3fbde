//! Differential operators and exact division in the y-variables.
//!
//! With `y = (1 - w)^{-1}`: `x d/dx = (y - 1) y^2 d/dy` and
//! `w d/dw = (y - 1) y d/dy`.

use super::monomial::{Exponent, Monomial};
use super::poly::{SparsePoly, VarKind};
use super::scalar::Coeff;
use crate::error::{HurwitzError, Result};

/// `x_i d/dx_i`: `y_i^k -> k (y_i^{k+2} - y_i^{k+1})`.
pub fn apply_xdx<C: Coeff>(p: &SparsePoly<C>, i: usize) -> SparsePoly<C> {
    raise_by(p, i, 2)
}

/// `w_i d/dw_i`: `y_i^k -> k (y_i^{k+1} - y_i^k)`.
pub fn apply_wdw<C: Coeff>(p: &SparsePoly<C>, i: usize) -> SparsePoly<C> {
    raise_by(p, i, 1)
}

/// `y^k -> k (y^{k+s} - y^{k+s-1})`.
fn raise_by<C: Coeff>(p: &SparsePoly<C>, i: usize, shift: Exponent) -> SparsePoly<C> {
    debug_assert_eq!(p.kind(), VarKind::Y);
    let mut out = SparsePoly::zero(p.kind(), p.arity());
    for (m, c) in p.terms() {
        let k = m.get(i);
        if k == 0 {
            continue;
        }
        let kc = c.mul(&C::from_i64(k as i64));
        let mut hi = m.clone();
        hi.set(i, k + shift);
        let mut lo = m.clone();
        lo.set(i, k + shift - 1);
        out.add_term(hi, kc.clone());
        out.add_term(lo, kc.neg());
    }
    out
}

/// `sum_i x_i d/dx_i`.
pub fn apply_euler_xdx<C: Coeff>(p: &SparsePoly<C>) -> SparsePoly<C> {
    let mut out = SparsePoly::zero(p.kind(), p.arity());
    for i in 0..p.arity() {
        out.add_assign_poly(&apply_xdx(p, i));
    }
    out
}

/// `sum_i w_i d/dw_i`.
pub fn apply_euler_wdw<C: Coeff>(p: &SparsePoly<C>) -> SparsePoly<C> {
    let mut out = SparsePoly::zero(p.kind(), p.arity());
    for i in 0..p.arity() {
        out.add_assign_poly(&apply_wdw(p, i));
    }
    out
}

/// Exact quotient of `p` by `(y_i - y_j)`.
pub fn div_by_difference<C: Coeff>(p: &SparsePoly<C>, i: usize, j: usize) -> Result<SparsePoly<C>> {
    assert_ne!(i, j);
    let arity = p.arity();
    let top = match p.degree_in(i) {
        None => return Ok(p.clone()),
        Some(d) => d as usize,
    };
    // Group by the power of y_i; coefficients are polynomials free of y_i.
    let mut slices: Vec<SparsePoly<C>> = vec![SparsePoly::zero(p.kind(), arity); top + 1];
    for (m, c) in p.terms() {
        let k = m.get(i) as usize;
        let mut mm = m.clone();
        mm.set(i, 0);
        slices[k].add_term(mm, c.clone());
    }
    // Synthetic division at the root y_i = y_j, from the top down.
    let yj = Monomial::var(arity, j, 1);
    let mut quotient = SparsePoly::zero(p.kind(), arity);
    let mut carry = SparsePoly::zero(p.kind(), arity);
    for k in (1..=top).rev() {
        let mut q = slices[k].clone();
        q.add_assign_poly(&carry.mul_monomial(&yj, &C::one()));
        for (m, c) in q.terms() {
            let mut mm = m.clone();
            mm.set(i, (k - 1) as Exponent);
            quotient.add_term(mm, c.clone());
        }
        carry = q;
    }
    let mut remainder = slices[0].clone();
    remainder.add_assign_poly(&carry.mul_monomial(&yj, &C::one()));
    if !remainder.is_zero() {
        return Err(HurwitzError::NotDivisible { i, j, terms: remainder.len() });
    }
    Ok(quotient)
}

/// Division by `(w_i - w_j)`, using `w_i - w_j = (y_i - y_j)/(y_i y_j)`:
/// returns `q` with `q (y_i - y_j) = p y_i y_j`.
pub fn exact_divide_diff<C: Coeff>(p: &SparsePoly<C>, i: usize, j: usize) -> Result<SparsePoly<C>> {
    let mut both = Monomial::one(p.arity());
    both.set(i, 1);
    both.set(j, 1);
    div_by_difference(&p.mul_monomial(&both, &C::one()), i, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, Rational};

    type P = SparsePoly<Rational>;

    fn y(arity: usize, i: usize) -> P {
        P::var(VarKind::Y, arity, i)
    }

    fn one(arity: usize) -> P {
        P::one(VarKind::Y, arity)
    }

    #[test]
    fn xdx_examples() {
        let v = &y(1, 0) - &one(1);
        assert_eq!(apply_xdx(&v, 0).to_string(), "y1^3 - y1^2");
        assert!(apply_xdx(&one(1), 0).is_zero());
        assert_eq!(apply_xdx(&apply_xdx(&v, 0), 0).to_string(), "3*y1^5 - 5*y1^4 + 2*y1^3");
    }

    #[test]
    fn wdw_examples() {
        let v = &y(1, 0) - &one(1);
        assert_eq!(apply_wdw(&v, 0).to_string(), "y1^2 - y1");
        assert!(apply_wdw(&one(1), 0).is_zero());
        assert_eq!(apply_wdw(&y(1, 0).pow(2), 0), (&y(1, 0).pow(3) - &y(1, 0).pow(2)).scale(&rat(2, 1)));
    }

    #[test]
    fn divide_examples() {
        let p = &y(2, 0) - &y(2, 1);
        assert_eq!(exact_divide_diff(&p, 0, 1).unwrap(), &y(2, 0) * &y(2, 1));
        let p = &y(2, 0).pow(2) - &y(2, 1).pow(2);
        let expected = &(&y(2, 0) * &y(2, 1)) * &(&y(2, 0) + &y(2, 1));
        assert_eq!(exact_divide_diff(&p, 0, 1).unwrap(), expected);
        assert!(exact_divide_diff(&P::zero(VarKind::Y, 2), 0, 1).unwrap().is_zero());
    }

    #[test]
    fn divide_rejects_remainder() {
        let p = &y(2, 0) + &y(2, 1);
        assert!(matches!(exact_divide_diff(&p, 0, 1), Err(HurwitzError::NotDivisible { .. })));
    }
}
