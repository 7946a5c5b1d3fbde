//! The series `Psi_m^(g)` as y-polynomials, and the genus-zero inputs.

use num_bigint::BigInt;

use crate::algebra::operators::{apply_euler_xdx, div_by_difference};
use crate::algebra::poly::{SparsePoly, VarKind};
use crate::algebra::scalar::{factorial, Rational};
use crate::algebra::series::{
    compose_with_inverse_tree, fit_y_poly, tree_series, Caps, DegreeBound, TruncSeries,
};
use crate::algebra::Monomial;
use crate::error::{HurwitzError, Result};
use crate::{RSeries, YPoly};

/// `Psi_m^(g)` in `y_i = (1 - w_i)^{-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiRep {
    pub m: usize,
    pub g: usize,
    pub poly: YPoly,
    /// Attained total y-degree.
    pub degree: u32,
    /// Attained degree in a single `y_i`.
    pub per_var_degree: u32,
}

impl PsiRep {
    pub fn new(m: usize, g: usize, poly: YPoly) -> Self {
        let degree = poly.total_degree().unwrap_or(0);
        let per_var_degree = poly.max_degree_per_var().unwrap_or(0) as u32;
        PsiRep { m, g, poly, degree, per_var_degree }
    }

    /// `2m + 6g - 5`. It bounds the degree in each `y_i` separately; the
    /// total degree reaches `3m + 6g - 6`.
    pub fn degree_bound(m: usize, g: usize) -> u32 {
        ((2 * m + 6 * g) as u32).saturating_sub(5)
    }

    /// `3m + 6g - 6`, the total degree of `f(D_1, ..., D_m) V_m` when `f`
    /// has degree `m + 3g - 3`.
    pub fn total_degree_estimate(m: usize, g: usize) -> u32 {
        ((3 * m + 6 * g) as u32).saturating_sub(6)
    }

    pub fn vanishes_at_one(&self) -> Option<usize> {
        let one = Rational::from_integer(BigInt::from(1));
        (0..self.m).find(|&i| !self.poly.substitute_constant(i, &one).is_zero())
    }

    /// Symmetry, vanishing at each `y_i = 1` and the per-variable degree
    /// bound.
    pub fn check_invariants(&self) -> Result<()> {
        if !self.poly.is_symmetric() {
            return Err(HurwitzError::NotSymmetric(format!("Psi_{}^({})", self.m, self.g)));
        }
        if let Some(i) = self.vanishes_at_one() {
            return Err(HurwitzError::NotVanishing { var: i + 1 });
        }
        if self.m >= 1 && self.per_var_degree > Self::degree_bound(self.m, self.g) {
            return Err(HurwitzError::DegreeAnomaly {
                m: self.m,
                g: self.g,
                last_bound: Self::degree_bound(self.m, self.g),
            });
        }
        Ok(())
    }
}

/// Right-hand side `K_m^(g)` of the PDE.
#[derive(Clone, Debug, PartialEq)]
pub struct RhsRep {
    pub m: usize,
    pub g: usize,
    pub poly: YPoly,
}

/// `V_m = prod_i (y_i - 1)`.
pub fn v_m(m: usize) -> YPoly {
    let one = YPoly::one(VarKind::Y, m);
    (0..m).fold(one.clone(), |acc, i| &acc * &(&YPoly::var(VarKind::Y, m, i) - &one))
}

/// `Psi_m^(0) = (sum_i x_i d/dx_i)^(m-3) V_m`.
pub fn psi0_base(m: usize) -> Result<PsiRep> {
    if m < 3 {
        return Err(HurwitzError::InvalidInput(format!(
            "Psi_{m}^(0) is not a polynomial in the y-variables; need m >= 3"
        )));
    }
    let mut p = v_m(m);
    for _ in 3..m {
        p = apply_euler_xdx(&p);
    }
    Ok(PsiRep::new(m, 0, p))
}

/// `x_1 d/dx_1 Psi_1^(0) = w_1 = 1 - 1/y_1`, as a polynomial in `w_1`.
pub fn xdx_psi01() -> SparsePoly<Rational> {
    SparsePoly::var(VarKind::W, 1, 0)
}

/// `x_1 d/dx_1 Psi_2^(0) = w_2 / ((1 - w_1)(w_1 - w_2)) - x_2 / (x_1 - x_2)`.
///
/// The w-part equals `(y_2 - 1) y_1^2 / (y_1 - y_2)` and is kept as that
/// numerator; the x-part cancels against the join term in the PDE and is
/// only materialised through the x-jet.
#[derive(Clone, Debug)]
pub struct XdxPsi02 {
    /// Numerator over `y_1 - y_2`.
    pub w_part: YPoly,
    /// Bivariate x-series of the whole derivative, total degree `<= order`.
    pub x_jet: RSeries,
}

pub fn xdx_psi02(order: u32) -> Result<XdxPsi02> {
    let one = YPoly::one(VarKind::Y, 2);
    let y1 = YPoly::var(VarKind::Y, 2, 0);
    let y2 = YPoly::var(VarKind::Y, 2, 1);
    let w_part = &(&y2 - &one) * &(&y1 * &y1);

    // numerator of the derivative over (x_1 - x_2), one degree higher
    let top = order + 1;
    let caps = Caps::total(top).meet(&Caps::per_var(top, 2));
    let tree = tree_series::<Rational>(top + 1);
    let univariate = tree.base();
    let w1 = TruncSeries::new(univariate.embed(&[0], 2), caps);
    let w2 = TruncSeries::new(univariate.embed(&[1], 2), caps);
    let one_s = TruncSeries::new(SparsePoly::one(VarKind::X, 2), caps);
    let y1_s = one_s.sub(&w1).inverse()?;
    // (w_1 - w_2)/(x_1 - x_2) = sum_n t_n h_(n-1)(x_1, x_2)
    let mut q = SparsePoly::zero(VarKind::X, 2);
    for n in 1..=top + 1 {
        let t = univariate.coeff_of(&[n as u16]);
        for a in 0..n as u16 {
            q.add_term(Monomial::from_slice(&[a, n as u16 - 1 - a]), t.clone());
        }
    }
    let q = TruncSeries::new(q, caps);
    let x2 = TruncSeries::new(SparsePoly::var(VarKind::X, 2, 1), caps);
    let numer = w2.mul(&y1_s).mul(&q.inverse()?).sub(&x2);
    let quotient = div_by_difference(numer.base(), 0, 1)?;
    let x_jet = TruncSeries::new(quotient, Caps::total(order).meet(&Caps::per_var(order, 2)));
    Ok(XdxPsi02 { w_part, x_jet })
}

/// `K_1^(1) = 1/2 (x_1 d/dx_1 x_2 d/dx_2 Psi_2^(0))|_(x_2 = x_1)`, computed
/// from the x-jet and fitted back to a y-polynomial.
pub fn k11() -> Result<YPoly> {
    const ORDER: u32 = 10;
    let d = xdx_psi02(ORDER)?;
    let mut diag = SparsePoly::zero(VarKind::X, 1);
    let half = Rational::new(1.into(), 2.into());
    for (mono, c) in d.x_jet.base().terms() {
        let b = mono.get(1);
        if b == 0 {
            continue;
        }
        let coeff = c * Rational::from_integer(BigInt::from(b)) * &half;
        diag.add_term(Monomial::from_slice(&[mono.get(0) + b]), coeff);
    }
    let jet = compose_with_inverse_tree(&TruncSeries::new(diag, Caps::per_var(ORDER, 1)));
    fit_y_poly(&jet, 1, DegreeBound::Total(4))
}

/// `[x_1^a x_2^b] x_1 d/dx_1 Psi_2^(0) = a/(a+b) a^a b^b / (a! b!)`.
pub fn psi02_xdx_coefficient(a: u32, b: u32) -> Rational {
    if a == 0 || b == 0 {
        return Rational::from_integer(0.into());
    }
    let pw = |x: u32| num_traits::pow(BigInt::from(x), x as usize);
    Rational::new(
        BigInt::from(a) * pw(a) * pw(b),
        BigInt::from(a + b) * factorial(a as u64) * factorial(b as u64),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::operators::apply_xdx;
    use crate::algebra::scalar::rat;

    #[test]
    fn base_cases() {
        assert_eq!(psi0_base(3).unwrap().poly, v_m(3));
        let v4 = v_m(4);
        let mut expected = YPoly::zero(VarKind::Y, 4);
        for i in 0..4 {
            expected.add_assign_poly(&apply_xdx(&v4, i));
        }
        assert_eq!(psi0_base(4).unwrap().poly, expected);
        assert!(psi0_base(2).is_err());
        for m in 3..=6 {
            psi0_base(m).unwrap().check_invariants().unwrap();
        }
    }

    #[test]
    fn psi01_derivative() {
        assert_eq!(xdx_psi01().to_string(), "w1");
        // x d/dx w = w/(1-w) = y - 1, and once more gives w/(1-w)^3
        let ym1 = &YPoly::var(VarKind::Y, 1, 0) - &YPoly::one(VarKind::Y, 1);
        assert_eq!(apply_xdx(&ym1, 0).to_string(), "y1^3 - y1^2");
    }

    #[test]
    fn psi02_series_matches_coefficients() {
        let d = xdx_psi02(8).unwrap();
        for a in 0..=8u16 {
            for b in 0..=(8 - a) {
                let got = d.x_jet.coeff_of(&[a, b]);
                assert_eq!(got, psi02_xdx_coefficient(a as u32, b as u32), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn k11_closed_form() {
        let k = k11().unwrap();
        let expected = YPoly::univariate(
            VarKind::Y,
            &[rat(1, 24), rat(0, 1), rat(0, 1), rat(-4, 24), rat(3, 24)],
        );
        assert_eq!(k, expected);
    }
}
