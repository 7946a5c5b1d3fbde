//! Sparse multivariate polynomials over a [`Coeff`] field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::monomial::{Exponent, Monomial};
use super::scalar::Coeff;

/// Which family of indeterminates a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarKind {
    /// `y_i = (1 - w_i)^{-1}`
    Y,
    /// tree-function variables `w_i`
    W,
    /// the original series variables `x_i`, also used for the arguments of
    /// the operator polynomial `f(x_1 d/dx_1, ...)`
    X,
    /// elementary symmetric functions `e_1, ..., e_m`
    E,
}

impl VarKind {
    pub fn symbol(self) -> &'static str {
        match self {
            VarKind::Y => "y",
            VarKind::W => "w",
            VarKind::X => "x",
            VarKind::E => "e",
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            VarKind::Y => "Y",
            VarKind::W => "W",
            VarKind::X => "X",
            VarKind::E => "E",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "Y" => Some(VarKind::Y),
            "W" => Some(VarKind::W),
            "X" => Some(VarKind::X),
            "E" => Some(VarKind::E),
            _ => None,
        }
    }
}

/// A polynomial with no stored zero coefficients. Terms iterate in
/// ascending graded-lex order.
#[derive(Clone, PartialEq)]
pub struct SparsePoly<C> {
    kind: VarKind,
    arity: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> SparsePoly<C> {
    pub fn zero(kind: VarKind, arity: usize) -> Self {
        SparsePoly { kind, arity, terms: BTreeMap::new() }
    }

    pub fn constant(kind: VarKind, arity: usize, c: C) -> Self {
        let mut p = Self::zero(kind, arity);
        p.add_term(Monomial::one(arity), c);
        p
    }

    pub fn one(kind: VarKind, arity: usize) -> Self {
        Self::constant(kind, arity, C::one())
    }

    /// The variable `i` (0-based).
    pub fn var(kind: VarKind, arity: usize, i: usize) -> Self {
        Self::monomial(kind, Monomial::var(arity, i, 1), C::one())
    }

    pub fn monomial(kind: VarKind, mono: Monomial, c: C) -> Self {
        let mut p = Self::zero(kind, mono.arity());
        p.add_term(mono, c);
        p
    }

    pub fn from_terms(
        kind: VarKind,
        arity: usize,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Self {
        let mut p = Self::zero(kind, arity);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Univariate polynomial from dense coefficients, lowest degree first.
    pub fn univariate(kind: VarKind, coeffs: &[C]) -> Self {
        Self::from_terms(
            kind,
            1,
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var(1, 0, k as Exponent), c.clone())),
        )
    }

    pub fn kind(&self) -> VarKind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn with_kind(mut self, kind: VarKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> C {
        self.terms.get(mono).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff_of(&self, exps: &[Exponent]) -> C {
        self.coeff(&Monomial::from_slice(exps))
    }

    /// Adds `c * mono`, dropping the term if it cancels.
    pub fn add_term(&mut self, mono: Monomial, c: C) {
        debug_assert_eq!(mono.arity(), self.arity);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_poly(&mut self, other: &Self) {
        self.check_compatible(other);
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: &C) {
        self.check_compatible(other);
        if scale.is_zero() {
            return;
        }
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c.mul(scale));
        }
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        assert_eq!(self.kind, other.kind, "variable kind mismatch");
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.kind, self.arity);
        }
        SparsePoly {
            kind: self.kind,
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(s))).collect(),
        }
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = Self::zero(self.kind, self.arity);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &C) -> Self {
        let mut out = Self::zero(self.kind, self.arity);
        for (m, cm) in self.terms() {
            out.add_term(m.mul(mono), cm.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.kind, self.arity);
        for _ in 0..e {
            acc = acc.mul_poly(self);
        }
        acc
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<Exponent> {
        self.terms.keys().map(|m| m.get(i)).max()
    }

    pub fn max_degree_per_var(&self) -> Option<Exponent> {
        self.terms
            .keys()
            .flat_map(|m| m.exponents().iter().copied())
            .max()
    }

    /// Weighted degree with variable `i` carrying weight `i + 1`, the natural
    /// grading for polynomials in `e_1, ..., e_m`.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| (i as u32 + 1) * e as u32)
                    .sum()
            })
            .max()
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        Self::from_terms(
            self.kind,
            self.arity,
            self.terms.iter().map(|(m, c)| {
                let mut m = m.clone();
                m.swap(i, j);
                (m, c.clone())
            }),
        )
    }

    /// Invariant under every variable permutation (checked on adjacent
    /// transpositions, which generate the symmetric group).
    pub fn is_symmetric(&self) -> bool {
        (0..self.arity.saturating_sub(1)).all(|i| &self.swap_vars(i, i + 1) == self)
    }

    /// Re-indexes into a larger (or equal) set of variables: variable `k`
    /// becomes variable `targets[k]`.
    pub fn embed(&self, targets: &[usize], arity: usize) -> Self {
        assert_eq!(targets.len(), self.arity);
        Self::from_terms(
            self.kind,
            arity,
            self.terms.iter().map(|(m, c)| (m.embed(targets, arity), c.clone())),
        )
    }

    /// Substitutes the constant `value` for variable `i`, keeping the arity.
    pub fn substitute_constant(&self, i: usize, value: &C) -> Self {
        let mut out = Self::zero(self.kind, self.arity);
        for (m, c) in self.terms() {
            let e = m.get(i);
            let mut mm = m.clone();
            mm.set(i, 0);
            let mut cc = c.clone();
            for _ in 0..e {
                cc = cc.mul(value);
            }
            out.add_term(mm, cc);
        }
        out
    }

    /// Sets variable `from` equal to variable `to` and drops `from`, which
    /// must be the last variable.
    pub fn identify_last_with(&self, to: usize) -> Self {
        let from = self.arity - 1;
        assert!(to < from);
        let mut out = Self::zero(self.kind, from);
        for (m, c) in self.terms() {
            let mut e: Vec<Exponent> = m.exponents()[..from].to_vec();
            e[to] += m.get(from);
            out.add_term(Monomial::from_slice(&e), c.clone());
        }
        out
    }

    /// Evaluates at a point.
    pub fn evaluate(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.arity);
        let mut acc = C::zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t.mul(x);
                }
            }
            acc.add_assign(&t);
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        Self::from_terms(self.kind, self.arity, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Keeps only terms satisfying the predicate.
    pub fn retain(&mut self, mut keep: impl FnMut(&Monomial) -> bool) {
        self.terms.retain(|m, _| keep(m));
    }

    /// Leading term in the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }
}

impl<C: Coeff> fmt::Display for SparsePoly<C> {
    /// Terms from highest to lowest in canonical order, e.g.
    /// `3*y1^2*y2 - y1 + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.kind.symbol();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("{sym}{}", i + 1)
                    } else {
                        format!("{sym}{}^{e}", i + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]({})", self.kind.tag(), self.arity, self)
    }
}

impl<'a, C: Coeff> Add<&'a SparsePoly<C>> for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn add(self, rhs: &'a SparsePoly<C>) -> SparsePoly<C> {
        let mut out = self.clone();
        out.add_assign_poly(rhs);
        out
    }
}

impl<'a, C: Coeff> Sub<&'a SparsePoly<C>> for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn sub(self, rhs: &'a SparsePoly<C>) -> SparsePoly<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one().neg());
        out
    }
}

impl<'a, C: Coeff> Mul<&'a SparsePoly<C>> for &'a SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn mul(self, rhs: &'a SparsePoly<C>) -> SparsePoly<C> {
        self.mul_poly(rhs)
    }
}

impl<C: Coeff> Neg for &SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn neg(self) -> SparsePoly<C> {
        self.map_coeffs(|c| c.neg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, Rational};

    fn y(i: usize, arity: usize) -> SparsePoly<Rational> {
        SparsePoly::var(VarKind::Y, arity, i)
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &y(0, 2) - &y(0, 2);
        assert!(p.is_zero());
        assert_eq!(p.total_degree(), None);
    }

    #[test]
    fn product_and_display() {
        let one = SparsePoly::<Rational>::one(VarKind::Y, 2);
        let p = &(&y(0, 2) - &one) * &(&y(1, 2) - &one);
        assert_eq!(p.to_string(), "y1*y2 - y1 - y2 + 1");
        assert!(p.is_symmetric());
        assert_eq!(p.total_degree(), Some(2));
    }

    #[test]
    fn substitution_and_identification() {
        let one = SparsePoly::<Rational>::one(VarKind::Y, 2);
        let p = &(&y(0, 2) - &one) * &y(1, 2);
        assert!(p.substitute_constant(0, &rat(1, 1)).is_zero());
        let d = p.identify_last_with(0);
        assert_eq!(d.to_string(), "y1^2 - y1");
    }

    #[test]
    fn rational_display_keeps_sign_outside() {
        let p = SparsePoly::from_terms(
            VarKind::E,
            1,
            [(Monomial::from_slice(&[1]), rat(-1, 24)), (Monomial::from_slice(&[0]), rat(1, 3))],
        );
        assert_eq!(p.to_string(), "-1/24*e1 + 1/3");
    }
}
