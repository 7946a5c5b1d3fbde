use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exponent = u16;

/// Exponent vector of a monomial. Ordered graded-lexicographically: total
/// degree first, then lexicographic with the first variable most
/// significant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[Exponent; 8]>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn from_slice(exps: &[Exponent]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(arity: usize, i: usize, exp: Exponent) -> Self {
        let mut m = Self::one(arity);
        m.0[i] = exp;
        m
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.0
    }

    pub fn exponents_mut(&mut self) -> &mut [Exponent] {
        &mut self.0
    }

    pub fn get(&self, i: usize) -> Exponent {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, e: Exponent) {
        self.0[i] = e;
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self >= other`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    pub fn swap(&mut self, i: usize, j: usize) {
        self.0.swap(i, j);
    }

    /// Places variable `k` of `self` at index `targets[k]` of a monomial of
    /// the given arity.
    pub fn embed(&self, targets: &[usize], arity: usize) -> Monomial {
        let mut out = Monomial::one(arity);
        for (k, &t) in targets.iter().enumerate() {
            out.0[t] += self.0[k];
        }
        out
    }

    /// True if the exponents are weakly decreasing.
    pub fn is_partition_shaped(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let a = Monomial::from_slice(&[2, 0]);
        let b = Monomial::from_slice(&[1, 1]);
        let c = Monomial::from_slice(&[0, 2]);
        let d = Monomial::from_slice(&[3, 0]);
        let e = Monomial::from_slice(&[0, 3]);
        assert!(a > b && b > c);
        assert!(e > a);
        assert!(d > e);
    }

    #[test]
    fn embed_places_exponents() {
        let m = Monomial::from_slice(&[1, 2]);
        assert_eq!(m.embed(&[2, 0], 3).exponents(), &[2, 0, 1]);
    }
}
