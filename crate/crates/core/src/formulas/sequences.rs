//! Genus-one recurrences for `alpha = 1^n`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::poly::{SparsePoly, VarKind};
use crate::algebra::scalar::{binomial, factorial, rational_pow, to_integer, Rational};
use crate::algebra::series::{tree_series, TruncSeries};
use crate::error::{HurwitzError, Result};

use super::closed::f1_simple;

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `mu_n^(0)(1^n) = (2n-2)! n^(n-3) / n!`.
pub fn mu0_simple(n: u64) -> Rational {
    int(factorial(2 * n - 2)) * rational_pow(&int(n), n as i64 - 3) / int(factorial(n))
}

/// `mu_n^(1)(1^n)` for `n = 1..=n_max` (index 0 unused) by the
/// Pandharipande-Graber recurrence.
pub fn pg_mu1(n_max: u64) -> Vec<Rational> {
    let mut mu1 = vec![Rational::zero(); n_max as usize + 1];
    for n in 1..=n_max {
        let k = 2 * n - 1;
        let mut acc =
            Rational::new(BigInt::from(n), BigInt::from(6)) * int(binomial(n, 2)) * int(k) * mu0_simple(n);
        for j in 1..n.saturating_sub(1) {
            acc += int(2 * k * (n - j) * j * j)
                * int(binomial(2 * n - 2, 2 * j - 2))
                * mu0_simple(j)
                * &mu1[(n - j) as usize];
        }
        mu1[n as usize] = acc;
    }
    mu1
}

/// `a_n = (n-1) n^(n-1) + sum_{j=1}^{n-2} C(n,j) j^(j-1) a_(n-j)`.
fn a_recurrence(n_max: u64) -> Vec<BigInt> {
    let mut a = vec![BigInt::zero(); n_max as usize + 1];
    for n in 2..=n_max {
        let pw = |b: u64, e: u64| num_traits::pow(BigInt::from(b), e as usize);
        let mut acc = BigInt::from(n - 1) * pw(n, n - 1);
        for j in 1..n - 1 {
            acc += binomial(n, j) * pw(j, j - 1) * &a[(n - j) as usize];
        }
        a[n as usize] = acc;
    }
    a
}

/// `n! [x^n] w^2 / (1-w)^2` from the tree function.
fn a_from_series(n_max: u64) -> Result<Vec<BigInt>> {
    let w: TruncSeries<Rational> = tree_series(n_max as u32);
    let one = TruncSeries::new(SparsePoly::one(VarKind::X, 1), w.caps());
    let v = w.mul(&one.sub(&w).inverse()?);
    let sq = v.mul(&v);
    (0..=n_max)
        .map(|n| {
            let q = sq.coeff_of(&[n as u16]) * int(factorial(n));
            to_integer(&q).ok_or_else(|| {
                HurwitzError::Inconsistent(format!("n! [x^{n}] w^2/(1-w)^2 is not an integer"))
            })
        })
        .collect()
}

/// `a_n = 24 n f_n^(1)` for `n = 0..=n_max` (entries below 2 are zero),
/// checked three ways.
pub fn a_sequence(n_max: u64) -> Result<Vec<BigInt>> {
    let rec = a_recurrence(n_max);
    let series = a_from_series(n_max)?;
    for n in 2..=n_max {
        let from_f = int(24 * n) * f1_simple(n);
        let i = n as usize;
        if from_f != int(rec[i].clone()) || series[i] != rec[i] {
            return Err(HurwitzError::Inconsistent(format!(
                "a_{n}: recurrence {}, 24 n f {}, series {}",
                rec[i], from_f, series[i]
            )));
        }
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;

    #[test]
    fn pg_values() {
        let mu = pg_mu1(10);
        assert_eq!(mu[2], rat(1, 2));
        assert_eq!(mu[3], rat(40, 1));
        for n in 2..=10u64 {
            let expected = int(factorial(2 * n)) * f1_simple(n) / int(factorial(n));
            assert_eq!(mu[n as usize], expected, "n = {n}");
        }
        assert!(mu[1].is_zero());
    }

    #[test]
    fn a_values() {
        let a = a_sequence(12).unwrap();
        assert_eq!(&a[2..5], &[BigInt::from(2), BigInt::from(24), BigInt::from(312)]);
        assert!(a[1].is_zero());
    }

    #[test]
    fn mu0() {
        assert_eq!(mu0_simple(3), rat(4, 1));
        assert_eq!(mu0_simple(2), rat(1, 2));
    }
}
