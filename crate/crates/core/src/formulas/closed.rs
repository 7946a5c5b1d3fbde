//! Closed forms for `f_m^(g)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::scalar::{binomial, factorial, rat, rational_pow, Rational};
use crate::algebra::symmetric::elementary_values;
use crate::error::{HurwitzError, Result};
use crate::partition::Partition;

fn int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Genus zero: `f = n^(m-3)`. For `m < 3` this is a negative power.
pub fn f_genus0(alpha: &Partition) -> Rational {
    rational_pow(&int(alpha.n() as u64), alpha.len() as i64 - 3)
}

/// `[x^k] (sinh x / x)^p` for even `k`.
fn sinhc_power_coeff(p: u64, k: u32) -> Rational {
    let half = (k / 2) as usize;
    // sinh x / x = sum_i x^(2i) / (2i+1)!, as a series in x^2
    let base: Vec<Rational> =
        (0..=half).map(|i| Rational::new(BigInt::one(), factorial(2 * i as u64 + 1))).collect();
    let mut acc = vec![Rational::zero(); half + 1];
    acc[0] = Rational::one();
    for _ in 0..p {
        let mut next = vec![Rational::zero(); half + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in base.iter().enumerate().take(half + 1 - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc[half].clone()
}

/// One-part covers: `f = n^(2g-2) / 2^(2g) [x^(2g)] (sinh x / x)^(n-1)`.
pub fn f_one_part(n: u64, g: u32) -> Rational {
    let coeff = sinhc_power_coeff(n - 1, 2 * g);
    let scale = rational_pow(&int(n), 2 * g as i64 - 2) / int(4).pow(g as i32);
    coeff * scale
}

/// Genus one with `alpha = 1^n`.
pub fn f1_simple(n: u64) -> Rational {
    let nn = |e: u64| Rational::from_integer(num_traits::pow(BigInt::from(n), e as usize));
    let mut acc = nn(n) - nn(n - 1);
    for i in 2..=n {
        acc -= Rational::from_integer(binomial(n, i) * factorial(i - 2)) * nn(n - i);
    }
    acc / int(24)
}

/// Genus one with two parts `(n - r, r)`, `0 < r < n`.
pub fn f1_two(n: u64, r: u64) -> Result<Rational> {
    if r == 0 || r >= n {
        return Err(HurwitzError::InvalidInput(format!("need 0 < r < n, got n={n}, r={r}")));
    }
    let (n, r) = (n as i64, r as i64);
    Ok(rat(n * n - (r + 1) * n + r * r, 24))
}

/// Genus one, general `alpha`:
/// `(n^m - n^(m-1) - sum_{i=2}^m (i-2)! e_i n^(m-i)) / 24`.
pub fn f1_conjecture(alpha: &Partition) -> Rational {
    let m = alpha.len() as u64;
    let n = int(alpha.n() as u64);
    let parts: Vec<Rational> = alpha.parts().iter().map(|&p| int(p as u64)).collect();
    let e = elementary_values(&parts);
    let pw = |k: u64| rational_pow(&n, k as i64);
    let mut acc = pw(m) - pw(m - 1);
    for i in 2..=m {
        acc -= Rational::from_integer(factorial(i - 2)) * &e[i as usize - 1] * pw(m - i);
    }
    acc / int(24)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn genus_zero() {
        assert_eq!(f_genus0(&p("1,1,1")), rat(1, 1));
        assert_eq!(f_genus0(&p("2,1")), rat(1, 3));
        assert_eq!(f_genus0(&p("1")), rat(1, 1));
        assert_eq!(f_genus0(&p("3,2,2,1")), rat(8, 1));
    }

    #[test]
    fn one_part() {
        for n in 1..=10 {
            assert_eq!(f_one_part(n, 1), rat(n as i64 - 1, 24));
        }
        assert_eq!(f_one_part(5, 1), rat(1, 6));
        assert_eq!(f_one_part(2, 2), rat(1, 480));
        for g in 1..=4 {
            assert!(f_one_part(1, g).is_zero());
        }
        assert_eq!(f_one_part(3, 0), rat(1, 9));
    }

    #[test]
    fn theorem_forms() {
        assert_eq!(f1_simple(2), rat(1, 24));
        assert_eq!(f1_simple(3), rat(1, 3));
        assert_eq!(f1_simple(4), rat(13, 4));
        assert_eq!(f1_two(3, 1).unwrap(), rat(1, 6));
        assert_eq!(f1_two(4, 2).unwrap(), rat(1, 3));
        assert_eq!(f1_two(5, 1).unwrap(), rat(2, 3));
        assert!(f1_two(3, 0).is_err());
        assert!(f1_two(3, 3).is_err());
    }

    #[test]
    fn conjecture_specialises() {
        for n in 1..=8u32 {
            assert_eq!(f1_conjecture(&Partition::ones(n)), f1_simple(n as u64));
        }
        for n in 2..=9u64 {
            for r in 1..n {
                let alpha = Partition::new(vec![(n - r) as u32, r as u32]).unwrap();
                assert_eq!(f1_conjecture(&alpha), f1_two(n, r).unwrap());
            }
        }
        assert_eq!(f1_conjecture(&p("2,1")), rat(1, 6));
    }
}
