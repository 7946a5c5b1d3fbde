//! Conversion between `f_m^(g)(alpha)`, `mu_m^(g)(alpha)` and `c_g(alpha)`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::scalar::{factorial, format_rational, to_integer, Rational};
use crate::error::{HurwitzError, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HurwitzCount {
    #[serde(serialize_with = "ser_partition")]
    pub alpha: Partition,
    pub g: u32,
    #[serde(serialize_with = "ser_rational")]
    pub f: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub mu: Rational,
    #[serde(serialize_with = "ser_display")]
    pub c: BigInt,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

fn ser_display<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_partition<S: serde::Serializer>(p: &Partition, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.dashed())
}

/// `(n + m + 2g - 2)! prod_j alpha_j^alpha_j / (alpha_j - 1)!`: the factor
/// turning `f` into `c`.
pub fn f_to_c_factor(alpha: &Partition, g: u32) -> BigInt {
    let j = alpha.min_length() + 2 * g;
    let mut acc = factorial(j as u64);
    for &a in alpha.parts() {
        acc *= num_traits::pow(BigInt::from(a), a as usize);
        acc /= factorial(a as u64 - 1);
    }
    acc
}

/// Fills `mu` and `c` from `f`; a non-integral or negative `c` means `f`
/// was wrong.
pub fn hurwitz(alpha: &Partition, g: u32, f: Rational) -> Result<HurwitzCount> {
    let c_rat = &f * Rational::from_integer(f_to_c_factor(alpha, g));
    let c = to_integer(&c_rat).filter(|c| *c >= BigInt::zero()).ok_or_else(|| {
        HurwitzError::Inconsistent(format!(
            "f = {} gives non-integral or negative c = {} for alpha = {alpha}, g = {g}",
            format_rational(&f),
            format_rational(&c_rat)
        ))
    })?;
    let mu = Rational::new(alpha.class_size() * &c, factorial(alpha.n() as u64));
    Ok(HurwitzCount { alpha: alpha.clone(), g, f, mu, c })
}

/// Inverse direction: `f = c / factor`.
pub fn f_from_c(alpha: &Partition, g: u32, c: &BigInt) -> Rational {
    Rational::new(c.clone(), f_to_c_factor(alpha, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let h = hurwitz(&p("2,1"), 1, rat(1, 6)).unwrap();
        assert_eq!((h.mu, h.c), (rat(40, 1), BigInt::from(80)));
        let h = hurwitz(&p("1,1"), 1, rat(1, 24)).unwrap();
        assert_eq!((h.mu, h.c), (rat(1, 2), BigInt::from(1)));
        let h = hurwitz(&p("1,1,1"), 0, rat(1, 1)).unwrap();
        assert_eq!((h.mu, h.c), (rat(4, 1), BigInt::from(24)));
        assert_eq!(f_from_c(&p("2,1"), 1, &BigInt::from(80)), rat(1, 6));
    }

    #[test]
    fn rejects_bad_f() {
        assert!(hurwitz(&p("2,1"), 1, rat(1, 7)).is_err());
        assert!(hurwitz(&p("2,1"), 1, rat(-1, 6)).is_err());
    }

    #[test]
    fn json_shape() {
        let h = hurwitz(&p("2,1"), 1, rat(1, 6)).unwrap();
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"{"alpha":"2-1","g":1,"f":"1/6","mu":"40","c":"80"}"#
        );
    }
}
