//! Canonical JSON for rational polynomials:
//! `{"kind": "Y", "arity": m, "terms": [[[e1, ..., em], "num", "den"], ...]}`
//! with terms in descending graded-lex order and integers as decimal
//! strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::monomial::{Exponent, Monomial};
use super::poly::{SparsePoly, VarKind};
use super::scalar::Rational;
use crate::error::{HurwitzError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub kind: String,
    pub arity: usize,
    pub terms: Vec<(Vec<Exponent>, String, String)>,
}

impl From<&SparsePoly<Rational>> for PolyJson {
    fn from(p: &SparsePoly<Rational>) -> Self {
        PolyJson {
            kind: p.kind().tag().to_string(),
            arity: p.arity(),
            terms: p
                .terms()
                .rev()
                .map(|(m, c)| (m.exponents().to_vec(), c.numer().to_string(), c.denom().to_string()))
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for SparsePoly<Rational> {
    type Error = HurwitzError;

    fn try_from(j: &PolyJson) -> Result<Self> {
        let kind = VarKind::from_tag(&j.kind)
            .ok_or_else(|| HurwitzError::InvalidInput(format!("unknown variable kind {:?}", j.kind)))?;
        let mut p = SparsePoly::zero(kind, j.arity);
        for (exps, num, den) in &j.terms {
            if exps.len() != j.arity {
                return Err(HurwitzError::InvalidInput("exponent vector length differs from arity".into()));
            }
            let num: BigInt = num.parse().map_err(|_| HurwitzError::InvalidInput(format!("bad numerator {num:?}")))?;
            let den: BigInt = den.parse().map_err(|_| HurwitzError::InvalidInput(format!("bad denominator {den:?}")))?;
            if den <= BigInt::from(0) {
                return Err(HurwitzError::InvalidInput("denominator must be positive".into()));
            }
            p.add_term(Monomial::from_slice(exps), BigRational::new(num, den));
        }
        Ok(p)
    }
}

pub fn to_json_string(p: &SparsePoly<Rational>) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("polynomial serializes")
}

pub fn from_json_str(s: &str) -> Result<SparsePoly<Rational>> {
    let j: PolyJson = serde_json::from_str(s)?;
    SparsePoly::try_from(&j)
}
