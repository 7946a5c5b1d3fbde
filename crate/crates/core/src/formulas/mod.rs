//! Closed forms, genus-one recurrences and the tabulated polynomials.

pub mod appendix;
pub mod closed;
pub mod counts;
pub mod sequences;

use serde_json::json;

use crate::algebra::json::PolyJson;
use crate::algebra::poly::SparsePoly;
use crate::algebra::scalar::{common_denominator, format_rational, Rational};
use crate::error::Result;

pub use appendix::{f_table, f_table_verbatim, m_max, AppendixTable, Erratum, ERRATA};
pub use closed::{f1_conjecture, f1_simple, f1_two, f_genus0, f_one_part};
pub use counts::{f_from_c, f_to_c_factor, hurwitz, HurwitzCount};
pub use sequences::{a_sequence, mu0_simple, pg_mu1};

/// `(e1^2 - e1 - e2)/24`: integer numerator over a common denominator.
pub fn display_over_denominator(p: &SparsePoly<Rational>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let den = common_denominator(p.terms().map(|(_, c)| c));
    let scaled = p.scale(&Rational::from_integer(den.clone()));
    let body = scaled.to_string();
    if den == 1.into() {
        body
    } else if scaled.len() == 1 {
        format!("{body}/{den}")
    } else {
        format!("({body})/{den}")
    }
}

/// Table rows `g, m, d, f` for every tabulated `m` of genus `g`.
pub fn table_csv(g: u32) -> Result<String> {
    let table = AppendixTable::load(g)?;
    let mut out = String::from("g,m,d,f\n");
    for m in 1..=table.deltas.len() {
        let f = table.f(m)?;
        out.push_str(&format!(
            "{g},{m},{},\"{}\"\n",
            format_rational(&table.d),
            display_over_denominator(&f)
        ));
    }
    Ok(out)
}

/// Canonical JSON of the tabulated polynomials of genus `g`.
pub fn table_json(g: u32) -> Result<String> {
    let table = AppendixTable::load(g)?;
    let rows = (1..=table.deltas.len())
        .map(|m| Ok(json!({ "g": g, "m": m, "f": PolyJson::from(&table.f(m)?) })))
        .collect::<Result<Vec<_>>>()?;
    Ok(serde_json::to_string(&rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn denominator_display() {
        assert_eq!(display_over_denominator(&f_table(1, 2).unwrap()), "(e1^2 - e1 - e2)/24");
        assert_eq!(
            display_over_denominator(&f_table(2, 1).unwrap()),
            "(5*e1^4 - 12*e1^3 + 7*e1^2)/5760"
        );
    }

    #[test]
    fn emission() {
        let csv = table_csv(1).unwrap();
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.contains("1,2,24,\"(e1^2 - e1 - e2)/24\""));
        let js: serde_json::Value = serde_json::from_str(&table_json(4).unwrap()).unwrap();
        assert_eq!(js.as_array().unwrap().len(), 2);
        assert_eq!(js[0]["f"]["kind"], "E");
    }
}
