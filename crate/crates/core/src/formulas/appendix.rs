//! Tabulated `f_m^(g)` for genus 1 to 4, stored as weighted divided
//! differences `Delta_k^(g)` with `d_g f_m = e_1 d_g f_(m-1) + e_m Delta_m`.

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use crate::algebra::monomial::Monomial;
use crate::algebra::poly::{SparsePoly, VarKind};
use crate::algebra::scalar::{factorial, Rational};
use crate::error::{HurwitzError, Result};

/// Rows per genus, `Delta_1..Delta_mMax`. A leading `/e1` marks a factor
/// `e_1^(-1)` on the whole row.
const GENUS1: &[&str] = &["/e1 e1 - 1", "-1", "-1", "-2", "-6", "-24"];

const GENUS2: &[&str] = &[
    "5e1^3 - 12e1^2 + 7e1",
    "-10e1^3 + 9e1e2 + 12e1^2 - 2e2",
    "-18e1^3 + 18e1e2 - 3e3 + 16e1^2 - 6e2",
    "-36e1^3 + 60e1e2 - 12e3 + 38e1^2 - 24e2",
];

const GENUS3: &[&str] = &[
    "35e1^6 - 147e1^5 + 205e1^4 - 94e1^3",
    "-105e1^6 + 189e1^4e2 - 135e1^2e2^2 + 294e1^5 - 321e1^3e2 + 90e1e2^2 \
     - 205e1^4 + 74e1^2e2 - 16e2^2",
    "-273e1^6 + 594e1^4e2 + 153e1^3e3 - 405e1^2e2^2 + 135e1e2e3 - 27e3^2 \
     + 642e1^5 - 912e1^3e2 - 111e1^2e3 + 360e1e2^2 - 66e2e3 \
     - 353e1^4 + 270e1^2e2 + 64e1e3 - 80e2^2",
];

const GENUS4: &[&str] = &[
    "1925e1^9 - 12320e1^8 + 29854e1^7 - 32032e1^6 + 12573e1^5",
    "-7700e1^9 + 20790e1^7e2 - 29700e1^5e2^2 + 17325e1^3e2^3 \
     + 36960e1^8 - 74316e1^6e2 + 72600e1^4e2^2 - 23100e1^2e2^3 \
     - 59708e1^7 + 77814e1^5e2 - 44880e1^3e2^2 + 10780e1e2^3 \
     + 32032e1^6 - 182e1^4e2 + 8800e1^2e2^2 - 1584e2^3",
];

/// SHA-256 over the rows joined by newlines, genus by genus.
pub const TRANSCRIPTION_SHA256: &str =
    "8ff28d23487a36419b26ac516d8b197dd284c30f2d442d371da84a2eb91d8115";

/// A printed coefficient that disagrees with direct factorization counts.
#[derive(Clone, Copy, Debug)]
pub struct Erratum {
    pub g: u32,
    pub k: usize,
    pub printed: &'static str,
    pub corrected: &'static str,
}

/// Both entries are confirmed by the brute-force oracle (and the first by
/// the one-part closed form); the printed values give non-integral counts.
pub const ERRATA: &[Erratum] = &[
    Erratum { g: 3, k: 1, printed: "-94e1^3", corrected: "-93e1^3" },
    Erratum { g: 4, k: 2, printed: "-182e1^4e2", corrected: "-18260e1^4e2" },
];

pub fn m_max(g: u32) -> Option<usize> {
    match g {
        1 => Some(6),
        2 => Some(4),
        3 => Some(3),
        4 => Some(2),
        _ => None,
    }
}

fn rows(g: u32) -> Option<&'static [&'static str]> {
    match g {
        1 => Some(GENUS1),
        2 => Some(GENUS2),
        3 => Some(GENUS3),
        4 => Some(GENUS4),
        _ => None,
    }
}

/// `d_1 = 3! 2^2`, `d_2 = 6! 2^3`, `d_3 = 9! 2^3`, `d_4 = 12! 2^5`.
pub fn d(g: u32) -> Option<BigInt> {
    let (f, p) = match g {
        1 => (3, 2),
        2 => (6, 3),
        3 => (9, 3),
        4 => (12, 5),
        _ => return None,
    };
    Some(factorial(f) << p)
}

pub fn transcription_digest() -> String {
    let mut h = Sha256::new();
    for g in 1..=4 {
        for row in rows(g).unwrap() {
            h.update(row.as_bytes());
            h.update(b"\n");
        }
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// One `Delta_k^(g)`: `poly * e_1^shift` with `shift` zero or negative.
#[derive(Clone, Debug)]
pub struct Delta {
    pub poly: SparsePoly<Rational>,
    pub e1_shift: i32,
}

#[derive(Clone, Debug)]
pub struct AppendixTable {
    pub g: u32,
    pub d: Rational,
    pub deltas: Vec<Delta>,
}

fn parse_err(row: &str, what: &str) -> HurwitzError {
    HurwitzError::InvalidInput(format!("appendix row {row:?}: {what}"))
}

/// Parses a sum of integer multiples of monomials in `e_1..e_arity`, such
/// as `-10e1^3 + 9e1e2 - 2e2`.
pub fn parse_e_sum(row: &str, arity: usize) -> Result<SparsePoly<Rational>> {
    let mut out = SparsePoly::zero(VarKind::E, arity);
    let src: Vec<char> = row.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    let number = |i: &mut usize| -> Option<u64> {
        let start = *i;
        while *i < src.len() && src[*i].is_ascii_digit() {
            *i += 1;
        }
        (start < *i).then(|| src[start..*i].iter().collect::<String>().parse().unwrap())
    };
    if src.is_empty() {
        return Err(parse_err(row, "empty"));
    }
    while i < src.len() {
        let mut negative = false;
        match src[i] {
            '+' => i += 1,
            '-' => {
                negative = true;
                i += 1
            }
            _ if i == 0 => {}
            c => return Err(parse_err(row, &format!("expected sign, found {c:?}"))),
        }
        let coeff = number(&mut i);
        let mut mono = Monomial::one(arity);
        let mut saw_var = false;
        while i < src.len() && src[i] == 'e' {
            i += 1;
            let k = number(&mut i).ok_or_else(|| parse_err(row, "variable index"))? as usize;
            if k == 0 || k > arity {
                return Err(parse_err(row, &format!("e{k} outside 1..{arity}")));
            }
            let mut e = 1;
            if i < src.len() && src[i] == '^' {
                i += 1;
                e = number(&mut i).ok_or_else(|| parse_err(row, "exponent"))?;
            }
            let cur = mono.get(k - 1);
            mono.set(k - 1, cur + e as u16);
            saw_var = true;
        }
        let c = match (coeff, saw_var) {
            (Some(c), _) => c,
            (None, true) => 1,
            (None, false) => return Err(parse_err(row, "empty term")),
        };
        let c = Rational::from_integer(BigInt::from(c));
        out.add_term(mono, if negative { -c } else { c });
    }
    Ok(out)
}

impl AppendixTable {
    /// The table with [`ERRATA`] applied.
    pub fn load(g: u32) -> Result<Self> {
        let mut table = Self::load_verbatim(g)?;
        for e in ERRATA.iter().filter(|e| e.g == g) {
            let arity = table.deltas.len();
            let printed = parse_e_sum(e.printed, arity)?;
            let corrected = parse_e_sum(e.corrected, arity)?;
            let delta = &mut table.deltas[e.k - 1].poly;
            for (mono, c) in printed.terms() {
                if delta.coeff(mono) != *c {
                    return Err(HurwitzError::Inconsistent(format!(
                        "erratum {:?} does not match Delta_{} of genus {g}",
                        e.printed, e.k
                    )));
                }
            }
            *delta = &(&*delta - &printed) + &corrected;
        }
        Ok(table)
    }

    /// The rows exactly as printed.
    pub fn load_verbatim(g: u32) -> Result<Self> {
        let rows = rows(g).ok_or_else(|| {
            HurwitzError::InvalidInput(format!("no appendix table for genus {g}"))
        })?;
        let m = rows.len();
        let deltas = rows
            .iter()
            .map(|row| {
                let (shift, body) = match row.strip_prefix("/e1") {
                    Some(rest) => (-1, rest),
                    None => (0, *row),
                };
                Ok(Delta { poly: parse_e_sum(body, m)?, e1_shift: shift })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AppendixTable { g, d: Rational::from_integer(d(g).unwrap()), deltas })
    }

    /// `f_m = (1/d) sum_k e_1^(m-k) e_k Delta_k`, as a polynomial in
    /// `e_1..e_m`.
    pub fn f(&self, m: usize) -> Result<SparsePoly<Rational>> {
        if m == 0 || m > self.deltas.len() {
            return Err(HurwitzError::InvalidInput(format!(
                "genus {} table covers m = 1..{}, got {m}",
                self.g,
                self.deltas.len()
            )));
        }
        let mut out = SparsePoly::zero(VarKind::E, m);
        for k in 1..=m {
            let delta = &self.deltas[k - 1];
            let mut mono = Monomial::one(m);
            mono.set(k - 1, 1);
            let e1_power = mono.get(0) as i32 + (m - k) as i32 + delta.e1_shift;
            mono.set(0, e1_power as u16);
            let mut lifted = SparsePoly::zero(VarKind::E, m);
            for (mon, c) in delta.poly.terms() {
                let mut ex = Monomial::one(m);
                for (i, &e) in mon.exponents().iter().enumerate() {
                    if i < m {
                        ex.set(i, e);
                    } else if e != 0 {
                        return Err(HurwitzError::Inconsistent(format!(
                            "Delta_{k} of genus {} uses e{}",
                            self.g,
                            i + 1
                        )));
                    }
                }
                lifted.add_term(ex, c.clone());
            }
            let one = Rational::from_integer(BigInt::from(1));
            out.add_assign_poly(&lifted.mul_monomial(&mono, &one));
        }
        Ok(out.scale(&(Rational::from_integer(BigInt::from(1)) / &self.d)))
    }
}

/// The tabulated `f_m^(g)`, with [`ERRATA`] applied.
pub fn f_table(g: u32, m: usize) -> Result<SparsePoly<Rational>> {
    AppendixTable::load(g)?.f(m)
}

pub fn f_table_verbatim(g: u32, m: usize) -> Result<SparsePoly<Rational>> {
    AppendixTable::load_verbatim(g)?.f(m)
}
