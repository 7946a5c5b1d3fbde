//! Right-hand side `K_m^(g) = T_1 + T_2 + T_3 + T_4` of the PDE.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::operators::{apply_xdx, div_by_difference};
use crate::algebra::poly::VarKind;
use crate::algebra::scalar::Rational;
use crate::error::{HurwitzError, Result};
use crate::YPoly;

use super::psi::{k11, PsiRep, RhsRep};
use super::theta::theta_placements;

/// Source of already computed `Psi_j^(i)`.
pub trait PsiLookup {
    fn lookup(&self, m: usize, g: usize) -> Option<&YPoly>;
}

impl PsiLookup for BTreeMap<(usize, usize), PsiRep> {
    fn lookup(&self, m: usize, g: usize) -> Option<&YPoly> {
        self.get(&(m, g)).map(|p| &p.poly)
    }
}

/// Cells whose `Psi` enters `K_m^(g)`.
pub fn dependencies(m: usize, g: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if (m, g) != (1, 1) {
        out.push((m + 1, g - 1));
    }
    if m >= 2 {
        out.push((m - 1, g));
    }
    for k in 3..=m {
        out.push((k, 0));
        out.push((m - k + 1, g));
    }
    for k in 1..=m {
        for a in 1..g {
            out.push((k, a));
            out.push((m - k + 1, g - a));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn need(src: &impl PsiLookup, m: usize, g: usize) -> Result<&YPoly> {
    src.lookup(m, g).ok_or(HurwitzError::MissingPsi { m, g })
}

fn half() -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(2))
}

fn sum_in_order(parts: Vec<YPoly>, m: usize) -> YPoly {
    let mut out = YPoly::zero(VarKind::Y, m);
    for p in parts {
        out.add_assign_poly(&p);
    }
    out
}

/// `1/2 sum_i (D_i D_(m+1) Psi_(m+1)^(g-1))|_(y_(m+1) = y_i)` with
/// `D = x d/dx`.
pub fn term1(m: usize, g: usize, src: &impl PsiLookup) -> Result<YPoly> {
    if (m, g) == (1, 1) {
        return k11();
    }
    let p = need(src, m + 1, g - 1)?;
    let diag = apply_xdx(&apply_xdx(p, 0), m).identify_last_with(0);
    let images = (0..m).map(|i| diag.swap_vars(0, i)).collect();
    Ok(sum_in_order(images, m).scale(&half()))
}

/// `Theta_1` of the join/cut kernel, with pairs `(r, s)` and `(s, r)`
/// merged and divided by `y_r - y_s`.
pub fn term2(m: usize, g: usize, src: &impl PsiLookup) -> Result<YPoly> {
    if m < 2 {
        return Ok(YPoly::zero(VarKind::Y, m));
    }
    let p = need(src, m - 1, g)?;
    let a = apply_xdx(p, 0);
    let rest: Vec<usize> = (2..m).collect();
    let on = |first: usize| {
        let mut t = vec![first];
        t.extend(&rest);
        a.embed(&t, m)
    };
    let (a01, a10) = (on(0), on(1));
    let one = YPoly::one(VarKind::Y, m);
    let y0 = YPoly::var(VarKind::Y, m, 0);
    let y1 = YPoly::var(VarKind::Y, m, 1);
    let left = &(&(&y1 - &one) * &(&y0 * &y0)) * &a01;
    let right = &(&(&y0 - &one) * &(&y1 * &y1)) * &a10;
    let pair = div_by_difference(&(&left - &right), 0, 1)?;
    let images: Vec<YPoly> = (0..m)
        .flat_map(|r| (r + 1..m).map(move |s| (r, s)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(r, s)| {
            let mut t = vec![r, s];
            t.extend((0..m).filter(|&k| k != r && k != s));
            pair.embed(&t, m)
        })
        .collect();
    Ok(sum_in_order(images, m))
}

/// `Theta_(k-1) (D_1 P(x_1, x_S)) (D_1 Q(x_1, x_T))` where `P` has arity `k`.
fn theta_product(p: &YPoly, q: &YPoly, m: usize) -> YPoly {
    let k = p.arity();
    let a = apply_xdx(p, 0).embed(&(0..k).collect::<Vec<_>>(), m);
    let mut t = vec![0];
    t.extend(k..m);
    let b = apply_xdx(q, 0).embed(&t, m);
    let base = &a * &b;
    let images: Vec<YPoly> = theta_placements(k - 1, m)
        .into_par_iter()
        .map(|pl| base.embed(&pl.targets(), m))
        .collect();
    sum_in_order(images, m)
}

/// Products with the genus-zero series `Psi_k^(0)`, `k = 3..m`.
pub fn term3(m: usize, g: usize, src: &impl PsiLookup) -> Result<YPoly> {
    let mut out = YPoly::zero(VarKind::Y, m);
    for k in 3..=m {
        let p = need(src, k, 0)?;
        let q = need(src, m - k + 1, g)?;
        out.add_assign_poly(&theta_product(p, q, m));
    }
    Ok(out)
}

/// Genus-splitting products, `a = 1..g-1`.
pub fn term4(m: usize, g: usize, src: &impl PsiLookup) -> Result<YPoly> {
    let mut out = YPoly::zero(VarKind::Y, m);
    for k in 1..=m {
        for a in 1..g {
            let p = need(src, k, a)?;
            let q = need(src, m - k + 1, g - a)?;
            out.add_assign_poly(&theta_product(p, q, m));
        }
    }
    Ok(out.scale(&half()))
}

pub fn assemble_k(m: usize, g: usize, src: &impl PsiLookup) -> Result<RhsRep> {
    if g == 0 || m == 0 {
        return Err(HurwitzError::InvalidInput(format!(
            "the PDE determines Psi_m^(g) for m, g >= 1, got m={m}, g={g}"
        )));
    }
    let mut k = term1(m, g, src)?;
    k.add_assign_poly(&term2(m, g, src)?);
    k.add_assign_poly(&term3(m, g, src)?);
    k.add_assign_poly(&term4(m, g, src)?);
    if !k.is_symmetric() {
        return Err(HurwitzError::NotSymmetric(format!("K_{m}^({g})")));
    }
    let bound = (2 * m + 6 * g) as u32 - 4;
    let per_var = k.max_degree_per_var().unwrap_or(0) as u32;
    if per_var > bound {
        return Err(HurwitzError::Inconsistent(format!(
            "K_{m}^({g}) has degree {per_var} in one variable, above {bound}"
        )));
    }
    Ok(RhsRep { m, g, poly: k })
}
