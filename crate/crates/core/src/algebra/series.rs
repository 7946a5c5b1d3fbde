//! Truncated multivariate power series and the substitutions between the
//! `y`, `w` and `x` variable families.
//!
//! `w(x)` is the tree function (`w = x e^w`) and `y = (1 - w)^{-1}`. A
//! y-polynomial of total degree `D` is determined by its w-jet of order
//! `D`: in the auxiliary basis `v = y - 1 = w/(1 - w)` every `v^k` starts
//! at `w^k`, so the change of basis is unitriangular on any down-closed set
//! of exponents (a per-variable box or a total-degree simplex).

use num_bigint::BigInt;

use super::monomial::{Exponent, Monomial};
use super::poly::{SparsePoly, VarKind};
use super::scalar::{binomial, factorial, Coeff};
use crate::error::{HurwitzError, Result};

/// Truncation caps. A monomial is kept iff every exponent is at most
/// `per_var` and the total degree is at most `total`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub per_var: u32,
    pub total: u32,
}

impl Caps {
    /// A per-variable box; the total cap is implied.
    pub fn per_var(cap: u32, arity: usize) -> Self {
        Caps { per_var: cap, total: cap.saturating_mul(arity.max(1) as u32) }
    }

    /// A total-degree simplex.
    pub fn total(cap: u32) -> Self {
        Caps { per_var: cap, total: cap }
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        m.exponents().iter().all(|&e| e as u32 <= self.per_var) && m.degree() <= self.total
    }

    pub fn meet(&self, other: &Caps) -> Caps {
        Caps { per_var: self.per_var.min(other.per_var), total: self.total.min(other.total) }
    }
}

/// How a fitted polynomial's degree is bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeBound {
    PerVariable(u32),
    Total(u32),
    /// Both a per-variable and a total bound.
    Box { per_var: u32, total: u32 },
}

impl DegreeBound {
    /// The total-degree part of the bound, for error reports.
    pub fn value(&self) -> u32 {
        match *self {
            DegreeBound::PerVariable(d) | DegreeBound::Total(d) => d,
            DegreeBound::Box { total, .. } => total,
        }
    }

    fn admits(&self, m: &Monomial) -> bool {
        match *self {
            DegreeBound::PerVariable(d) => m.exponents().iter().all(|&e| e as u32 <= d),
            DegreeBound::Total(d) => m.degree() <= d,
            DegreeBound::Box { per_var, total } => {
                m.degree() <= total && m.exponents().iter().all(|&e| e as u32 <= per_var)
            }
        }
    }

    fn covered_by(&self, caps: &Caps, arity: usize) -> bool {
        match *self {
            DegreeBound::PerVariable(d) => {
                caps.per_var >= d && caps.total >= d.saturating_mul(arity as u32)
            }
            DegreeBound::Total(d) => caps.per_var >= d && caps.total >= d,
            DegreeBound::Box { per_var, total } => {
                caps.per_var >= per_var.min(total) && caps.total >= total
            }
        }
    }
}

/// A polynomial standing for a power series known modulo the monomials
/// outside `caps`. Every stored exponent respects the caps; products
/// truncate eagerly.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<C> {
    base: SparsePoly<C>,
    caps: Caps,
}

impl<C: Coeff> std::fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} mod {:?}", self.base, self.caps)
    }
}

impl<C: Coeff> TruncSeries<C> {
    pub fn new(mut base: SparsePoly<C>, caps: Caps) -> Self {
        base.retain(|m| caps.admits(m));
        TruncSeries { base, caps }
    }

    pub fn base(&self) -> &SparsePoly<C> {
        &self.base
    }

    pub fn into_base(self) -> SparsePoly<C> {
        self.base
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn per_var_cap(&self) -> u32 {
        self.caps.per_var
    }

    pub fn total_cap(&self) -> u32 {
        self.caps.total
    }

    pub fn arity(&self) -> usize {
        self.base.arity()
    }

    pub fn kind(&self) -> VarKind {
        self.base.kind()
    }

    pub fn coeff_of(&self, exps: &[Exponent]) -> C {
        self.base.coeff_of(exps)
    }

    pub fn add(&self, other: &Self) -> Self {
        TruncSeries::new(&self.base + &other.base, self.caps.meet(&other.caps))
    }

    pub fn sub(&self, other: &Self) -> Self {
        TruncSeries::new(&self.base - &other.base, self.caps.meet(&other.caps))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let caps = self.caps.meet(&other.caps);
        let mut out = SparsePoly::zero(self.kind(), self.arity());
        for (ma, ca) in self.base.terms() {
            for (mb, cb) in other.base.terms() {
                let m = ma.mul(mb);
                if caps.admits(&m) {
                    out.add_term(m, ca.mul(cb));
                }
            }
        }
        TruncSeries { base: out, caps }
    }

    pub fn scale(&self, s: &C) -> Self {
        TruncSeries { base: self.base.scale(s), caps: self.caps }
    }

    /// Multiplies each monomial's coefficient by `f(total degree)`.
    pub fn scale_by_degree(&self, f: impl Fn(u32) -> C) -> Self {
        let mut out = SparsePoly::zero(self.kind(), self.arity());
        for (m, c) in self.base.terms() {
            out.add_term(m.clone(), c.mul(&f(m.degree())));
        }
        TruncSeries { base: out, caps: self.caps }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let arity = self.arity();
        let c0 = self.base.coeff(&Monomial::one(arity));
        if c0.is_zero() {
            return Err(HurwitzError::InvalidInput("series has no constant term to invert".into()));
        }
        let inv0 = C::one().div(&c0);
        // 1/(c0 (1 + u)) = (1/c0) sum (-u)^k; u has no constant term so the
        // sum stops once u^k leaves the total cap.
        let mut u = self.scale(&inv0);
        u.base.add_term(Monomial::one(arity), C::one().neg());
        let neg_u = u.scale(&C::one().neg());
        let one = TruncSeries::new(SparsePoly::one(self.kind(), arity), self.caps);
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..self.caps.total {
            power = power.mul(&neg_u);
            if power.base.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.scale(&inv0))
    }
}

/// A univariate substitution `t^k -> sum_n rows[k][n] s^n`.
pub(crate) struct Substitution<C> {
    rows: Vec<Vec<C>>,
    lowest: Vec<u32>,
}

impl<C: Coeff> Substitution<C> {
    pub(crate) fn new(rows: Vec<Vec<C>>) -> Self {
        let lowest = rows
            .iter()
            .map(|r| r.iter().position(|c| !c.is_zero()).unwrap_or(r.len()) as u32)
            .collect();
        Substitution { rows, lowest }
    }
}

/// Applies the same univariate substitution to every variable, discarding
/// monomials outside `caps` as early as their degree is known.
pub(crate) fn substitute_each_variable<C: Coeff>(
    p: &SparsePoly<C>,
    kind: VarKind,
    sub: &Substitution<C>,
    caps: Caps,
) -> SparsePoly<C> {
    let arity = p.arity();
    let mut current = p.clone();
    for i in 0..arity {
        let mut next = SparsePoly::zero(kind, arity);
        for (m, c) in current.terms() {
            let k = m.get(i) as usize;
            let row = &sub.rows[k];
            let done: u64 = (0..i).map(|l| m.get(l) as u64).sum();
            let pending: u64 = (i + 1..arity).map(|l| sub.lowest[m.get(l) as usize] as u64).sum();
            for (n, t) in row.iter().enumerate() {
                if t.is_zero() {
                    continue;
                }
                if n as u64 > caps.per_var as u64 || done + pending + n as u64 > caps.total as u64 {
                    break;
                }
                let mut mm = m.clone();
                mm.set(i, n as Exponent);
                next.add_term(mm, c.mul(t));
            }
        }
        current = next;
    }
    current.with_kind(kind)
}

fn bigint_coeff<C: Coeff>(v: BigInt) -> C {
    C::from_bigint(&v)
}

/// The tree function `w(x) = sum_{n>=1} n^(n-1)/n! x^n` truncated at `order`.
pub fn tree_series<C: Coeff>(order: u32) -> TruncSeries<C> {
    let coeffs: Vec<C> = (0..=order as u64)
        .map(|n| {
            if n == 0 {
                C::zero()
            } else {
                let num: C = bigint_coeff(num_traits::pow(BigInt::from(n), (n - 1) as usize));
                num.div(&bigint_coeff(factorial(n)))
            }
        })
        .collect();
    TruncSeries::new(SparsePoly::univariate(VarKind::X, &coeffs), Caps::per_var(order, 1))
}

/// Dense coefficients of `w(x)^k`, `k = 0..=max_power`, up to `x^order`.
fn tree_power_rows<C: Coeff>(max_power: usize, order: u32) -> Vec<Vec<C>> {
    let w = tree_series::<C>(order);
    let dense = |s: &TruncSeries<C>| -> Vec<C> {
        (0..=order).map(|n| s.coeff_of(&[n as Exponent])).collect()
    };
    let mut rows = Vec::with_capacity(max_power + 1);
    let mut power = TruncSeries::new(SparsePoly::one(VarKind::X, 1), Caps::per_var(order, 1));
    for _ in 0..=max_power {
        rows.push(dense(&power));
        power = power.mul(&w);
    }
    rows
}

fn y_to_w_rows<C: Coeff>(max_k: usize, cap: u32) -> Vec<Vec<C>> {
    (0..=max_k as u64)
        .map(|k| {
            (0..=cap as u64)
                .map(|j| {
                    if k == 0 {
                        if j == 0 { C::one() } else { C::zero() }
                    } else {
                        bigint_coeff(binomial(k + j - 1, j))
                    }
                })
                .collect()
        })
        .collect()
}

/// Substitutes `y_i = sum_{k>=0} w_i^k` in every variable, truncated at
/// the per-variable cap.
pub fn expand_y_to_w<C: Coeff>(p: &SparsePoly<C>, per_var_cap: u32) -> Result<TruncSeries<C>> {
    expand_y_to_w_capped(p, Caps::per_var(per_var_cap, p.arity()))
}

/// [`expand_y_to_w`] with arbitrary caps. Refuses when the caps cannot see
/// every monomial of `p` (a later fit would be underdetermined).
pub fn expand_y_to_w_capped<C: Coeff>(p: &SparsePoly<C>, caps: Caps) -> Result<TruncSeries<C>> {
    assert_eq!(p.kind(), VarKind::Y, "expand_y_to_w expects a y-polynomial");
    let per_var = p.max_degree_per_var().unwrap_or(0) as u32;
    let total = p.total_degree().unwrap_or(0);
    if per_var > caps.per_var {
        return Err(HurwitzError::CapBelowDegree { cap: caps.per_var, degree: per_var });
    }
    if total > caps.total {
        return Err(HurwitzError::CapBelowDegree { cap: caps.total, degree: total });
    }
    let sub = Substitution::new(y_to_w_rows::<C>(per_var as usize, caps.per_var));
    Ok(TruncSeries { base: substitute_each_variable(p, VarKind::W, &sub, caps), caps })
}

/// Substitutes `w_i = w(x_i)` into a w-series, giving its x-jet to the
/// requested per-variable order.
pub fn compose_with_tree<C: Coeff>(s: &TruncSeries<C>, order: u32) -> Result<TruncSeries<C>> {
    assert_eq!(s.kind(), VarKind::W, "compose_with_tree expects a w-series");
    if order > s.per_var_cap() {
        return Err(HurwitzError::OrderExceedsCap { requested: order, available: s.per_var_cap() });
    }
    let arity = s.arity();
    let caps = Caps { per_var: order, total: s.total_cap().min(order.saturating_mul(arity as u32)) };
    let max_k = s.base.max_degree_per_var().unwrap_or(0) as usize;
    let sub = Substitution::new(tree_power_rows::<C>(max_k, order));
    Ok(TruncSeries { base: substitute_each_variable(&s.base, VarKind::X, &sub, caps), caps })
}

/// Inverse of [`compose_with_tree`]: substitutes `x_i = w_i e^{-w_i}`.
pub fn compose_with_inverse_tree<C: Coeff>(s: &TruncSeries<C>) -> TruncSeries<C> {
    assert_eq!(s.kind(), VarKind::X, "expects an x-series");
    let caps = s.caps();
    let max_k = s.base.max_degree_per_var().unwrap_or(0) as u64;
    let rows: Vec<Vec<C>> = (0..=max_k)
        .map(|k| {
            (0..=caps.per_var as u64)
                .map(|n| {
                    if n < k {
                        return C::zero();
                    }
                    let i = n - k;
                    // (-k)^i / i!
                    let mag: C = bigint_coeff(num_traits::pow(BigInt::from(k), i as usize));
                    let mag = mag.div(&bigint_coeff(factorial(i)));
                    if i % 2 == 1 { mag.neg() } else { mag }
                })
                .collect()
        })
        .collect();
    let sub = Substitution::new(rows);
    TruncSeries { base: substitute_each_variable(&s.base, VarKind::W, &sub, caps), caps }
}

/// `w^j = v^j (1+v)^{-j}` per variable.
fn w_to_v<C: Coeff>(p: &SparsePoly<C>, caps: Caps) -> SparsePoly<C> {
    let max_j = p.max_degree_per_var().unwrap_or(0) as u64;
    let rows: Vec<Vec<C>> = (0..=max_j)
        .map(|j| {
            (0..=caps.per_var as u64)
                .map(|n| {
                    if j == 0 {
                        return if n == 0 { C::one() } else { C::zero() };
                    }
                    if n < j {
                        return C::zero();
                    }
                    let i = n - j;
                    let c: C = bigint_coeff(binomial(j + i - 1, i));
                    if i % 2 == 1 { c.neg() } else { c }
                })
                .collect()
        })
        .collect();
    substitute_each_variable(p, VarKind::Y, &Substitution::new(rows), caps)
}

/// `v^k = (y - 1)^k` per variable; exact.
pub(crate) fn v_to_y<C: Coeff>(p: &SparsePoly<C>) -> SparsePoly<C> {
    let max_k = p.max_degree_per_var().unwrap_or(0) as u64;
    let rows: Vec<Vec<C>> = (0..=max_k)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let c: C = bigint_coeff(binomial(k, i));
                    if (k - i) % 2 == 1 { c.neg() } else { c }
                })
                .collect()
        })
        .collect();
    let caps = Caps { per_var: u32::MAX, total: u32::MAX };
    substitute_each_variable(p, VarKind::Y, &Substitution::new(rows), caps)
}

/// Recovers the y-polynomial within `bound` whose w-expansion matches `s`
/// on every monomial inside the caps of `s`.
pub fn fit_y_poly<C: Coeff>(s: &TruncSeries<C>, m: usize, bound: DegreeBound) -> Result<SparsePoly<C>> {
    assert_eq!(s.kind(), VarKind::W, "fit_y_poly expects a w-series");
    assert_eq!(s.arity(), m, "series arity differs from m");
    let caps = s.caps();
    if !bound.covered_by(&caps, m) {
        return Err(HurwitzError::Underdetermined {
            per_var: caps.per_var,
            total: caps.total,
            bound: bound.value(),
        });
    }
    let v = w_to_v(&s.base, caps);
    if let Some((mono, c)) = v.terms().find(|(mono, _)| !bound.admits(mono)) {
        return Err(HurwitzError::FitInconsistent {
            bound: bound.value(),
            monomial: mono.exponents().to_vec(),
            coeff: c.to_string(),
        });
    }
    Ok(v_to_y(&v))
}

/// `[x^n] y(x)^k` for `k <= max_power`, `n <= order`, where
/// `y = (1 - w(x))^{-1}`.
pub fn y_power_x_coefficients<C: Coeff>(max_power: usize, order: u32) -> Vec<Vec<C>> {
    let w_rows = tree_power_rows::<C>(order as usize, order);
    let yw = y_to_w_rows::<C>(max_power, order);
    // [x^n] y^k = sum_j C(k+j-1, j) [x^n] w^j
    yw.iter()
        .map(|row| {
            (0..=order as usize)
                .map(|n| {
                    let mut acc = C::zero();
                    for (j, cj) in row.iter().enumerate().take(n + 1) {
                        if !cj.is_zero() && !w_rows[j][n].is_zero() {
                            acc.add_assign(&cj.mul(&w_rows[j][n]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}
