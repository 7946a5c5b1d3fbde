//! Factorization tables and the transitivity sieve.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::scalar::{factorial, to_integer, Rational};
use crate::error::{HurwitzError, Result};
use crate::partition::Partition;

use super::classes::{cutjoin_step, ClassVector};

pub const DEFAULT_N_MAX: u32 = 8;
pub const DEFAULT_J_MAX: u32 = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    All,
    Transitive,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::All => "all",
            Mode::Transitive => "transitive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub n_max: u32,
    pub j_max: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { n_max: DEFAULT_N_MAX, j_max: DEFAULT_J_MAX }
    }
}

/// Counts per fixed representative, indexed by `(n, j, alpha)`.
///
/// Every partition of every `n <= n_max` appears for every `j <= j_max`,
/// zeros included, so completeness can be checked.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationTable {
    pub mode: Mode,
    pub n_max: u32,
    pub j_max: u32,
    pub entries: BTreeMap<(u32, u32, Partition), BigInt>,
}

impl FactorizationTable {
    pub fn get(&self, n: u32, j: u32, alpha: &Partition) -> Option<&BigInt> {
        self.entries.get(&(n, j, alpha.clone()))
    }

    /// Checks that all partitions of `n` are present at step `j`.
    pub fn check_complete(&self, n: u32, j: u32) -> Result<()> {
        for alpha in Partition::all(n) {
            if !self.entries.contains_key(&(n, j, alpha)) {
                return Err(HurwitzError::IncompleteTable { n: n as usize, j: j as usize });
            }
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,j,partition,mode,count\n");
        for ((n, j, alpha), count) in &self.entries {
            out.push_str(&format!("{n},{j},{},{},{count}\n", alpha.dashed(), self.mode));
        }
        out
    }
}

fn check_budget(n_max: u32, j_max: u32, budget: Budget) -> Result<()> {
    let advice = "raise the budget explicitly if the cost is acceptable";
    if n_max > budget.n_max {
        return Err(HurwitzError::Budget {
            what: "table n",
            requested: n_max as u64,
            limit: budget.n_max as u64,
            advice,
        });
    }
    if j_max > budget.j_max {
        return Err(HurwitzError::Budget {
            what: "table j",
            requested: j_max as u64,
            limit: budget.j_max as u64,
            advice,
        });
    }
    Ok(())
}

/// All-mode table from the class-vector recursion, with the default budget.
pub fn all_counts(n_max: u32, j_max: u32) -> Result<FactorizationTable> {
    all_counts_with_budget(n_max, j_max, Budget::default())
}

pub fn all_counts_with_budget(n_max: u32, j_max: u32, budget: Budget) -> Result<FactorizationTable> {
    check_budget(n_max, j_max, budget)?;
    let mut entries = BTreeMap::new();
    for n in 1..=n_max {
        let mut v = ClassVector::identity(n);
        for j in 0..=j_max {
            if j > 0 {
                let mass = v.mass();
                v = cutjoin_step(&v);
                let expected = mass * crate::algebra::scalar::binomial(n as u64, 2);
                if v.mass() != expected {
                    return Err(HurwitzError::Inconsistent(format!(
                        "mass not conserved at n={n}, j={j}"
                    )));
                }
            }
            for alpha in Partition::all(n) {
                let total = v.count(&alpha);
                let size = alpha.class_size();
                if !(&total % &size).is_zero() {
                    return Err(HurwitzError::Inconsistent(format!(
                        "class total for {alpha} at j={j} not divisible by the class size"
                    )));
                }
                entries.insert((n, j, alpha), total / size);
            }
        }
    }
    Ok(FactorizationTable { mode: Mode::All, n_max, j_max, entries })
}

/// Degree-`n` component of a labelled series: `(j, alpha) -> coefficient`.
type Component = BTreeMap<(u32, Partition), Rational>;

fn components(table: &FactorizationTable) -> Result<Vec<Component>> {
    let mut out = vec![Component::new()];
    for n in 1..=table.n_max {
        let n_fact = factorial(n as u64);
        let mut comp = Component::new();
        for j in 0..=table.j_max {
            table.check_complete(n, j)?;
            let j_fact = factorial(j as u64);
            for alpha in Partition::all(n) {
                let count = &table.entries[&(n, j, alpha.clone())];
                if count.is_zero() {
                    continue;
                }
                let scale = Rational::new(alpha.class_size(), &n_fact * &j_fact);
                comp.insert((j, alpha), scale * Rational::from_integer(count.clone()));
            }
        }
        out.push(comp);
    }
    Ok(out)
}

fn product_into(acc: &mut Component, a: &Component, b: &Component, weight: &Rational, j_max: u32) {
    for ((ja, pa), ca) in a {
        for ((jb, pb), cb) in b {
            let j = ja + jb;
            if j > j_max {
                continue;
            }
            let term = ca * cb * weight;
            let slot = acc.entry((j, pa.union(pb))).or_insert_with(Rational::zero);
            *slot += term;
        }
    }
}

fn from_components(
    comps: &[Component],
    mode: Mode,
    n_max: u32,
    j_max: u32,
) -> Result<FactorizationTable> {
    let mut entries = BTreeMap::new();
    for n in 1..=n_max {
        let n_fact = factorial(n as u64);
        for j in 0..=j_max {
            let j_fact = factorial(j as u64);
            for alpha in Partition::all(n) {
                let coeff = comps[n as usize]
                    .get(&(j, alpha.clone()))
                    .cloned()
                    .unwrap_or_else(Rational::zero);
                let value = coeff * Rational::new(&n_fact * &j_fact, alpha.class_size());
                let count = to_integer(&value).filter(|c| *c >= BigInt::zero()).ok_or_else(|| {
                    HurwitzError::Inconsistent(format!(
                        "non-integral {mode} count {value} at n={n}, j={j}, alpha={alpha}"
                    ))
                })?;
                entries.insert((n, j, alpha), count);
            }
        }
    }
    Ok(FactorizationTable { mode, n_max, j_max, entries })
}

/// Transitive counts as the logarithm of the labelled series built from the
/// All-mode table, computed with `G_n = F_n - (1/n) sum_{k<n} k G_k F_{n-k}`.
pub fn transitive_counts(all: &FactorizationTable) -> Result<FactorizationTable> {
    if all.mode != Mode::All {
        return Err(HurwitzError::InvalidInput("transitive sieve needs an All-mode table".into()));
    }
    let f = components(all)?;
    let mut g: Vec<Component> = vec![Component::new()];
    for n in 1..=all.n_max as usize {
        let mut acc = Component::new();
        for k in 1..n {
            let w = -Rational::new(BigInt::from(k), BigInt::from(n));
            product_into(&mut acc, &g[k], &f[n - k], &w, all.j_max);
        }
        for (key, c) in &f[n] {
            *acc.entry(key.clone()).or_insert_with(Rational::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        g.push(acc);
    }
    from_components(&g, Mode::Transitive, all.n_max, all.j_max)
}

/// Inverse of [`transitive_counts`]: `F_n = G_n + (1/n) sum_{k<n} k G_k F_{n-k}`.
pub fn exponentiate(transitive: &FactorizationTable) -> Result<FactorizationTable> {
    if transitive.mode != Mode::Transitive {
        return Err(HurwitzError::InvalidInput("exponentiation needs a Transitive table".into()));
    }
    let g = components(transitive)?;
    let mut f: Vec<Component> = vec![Component::new()];
    for n in 1..=transitive.n_max as usize {
        let mut acc = g[n].clone();
        for k in 1..n {
            let w = Rational::new(BigInt::from(k), BigInt::from(n));
            product_into(&mut acc, &g[k], &f[n - k], &w, transitive.j_max);
        }
        acc.retain(|_, c| !c.is_zero());
        f.push(acc);
    }
    from_components(&f, Mode::All, transitive.n_max, transitive.j_max)
}
