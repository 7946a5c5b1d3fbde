//! Integer partitions, used as ramification types.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::scalar::factorial;
use crate::error::HurwitzError;

/// A partition `alpha` of `n`, parts stored weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; every part must be positive and there must be at
    /// least one.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, HurwitzError> {
        if parts.is_empty() {
            return Err(HurwitzError::InvalidInput("partition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(HurwitzError::InvalidInput("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// `1^n`.
    pub fn ones(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `n = |alpha|`.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts `m = l(alpha)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Minimal number of transpositions in a transitive factorization,
    /// `n + m - 2`.
    pub fn min_length(&self) -> u32 {
        self.n() + self.len() as u32 - 2
    }

    /// Multiplicities `(part, count)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Size of the conjugacy class `|C_alpha| = n! / (prod alpha_j prod mult_k!)`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.n() as u64) / self.centralizer_order()
    }

    /// `z_alpha = prod alpha_j * prod mult_k!`.
    pub fn centralizer_order(&self) -> BigInt {
        let parts: BigInt = self.parts.iter().map(|&p| BigInt::from(p)).product();
        let mults: BigInt = self.multiplicities().iter().map(|&(_, c)| factorial(c as u64)).product();
        parts * mults
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts).expect("union of partitions")
    }

    /// Parts joined with `-`, e.g. `3-1-1`.
    pub fn dashed(&self) -> String {
        self.parts.iter().map(u32::to_string).collect::<Vec<_>>().join("-")
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(rest: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: current.clone() });
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                current.push(p);
                rec(rest - p, p, current, out);
                current.pop();
            }
        }
        if n > 0 {
            rec(n, n, &mut current, &mut out);
        }
        out
    }

    /// Partitions of `n` with exactly `m` parts.
    pub fn with_length(n: u32, m: usize) -> Vec<Partition> {
        // parts in descending order, each part at most `max`
        fn rec(rest: u32, slots: usize, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if slots == 0 {
                if rest == 0 {
                    out.push(Partition { parts: current.clone() });
                }
                return;
            }
            let hi = max.min(rest + 1 - slots as u32);
            let lo = rest.div_ceil(slots as u32);
            for p in (lo..=hi).rev() {
                current.push(p);
                rec(rest - p, slots - 1, p, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        if m == 0 || (m as u32) > n {
            return out;
        }
        rec(n, m, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = HurwitzError;

    /// Accepts comma- or dash-separated parts in any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split([',', '-'])
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| HurwitzError::InvalidInput(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let a: Partition = "1,2".parse().unwrap();
        assert_eq!(a.parts(), &[2, 1]);
        assert_eq!((a.n(), a.len(), a.min_length()), (3, 2, 3));
        assert_eq!(a.class_size(), BigInt::from(3));
        assert_eq!(Partition::ones(3).class_size(), BigInt::from(1));
        assert_eq!("2-2".parse::<Partition>().unwrap().class_size(), BigInt::from(3));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::with_length(6, 3).len(), 3);
        for n in 0..=12 {
            for m in 0..=n as usize + 1 {
                let filtered: Vec<_> = Partition::all(n).into_iter().filter(|p| p.len() == m).collect();
                assert_eq!(Partition::with_length(n, m), filtered, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=7 {
            let total: BigInt = Partition::all(n).iter().map(Partition::class_size).sum();
            assert_eq!(total, factorial(n as u64));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!("".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }
}
