//! Distribution of products of transpositions over conjugacy classes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::partition::Partition;

/// Number of transposition tuples whose product lies in each class of
/// `S_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassVector {
    pub n: u32,
    pub counts: BTreeMap<Partition, BigInt>,
}

impl ClassVector {
    /// The empty product: one tuple, in the identity class.
    pub fn identity(n: u32) -> Self {
        let mut counts = BTreeMap::new();
        counts.insert(Partition::ones(n), BigInt::from(1));
        ClassVector { n, counts }
    }

    pub fn mass(&self) -> BigInt {
        self.counts.values().sum()
    }

    pub fn count(&self, alpha: &Partition) -> BigInt {
        self.counts.get(alpha).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// Right-multiplies every tuple by each transposition once more.
///
/// For a permutation of cycle type `lambda`, a join of two distinct cycles
/// of lengths `a` and `b` is realised by `a * b` transpositions; a cut of a
/// `c`-cycle into lengths `(a, c - a)` by `c` transpositions, or `c / 2`
/// when `a = c - a`.
pub fn cutjoin_step(v: &ClassVector) -> ClassVector {
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    let mut push = |parts: Vec<u32>, amount: BigInt| {
        let p = Partition::new(parts).expect("cut/join keeps parts positive");
        *out.entry(p).or_insert_with(BigInt::zero) += amount;
    };
    for (lambda, count) in &v.counts {
        if count.is_zero() {
            continue;
        }
        let parts = lambda.parts();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                let (a, b) = (parts[i], parts[j]);
                let mut next: Vec<u32> = parts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &p)| p)
                    .collect();
                next.push(a + b);
                push(next, count * BigInt::from(a * b));
            }
        }
        for (i, &c) in parts.iter().enumerate() {
            for a in 1..=c / 2 {
                let b = c - a;
                let mult = if a == b { c / 2 } else { c };
                let mut next: Vec<u32> =
                    parts.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &p)| p).collect();
                next.push(a);
                next.push(b);
                push(next, count * BigInt::from(mult));
            }
        }
    }
    ClassVector { n: v.n, counts: out }
}
