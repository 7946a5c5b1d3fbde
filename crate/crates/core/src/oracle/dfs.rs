//! Brute-force enumeration of transposition tuples.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{HurwitzError, Result};
use crate::partition::Partition;

pub const DFS_MAX_N: u32 = 4;
pub const DFS_MAX_J: u32 = 9;

/// The fixed representative `(1..a_1)(a_1+1..a_1+a_2)...` as an image
/// array on `0..n`.
pub fn representative(alpha: &Partition) -> Vec<usize> {
    let n = alpha.n() as usize;
    let mut perm = vec![0; n];
    let mut start = 0;
    for &len in alpha.parts() {
        let len = len as usize;
        for k in 0..len {
            perm[start + k] = start + (k + 1) % len;
        }
        start += len;
    }
    perm
}

struct Components {
    parent: Vec<usize>,
    count: usize,
}

impl Components {
    fn new(n: usize) -> Self {
        Components { parent: (0..n).collect(), count: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.count -= 1;
        }
    }
}

/// Counts `j`-tuples of transpositions of `{1..n}` whose ordered product is
/// the fixed representative of `alpha`, optionally only those generating a
/// transitive group (connected monodromy graph).
pub fn dfs_count(alpha: &Partition, j: u32, require_transitive: bool) -> Result<BigInt> {
    let n = alpha.n();
    if n > DFS_MAX_N {
        return Err(HurwitzError::Budget {
            what: "dfs n",
            requested: n as u64,
            limit: DFS_MAX_N as u64,
            advice: "use the class-vector route",
        });
    }
    if j > DFS_MAX_J {
        return Err(HurwitzError::Budget {
            what: "dfs j",
            requested: j as u64,
            limit: DFS_MAX_J as u64,
            advice: "use the class-vector route",
        });
    }
    let n = n as usize;
    let target = representative(alpha);
    let transpositions: Vec<(usize, usize)> =
        (0..n).flat_map(|s| (s + 1..n).map(move |t| (s, t))).collect();
    if j == 0 {
        let identity: Vec<usize> = (0..n).collect();
        let ok = target == identity && (!require_transitive || n == 1);
        return Ok(BigInt::from(ok as u64));
    }

    fn rec(
        depth: u32,
        j: u32,
        prod: &mut Vec<usize>,
        edges: &mut Vec<(usize, usize)>,
        ts: &[(usize, usize)],
        target: &[usize],
        transitive: bool,
    ) -> u64 {
        if depth == j {
            if prod.as_slice() != target {
                return 0;
            }
            if transitive {
                let mut c = Components::new(prod.len());
                for &(s, t) in edges.iter() {
                    c.union(s, t);
                }
                return (c.count == 1) as u64;
            }
            return 1;
        }
        let mut total = 0;
        for &(s, t) in ts {
            // prod <- prod * (s t): images at s and t swap
            prod.swap(s, t);
            edges.push((s, t));
            total += rec(depth + 1, j, prod, edges, ts, target, transitive);
            edges.pop();
            prod.swap(s, t);
        }
        total
    }

    let total: u64 = transpositions
        .par_iter()
        .map(|&(s, t)| {
            let mut prod: Vec<usize> = (0..n).collect();
            prod.swap(s, t);
            let mut edges = vec![(s, t)];
            rec(1, j, &mut prod, &mut edges, &transpositions, &target, require_transitive)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum();
    Ok(BigInt::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn representative_cycles() {
        assert_eq!(representative(&p("2,1")), vec![1, 0, 2]);
        assert_eq!(representative(&p("3")), vec![1, 2, 0]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(dfs_count(&p("3"), 2, true).unwrap(), BigInt::from(3));
        assert_eq!(dfs_count(&p("1,1"), 4, true).unwrap(), BigInt::from(1));
        assert_eq!(dfs_count(&p("2,1"), 5, true).unwrap(), BigInt::from(80));
        assert_eq!(dfs_count(&p("2,1"), 5, false).unwrap(), BigInt::from(81));
        assert_eq!(dfs_count(&p("3"), 4, false).unwrap(), BigInt::from(27));
    }

    #[test]
    fn guard_refuses_large_inputs() {
        assert!(matches!(dfs_count(&p("5"), 4, true), Err(HurwitzError::Budget { .. })));
        assert!(matches!(dfs_count(&p("2"), 10, true), Err(HurwitzError::Budget { .. })));
    }
}
