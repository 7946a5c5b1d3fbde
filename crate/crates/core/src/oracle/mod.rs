//! Ground-truth counts of ordered transitive factorizations into
//! transpositions.

pub mod classes;
pub mod dfs;
pub mod table;

use num_bigint::BigInt;

use crate::algebra::scalar::{factorial, Rational};
use crate::error::{HurwitzError, Result};
use crate::partition::Partition;

pub use classes::{cutjoin_step, ClassVector};
pub use dfs::dfs_count;
pub use table::{
    all_counts, all_counts_with_budget, exponentiate, transitive_counts, Budget,
    FactorizationTable, Mode,
};

/// Number of transpositions for genus `g`: `j = n + m + 2g - 2`.
pub fn length_for_genus(alpha: &Partition, g: u32) -> u32 {
    alpha.min_length() + 2 * g
}

/// Holds a pair of All/Transitive tables and answers count queries.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub all: FactorizationTable,
    pub transitive: FactorizationTable,
}

impl Oracle {
    pub fn new(n_max: u32, j_max: u32) -> Result<Self> {
        Self::with_budget(n_max, j_max, Budget::default())
    }

    pub fn with_budget(n_max: u32, j_max: u32, budget: Budget) -> Result<Self> {
        let all = all_counts_with_budget(n_max, j_max, budget)?;
        let transitive = transitive_counts(&all)?;
        Ok(Oracle { all, transitive })
    }

    /// `c_g(alpha)`: transitive factorizations of a fixed permutation of
    /// type `alpha` into `n + m + 2g - 2` transpositions.
    pub fn c_count(&self, alpha: &Partition, g: u32) -> Result<BigInt> {
        let j = length_for_genus(alpha, g);
        if alpha.n() > self.transitive.n_max || j > self.transitive.j_max {
            return Err(HurwitzError::Budget {
                what: "oracle (n, j)",
                requested: j as u64,
                limit: self.transitive.j_max as u64,
                advice: "build an oracle with larger tables",
            });
        }
        self.transitive
            .get(alpha.n(), j, alpha)
            .cloned()
            .ok_or(HurwitzError::IncompleteTable { n: alpha.n() as usize, j: j as usize })
    }

    /// `mu_m^(g)(alpha) = |C_alpha| c_g(alpha) / n!`.
    pub fn mu(&self, alpha: &Partition, g: u32) -> Result<Rational> {
        let c = self.c_count(alpha, g)?;
        Ok(mu_from_c(alpha, &c))
    }
}

pub fn mu_from_c(alpha: &Partition, c: &BigInt) -> Rational {
    Rational::new(alpha.class_size() * c, factorial(alpha.n() as u64))
}

/// One-shot `c_g(alpha)` with tables sized to the query.
pub fn c_count(alpha: &Partition, g: u32) -> Result<BigInt> {
    Oracle::new(alpha.n(), length_for_genus(alpha, g))?.c_count(alpha, g)
}

pub fn mu(alpha: &Partition, g: u32) -> Result<Rational> {
    Oracle::new(alpha.n(), length_for_genus(alpha, g))?.mu(alpha, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn c_count_examples() {
        assert_eq!(c_count(&p("2"), 1).unwrap(), BigInt::from(1));
        assert_eq!(c_count(&p("3"), 1).unwrap(), BigInt::from(27));
        assert_eq!(c_count(&p("1,1,1"), 0).unwrap(), BigInt::from(24));
        assert_eq!(mu(&p("1,1,1"), 0).unwrap(), Rational::from_integer(4.into()));
        assert_eq!(mu(&p("2,1"), 1).unwrap(), Rational::from_integer(40.into()));
    }

    #[test]
    fn out_of_budget() {
        assert!(c_count(&p("9"), 0).is_err());
        let o = Oracle::new(3, 4).unwrap();
        assert!(matches!(o.c_count(&p("2,1"), 1), Err(HurwitzError::Budget { .. })));
    }
}
