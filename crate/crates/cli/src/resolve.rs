//! Picks a route for `f_m^(g)(alpha)` and turns it into a full count.

use std::path::PathBuf;

use hurwitz_core::algebra::symmetric::evaluate_e_poly;
use hurwitz_core::engine::{Engine, PsiRep};
use hurwitz_core::engine::store::DEFAULT_MAX_DEGREE;
use hurwitz_core::formulas::{
    f1_simple, f1_two, f_from_c, f_genus0, f_one_part, f_table, hurwitz, m_max, HurwitzCount,
};
use hurwitz_core::oracle::table::Budget;
use hurwitz_core::oracle::{length_for_genus, Oracle};
use hurwitz_core::{EPoly, HurwitzError, Partition, Rational, Result};

use crate::args::{OracleArgs, RouteChoice};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Engine,
    Genus0,
    OnePart,
    TwoPart,
    Simple,
    Table,
    Oracle,
}

impl Route {
    pub fn label(self) -> &'static str {
        match self {
            Route::Engine => "engine",
            Route::Genus0 => "formula:genus0",
            Route::OnePart => "formula:one-part",
            Route::TwoPart => "formula:two-part",
            Route::Simple => "formula:simple",
            Route::Table => "formula:table",
            Route::Oracle => "oracle",
        }
    }
}

pub struct Resolved {
    pub count: HurwitzCount,
    pub route: Route,
}

pub struct Resolver {
    pub engine: Engine,
    budget: OracleArgs,
    oracle: Option<(u32, u32, Oracle)>,
}

fn int(v: u32) -> Rational {
    Rational::from_integer(v.into())
}

fn unavailable(what: String) -> HurwitzError {
    HurwitzError::Unavailable(what)
}

impl Resolver {
    pub fn new(cache_dir: Option<PathBuf>, budget: OracleArgs) -> Self {
        let engine = match cache_dir {
            Some(dir) => Engine::with_cache_dir(dir),
            None => Engine::new(),
        };
        Resolver { engine, budget, oracle: None }
    }

    /// Cached on disk or in memory, or within the default degree budget.
    pub fn engine_available(&self, m: usize, g: usize) -> bool {
        if m == 0 || (g == 0 && m < 3) {
            return false;
        }
        self.engine.cell(m, g).is_some_and(|c| c.extraction.is_some())
            || self.engine.cached_on_disk().contains(&(m, g))
            || PsiRep::total_degree_estimate(m, g) <= DEFAULT_MAX_DEGREE
    }

    pub fn engine_poly(&mut self, m: usize, g: usize) -> Result<EPoly> {
        Ok(self.engine.extract(m, g)?.f_e.clone())
    }

    /// The closed form or tabulated polynomial covering `alpha`, if any.
    pub fn formula(alpha: &Partition, g: u32) -> Option<(Rational, Route)> {
        let n = alpha.n() as u64;
        let m = alpha.len();
        if g == 0 {
            return Some((f_genus0(alpha), Route::Genus0));
        }
        if m == 1 {
            return Some((f_one_part(n, g), Route::OnePart));
        }
        if g == 1 && m == 2 {
            let r = alpha.parts()[1] as u64;
            return f1_two(n, r).ok().map(|f| (f, Route::TwoPart));
        }
        if g == 1 && alpha.parts().iter().all(|&p| p == 1) {
            return Some((f1_simple(n), Route::Simple));
        }
        if m_max(g).is_some_and(|top| m <= top) {
            let poly = f_table(g, m).ok()?;
            let point: Vec<Rational> = alpha.parts().iter().map(|&p| int(p)).collect();
            return Some((evaluate_e_poly(&poly, &point), Route::Table));
        }
        None
    }

    fn oracle_for(&mut self, n: u32, j: u32) -> Result<&Oracle> {
        let fits = matches!(&self.oracle, Some((on, oj, _)) if *on >= n && *oj >= j);
        if !fits {
            let (on, oj) = match &self.oracle {
                Some((on, oj, _)) => ((*on).max(n), (*oj).max(j)),
                None => (n, j),
            };
            let budget = Budget { n_max: self.budget.n_max, j_max: self.budget.j_max };
            let oracle = Oracle::with_budget(on, oj, budget)?;
            self.oracle = Some((on, oj, oracle));
        }
        Ok(&self.oracle.as_ref().unwrap().2)
    }

    pub fn oracle_available(&self, alpha: &Partition, g: u32) -> bool {
        alpha.n() <= self.budget.n_max && length_for_genus(alpha, g) <= self.budget.j_max
    }

    pub fn oracle_f(&mut self, alpha: &Partition, g: u32) -> Result<Rational> {
        let j = length_for_genus(alpha, g);
        let c = self.oracle_for(alpha.n(), j)?.c_count(alpha, g)?;
        Ok(f_from_c(alpha, g, &c))
    }

    fn via_engine(&mut self, alpha: &Partition, g: u32) -> Result<Rational> {
        let poly = self.engine_poly(alpha.len(), g as usize)?;
        let point: Vec<Rational> = alpha.parts().iter().map(|&p| int(p)).collect();
        Ok(evaluate_e_poly(&poly, &point))
    }

    pub fn resolve(&mut self, alpha: &Partition, g: u32, choice: RouteChoice) -> Result<Resolved> {
        let (f, route) = match choice {
            RouteChoice::Engine => (self.via_engine(alpha, g)?, Route::Engine),
            RouteChoice::Formula => Self::formula(alpha, g).ok_or_else(|| {
                unavailable(format!("no closed form or table covers alpha = {alpha}, g = {g}"))
            })?,
            RouteChoice::Oracle => (self.oracle_f(alpha, g)?, Route::Oracle),
            RouteChoice::Auto => self.auto(alpha, g)?,
        };
        Ok(Resolved { count: hurwitz(alpha, g, f)?, route })
    }

    fn auto(&mut self, alpha: &Partition, g: u32) -> Result<(Rational, Route)> {
        let mut last = None;
        if self.engine_available(alpha.len(), g as usize) {
            match self.via_engine(alpha, g) {
                Ok(f) => return Ok((f, Route::Engine)),
                Err(e @ HurwitzError::Budget { .. }) => last = Some(e),
                Err(e) => return Err(e),
            }
        }
        if let Some(hit) = Self::formula(alpha, g) {
            return Ok(hit);
        }
        if self.oracle_available(alpha, g) {
            return Ok((self.oracle_f(alpha, g)?, Route::Oracle));
        }
        Err(last.unwrap_or_else(|| {
            unavailable(format!(
                "alpha = {alpha}, g = {g} is outside the engine degree budget, the formulas and the oracle budget"
            ))
        }))
    }
}
