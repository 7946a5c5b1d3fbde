//! Memoised computation of `Psi_m^(g)` with an optional on-disk cache.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::json::PolyJson;
use crate::algebra::poly::VarKind;
use crate::error::{HurwitzError, Result};
use crate::{EPoly, YPoly};

use super::assemble::{assemble_k, dependencies, PsiLookup};
use super::extract::{extract_f, Extraction, ResidualEntry};
use super::psi::{psi0_base, PsiRep};
use super::solve::{solve_pde, SolveReport};

pub const CACHE_VERSION: u32 = 1;

/// Largest expected total y-degree the engine will attempt unless raised.
pub const DEFAULT_MAX_DEGREE: u32 = 24;

/// The cells of the published tables: `g = 1, m <= 6` and
/// `g = 2..4, m <= 6 - g`.
pub fn default_cells() -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (1..=6).map(|m| (m, 1)).collect();
    for g in 2..=4 {
        out.extend((1..=6 - g).map(|m| (m, g)));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    m: usize,
    g: usize,
    psi: PolyJson,
    f_e: Option<PolyJson>,
    w_residual: Vec<ResidualEntry>,
}

#[derive(Clone, Debug)]
pub struct Cell {
    pub psi: PsiRep,
    pub solve: Option<SolveReport>,
    pub extraction: Option<Extraction>,
    /// Set when loaded from disk rather than computed in this process.
    pub from_disk: bool,
}

#[derive(Debug, Default)]
pub struct Engine {
    cells: BTreeMap<(usize, usize), Cell>,
    psi: BTreeMap<(usize, usize), PsiRep>,
    cache_dir: Option<PathBuf>,
    max_degree: Option<u32>,
}

impl PsiLookup for Engine {
    fn lookup(&self, m: usize, g: usize) -> Option<&YPoly> {
        self.psi.get(&(m, g)).map(|p| &p.poly)
    }
}

fn cache_path(dir: &Path, m: usize, g: usize) -> PathBuf {
    dir.join(format!("psi_m{m}_g{g}.json"))
}

impl Engine {
    pub fn new() -> Self {
        Engine::default()
    }

    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Self {
        Engine { cache_dir: Some(dir.into()), ..Engine::default() }
    }

    pub fn set_max_degree(&mut self, d: u32) {
        self.max_degree = Some(d);
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    /// Cells available so far, in order.
    pub fn computed(&self) -> Vec<(usize, usize)> {
        self.cells.keys().copied().collect()
    }

    pub fn cell(&self, m: usize, g: usize) -> Option<&Cell> {
        self.cells.get(&(m, g))
    }

    fn check_domain(&self, m: usize, g: usize) -> Result<()> {
        if m == 0 || (g == 0 && m < 3) {
            return Err(HurwitzError::InvalidInput(format!(
                "Psi_{m}^({g}) is defined for g >= 1, m >= 1 or g = 0, m >= 3"
            )));
        }
        let limit = self.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
        let bound = PsiRep::total_degree_estimate(m, g);
        if bound > limit {
            return Err(HurwitzError::Budget {
                what: "y-degree bound",
                requested: bound as u64,
                limit: limit as u64,
                advice: "raise the degree limit; cells computed so far stay cached",
            });
        }
        Ok(())
    }

    fn load(&self, m: usize, g: usize) -> Option<Cell> {
        let path = cache_path(self.cache_dir.as_ref()?, m, g);
        let text = fs::read_to_string(path).ok()?;
        let file: CacheFile = serde_json::from_str(&text).ok()?;
        if file.version != CACHE_VERSION || file.m != m || file.g != g {
            return None;
        }
        let poly = YPoly::try_from(&file.psi).ok()?;
        if poly.kind() != VarKind::Y || poly.arity() != m {
            return None;
        }
        let psi = PsiRep::new(m, g, poly);
        psi.check_invariants().ok()?;
        let extraction = match file.f_e {
            Some(f) => {
                let f_e = EPoly::try_from(&f).ok()?;
                let degree = f_e.weighted_degree();
                Some(Extraction { m, g, f_e, w_residual: file.w_residual, points: 0, degree })
            }
            None => None,
        };
        Some(Cell { psi, solve: None, extraction, from_disk: true })
    }

    fn store(&self, cell: &Cell) -> Result<()> {
        let Some(dir) = &self.cache_dir else { return Ok(()) };
        fs::create_dir_all(dir)?;
        let file = CacheFile {
            version: CACHE_VERSION,
            m: cell.psi.m,
            g: cell.psi.g,
            psi: PolyJson::from(&cell.psi.poly),
            f_e: cell.extraction.as_ref().map(|e| PolyJson::from(&e.f_e)),
            w_residual: cell.extraction.as_ref().map(|e| e.w_residual.clone()).unwrap_or_default(),
        };
        let path = cache_path(dir, cell.psi.m, cell.psi.g);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string(&file)?)?;
        fs::rename(tmp, path)?;
        Ok(())
    }

    fn insert(&mut self, cell: Cell) {
        let key = (cell.psi.m, cell.psi.g);
        self.psi.insert(key, cell.psi.clone());
        self.cells.insert(key, cell);
    }

    /// `Psi_m^(g)`, computing prerequisites first.
    pub fn compute_psi(&mut self, m: usize, g: usize) -> Result<&PsiRep> {
        self.check_domain(m, g)?;
        if !self.cells.contains_key(&(m, g)) {
            let cell = match self.load(m, g) {
                Some(cell) => cell,
                None => {
                    let cell = self.fresh(m, g)?;
                    self.store(&cell)?;
                    cell
                }
            };
            self.insert(cell);
        }
        Ok(&self.cells[&(m, g)].psi)
    }

    fn fresh(&mut self, m: usize, g: usize) -> Result<Cell> {
        if g == 0 {
            let psi = psi0_base(m)?;
            return Ok(Cell { psi, solve: None, extraction: None, from_disk: false });
        }
        for (dm, dg) in dependencies(m, g) {
            self.compute_psi(dm, dg)?;
        }
        let k = assemble_k(m, g, &*self)?;
        let (psi, report) = solve_pde(&k)?;
        psi.check_invariants()?;
        Ok(Cell { psi, solve: Some(report), extraction: None, from_disk: false })
    }

    /// Extracted `f_m^(g)` with its report, computing `Psi` if needed.
    pub fn extract(&mut self, m: usize, g: usize) -> Result<&Extraction> {
        self.compute_psi(m, g)?;
        if self.cells[&(m, g)].extraction.is_none() {
            let ex = extract_f(&self.cells[&(m, g)].psi)?;
            let cell = self.cells.get_mut(&(m, g)).unwrap();
            cell.extraction = Some(ex);
            let cell = cell.clone();
            self.store(&cell)?;
        }
        Ok(self.cells[&(m, g)].extraction.as_ref().unwrap())
    }

    /// Recomputes `K_m^(g)` from the cached prerequisites and checks the PDE
    /// residual of the stored `Psi`.
    pub fn verify_residual(&mut self, m: usize, g: usize) -> Result<()> {
        self.compute_psi(m, g)?;
        if g == 0 {
            return Ok(());
        }
        for (dm, dg) in dependencies(m, g) {
            self.compute_psi(dm, dg)?;
        }
        let k = assemble_k(m, g, &*self)?;
        let c = (m + 2 * g) as i64 - 2;
        let residual = &super::solve::pde_operator(&self.psi[&(m, g)].poly, c) - &k.poly;
        if residual.is_zero() {
            Ok(())
        } else {
            Err(HurwitzError::Residual { m, g, terms: residual.len() })
        }
    }

    /// Deletes cache files; returns how many were removed.
    pub fn clear_cache(&self) -> Result<usize> {
        let Some(dir) = &self.cache_dir else { return Ok(0) };
        let mut removed = 0;
        if dir.exists() {
            for entry in fs::read_dir(dir)? {
                let path = entry?.path();
                let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
                if name.starts_with("psi_m") && name.ends_with(".json") {
                    fs::remove_file(&path)?;
                    removed += 1;
                }
            }
        }
        Ok(removed)
    }

    /// `(m, g)` of every readable cache file of the current version.
    pub fn cached_on_disk(&self) -> Vec<(usize, usize)> {
        let Some(dir) = &self.cache_dir else { return vec![] };
        let Ok(entries) = fs::read_dir(dir) else { return vec![] };
        let mut out: Vec<(usize, usize)> = entries
            .filter_map(|e| e.ok())
            .filter_map(|e| fs::read_to_string(e.path()).ok())
            .filter_map(|t| serde_json::from_str::<CacheFile>(&t).ok())
            .filter(|f| f.version == CACHE_VERSION)
            .map(|f| (f.m, f.g))
            .collect();
        out.sort();
        out
    }
}
