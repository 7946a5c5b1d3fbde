use thiserror::Error;

#[derive(Debug, Error)]
pub enum HurwitzError {
    #[error("truncation cap {cap} is below the y-degree {degree}; the jet would not determine the polynomial")]
    CapBelowDegree { cap: u32, degree: u32 },

    #[error("series caps (per-variable {per_var}, total {total}) cannot determine a fit with degree bound {bound}")]
    Underdetermined { per_var: u32, total: u32, bound: u32 },

    #[error("requested order {requested} exceeds the available truncation {available}")]
    OrderExceedsCap { requested: u32, available: u32 },

    #[error("no polynomial within degree bound {bound} fits the series; first mismatch at monomial {monomial:?} (coefficient {coeff})")]
    FitInconsistent { bound: u32, monomial: Vec<u16>, coeff: String },

    #[error("polynomial is not divisible by (y{i} - y{j}); remainder has {terms} terms")]
    NotDivisible { i: usize, j: usize, terms: usize },

    #[error("polynomial does not vanish at y{var} = 1")]
    NotVanishing { var: usize },

    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("symmetric e-polynomial fit failed: {0}")]
    EFit(String),

    #[error("{what}: requested {requested} exceeds budget {limit}; {advice}")]
    Budget { what: &'static str, requested: u64, limit: u64, advice: &'static str },

    #[error("missing prerequisite series Psi_{m}^({g})")]
    MissingPsi { m: usize, g: usize },

    #[error("degree-bound anomaly for (m={m}, g={g}): no fit up to bound {last_bound}")]
    DegreeAnomaly { m: usize, g: usize, last_bound: u32 },

    #[error("PDE residual for (m={m}, g={g}) is nonzero ({terms} terms)")]
    Residual { m: usize, g: usize, terms: usize },

    #[error("extraction routes disagree for (m={m}, g={g}): {detail}")]
    RouteDisagreement { m: usize, g: usize, detail: String },

    #[error("inconsistent Hurwitz data: {0}")]
    Inconsistent(String),

    #[error("unavailable: {0}")]
    Unavailable(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("incomplete factorization table: missing n={n}, j={j}")]
    IncompleteTable { n: usize, j: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, HurwitzError>;
