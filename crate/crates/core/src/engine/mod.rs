//! The cut-and-join PDE for `Psi_m^(g)` and extraction of `f_m^(g)`.

pub mod assemble;
pub mod extract;
pub mod psi;
pub mod solve;
pub mod store;
pub mod theta;

pub use assemble::{assemble_k, dependencies, PsiLookup};
pub use extract::{extract_by_basis, extract_by_values, extract_f, f_value, Extraction, ResidualEntry};
pub use psi::{k11, psi0_base, v_m, xdx_psi01, xdx_psi02, PsiRep, RhsRep, XdxPsi02};
pub use solve::{pde_operator, solve_pde, SolveReport};
pub use store::{default_cells, Cell, Engine, CACHE_VERSION};
pub use theta::{theta_images, theta_placements, theta_symmetrize, Placement};
