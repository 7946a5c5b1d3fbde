//! Exact scalar, polynomial and series arithmetic.

pub mod basis;
pub mod json;
pub mod monomial;
pub mod operators;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod symmetric;

pub use basis::{xdx_basis_convert, OperatorBasisDecomp, ResidualTerm};
pub use monomial::{Exponent, Monomial};
pub use operators::{apply_wdw, apply_xdx, div_by_difference, exact_divide_diff};
pub use poly::{SparsePoly, VarKind};
pub use scalar::{Coeff, Rational, Rational64};
pub use series::{
    compose_with_inverse_tree, compose_with_tree, expand_y_to_w, expand_y_to_w_capped, fit_y_poly,
    tree_series, Caps, DegreeBound, TruncSeries,
};
pub use symmetric::{fit_sym_e_poly, symmetric_to_elementary};
