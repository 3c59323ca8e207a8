//! Exact-arithmetic geometry: tropical hyperplane arrangements and regular subdivisions,
//! facet descriptions of fine cells, and total unimodularity.
//!
//! Everything uses the max-plus convention `a ⊕ b = max(a, b)`, `a ⊙ b = a + b`.

mod facets;
mod regular;
mod unimodular;

pub use facets::{facet_matrix, FacetMatrix, FacetRow, Sense};
pub use regular::{parse_rational, point_type, regular_subdivision, spanning_trees, tree_potentials, WeightMatrix};
pub use unimodular::{
    interval_column_order, is_interval_matrix_reorderable, is_laminar, is_totally_unimodular, IntMatrix,
    MAX_PERMUTATION_COLS, MAX_TU_DIM,
};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar.
pub type Rational = BigRational;

pub fn rational(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer(p: i64) -> Rational {
    BigRational::from_integer(BigInt::from(p))
}
