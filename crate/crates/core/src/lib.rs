//! Verification and generation tools for triangulations of `Δ_{n-1} × Δ_{d-1}`, fine mixed
//! subdivisions of `nΔ_{d-1}`, and tropical oriented matroids.
//!
//! A full-dimensional cell is a spanning tree of the complete bipartite graph `K_{n,d}`,
//! written as an `(n, d)`-type `(A_1, ..., A_n)` with `A_i ⊆ [d]`. Faces are coordinatewise
//! nonempty subsets. Starting from a collection of cells this crate
//!
//! - validates it as a fine mixed subdivision ([`validate_subdivision`]),
//! - expands it into its face system ([`face_types`]),
//! - checks the tropical oriented matroid axioms on that system ([`check_tom`]),
//! - constructs strong paths and elimination witnesses ([`strong_path`], [`eliminate_via_path`]),
//! - checks degree-vector bijections, unit simplices and total unimodularity of cell facets.
//!
//! Ground-truth inputs come from [`generators`] and from regular subdivisions of weight
//! matrices ([`regular_subdivision`]).
//!
//! ```
//! use tomtri::{check_tom, face_types, generators::staircase};
//!
//! let cells = staircase(3, 3).unwrap();
//! let system = face_types(&cells).unwrap();
//! assert!(check_tom(&system).is_tom());
//! ```

pub mod axioms;
pub mod cli;
pub mod comparability;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod paths;
pub mod set;
pub mod subdivision;
pub mod transport;
pub mod types;

mod serde_util;
mod unionfind;

pub use axioms::{
    check_boundary, check_comparability, check_elimination, check_surrounding, check_tom, check_tom_with,
    elimination_witnesses, find_elimination_witness, is_elimination_witness, Axiom, AxiomReport, SurroundingMode,
    TomVerdict, Violation,
};
pub use comparability::ComparabilityGraph;
pub use error::{Error, Result};
pub use geometry::{
    facet_matrix, is_interval_matrix_reorderable, is_totally_unimodular, point_type, regular_subdivision, FacetMatrix,
    IntMatrix, Rational, WeightMatrix,
};
pub use paths::{adjacent, eliminate_via_path, q_alpha, q_alpha_connected, strong_path, ConnectivityReport, TypePath};
pub use set::ElementSet;
pub use subdivision::{
    face_types, ldv_bijection_check, topes, unit_simplex_check, validate_subdivision, BijectionReport, CellCollection,
    TypeSystem, UnitSimplexReport, ValidationReport,
};
pub use types::{DegreeVector, OrderedPartition, RankVector, Side, TropicalType};

/// `CG_{A,B}` for two types of the same shape.
pub fn comparability_graph(a: &TropicalType, b: &TropicalType) -> Result<ComparabilityGraph> {
    ComparabilityGraph::new(a, b)
}
