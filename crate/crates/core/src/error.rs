use thiserror::Error;

use crate::types::TropicalType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("d = {0} exceeds the supported maximum of 64")]
    DimensionTooLarge(usize),
    #[error("coordinate {0} is empty")]
    EmptyCoordinate(usize),
    #[error("element {element} in coordinate {coord} is outside 1..={d}")]
    ElementOutOfRange { coord: usize, element: usize, d: usize },
    #[error("shape mismatch: ({0}, {1}) vs ({2}, {3})")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("element {0} occurs in no coordinate")]
    MissingElement(usize),
    #[error("type {0} contains a cycle")]
    CyclicType(TropicalType),
    #[error("subset-mode surrounding requires acyclic types, but {0} contains a cycle")]
    CyclicTypeInSubsetMode(TropicalType),
    #[error("invalid ordered partition: {0}")]
    InvalidPartition(String),
    #[error("{0} is not a spanning tree of K_(n,d)")]
    NotSpanningTree(TropicalType),
    #[error("cell collection is not a valid fine mixed subdivision")]
    InvalidSubdivision,
    #[error("duplicate cell {0}")]
    DuplicateCell(TropicalType),
    #[error("type {0} is not in the type system")]
    NotInSystem(TropicalType),
    #[error("no strong path from {0} to {1}")]
    NoStrongPath(TropicalType, TropicalType),
    #[error("coordinate index {0} is outside 1..={1}")]
    CoordinateOutOfRange(usize, usize),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("weights are not generic: tree {tree} ties on edge ({left}, {right})")]
    NonGenericWeights {
        tree: TropicalType,
        left: usize,
        right: usize,
    },
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("{0}")]
    Invalid(String),
}
