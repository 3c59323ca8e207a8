//! JSON file formats. Element lists are sorted and 1-based.
//!
//! - subdivision: `{"n": 2, "d": 2, "cells": [[[1, 2], [2]], [[1], [1, 2]]]}`
//! - types: same with `"types"` instead of `"cells"`
//! - weights: `{"n": 2, "d": 2, "weights": [["0", "1/2"], ["3", "-1"]]}`

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geometry::{Rational, WeightMatrix};
use crate::subdivision::{CellCollection, TypeSystem};
use crate::types::TropicalType;

/// A malformed input, with enough position information to find the problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FormatError {}

fn json_error(source: &str, e: serde_json::Error) -> FormatError {
    FormatError(format!("{source}: line {}, column {}: {e}", e.line(), e.column()))
}

pub type RawType = Vec<Vec<usize>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubdivisionFile {
    pub n: usize,
    pub d: usize,
    pub cells: Vec<RawType>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TypesFile {
    pub n: usize,
    pub d: usize,
    pub types: Vec<RawType>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightFile {
    pub n: usize,
    pub d: usize,
    pub weights: Vec<Vec<String>>,
}

/// Either kind of type-bearing file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeSource {
    Subdivision(SubdivisionFile),
    Types(TypesFile),
}

pub fn parse_subdivision(source: &str, text: &str) -> Result<SubdivisionFile, FormatError> {
    serde_json::from_str(text).map_err(|e| json_error(source, e))
}

pub fn parse_types(source: &str, text: &str) -> Result<TypesFile, FormatError> {
    serde_json::from_str(text).map_err(|e| json_error(source, e))
}

pub fn parse_weights(source: &str, text: &str) -> Result<WeightFile, FormatError> {
    serde_json::from_str(text).map_err(|e| json_error(source, e))
}

/// Accepts a subdivision file or a types file, told apart by their list key.
pub fn parse_type_source(source: &str, text: &str) -> Result<TypeSource, FormatError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| json_error(source, e))?;
    if value.get("cells").is_some() {
        parse_subdivision(source, text).map(TypeSource::Subdivision)
    } else if value.get("types").is_some() {
        parse_types(source, text).map(TypeSource::Types)
    } else {
        Err(FormatError(format!("{source}: expected a \"cells\" or \"types\" key")))
    }
}

/// One type from its raw lists; `what` names its position for diagnostics.
pub fn raw_to_type(d: usize, raw: &RawType, what: &str) -> Result<TropicalType, FormatError> {
    for (i, coord) in raw.iter().enumerate() {
        if coord.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FormatError(format!(
                "{what}[{i}]: elements must be strictly increasing, got {coord:?}"
            )));
        }
    }
    TropicalType::from_lists(d, raw).map_err(|e| FormatError(format!("{what}: {e}")))
}

fn check_shape(n: usize, raw: &RawType, what: &str) -> Result<(), FormatError> {
    if raw.len() != n {
        return Err(FormatError(format!(
            "{what}: expected {n} coordinates, got {}",
            raw.len()
        )));
    }
    Ok(())
}

impl SubdivisionFile {
    pub fn from_collection(cells: &CellCollection) -> Self {
        SubdivisionFile {
            n: cells.n(),
            d: cells.d(),
            cells: cells.cells().iter().map(TropicalType::to_lists).collect(),
        }
    }

    pub fn to_collection(&self, source: &str) -> Result<CellCollection, FormatError> {
        let cells = self
            .cells
            .iter()
            .enumerate()
            .map(|(c, raw)| {
                let what = format!("{source}: cells[{c}]");
                check_shape(self.n, raw, &what)?;
                raw_to_type(self.d, raw, &what)
            })
            .collect::<Result<Vec<_>, _>>()?;
        CellCollection::new(self.n, self.d, cells).map_err(|e| FormatError(format!("{source}: {e}")))
    }
}

impl TypesFile {
    pub fn from_types<'a, I: IntoIterator<Item = &'a TropicalType>>(n: usize, d: usize, types: I) -> Self {
        TypesFile {
            n,
            d,
            types: types.into_iter().map(TropicalType::to_lists).collect(),
        }
    }

    pub fn from_system(system: &TypeSystem) -> Self {
        TypesFile::from_types(system.n(), system.d(), system.iter())
    }

    /// Types in file order (paths keep their order here).
    pub fn to_types(&self, source: &str) -> Result<Vec<TropicalType>, FormatError> {
        self.types
            .iter()
            .enumerate()
            .map(|(k, raw)| {
                let what = format!("{source}: types[{k}]");
                check_shape(self.n, raw, &what)?;
                raw_to_type(self.d, raw, &what)
            })
            .collect()
    }

    pub fn to_system(&self, source: &str) -> Result<TypeSystem, FormatError> {
        TypeSystem::from_types(self.n, self.d, self.to_types(source)?)
            .map_err(|e| FormatError(format!("{source}: {e}")))
    }
}

impl WeightFile {
    pub fn from_matrix(w: &WeightMatrix) -> Self {
        WeightFile {
            n: w.n(),
            d: w.d(),
            weights: w
                .rows()
                .iter()
                .map(|r| r.iter().map(Rational::to_string).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self, source: &str) -> Result<WeightMatrix, FormatError> {
        if self.weights.len() != self.n || self.weights.iter().any(|r| r.len() != self.d) {
            return Err(FormatError(format!(
                "{source}: weights must be a {}x{} matrix",
                self.n, self.d
            )));
        }
        for (i, row) in self.weights.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                crate::geometry::parse_rational(entry)
                    .map_err(|e| FormatError(format!("{source}: weights[{i}][{j}]: {e}")))?;
            }
        }
        WeightMatrix::parse(&self.weights).map_err(|e: Error| FormatError(format!("{source}: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::staircase;
    use proptest::prelude::*;

    #[test]
    fn diagnostics_carry_positions() {
        let e = parse_subdivision("f.json", "{\"n\": 2,\n \"d\": 2, \"cells\": [[[1,2],[2]],]}").unwrap_err();
        assert!(e.0.contains("line 2"), "{e}");
        let f = parse_subdivision("f.json", r#"{"n":2,"d":2,"cells":[[[1,2],[2]],[[1],[3]]]}"#).unwrap();
        let e = f.to_collection("f.json").unwrap_err();
        assert!(e.0.contains("cells[1]"), "{e}");
        let f = parse_subdivision("f.json", r#"{"n":2,"d":2,"cells":[[[2,1],[2]]]}"#).unwrap();
        assert!(f.to_collection("f.json").unwrap_err().0.contains("strictly increasing"));
        let w = parse_weights("w.json", r#"{"n":1,"d":2,"weights":[["0","1/x"]]}"#).unwrap();
        assert!(w.to_matrix("w.json").unwrap_err().0.contains("weights[0][1]"));
        assert!(parse_type_source("x", r#"{"n":1}"#).is_err());
    }

    #[test]
    fn source_detection() {
        let sub = SubdivisionFile::from_collection(&staircase(2, 3).unwrap());
        let text = serde_json::to_string(&sub).unwrap();
        assert_eq!(parse_type_source("s", &text).unwrap(), TypeSource::Subdivision(sub));
        let types = TypesFile {
            n: 1,
            d: 2,
            types: vec![vec![vec![1]]],
        };
        let text = serde_json::to_string(&types).unwrap();
        assert_eq!(parse_type_source("t", &text).unwrap(), TypeSource::Types(types));
    }

    fn raw_type(n: usize, d: usize) -> impl Strategy<Value = RawType> {
        prop::collection::vec(1u64..(1u64 << d), n).prop_map(|masks| {
            masks
                .into_iter()
                .map(|m| (1..=64).filter(|j| m >> (j - 1) & 1 == 1).collect())
                .collect()
        })
    }

    proptest! {
        #[test]
        fn types_file_round_trip((n, d, types) in (1usize..5, 1usize..6).prop_flat_map(|(n, d)| {
            (Just(n), Just(d), prop::collection::vec(raw_type(n, d), 0..6))
        })) {
            let file = TypesFile { n, d, types };
            let text = serde_json::to_string(&file).unwrap();
            let back = parse_types("t", &text).unwrap();
            prop_assert_eq!(&back, &file);
            let parsed = back.to_types("t").unwrap();
            prop_assert_eq!(TypesFile::from_types(n, d, parsed.iter()), file);
        }

        #[test]
        fn weight_file_round_trip(entries in prop::collection::vec(prop::collection::vec((-50i64..50, 1i64..9), 3), 1..4)) {
            let rows: Vec<Vec<Rational>> = entries
                .iter()
                .map(|r| r.iter().map(|&(p, q)| crate::geometry::rational(p, q)).collect())
                .collect();
            let w = WeightMatrix::new(rows).unwrap();
            let file = WeightFile::from_matrix(&w);
            let text = serde_json::to_string(&file).unwrap();
            prop_assert_eq!(parse_weights("w", &text).unwrap().to_matrix("w").unwrap(), w);
        }
    }
}
