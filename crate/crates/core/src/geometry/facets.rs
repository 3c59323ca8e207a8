use serde::Serialize;

use super::unimodular::IntMatrix;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::types::TropicalType;
use crate::unionfind::DisjointSets;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sense {
    /// `Σ_{j ∈ I_e} x_j >= c`
    AtLeast,
    /// `Σ_{j ∈ I_e} x_j <= c`
    AtMost,
}

/// One facet `F_e` of a cell projected to `x_d = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetRow {
    /// The deleted tree edge, `(i, j)` with `i` 0-based and `j` 1-based.
    #[serde(serialize_with = "crate::serde_util::edge")]
    pub edge: (usize, usize),
    /// `I_e`: right vertices cut off from `d` once the edge is removed. Never contains `d`.
    pub support: ElementSet,
    pub rhs: i64,
    pub sense: Sense,
}

impl FacetRow {
    /// The inequality as `(a, b)` with `a · x <= b` over coordinates `1..d-1`.
    pub fn as_upper_bound(&self, d: usize) -> (Vec<i64>, i64) {
        let sign = match self.sense {
            Sense::AtMost => 1,
            Sense::AtLeast => -1,
        };
        let normal = (1..d)
            .map(|j| if self.support.contains(j) { sign } else { 0 })
            .collect();
        (normal, sign * self.rhs)
    }
}

/// The 0/1 facet-normal matrix of a fine cell, columns indexed by `1..d-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetMatrix {
    pub d: usize,
    pub rows: Vec<FacetRow>,
}

impl FacetMatrix {
    pub fn to_int_matrix(&self) -> IntMatrix {
        let cols = self.d - 1;
        IntMatrix::from_rows(
            cols,
            self.rows
                .iter()
                .map(|r| (1..=cols).map(|j| i64::from(r.support.contains(j))).collect())
                .collect(),
        )
    }
}

/// Facets of the Minkowski cell of a spanning tree.
///
/// Each edge `e = (i, k)` whose left endpoint has degree at least two yields the facet
/// `Σ_{j ∈ I_e} x_j = c`, with `I_e` the right vertices separated from `d` in `T ∖ e` and `c`
/// the number of left vertices on that side. Edges at left leaves are skipped: deleting them
/// empties a coordinate.
pub fn facet_matrix(tree: &TropicalType) -> Result<FacetMatrix> {
    if !tree.is_spanning_tree() {
        return Err(Error::NotSpanningTree(tree.clone()));
    }
    let (n, d) = tree.shape();
    let right = |j: usize| n + j - 1;
    let mut rows = Vec::new();
    for (i, k) in tree.edges() {
        if tree.coord(i).len() < 2 {
            continue;
        }
        let mut sets = DisjointSets::new(n + d);
        for (a, b) in tree.edges() {
            if (a, b) != (i, k) {
                sets.union(a, right(b));
            }
        }
        let root = sets.find(right(d));
        let support: ElementSet = (1..=d).filter(|&j| sets.find(right(j)) != root).collect();
        let rhs = (0..n).filter(|&l| sets.find(l) != root).count() as i64;
        let sense = if support.contains(k) {
            Sense::AtLeast
        } else {
            Sense::AtMost
        };
        rows.push(FacetRow {
            edge: (i, k),
            support,
            rhs,
            sense,
        });
    }
    Ok(FacetMatrix { d, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(d: usize, lists: &[&[usize]]) -> TropicalType {
        TropicalType::from_lists(d, lists).unwrap()
    }

    #[test]
    fn segment_cell() {
        let m = facet_matrix(&t(2, &[&[1, 2], &[2]])).unwrap();
        assert_eq!(m.rows.len(), 2);
        assert_eq!(m.rows[0].edge, (0, 1));
        assert_eq!(m.rows[0].support, ElementSet::singleton(1));
        assert_eq!((m.rows[0].sense, m.rows[0].rhs), (Sense::AtLeast, 0));
        assert_eq!(m.rows[1].edge, (0, 2));
        assert_eq!(m.rows[1].support, ElementSet::singleton(1));
        assert_eq!((m.rows[1].sense, m.rows[1].rhs), (Sense::AtMost, 1));
        assert_eq!(m.to_int_matrix().rows(), vec![vec![1], vec![1]]);
    }

    #[test]
    fn simplex_cell() {
        let m = facet_matrix(&t(4, &[&[1, 2, 3, 4]])).unwrap();
        for j in 1..4 {
            let row = m.rows.iter().find(|r| r.edge == (0, j)).unwrap();
            assert_eq!(row.support, ElementSet::singleton(j));
            assert_eq!((row.sense, row.rhs), (Sense::AtLeast, 0));
        }
        let last = m.rows.iter().find(|r| r.edge == (0, 4)).unwrap();
        assert_eq!(last.support, ElementSet::full(3));
        assert_eq!((last.sense, last.rhs), (Sense::AtMost, 1));
    }

    #[test]
    fn rejects_non_trees() {
        assert!(matches!(
            facet_matrix(&t(2, &[&[1, 2], &[1, 2]])),
            Err(Error::NotSpanningTree(_))
        ));
    }
}
