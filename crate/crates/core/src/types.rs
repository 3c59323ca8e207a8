//! `(n, d)`-types: tuples of nonempty subsets of `[d]`, read equally as subgraphs of the
//! complete bipartite graph `K_{n,d}` and as faces of mixed cells.
//!
//! Coordinates are indexed from 0 in this API; elements of `[d]` keep their 1-based labels.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::unionfind::DisjointSets;

pub const MAX_D: usize = 64;

/// An `(n, d)`-type `(A_1, ..., A_n)`.
///
/// Edge `(i, j)` of `K_{n,d}` is present iff `j` is in coordinate `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropicalType {
    d: usize,
    coords: Vec<ElementSet>,
}

impl TropicalType {
    pub fn new(d: usize, coords: Vec<ElementSet>) -> Result<Self> {
        if d > MAX_D {
            return Err(Error::DimensionTooLarge(d));
        }
        if d == 0 || coords.is_empty() {
            return Err(Error::Invalid("types need n >= 1 and d >= 1".into()));
        }
        let full = ElementSet::full(d);
        for (i, c) in coords.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::EmptyCoordinate(i + 1));
            }
            if !c.is_subset(full) {
                let element = c.difference(full).first().unwrap_or(0);
                return Err(Error::ElementOutOfRange {
                    coord: i + 1,
                    element,
                    d,
                });
            }
        }
        Ok(TropicalType { d, coords })
    }

    /// Builds a type from 1-based element lists, e.g. `from_lists(2, &[&[1, 2], &[2]])`.
    pub fn from_lists<L: AsRef<[usize]>>(d: usize, lists: &[L]) -> Result<Self> {
        let mut coords = Vec::with_capacity(lists.len());
        for (i, list) in lists.iter().enumerate() {
            let mut set = ElementSet::EMPTY;
            for &j in list.as_ref() {
                if j == 0 || j > d.min(MAX_D) {
                    return Err(Error::ElementOutOfRange {
                        coord: i + 1,
                        element: j,
                        d,
                    });
                }
                set = set.with(j);
            }
            coords.push(set);
        }
        TropicalType::new(d, coords)
    }

    /// The constant type `(j, ..., j)`.
    pub fn boundary(n: usize, d: usize, j: usize) -> Result<Self> {
        if j == 0 || j > d {
            return Err(Error::ElementOutOfRange {
                coord: 1,
                element: j,
                d,
            });
        }
        TropicalType::new(d, vec![ElementSet::singleton(j); n])
    }

    pub(crate) fn from_parts_unchecked(d: usize, coords: Vec<ElementSet>) -> Self {
        debug_assert!(coords.iter().all(|c| !c.is_empty()));
        TropicalType { d, coords }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn coords(&self) -> &[ElementSet] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> ElementSet {
        self.coords[i]
    }

    /// Coordinates as sorted 1-based lists.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.coords.iter().map(|c| c.iter().collect()).collect()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n(), self.d)
    }

    pub(crate) fn check_shape(&self, other: &TropicalType) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(self.n(), self.d, other.n(), other.d));
        }
        Ok(())
    }

    /// Copy with coordinate `i` replaced. The replacement must be nonempty.
    pub fn with_coord(&self, i: usize, set: ElementSet) -> TropicalType {
        debug_assert!(!set.is_empty());
        let mut coords = self.coords.clone();
        coords[i] = set;
        TropicalType { d: self.d, coords }
    }

    pub fn edge_count(&self) -> usize {
        self.coords.iter().map(|c| c.len()).sum()
    }

    /// Edges `(i, j)` with `i` 0-based and `j` 1-based.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.coords
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |j| (i, j)))
    }

    /// Union of all coordinates.
    pub fn support(&self) -> ElementSet {
        self.coords.iter().fold(ElementSet::EMPTY, |acc, c| acc.union(*c))
    }

    pub fn covers_all_elements(&self) -> bool {
        self.support() == ElementSet::full(self.d)
    }

    /// All coordinates are singletons.
    pub fn is_tope(&self) -> bool {
        self.coords.iter().all(|c| c.len() == 1)
    }

    /// Coordinatewise containment `self_i ⊆ other_i`.
    pub fn is_face_of(&self, other: &TropicalType) -> bool {
        self.shape() == other.shape() && self.coords.iter().zip(&other.coords).all(|(a, b)| a.is_subset(*b))
    }

    /// True when the subgraph of `K_{n,d}` has no cycle.
    pub fn is_forest(&self) -> bool {
        let n = self.n();
        let mut sets = DisjointSets::new(n + self.d);
        self.edges().all(|(i, j)| sets.union(i, n + j - 1))
    }

    /// Connected, with `n + d - 1` edges.
    pub fn is_spanning_tree(&self) -> bool {
        self.edge_count() + 1 == self.n() + self.d && self.is_forest()
    }

    pub fn left_degree_vector(&self) -> DegreeVector {
        DegreeVector {
            entries: self.coords.iter().map(|c| c.len() as i64 - 1).collect(),
            side: Side::Left,
        }
    }

    /// Entry `j` is the degree of right vertex `j` minus one; `-1` marks an uncovered element.
    pub fn right_degree_vector(&self) -> DegreeVector {
        let mut entries = vec![-1i64; self.d];
        for (_, j) in self.edges() {
            entries[j - 1] += 1;
        }
        DegreeVector {
            entries,
            side: Side::Right,
        }
    }

    /// The transposed `(d, n)`-type: `i ∈ dual_j` iff `j ∈ A_i`.
    pub fn dual(&self) -> Result<TropicalType> {
        let n = self.n();
        if n > MAX_D {
            return Err(Error::DimensionTooLarge(n));
        }
        let mut coords = vec![ElementSet::EMPTY; self.d];
        for (i, j) in self.edges() {
            coords[j - 1] = coords[j - 1].with(i + 1);
        }
        if let Some(missing) = coords.iter().position(|c| c.is_empty()) {
            return Err(Error::MissingElement(missing + 1));
        }
        Ok(TropicalType { d: n, coords })
    }

    /// Refinement by an ordered partition: coordinate `i` becomes `A_i ∩ P_m`, where `P_m` is
    /// the last block meeting `A_i`.
    pub fn refine(&self, partition: &OrderedPartition) -> TropicalType {
        let coords = self
            .coords
            .iter()
            .map(|&c| {
                partition
                    .blocks()
                    .iter()
                    .rev()
                    .map(|b| c.intersection(*b))
                    .find(|s| !s.is_empty())
                    .expect("partition covers every element of a coordinate")
            })
            .collect();
        TropicalType { d: self.d, coords }
    }

    /// Every type obtained by deleting one element from a coordinate of size at least two.
    pub fn single_deletion_refinements(&self) -> Result<BTreeSet<TropicalType>> {
        if !self.is_forest() {
            return Err(Error::CyclicType(self.clone()));
        }
        Ok(self.single_deletions().map(|(_, _, t)| t).collect())
    }

    pub(crate) fn single_deletions(&self) -> impl Iterator<Item = (usize, usize, TropicalType)> + '_ {
        self.coords.iter().enumerate().flat_map(move |(i, &c)| {
            let deletable = if c.len() >= 2 { c } else { ElementSet::EMPTY };
            deletable.iter().map(move |k| (i, k, self.with_coord(i, c.without(k))))
        })
    }

    /// A two-block ordered partition whose refinement deletes `k` from coordinate `i` and
    /// leaves every other coordinate untouched.
    ///
    /// The first block is the set of right vertices that stay connected to `k` once the edge
    /// `(i, k)` is removed. Requires an acyclic type with `k ∈ A_i` and `|A_i| >= 2`.
    pub fn deletion_partition(&self, i: usize, k: usize) -> Result<OrderedPartition> {
        if !self.is_forest() {
            return Err(Error::CyclicType(self.clone()));
        }
        let c = self.coords[i];
        if !c.contains(k) || c.len() < 2 {
            return Err(Error::Invalid(format!(
                "cannot delete {k} from coordinate {} = {c}",
                i + 1
            )));
        }
        let n = self.n();
        // BFS over K_{n,d} minus the edge (i, k), starting at right vertex k.
        let mut seen_left = vec![false; n];
        let mut reached = ElementSet::singleton(k);
        let mut queue = VecDeque::from([k]);
        while let Some(j) = queue.pop_front() {
            for (l, coord) in self.coords.iter().enumerate() {
                if seen_left[l] || !coord.contains(j) || (l == i && j == k) {
                    continue;
                }
                seen_left[l] = true;
                for j2 in coord.difference(reached).iter() {
                    if l == i && j2 == k {
                        continue;
                    }
                    reached = reached.with(j2);
                    queue.push_back(j2);
                }
            }
        }
        let rest = ElementSet::full(self.d).difference(reached);
        OrderedPartition::new(self.d, vec![reached, rest])
    }

    /// `r_i = min(|A_i|, |B_i|) - 1`.
    pub fn rank(&self, other: &TropicalType) -> Result<RankVector> {
        self.check_shape(other)?;
        Ok(RankVector(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.len().min(b.len()) as i64 - 1)
                .collect(),
        ))
    }

    /// Sum over coordinates of the symmetric difference sizes.
    pub fn delta(&self, other: &TropicalType) -> Result<usize> {
        self.check_shape(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.difference(*b).len() + b.difference(*a).len())
            .sum())
    }
}

impl fmt::Display for TropicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for TropicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized as its 1-based coordinate lists.
impl Serialize for TropicalType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_lists().serialize(serializer)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeVector {
    pub entries: Vec<i64>,
    pub side: Side,
}

impl DegreeVector {
    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Some right vertex has no edge at all.
    pub fn has_uncovered(&self) -> bool {
        self.entries.iter().any(|&e| e < 0)
    }
}

/// `α = (a_1, ..., a_n)`, compared componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RankVector(pub Vec<i64>);

impl RankVector {
    pub fn zeros(n: usize) -> Self {
        RankVector(vec![0; n])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `self >= other` in every entry.
    pub fn dominates(&self, other: &RankVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// A type belongs to `Q_α` iff `|A_i| > a_i` for every coordinate.
    pub fn admits(&self, t: &TropicalType) -> bool {
        self.0.len() == t.n() && self.0.iter().zip(t.coords()).all(|(&a, c)| c.len() as i64 > a)
    }
}

/// An ordered partition `(P_1, ..., P_r)` of `[d]` into nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    d: usize,
    blocks: Vec<ElementSet>,
}

impl OrderedPartition {
    pub fn new(d: usize, blocks: Vec<ElementSet>) -> Result<Self> {
        if d == 0 || d > MAX_D {
            return Err(Error::DimensionTooLarge(d));
        }
        let mut seen = ElementSet::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::InvalidPartition(format!("block {b} overlaps an earlier block")));
            }
            seen = seen.union(*b);
        }
        if seen != ElementSet::full(d) {
            return Err(Error::InvalidPartition(format!("blocks do not cover 1..={d}")));
        }
        Ok(OrderedPartition { d, blocks })
    }

    /// The one-block partition `([d])`.
    pub fn trivial(d: usize) -> Self {
        OrderedPartition {
            d,
            blocks: vec![ElementSet::full(d)],
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    /// Every ordered partition of `[d]` (ordered Bell number many: 1, 3, 13, 75, 541, ...).
    pub fn enumerate(d: usize) -> Vec<OrderedPartition> {
        fn go(rest: ElementSet, prefix: &mut Vec<ElementSet>, d: usize, out: &mut Vec<OrderedPartition>) {
            if rest.is_empty() {
                out.push(OrderedPartition {
                    d,
                    blocks: prefix.clone(),
                });
                return;
            }
            for block in rest.nonempty_subsets() {
                prefix.push(block);
                go(rest.difference(block), prefix, d, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(ElementSet::full(d), &mut Vec::new(), d, &mut out);
        out
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join("|"))
    }
}
