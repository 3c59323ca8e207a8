//! Cell collections of fine mixed subdivisions of `nΔ_{d-1}` (equivalently, triangulations of
//! `Δ_{n-1} × Δ_{d-1}`), their validation, face systems, and degree-vector structure.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::serde_util;
use crate::set::ElementSet;
use crate::transport::contains_lattice_point;
use crate::types::TropicalType;

/// Cells of a claimed fine mixed subdivision, each a subgraph of `K_{n,d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCollection {
    n: usize,
    d: usize,
    cells: Vec<TropicalType>,
}

impl CellCollection {
    /// Checks shapes and rejects duplicate cells. Whether the cells form a subdivision is a
    /// question for [`validate_subdivision`].
    pub fn new(n: usize, d: usize, cells: Vec<TropicalType>) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(cells.len());
        for c in &cells {
            if c.shape() != (n, d) {
                return Err(Error::ShapeMismatch(n, d, c.n(), c.d()));
            }
            if !seen.insert(c) {
                return Err(Error::DuplicateCell(c.clone()));
            }
        }
        Ok(CellCollection { n, d, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn cells(&self) -> &[TropicalType] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Same cells in sorted order; two collections describe the same subdivision iff their
    /// canonical forms are equal.
    pub fn canonical(&self) -> CellCollection {
        let mut cells = self.cells.clone();
        cells.sort();
        CellCollection { cells, ..*self }
    }

    /// Dual of every cell, giving a `(d, n)` collection.
    pub fn transpose(&self) -> Result<CellCollection> {
        let cells = self.cells.iter().map(|c| c.dual()).collect::<Result<Vec<_>>>()?;
        CellCollection::new(self.d, self.n, cells)
    }
}

/// A deduplicated set of `(n, d)`-types, kept sorted.
#[derive(Debug, Clone)]
pub struct TypeSystem {
    n: usize,
    d: usize,
    types: Vec<TropicalType>,
    index: HashMap<TropicalType, usize>,
    /// For face systems: the first cell containing each type.
    provenance: Vec<Option<usize>>,
}

impl TypeSystem {
    pub fn from_types<I: IntoIterator<Item = TropicalType>>(n: usize, d: usize, types: I) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for t in types {
            if t.shape() != (n, d) {
                return Err(Error::ShapeMismatch(n, d, t.n(), t.d()));
            }
            entries.insert(t, None);
        }
        Ok(Self::from_entries(n, d, entries))
    }

    fn from_entries(n: usize, d: usize, entries: BTreeMap<TropicalType, Option<usize>>) -> Self {
        let (types, provenance): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let index = types.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        TypeSystem {
            n,
            d,
            types,
            index,
            provenance,
        }
    }

    /// Every face `(J_1, ..., J_n)`, `∅ ≠ J_i ⊆ I_i`, of every cell, without validating the
    /// cells first.
    pub fn face_closure(cells: &CellCollection) -> Self {
        let mut entries: BTreeMap<TropicalType, Option<usize>> = BTreeMap::new();
        for (ci, cell) in cells.cells().iter().enumerate() {
            let choices: Vec<Vec<ElementSet>> = cell.coords().iter().map(|c| c.nonempty_subsets().collect()).collect();
            for_each_choice(&choices, |coords| {
                entries
                    .entry(TropicalType::from_parts_unchecked(cells.d(), coords.to_vec()))
                    .or_insert(Some(ci));
            });
        }
        Self::from_entries(cells.n(), cells.d(), entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn types(&self) -> &[TropicalType] {
        &self.types
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TropicalType> {
        self.types.iter()
    }

    pub fn contains(&self, t: &TropicalType) -> bool {
        self.index.contains_key(t)
    }

    pub fn position(&self, t: &TropicalType) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Index of a cell containing `t`, when the system was built from cells.
    pub fn provenance(&self, t: &TropicalType) -> Option<usize> {
        self.position(t).and_then(|k| self.provenance[k])
    }

    /// Sub-system of the types satisfying `keep`; provenance is preserved.
    pub fn filter<F: FnMut(&TropicalType) -> bool>(&self, mut keep: F) -> TypeSystem {
        let entries = self
            .types
            .iter()
            .zip(&self.provenance)
            .filter(|(t, _)| keep(t))
            .map(|(t, p)| (t.clone(), *p))
            .collect();
        Self::from_entries(self.n, self.d, entries)
    }

    /// Copy with one type removed.
    pub fn without(&self, t: &TropicalType) -> TypeSystem {
        self.filter(|u| u != t)
    }
}

/// Calls `f` on every element of the cartesian product of `choices`.
fn for_each_choice<T: Copy, F: FnMut(&[T])>(choices: &[Vec<T>], mut f: F) {
    if choices.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut pick = vec![0usize; choices.len()];
    let mut current: Vec<T> = choices.iter().map(|c| c[0]).collect();
    loop {
        f(&current);
        let mut pos = 0;
        loop {
            if pos == pick.len() {
                return;
            }
            pick[pos] += 1;
            if pick[pos] < choices[pos].len() {
                current[pos] = choices[pos][pick[pos]];
                break;
            }
            pick[pos] = 0;
            current[pos] = choices[pos][0];
            pos += 1;
        }
    }
}

impl PartialEq for TypeSystem {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d && self.types == other.types
    }
}

impl Eq for TypeSystem {}

/// A vertex of `K_{n,d}`: left vertices 0-based, right vertices keep their 1-based labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Left(usize),
    Right(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Left(i) => write!(f, "L{}", i + 1),
            Vertex::Right(j) => write!(f, "R{j}"),
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonTreeReason {
    WrongEdgeCount {
        edges: usize,
        expected: usize,
    },
    /// Right vertices with no edge.
    Uncovered {
        elements: Vec<usize>,
    },
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonTreeCell {
    #[serde(serialize_with = "serde_util::one_based")]
    pub cell: usize,
    pub reason: NonTreeReason,
}

/// A facet `T ∖ e` with no isolated vertex that no other cell contains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DanglingFacet {
    #[serde(serialize_with = "serde_util::one_based")]
    pub cell: usize,
    #[serde(serialize_with = "serde_util::edge")]
    pub edge: (usize, usize),
    pub facet: TropicalType,
}

/// A directed cycle of length at least 4 in `U(T_a, T_b)`: edges of `T_a` run left to
/// right, edges of `T_b` right to left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OverlapCycle {
    #[serde(serialize_with = "serde_util::one_based_pair")]
    pub cells: (usize, usize),
    pub cycle: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub d: usize,
    pub cell_count: usize,
    pub non_trees: Vec<NonTreeCell>,
    pub dangling_facets: Vec<DanglingFacet>,
    pub overlap_cycles: Vec<OverlapCycle>,
}

impl ValidationReport {
    pub fn spanning_trees_ok(&self) -> bool {
        self.non_trees.is_empty()
    }

    pub fn facets_ok(&self) -> bool {
        self.dangling_facets.is_empty()
    }

    pub fn acyclic_ok(&self) -> bool {
        self.overlap_cycles.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.cell_count > 0 && self.spanning_trees_ok() && self.facets_ok() && self.acyclic_ok()
    }
}

/// Checks the three conditions characterizing fine mixed subdivisions of `nΔ_{d-1}`:
/// every cell is a spanning tree of `K_{n,d}`, every interior facet is shared, and no two
/// cells overlap (no directed cycle of length >= 4 in `U(T_i, T_j)`).
pub fn validate_subdivision(cells: &CellCollection) -> ValidationReport {
    let (n, d) = (cells.n(), cells.d());
    let mut report = ValidationReport {
        n,
        d,
        cell_count: cells.len(),
        non_trees: Vec::new(),
        dangling_facets: Vec::new(),
        overlap_cycles: Vec::new(),
    };

    for (ci, cell) in cells.cells().iter().enumerate() {
        let edges = cell.edge_count();
        let reason = if edges + 1 != n + d {
            Some(NonTreeReason::WrongEdgeCount {
                edges,
                expected: n + d - 1,
            })
        } else if !cell.covers_all_elements() {
            let missing = ElementSet::full(d).difference(cell.support());
            Some(NonTreeReason::Uncovered {
                elements: missing.iter().collect(),
            })
        } else if !cell.is_forest() {
            Some(NonTreeReason::Disconnected)
        } else {
            None
        };
        if let Some(reason) = reason {
            report.non_trees.push(NonTreeCell { cell: ci, reason });
        }
    }

    for (ci, cell) in cells.cells().iter().enumerate() {
        let right_deg = cell.right_degree_vector().entries;
        for (i, j) in cell.edges() {
            let left_deg = cell.coord(i).len();
            if left_deg < 2 || right_deg[j - 1] < 1 {
                continue; // T ∖ e has an isolated vertex
            }
            let facet = cell.with_coord(i, cell.coord(i).without(j));
            let shared = cells
                .cells()
                .iter()
                .enumerate()
                .any(|(cj, other)| cj != ci && facet.is_face_of(other));
            if !shared {
                report.dangling_facets.push(DanglingFacet {
                    cell: ci,
                    edge: (i, j),
                    facet,
                });
            }
        }
    }

    for a in 0..cells.len() {
        for b in a + 1..cells.len() {
            if let Some(cycle) = overlap_cycle(&cells.cells()[a], &cells.cells()[b]) {
                report.overlap_cycles.push(OverlapCycle { cells: (a, b), cycle });
            }
        }
    }
    report
}

/// Simple directed cycle with at least three distinct vertices in `U(a, b)`.
///
/// Shared edges appear in both orientations, so two-vertex cycles are ignored.
fn overlap_cycle(a: &TropicalType, b: &TropicalType) -> Option<Vec<Vertex>> {
    let (n, d) = a.shape();
    let size = n + d;
    let mut succ = vec![Vec::new(); size];
    for (i, j) in a.edges() {
        succ[i].push(n + j - 1);
    }
    for (i, j) in b.edges() {
        succ[n + j - 1].push(i);
    }
    for s in &mut succ {
        s.sort_unstable();
        s.dedup();
    }

    fn dfs(succ: &[Vec<usize>], start: usize, v: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
        for &w in &succ[v] {
            if w == start && path.len() >= 3 {
                return true;
            }
            if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                if dfs(succ, start, w, path, on_path) {
                    return true;
                }
                path.pop();
                on_path[w] = false;
            }
        }
        false
    }

    let mut on_path = vec![false; size];
    for start in 0..size {
        let mut path = vec![start];
        on_path[start] = true;
        if dfs(&succ, start, start, &mut path, &mut on_path) {
            path.push(start);
            return Some(
                path.into_iter()
                    .map(|v| {
                        if v < n {
                            Vertex::Left(v)
                        } else {
                            Vertex::Right(v - n + 1)
                        }
                    })
                    .collect(),
            );
        }
        on_path[start] = false;
    }
    None
}

/// The full face system of a valid subdivision.
pub fn face_types(cells: &CellCollection) -> Result<TypeSystem> {
    if !validate_subdivision(cells).is_valid() {
        return Err(Error::InvalidSubdivision);
    }
    Ok(TypeSystem::face_closure(cells))
}

/// Types with every coordinate a singleton (0-dimensional faces).
pub fn topes(system: &TypeSystem) -> Vec<TropicalType> {
    system.iter().filter(|t| t.is_tope()).cloned().collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// All `(a_1, ..., a_parts)` with `a_i >= 0` and `Σ a_i = total`, in lexicographic order.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<i64>> {
    fn go(left: usize, parts: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 1 {
            prefix.push(left as i64);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in 0..=left {
            prefix.push(a as i64);
            go(left - a, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub vector: Vec<i64>,
    #[serde(serialize_with = "serde_util::one_based_vec")]
    pub cells: Vec<usize>,
}

/// How one degree-vector map behaves against its target composition set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeMapReport {
    pub target_sum: usize,
    pub parts: usize,
    pub images: Vec<Vec<i64>>,
    pub collisions: Vec<Collision>,
    /// Compositions hit by no cell.
    pub missing: Vec<Vec<i64>>,
    /// Cell images that are not compositions of the target at all.
    #[serde(serialize_with = "serialize_outside")]
    pub outside: Vec<(usize, Vec<i64>)>,
}

fn serialize_outside<S: Serializer>(v: &[(usize, Vec<i64>)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(c, vec)| (c + 1, vec)))
}

impl DegreeMapReport {
    fn build(vectors: Vec<Vec<i64>>, target_sum: usize, parts: usize) -> Self {
        let mut by_image: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        let mut outside = Vec::new();
        for (ci, v) in vectors.iter().enumerate() {
            if v.len() != parts || v.iter().any(|&x| x < 0) || v.iter().sum::<i64>() != target_sum as i64 {
                outside.push((ci, v.clone()));
            } else {
                by_image.entry(v.clone()).or_default().push(ci);
            }
        }
        let collisions = by_image
            .iter()
            .filter(|(_, cs)| cs.len() > 1)
            .map(|(v, cs)| Collision {
                vector: v.clone(),
                cells: cs.clone(),
            })
            .collect();
        let missing = weak_compositions(target_sum, parts)
            .into_iter()
            .filter(|c| !by_image.contains_key(c))
            .collect();
        DegreeMapReport {
            target_sum,
            parts,
            images: vectors,
            collisions,
            missing,
            outside,
        }
    }

    pub fn is_bijective(&self) -> bool {
        self.collisions.is_empty() && self.missing.is_empty() && self.outside.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub cell_count: usize,
    /// `C(n + d - 2, d - 1)`.
    pub expected_count: u64,
    pub ldv: DegreeMapReport,
    pub rdv: DegreeMapReport,
}

impl BijectionReport {
    pub fn is_bijective(&self) -> bool {
        self.cell_count as u64 == self.expected_count && self.ldv.is_bijective() && self.rdv.is_bijective()
    }
}

/// LDV must biject onto weak compositions of `d - 1` into `n` parts, RDV onto weak
/// compositions of `n - 1` into `d` parts.
pub fn ldv_bijection_check(cells: &CellCollection) -> Result<BijectionReport> {
    if !validate_subdivision(cells).is_valid() {
        return Err(Error::InvalidSubdivision);
    }
    let (n, d) = (cells.n(), cells.d());
    let ldv = cells.cells().iter().map(|c| c.left_degree_vector().entries).collect();
    let rdv = cells.cells().iter().map(|c| c.right_degree_vector().entries).collect();
    Ok(BijectionReport {
        cell_count: cells.len(),
        expected_count: binomial((n + d - 2) as u64, (d - 1) as u64),
        ldv: DegreeMapReport::build(ldv, d - 1, n),
        rdv: DegreeMapReport::build(rdv, n - 1, d),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellUnitSimplex {
    #[serde(serialize_with = "serde_util::one_based")]
    pub cell: usize,
    pub rdv: Vec<i64>,
    /// Every location `a` whose unit simplex `conv{a + e_j}` lies inside the cell.
    pub locations: Vec<Vec<i64>>,
}

impl CellUnitSimplex {
    pub fn is_unique_at_rdv(&self) -> bool {
        self.locations.len() == 1 && self.locations[0] == self.rdv
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitSimplexReport {
    pub cells: Vec<CellUnitSimplex>,
}

impl UnitSimplexReport {
    pub fn all_ok(&self) -> bool {
        self.cells.iter().all(CellUnitSimplex::is_unique_at_rdv)
    }
}

/// Unit-simplex locations `a` (`Σ a_j = n - 1`) with every vertex `a + e_j` inside the cell.
pub fn unit_simplex_locations(cell: &TropicalType) -> Vec<Vec<i64>> {
    let (n, d) = cell.shape();
    weak_compositions(n - 1, d)
        .into_iter()
        .filter(|a| {
            (0..d).all(|j| {
                let mut p = a.clone();
                p[j] += 1;
                contains_lattice_point(cell, &p)
            })
        })
        .collect()
}

/// For each cell, the unit simplices it contains; a valid subdivision has exactly one per
/// cell, located at the cell's right degree vector.
pub fn unit_simplex_check(cells: &CellCollection) -> Result<UnitSimplexReport> {
    if !validate_subdivision(cells).is_valid() {
        return Err(Error::InvalidSubdivision);
    }
    Ok(UnitSimplexReport {
        cells: cells
            .cells()
            .iter()
            .enumerate()
            .map(|(ci, c)| CellUnitSimplex {
                cell: ci,
                rdv: c.right_degree_vector().entries,
                locations: unit_simplex_locations(c),
            })
            .collect(),
    })
}
