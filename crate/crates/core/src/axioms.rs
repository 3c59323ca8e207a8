//! The four tropical oriented matroid axioms, checked exhaustively with witnesses.

use std::collections::HashSet;

use serde::Serialize;

use crate::comparability::{pair_is_acyclic, ComparabilityGraph};
use crate::error::{Error, Result};
use crate::serde_util;
use crate::set::ElementSet;
use crate::subdivision::TypeSystem;
use crate::types::{OrderedPartition, TropicalType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Boundary,
    Surrounding,
    Comparability,
    Elimination,
}

/// How surrounding is checked: against every ordered partition of `[d]`, or through
/// single-element deletions (equivalent for acyclic types).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurroundingMode {
    Partition,
    Subset,
}

impl SurroundingMode {
    /// Subset mode when every type is acyclic, partition mode otherwise.
    pub fn default_for(system: &TypeSystem) -> Self {
        if system.iter().all(TropicalType::is_forest) {
            SurroundingMode::Subset
        } else {
            SurroundingMode::Partition
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    MissingBoundary {
        element: usize,
    },
    MissingRefinement {
        source: TropicalType,
        partition: Vec<Vec<usize>>,
        refinement: TropicalType,
    },
    MissingDeletion {
        source: TropicalType,
        #[serde(serialize_with = "serde_util::one_based")]
        coord: usize,
        element: usize,
        result: TropicalType,
    },
    ComparabilityCycle {
        a: TropicalType,
        b: TropicalType,
        cycle: Vec<usize>,
    },
    EliminationFailure {
        a: TropicalType,
        b: TropicalType,
        #[serde(serialize_with = "serde_util::one_based")]
        coord: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: Axiom,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<SurroundingMode>,
    /// Number of individual instances examined.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    fn new(axiom: Axiom) -> Self {
        AxiomReport {
            axiom,
            mode: None,
            checked: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every constant type `(j, ..., j)` is present.
pub fn check_boundary(system: &TypeSystem) -> AxiomReport {
    let mut report = AxiomReport::new(Axiom::Boundary);
    for j in 1..=system.d() {
        report.checked += 1;
        let t = TropicalType::from_parts_unchecked(system.d(), vec![ElementSet::singleton(j); system.n()]);
        if !system.contains(&t) {
            report.violations.push(Violation::MissingBoundary { element: j });
        }
    }
    report
}

/// Every refinement of every type is present.
pub fn check_surrounding(system: &TypeSystem, mode: SurroundingMode) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(Axiom::Surrounding);
    report.mode = Some(mode);
    match mode {
        SurroundingMode::Partition => {
            let partitions = OrderedPartition::enumerate(system.d());
            for t in system.iter() {
                let mut seen = HashSet::new();
                for p in &partitions {
                    report.checked += 1;
                    let r = t.refine(p);
                    if !system.contains(&r) && seen.insert(r.clone()) {
                        report.violations.push(Violation::MissingRefinement {
                            source: t.clone(),
                            partition: p.blocks().iter().map(|b| b.iter().collect()).collect(),
                            refinement: r,
                        });
                    }
                }
            }
        }
        SurroundingMode::Subset => {
            if let Some(bad) = system.iter().find(|t| !t.is_forest()) {
                return Err(Error::CyclicTypeInSubsetMode(bad.clone()));
            }
            for t in system.iter() {
                for (coord, element, result) in t.single_deletions() {
                    report.checked += 1;
                    if !system.contains(&result) {
                        report.violations.push(Violation::MissingDeletion {
                            source: t.clone(),
                            coord,
                            element,
                            result,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `CG_{A,B}` is acyclic for every pair.
pub fn check_comparability(system: &TypeSystem) -> AxiomReport {
    let mut report = AxiomReport::new(Axiom::Comparability);
    let types = system.types();
    for (x, a) in types.iter().enumerate() {
        for b in &types[x + 1..] {
            report.checked += 1;
            if !pair_is_acyclic(a, b) {
                let cycle = ComparabilityGraph::new(a, b)
                    .ok()
                    .and_then(|g| g.directed_cycle())
                    .unwrap_or_default();
                report.violations.push(Violation::ComparabilityCycle {
                    a: a.clone(),
                    b: b.clone(),
                    cycle,
                });
            }
        }
    }
    report
}

/// The elimination predicate: `C_j = A_j ∪ B_j` and `C_k ∈ {A_k, B_k, A_k ∪ B_k}`.
pub fn is_elimination_witness(a: &TropicalType, b: &TropicalType, coord: usize, c: &TropicalType) -> bool {
    if a.shape() != b.shape() || a.shape() != c.shape() || coord >= a.n() {
        return false;
    }
    c.coords().iter().enumerate().all(|(k, &ck)| {
        let (ak, bk) = (a.coord(k), b.coord(k));
        let union = ak.union(bk);
        if k == coord {
            ck == union
        } else {
            ck == ak || ck == bk || ck == union
        }
    })
}

/// Candidate coordinate choices for a witness; duplicates collapsed.
fn candidate_options(a: &TropicalType, b: &TropicalType, coord: usize) -> Vec<Vec<ElementSet>> {
    (0..a.n())
        .map(|k| {
            let (ak, bk) = (a.coord(k), b.coord(k));
            let union = ak.union(bk);
            if k == coord {
                vec![union]
            } else {
                let mut opts = vec![ak, bk, union];
                opts.sort();
                opts.dedup();
                opts
            }
        })
        .collect()
}

/// Some witness for `(A, B, coord)` in the system, if any.
///
/// Looks candidates up by hash when there are fewer candidate patterns than types, and
/// scans the system otherwise.
pub fn find_elimination_witness(
    system: &TypeSystem,
    a: &TropicalType,
    b: &TropicalType,
    coord: usize,
) -> Option<TropicalType> {
    if a == b {
        return system.contains(a).then(|| a.clone());
    }
    let options = candidate_options(a, b, coord);
    let patterns: usize = options.iter().map(Vec::len).product();
    if patterns < system.len() {
        let mut pick = vec![0usize; options.len()];
        loop {
            let coords = pick.iter().zip(&options).map(|(&p, o)| o[p]).collect();
            let c = TropicalType::from_parts_unchecked(a.d(), coords);
            if system.contains(&c) {
                return Some(c);
            }
            let mut pos = 0;
            loop {
                if pos == pick.len() {
                    return None;
                }
                pick[pos] += 1;
                if pick[pos] < options[pos].len() {
                    break;
                }
                pick[pos] = 0;
                pos += 1;
            }
        }
    } else {
        system.iter().find(|c| is_elimination_witness(a, b, coord, c)).cloned()
    }
}

/// Every witness for `(A, B, coord)` in the system, by linear scan.
pub fn elimination_witnesses(
    system: &TypeSystem,
    a: &TropicalType,
    b: &TropicalType,
    coord: usize,
) -> Vec<TropicalType> {
    system
        .iter()
        .filter(|c| is_elimination_witness(a, b, coord, c))
        .cloned()
        .collect()
}

/// Every ordered triple `(A, B, j)` has a witness. The predicate is symmetric in `A` and `B`,
/// so each unordered pair is searched once and failures are reported for both orders.
pub fn check_elimination(system: &TypeSystem) -> AxiomReport {
    let mut report = AxiomReport::new(Axiom::Elimination);
    let types = system.types();
    let n = system.n();
    for (x, a) in types.iter().enumerate() {
        report.checked += n;
        for b in &types[x + 1..] {
            report.checked += 2 * n;
            for coord in 0..n {
                if find_elimination_witness(system, a, b, coord).is_none() {
                    report.violations.push(Violation::EliminationFailure {
                        a: a.clone(),
                        b: b.clone(),
                        coord,
                    });
                    report.violations.push(Violation::EliminationFailure {
                        a: b.clone(),
                        b: a.clone(),
                        coord,
                    });
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TomVerdict {
    pub boundary: AxiomReport,
    pub surrounding: AxiomReport,
    pub comparability: AxiomReport,
    pub elimination: AxiomReport,
}

impl TomVerdict {
    pub fn is_tom(&self) -> bool {
        self.reports().iter().all(|r| r.passed())
    }

    pub fn reports(&self) -> [&AxiomReport; 4] {
        [
            &self.boundary,
            &self.surrounding,
            &self.comparability,
            &self.elimination,
        ]
    }

    pub fn failed_axioms(&self) -> Vec<Axiom> {
        self.reports().iter().filter(|r| !r.passed()).map(|r| r.axiom).collect()
    }
}

/// All four axioms, with surrounding in its default mode for the system.
pub fn check_tom(system: &TypeSystem) -> TomVerdict {
    check_tom_with(system, SurroundingMode::default_for(system)).expect("default surrounding mode accepts the system")
}

pub fn check_tom_with(system: &TypeSystem, mode: SurroundingMode) -> Result<TomVerdict> {
    Ok(TomVerdict {
        boundary: check_boundary(system),
        surrounding: check_surrounding(system, mode)?,
        comparability: check_comparability(system),
        elimination: check_elimination(system),
    })
}
