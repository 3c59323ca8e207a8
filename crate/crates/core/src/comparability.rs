//! Comparability semidigraphs of pairs of types and their acyclicity.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::Result;
use crate::types::TropicalType;

/// Semidigraph on `[d]` (1-based vertex labels).
///
/// Undirected self-loops are dropped; parallel edges are merged per orientation class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparabilityGraph {
    pub d: usize,
    /// Pairs `(j, k)` with `j < k`.
    pub undirected: BTreeSet<(usize, usize)>,
    /// Arcs `j -> k`.
    pub directed: BTreeSet<(usize, usize)>,
}

impl ComparabilityGraph {
    /// `CG_{A,B}`: for each `i`, an edge `j - k` for every `j ∈ A_i`, `k ∈ B_i`, undirected when
    /// both lie in `A_i ∩ B_i` and directed `j -> k` otherwise.
    pub fn new(a: &TropicalType, b: &TropicalType) -> Result<Self> {
        a.check_shape(b)?;
        let mut g = ComparabilityGraph {
            d: a.d(),
            undirected: BTreeSet::new(),
            directed: BTreeSet::new(),
        };
        for (&ai, &bi) in a.coords().iter().zip(b.coords()) {
            let common = ai.intersection(bi);
            for j in ai.iter() {
                for k in bi.iter() {
                    if common.contains(j) && common.contains(k) {
                        if j != k {
                            g.undirected.insert((j.min(k), j.max(k)));
                        }
                    } else {
                        g.directed.insert((j, k));
                    }
                }
            }
        }
        Ok(g)
    }

    /// Successor masks with undirected edges doubled; bit `k - 1` of `succ[j - 1]` is set
    /// when `k` is reachable from `j` in one step.
    fn successors(&self) -> Vec<u64> {
        let mut succ = vec![0u64; self.d];
        for &(j, k) in self.undirected.iter().chain(&self.directed) {
            succ[j - 1] |= 1 << (k - 1);
        }
        for &(j, k) in &self.undirected {
            succ[k - 1] |= 1 << (j - 1);
        }
        succ
    }

    /// No closed walk uses a directed arc; undirected edges may be traversed freely.
    pub fn is_acyclic(&self) -> bool {
        let succ = self.successors();
        let mut arcs = vec![0u64; self.d];
        for &(j, k) in &self.directed {
            arcs[j - 1] |= 1 << (k - 1);
        }
        masks_acyclic(&succ, &arcs)
    }

    /// A closed walk `v_0, v_1, ..., v_m = v_0` that starts with a directed arc, if one exists.
    ///
    /// A directed arc `u -> v` closes a cycle iff `u` is reachable from `v`, i.e. both ends
    /// sit in one strongly connected component of the doubled graph.
    pub fn directed_cycle(&self) -> Option<Vec<usize>> {
        let succ = self.successors();
        for &(u, v) in &self.directed {
            if let Some(path) = shortest_path(&succ, v, u) {
                let mut cycle = Vec::with_capacity(path.len() + 1);
                cycle.push(u);
                cycle.extend(path);
                return Some(cycle);
            }
        }
        None
    }
}

/// Acyclicity of `CG_{A,B}` straight from the coordinate bitsets, without materializing
/// edge sets. Shapes must already match.
pub(crate) fn pair_is_acyclic(a: &TropicalType, b: &TropicalType) -> bool {
    let d = a.d();
    let mut succ = vec![0u64; d];
    let mut arcs = vec![0u64; d];
    for (&ai, &bi) in a.coords().iter().zip(b.coords()) {
        let common = ai.intersection(bi);
        for j in ai.iter() {
            let targets = bi.bits();
            if common.contains(j) {
                // j -> k is undirected for k in the common part, directed otherwise.
                let directed = targets & !common.bits();
                arcs[j - 1] |= directed;
                succ[j - 1] |= targets;
                // Undirected edges also run k -> j.
                for k in common.iter() {
                    succ[k - 1] |= 1 << (j - 1);
                }
            } else {
                arcs[j - 1] |= targets;
                succ[j - 1] |= targets;
            }
        }
    }
    masks_acyclic(&succ, &arcs)
}

/// `succ` holds every one-step move, `arcs` the directed ones; an arc `u -> v` lies on a
/// directed cycle iff `u` is reachable from `v`.
fn masks_acyclic(succ: &[u64], arcs: &[u64]) -> bool {
    let d = succ.len();
    let mut reach_cache: Vec<Option<u64>> = vec![None; d];
    for u in 0..d {
        let mut out = arcs[u];
        while out != 0 {
            let v = out.trailing_zeros() as usize;
            out &= out - 1;
            let reach = *reach_cache[v].get_or_insert_with(|| reachable(succ, v));
            if reach & (1 << u) != 0 {
                return false;
            }
        }
    }
    true
}

/// Vertices reachable from `v` (0-based) in zero or more steps.
fn reachable(succ: &[u64], v: usize) -> u64 {
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= succ[x];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

fn shortest_path(succ: &[u64], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; succ.len()];
    parent[from - 1] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur - 1];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        let mut next = succ[x - 1];
        while next != 0 {
            let y = next.trailing_zeros() as usize + 1;
            next &= next - 1;
            if parent[y - 1] == usize::MAX {
                parent[y - 1] = x;
                queue.push_back(y);
            }
        }
    }
    None
}
