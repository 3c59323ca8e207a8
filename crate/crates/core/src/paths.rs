//! Adjacency of types, the rank-bounded subsystems `Q_α`, and strong paths.
//!
//! A strong path from `A` to `B` edits each coordinate monotonically: it first adds
//! elements of `B_i ∖ A_i`, then deletes elements of `A_i ∖ B_i`, and never touches anything
//! else. Its length is therefore exactly `Δ(A, B)`, and it yields an elimination witness.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::axioms::is_elimination_witness;
use crate::error::{Error, Result};
use crate::subdivision::TypeSystem;
use crate::types::{RankVector, TropicalType};

/// Exactly one coordinate differs, by exactly one element.
pub fn adjacent(a: &TropicalType, b: &TropicalType) -> Result<bool> {
    a.check_shape(b)?;
    let mut differing = a.coords().iter().zip(b.coords()).filter(|(x, y)| x != y);
    Ok(match (differing.next(), differing.next()) {
        (Some((x, y)), None) => x.difference(*y).len() + y.difference(*x).len() == 1,
        _ => false,
    })
}

/// Types with `|A_i| > a_i` in every coordinate.
pub fn q_alpha(system: &TypeSystem, alpha: &RankVector) -> TypeSystem {
    system.filter(|t| alpha.admits(t))
}

/// Neighbours of `t` accepted by `contains`, found by toggling one element of one coordinate.
fn neighbours(t: &TropicalType, contains: impl Fn(&TropicalType) -> bool) -> Vec<TropicalType> {
    let mut out = Vec::new();
    for i in 0..t.n() {
        let c = t.coord(i);
        for j in 1..=t.d() {
            let next = if c.contains(j) { c.without(j) } else { c.with(j) };
            if next.is_empty() {
                continue;
            }
            let u = t.with_coord(i, next);
            if contains(&u) {
                out.push(u);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub alpha: RankVector,
    pub size: usize,
    /// Component sizes, largest first.
    pub component_sizes: Vec<usize>,
    /// One representative per component, in the same order.
    pub representatives: Vec<TropicalType>,
}

impl ConnectivityReport {
    /// Empty or a single component.
    pub fn is_connected(&self) -> bool {
        self.component_sizes.len() <= 1
    }
}

/// Connected components of the adjacency graph on `Q_α`.
pub fn q_alpha_connected(system: &TypeSystem, alpha: &RankVector) -> ConnectivityReport {
    let q = q_alpha(system, alpha);
    let mut component: HashMap<&TropicalType, usize> = HashMap::with_capacity(q.len());
    let mut comps: Vec<(usize, TropicalType)> = Vec::new();
    for start in q.iter() {
        if component.contains_key(start) {
            continue;
        }
        let id = comps.len();
        component.insert(start, id);
        let mut size = 0;
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(t) = queue.pop_front() {
            size += 1;
            for u in neighbours(&t, |u| q.contains(u)) {
                let key = &q.types()[q.position(&u).expect("neighbour is in Q")];
                if !component.contains_key(key) {
                    component.insert(key, id);
                    queue.push_back(u);
                }
            }
        }
        comps.push((size, start.clone()));
    }
    comps.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)));
    ConnectivityReport {
        alpha: alpha.clone(),
        size: q.len(),
        component_sizes: comps.iter().map(|c| c.0).collect(),
        representatives: comps.into_iter().map(|c| c.1).collect(),
    }
}

/// A sequence of types, consecutive members adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TypePath(pub Vec<TropicalType>);

impl TypePath {
    pub fn members(&self) -> &[TropicalType] {
        &self.0
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn first(&self) -> &TropicalType {
        &self.0[0]
    }

    pub fn last(&self) -> &TropicalType {
        &self.0[self.0.len() - 1]
    }

    pub fn is_connected_path(&self) -> bool {
        self.0.windows(2).all(|w| adjacent(&w[0], &w[1]).unwrap_or(false))
    }

    /// Every coordinate satisfies the strong conditions with respect to the endpoints: no
    /// addition after a deletion, members stay inside `A_i ∪ B_i`, and nothing added is later
    /// deleted.
    pub fn is_strong(&self) -> bool {
        if self.0.is_empty() || !self.is_connected_path() {
            return false;
        }
        let (a, b) = (self.first(), self.last());
        (0..a.n()).all(|i| {
            let union = a.coord(i).union(b.coord(i));
            let mut deleted = false;
            let mut added = crate::set::ElementSet::EMPTY;
            for w in self.0.windows(2) {
                let (x, y) = (w[0].coord(i), w[1].coord(i));
                let plus = y.difference(x);
                let minus = x.difference(y);
                if !plus.is_empty() {
                    if deleted {
                        return false;
                    }
                    added = added.union(plus);
                }
                if !minus.is_empty() {
                    deleted = true;
                    if !minus.is_disjoint(added) {
                        return false;
                    }
                }
            }
            self.0.iter().all(|c| c.coord(i).is_subset(union))
        })
    }
}

/// A strong path from `a` to `b` through members of `system`.
///
/// Moves in coordinate `i` add an element of `B_i ∖ A_i` while the coordinate still holds
/// all of `A_i`, or delete an element of `A_i ∖ B_i` once it holds all of `B_i`. Every move
/// makes progress, so any completed walk has length `Δ(A, B)`. Successors are tried in
/// increasing type order and dead states are memoized, so the result is the
/// lexicographically first strong path.
pub fn strong_path(system: &TypeSystem, a: &TropicalType, b: &TropicalType) -> Result<TypePath> {
    a.check_shape(b)?;
    for t in [a, b] {
        if !system.contains(t) {
            return Err(Error::NotInSystem(t.clone()));
        }
    }

    fn successors(c: &TropicalType, a: &TropicalType, b: &TropicalType, system: &TypeSystem) -> Vec<TropicalType> {
        let mut out = Vec::new();
        for i in 0..c.n() {
            let (ci, ai, bi) = (c.coord(i), a.coord(i), b.coord(i));
            if ai.is_subset(ci) {
                for j in bi.difference(ci).iter() {
                    out.push(c.with_coord(i, ci.with(j)));
                }
            }
            if bi.is_subset(ci) {
                for j in ci.difference(bi).iter() {
                    out.push(c.with_coord(i, ci.without(j)));
                }
            }
        }
        out.retain(|u| system.contains(u));
        out.sort();
        out
    }

    fn search(
        c: &TropicalType,
        a: &TropicalType,
        b: &TropicalType,
        system: &TypeSystem,
        dead: &mut HashSet<TropicalType>,
        path: &mut Vec<TropicalType>,
    ) -> bool {
        if c == b {
            return true;
        }
        for u in successors(c, a, b, system) {
            if dead.contains(&u) {
                continue;
            }
            path.push(u.clone());
            if search(&u, a, b, system, dead, path) {
                return true;
            }
            path.pop();
            dead.insert(u);
        }
        false
    }

    let mut path = vec![a.clone()];
    let mut dead = HashSet::new();
    if search(a, a, b, system, &mut dead, &mut path) {
        Ok(TypePath(path))
    } else {
        Err(Error::NoStrongPath(a.clone(), b.clone()))
    }
}

/// An elimination witness for `(A, B, coord)` built from a strong path: take the first
/// member whose `coord`-th entry is `A_coord ∪ B_coord`, then trim every other coordinate to
/// `A_k`, `B_k` or the union, which stays in the system by surrounding.
pub fn eliminate_via_path(
    system: &TypeSystem,
    a: &TropicalType,
    b: &TropicalType,
    coord: usize,
) -> Result<TropicalType> {
    if coord >= a.n() {
        return Err(Error::CoordinateOutOfRange(coord + 1, a.n()));
    }
    let path = strong_path(system, a, b)?;
    let union = a.coord(coord).union(b.coord(coord));
    let pivot = path
        .members()
        .iter()
        .find(|c| c.coord(coord) == union)
        .expect("a strong path passes through A_j ∪ B_j in every coordinate");
    let coords = pivot
        .coords()
        .iter()
        .enumerate()
        .map(|(k, &ck)| {
            let (ak, bk) = (a.coord(k), b.coord(k));
            if ck == ak || ck == bk || ck == ak.union(bk) {
                ck
            } else if ak.is_subset(ck) {
                ak
            } else {
                bk
            }
        })
        .collect();
    let c = TropicalType::from_parts_unchecked(a.d(), coords);
    debug_assert!(is_elimination_witness(a, b, coord, &c));
    if system.contains(&c) {
        Ok(c)
    } else {
        Err(Error::NotInSystem(c))
    }
}
