//! Independent oracles shared by the integration tests. Nothing here calls the library's
//! own algorithms for the property being checked.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use tomtri::generators::{all_prism_triangulations, staircase};
use tomtri::{CellCollection, TropicalType, TypeSystem, WeightMatrix};

/// Weak compositions of `total` into `parts` parts, by plain recursion.
pub fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn coord_sets(t: &TropicalType) -> Vec<Vec<usize>> {
    t.to_lists()
}

/// Hall's condition for `p ∈ Σ_i Δ_{A_i}`: `Σ p = n` and, for every `J ⊆ [d]`, the mass on
/// `J` is at most the number of coordinates meeting `J`.
pub fn hall_contains(t: &TropicalType, p: &[i64]) -> bool {
    let (n, d) = t.shape();
    if p.len() != d || p.iter().any(|&x| x < 0) || p.iter().sum::<i64>() != n as i64 {
        return false;
    }
    let sets = coord_sets(t);
    (1u64..(1 << d)).all(|mask| {
        let mass: i64 = (0..d).filter(|j| mask >> j & 1 == 1).map(|j| p[j]).sum();
        let meeting = sets
            .iter()
            .filter(|a| a.iter().any(|&j| mask >> (j - 1) & 1 == 1))
            .count() as i64;
        mass <= meeting
    })
}

/// Locations `a` (`Σ a = n - 1`) of unit simplices `conv{a + e_j}` inside the cell.
pub fn hall_unit_simplices(t: &TropicalType) -> Vec<Vec<i64>> {
    let (n, d) = t.shape();
    compositions(n as i64 - 1, d)
        .into_iter()
        .filter(|a| {
            (0..d).all(|j| {
                let mut p = a.clone();
                p[j] += 1;
                hall_contains(t, &p)
            })
        })
        .collect()
}

/// Right degrees minus one, counted directly.
pub fn rdv(t: &TropicalType) -> Vec<i64> {
    let (_, d) = t.shape();
    let sets = coord_sets(t);
    (1..=d)
        .map(|j| sets.iter().filter(|a| a.contains(&j)).count() as i64 - 1)
        .collect()
}

pub fn ldv(t: &TropicalType) -> Vec<i64> {
    coord_sets(t).iter().map(|a| a.len() as i64 - 1).collect()
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        k => (0..k)
            .map(|c| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets_of_size(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            go(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, len, k, &mut Vec::new(), &mut out);
    out
}

/// Lattice points `Σ_i e_{j_i}` with `j_i ∈ A_i`, projected by dropping the last coordinate.
pub fn cell_points(t: &TropicalType) -> Vec<Vec<i128>> {
    let (_, d) = t.shape();
    let mut points: BTreeSet<Vec<i128>> = BTreeSet::from([vec![0; d]]);
    for a in coord_sets(t) {
        points = points
            .iter()
            .flat_map(|p| {
                a.iter().map(move |&j| {
                    let mut q = p.clone();
                    q[j - 1] += 1;
                    q
                })
            })
            .collect();
    }
    points
        .into_iter()
        .map(|mut p| {
            p.pop();
            p
        })
        .collect()
}

/// Facet inequalities `a · x <= b` of the projected cell, `a` primitive, found by trying
/// every hyperplane through `d - 1` of its points.
pub fn hull_facets(t: &TropicalType) -> BTreeSet<(Vec<i64>, i64)> {
    let points = cell_points(t);
    let m = t.d() - 1;
    let mut out = BTreeSet::new();
    if m == 0 {
        return out;
    }
    for subset in subsets_of_size(points.len(), m) {
        let base = &points[subset[0]];
        let rows: Vec<Vec<i128>> = subset[1..]
            .iter()
            .map(|&k| points[k].iter().zip(base).map(|(x, y)| x - y).collect())
            .collect();
        let mut normal: Vec<i128> = (0..m)
            .map(|c| {
                let minor: Vec<Vec<i128>> = rows
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                    .collect();
                if c % 2 == 0 {
                    det(&minor)
                } else {
                    -det(&minor)
                }
            })
            .collect();
        let g = normal.iter().fold(0, |g, &v| gcd(g, v));
        if g == 0 {
            continue;
        }
        normal.iter_mut().for_each(|v| *v /= g);
        let dot = |p: &Vec<i128>| p.iter().zip(&normal).map(|(x, a)| x * a).sum::<i128>();
        let b = dot(base);
        let values: Vec<i128> = points.iter().map(dot).collect();
        let (le, ge) = (values.iter().all(|&v| v <= b), values.iter().all(|&v| v >= b));
        if le && !ge {
            out.insert((normal.iter().map(|&v| v as i64).collect(), b as i64));
        } else if ge && !le {
            out.insert((normal.iter().map(|&v| -v as i64).collect(), -b as i64));
        }
    }
    out
}

/// `C_j = A_j ∪ B_j` and every other `C_k` is `A_k`, `B_k` or their union, written over
/// plain element lists.
pub fn elimination_predicate(a: &TropicalType, b: &TropicalType, j: usize, c: &TropicalType) -> bool {
    let (a, b, c) = (coord_sets(a), coord_sets(b), coord_sets(c));
    (0..a.len()).all(|k| {
        let union: BTreeSet<usize> = a[k].iter().chain(&b[k]).copied().collect();
        let ck: BTreeSet<usize> = c[k].iter().copied().collect();
        let ak: BTreeSet<usize> = a[k].iter().copied().collect();
        let bk: BTreeSet<usize> = b[k].iter().copied().collect();
        if k == j {
            ck == union
        } else {
            ck == union || ck == ak || ck == bk
        }
    })
}

pub fn brute_witnesses(system: &TypeSystem, a: &TropicalType, b: &TropicalType, j: usize) -> Vec<TropicalType> {
    system
        .iter()
        .filter(|c| elimination_predicate(a, b, j, c))
        .cloned()
        .collect()
}

/// Every sub-tuple of nonempty subsets of every cell.
pub fn brute_faces(cells: &CellCollection) -> BTreeSet<Vec<Vec<usize>>> {
    let mut out = BTreeSet::new();
    for cell in cells.cells() {
        let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![]];
        for a in coord_sets(cell) {
            let subs: Vec<Vec<usize>> = (1u32..(1 << a.len()))
                .map(|m| (0..a.len()).filter(|i| m >> i & 1 == 1).map(|i| a[i]).collect())
                .collect();
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    subs.iter().map(move |s| {
                        let mut q = p.clone();
                        q.push(s.clone());
                        q
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    out
}

/// The comparability semidigraph as an arc list over `1..=d`, undirected edges both ways.
type Arcs = (Vec<(usize, usize)>, HashSet<(usize, usize)>);

fn comparability_arcs(a: &TropicalType, b: &TropicalType) -> Arcs {
    let (a, b) = (coord_sets(a), coord_sets(b));
    let mut arcs = Vec::new();
    let mut directed = HashSet::new();
    for (ai, bi) in a.iter().zip(&b) {
        for &j in ai {
            for &k in bi {
                if j == k {
                    continue;
                }
                if ai.contains(&k) && bi.contains(&j) {
                    arcs.push((j, k));
                } else {
                    arcs.push((j, k));
                    directed.insert((j, k));
                }
            }
        }
    }
    (arcs, directed)
}

/// Directed cycle through at least one directed edge, via transitive closure.
pub fn comparability_acyclic(a: &TropicalType, b: &TropicalType) -> bool {
    let d = a.d();
    let (arcs, directed) = comparability_arcs(a, b);
    let mut reach = vec![vec![false; d + 1]; d + 1];
    for &(j, k) in &arcs {
        reach[j][k] = true;
    }
    for m in 1..=d {
        for i in 1..=d {
            if reach[i][m] {
                for k in 1..=d {
                    if reach[m][k] {
                        reach[i][k] = true;
                    }
                }
            }
        }
    }
    directed.iter().all(|&(j, k)| !reach[k][j])
}

/// Every ordered partition of `1..=d` as a list of blocks.
pub fn ordered_partitions(d: usize) -> Vec<Vec<Vec<usize>>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in ordered_partitions(d - 1) {
        for b in 0..p.len() {
            let mut q = p.clone();
            q[b].push(d);
            out.push(q);
        }
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, vec![d]);
            out.push(q);
        }
    }
    out
}

/// `A ∩ P_m` coordinatewise, with `m` the last block meeting `A_i`.
pub fn refine_brute(t: &TropicalType, partition: &[Vec<usize>]) -> Vec<Vec<usize>> {
    coord_sets(t)
        .iter()
        .map(|a| {
            let block = partition
                .iter()
                .rev()
                .find(|b| b.iter().any(|j| a.contains(j)))
                .expect("blocks cover [d]");
            a.iter().copied().filter(|j| block.contains(j)).collect()
        })
        .collect()
}

/// All four axioms, written naively: boundary, partition-mode surrounding, comparability by
/// closure, elimination by scan.
pub fn naive_is_tom(system: &TypeSystem) -> bool {
    let (n, d) = (system.n(), system.d());
    let lists: HashSet<Vec<Vec<usize>>> = system.iter().map(TropicalType::to_lists).collect();
    let boundary = (1..=d).all(|j| lists.contains(&vec![vec![j]; n]));
    let parts = ordered_partitions(d);
    let surrounding = system
        .iter()
        .all(|t| parts.iter().all(|p| lists.contains(&refine_brute(t, p))));
    let types = system.types();
    let comparability = types
        .iter()
        .enumerate()
        .all(|(x, a)| types[x..].iter().all(|b| comparability_acyclic(a, b)));
    let elimination = types.iter().all(|a| {
        types
            .iter()
            .all(|b| (0..n).all(|j| types.iter().any(|c| elimination_predicate(a, b, j, c))))
    });
    boundary && surrounding && comparability && elimination
}

pub fn staircases(max_n: usize, max_d: usize) -> Vec<CellCollection> {
    (1..=max_n)
        .flat_map(|n| (1..=max_d).map(move |d| staircase(n, d).unwrap()))
        .collect()
}

pub fn prisms(max_n: usize) -> Vec<CellCollection> {
    (1..=max_n).flat_map(|n| all_prism_triangulations(n).unwrap()).collect()
}

/// Fixed seed for the random weight matrices used across the suites.
pub const WEIGHT_SEED: u64 = 0x7072_6f64_7563_7473;
pub const WEIGHT_COUNT: usize = 20;
pub const WEIGHT_MAX: i64 = 1_000_000;

/// An integer weight matrix with `n, d ∈ 2..=4` and entries uniform in `[0, 10^6]`.
pub fn random_weights<R: Rng>(rng: &mut R) -> WeightMatrix {
    let n = rng.gen_range(2..=4);
    let d = rng.gen_range(2..=4);
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..d).map(|_| rng.gen_range(0..=WEIGHT_MAX)).collect())
        .collect();
    WeightMatrix::from_integers(&rows).unwrap()
}
