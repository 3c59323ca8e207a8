//! Exact membership in Minkowski sums of simplex faces.
//!
//! A point `p` lies in `Δ_{I_1} + ... + Δ_{I_n}` iff the transportation problem
//! `z_{i,k} >= 0`, `Σ_{k ∈ I_i} z_{i,k} = 1`, `Σ_i z_{i,k} = p_k` is feasible. Feasibility is
//! decided by a max-flow computation over exact rationals.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::types::TropicalType;

/// A feasible transportation plan `z[i][k - 1]`, or `None` when `point` is outside the cell.
pub fn transportation_plan(cell: &TropicalType, point: &[BigRational]) -> Option<Vec<Vec<BigRational>>> {
    let (n, d) = cell.shape();
    if point.len() != d || point.iter().any(|p| p.is_negative()) {
        return None;
    }
    let total: BigRational = point.iter().sum();
    if total != BigRational::from_integer(BigInt::from(n)) {
        return None;
    }

    // Nodes: source, n left, d right, sink.
    let size = n + d + 2;
    let (source, sink) = (0, size - 1);
    let left = |i: usize| 1 + i;
    let right = |j: usize| n + j; // j is 1-based
    let mut cap = vec![vec![BigRational::zero(); size]; size];
    for i in 0..n {
        cap[source][left(i)] = BigRational::one();
        for j in cell.coord(i).iter() {
            cap[left(i)][right(j)] = BigRational::one();
        }
    }
    for j in 1..=d {
        cap[right(j)][sink] = point[j - 1].clone();
    }
    let original = cap.clone();

    let mut flow = BigRational::zero();
    loop {
        let mut parent = vec![usize::MAX; size];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for v in 0..size {
                if parent[v] == usize::MAX && cap[u][v].is_positive() {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut bottleneck: Option<BigRational> = None;
        let mut v = sink;
        while v != source {
            let u = parent[v];
            bottleneck = Some(match bottleneck {
                Some(b) if b <= cap[u][v] => b,
                _ => cap[u][v].clone(),
            });
            v = u;
        }
        let b = bottleneck.expect("augmenting path has an edge");
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u][v] -= &b;
            cap[v][u] += &b;
            v = u;
        }
        flow += b;
    }

    if flow != total {
        return None;
    }
    let plan = (0..n)
        .map(|i| {
            (1..=d)
                .map(|j| &original[left(i)][right(j)] - &cap[left(i)][right(j)])
                .map(|z| if z.is_negative() { BigRational::zero() } else { z })
                .collect()
        })
        .collect();
    Some(plan)
}

pub fn minkowski_contains(cell: &TropicalType, point: &[BigRational]) -> bool {
    transportation_plan(cell, point).is_some()
}

/// Integer-point convenience wrapper.
pub fn contains_lattice_point(cell: &TropicalType, point: &[i64]) -> bool {
    let p: Vec<BigRational> = point
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect();
    minkowski_contains(cell, &p)
}
