//! Known triangulations of `Δ_{n-1} × Δ_{d-1}`: staircase triangulations and the `n!`
//! triangulations of the prism `Δ_{n-1} × Δ_1`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::subdivision::CellCollection;
use crate::types::{TropicalType, MAX_D};

/// Largest `n` accepted by [`all_prism_triangulations`].
pub const MAX_PRISM_N: usize = 6;

/// One cell per monotone lattice path from `(1, 1)` to `(n, d)`; the cell has edge `(i, j)`
/// iff the path visits `(i, j)`.
pub fn staircase(n: usize, d: usize) -> Result<CellCollection> {
    if n == 0 || d == 0 {
        return Err(Error::Invalid("staircase needs n, d >= 1".into()));
    }
    if n > MAX_D || d > MAX_D {
        return Err(Error::DimensionTooLarge(n.max(d)));
    }
    let mut cells = Vec::new();
    // A path is a choice of which of the n + d - 2 steps go down (increase i).
    fn go(i: usize, j: usize, n: usize, d: usize, coords: &mut Vec<ElementSet>, out: &mut Vec<TropicalType>) {
        coords[i] = coords[i].with(j);
        if i + 1 == n && j == d {
            out.push(TropicalType::from_parts_unchecked(d, coords.clone()));
        } else {
            if j < d {
                go(i, j + 1, n, d, coords, out);
            }
            if i + 1 < n {
                go(i + 1, j, n, d, coords, out);
            }
        }
        coords[i] = coords[i].without(j);
    }
    go(0, 1, n, d, &mut vec![ElementSet::EMPTY; n], &mut cells);
    CellCollection::new(n, d, cells)
}

/// The triangulation of `Δ_{n-1} × Δ_1` for an ordering of `[n]` (1-based entries). Cell `k`
/// has coordinate `perm(t)` equal to `{2}` for `t < k`, `{1, 2}` for `t = k` and `{1}` after.
pub fn prism_triangulation(perm: &[usize]) -> Result<CellCollection> {
    let n = perm.len();
    let distinct: BTreeSet<usize> = perm.iter().copied().collect();
    if n == 0 || distinct.len() != n || distinct.iter().any(|&p| p == 0 || p > n) {
        return Err(Error::NotAPermutation(n));
    }
    if n > MAX_D {
        return Err(Error::DimensionTooLarge(n));
    }
    let (one, two) = (ElementSet::singleton(1), ElementSet::singleton(2));
    let cells = (0..n)
        .map(|k| {
            let mut coords = vec![ElementSet::EMPTY; n];
            for (t, &p) in perm.iter().enumerate() {
                coords[p - 1] = match t.cmp(&k) {
                    std::cmp::Ordering::Less => two,
                    std::cmp::Ordering::Equal => one.union(two),
                    std::cmp::Ordering::Greater => one,
                };
            }
            TropicalType::from_parts_unchecked(2, coords)
        })
        .collect();
    CellCollection::new(n, 2, cells)
}

/// Lexicographic permutations of `1..=n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

/// Prism triangulations over all orderings of `[n]`, deduplicated.
pub fn all_prism_triangulations(n: usize) -> Result<Vec<CellCollection>> {
    if n > MAX_PRISM_N {
        return Err(Error::TooLarge(format!("n = {n} exceeds {MAX_PRISM_N}")));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for perm in permutations(n) {
        let cells = prism_triangulation(&perm)?;
        if seen.insert(cells.canonical().cells().to_vec()) {
            out.push(cells);
        }
    }
    Ok(out)
}
