use serde::Serialize;

use crate::error::{Error, Result};

/// Largest row or column count accepted by the brute-force determinant test.
pub const MAX_TU_DIM: usize = 12;
/// Largest column count for the column-permutation search.
pub const MAX_PERMUTATION_COLS: usize = 10;

/// Dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(ncols: usize, rows: Vec<Vec<i64>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        IntMatrix {
            nrows: rows.len(),
            ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(size: usize) -> Self {
        let rows = (0..size)
            .map(|i| (0..size).map(|j| i64::from(i == j)).collect())
            .collect();
        IntMatrix::from_rows(size, rows)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.ncols + c]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.ncols.max(1))
            .take(self.nrows)
            .map(<[i64]>::to_vec)
            .collect()
    }

    fn is_binary(&self) -> bool {
        self.data.iter().all(|&x| x == 0 || x == 1)
    }

    /// Column-index masks of the nonzero entries of each row.
    fn supports(&self) -> Vec<u64> {
        (0..self.nrows)
            .map(|r| {
                (0..self.ncols)
                    .filter(|&c| self.get(r, c) != 0)
                    .fold(0u64, |m, c| m | 1 << c)
            })
            .collect()
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub(crate) fn determinant(m: &[Vec<i128>]) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let mut a = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..k - 1 {
        if a[p][p] == 0 {
            match (p + 1..k).find(|&r| a[r][p] != 0) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for r in p + 1..k {
            for c in p + 1..k {
                a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]) / prev;
            }
        }
        prev = a[p][p];
    }
    sign * a[k - 1][k - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Every square submatrix has determinant in `{-1, 0, 1}`, by exhaustive enumeration.
pub fn is_totally_unimodular(m: &IntMatrix) -> Result<bool> {
    if m.nrows > MAX_TU_DIM || m.ncols > MAX_TU_DIM {
        return Err(Error::TooLarge(format!(
            "{}x{} exceeds the {MAX_TU_DIM}x{MAX_TU_DIM} determinant enumeration limit",
            m.nrows, m.ncols
        )));
    }
    if m.data.iter().any(|x| x.abs() > 1) {
        return Ok(false);
    }
    for k in 2..=m.nrows.min(m.ncols) {
        let row_sets = combinations(m.nrows, k);
        let col_sets = combinations(m.ncols, k);
        for rows in &row_sets {
            for cols in &col_sets {
                let sub: Vec<Vec<i128>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| i128::from(m.get(r, c))).collect())
                    .collect();
                if determinant(&sub).abs() > 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Row supports pairwise nested or disjoint.
pub fn is_laminar(m: &IntMatrix) -> bool {
    let s = m.supports();
    s.iter()
        .enumerate()
        .all(|(x, &a)| s[x + 1..].iter().all(|&b| a & b == 0 || a & !b == 0 || b & !a == 0))
}

fn rows_consecutive(supports: &[u64], order: &[usize]) -> bool {
    supports.iter().all(|&s| {
        let positions: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|(_, &c)| s & (1 << c) != 0)
            .map(|(p, _)| p)
            .collect();
        positions.windows(2).all(|w| w[1] == w[0] + 1)
    })
}

/// Column order for a laminar family: each set's columns are emitted as one block, after
/// the blocks of the sets nested inside it.
fn laminar_order(ncols: usize, supports: &[u64]) -> Vec<usize> {
    let mut sets: Vec<u64> = supports.iter().copied().filter(|&s| s != 0).collect();
    sets.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    sets.dedup();
    // parent = the smallest earlier (hence larger or equal) set containing it
    let parent: Vec<Option<usize>> = (0..sets.len())
        .map(|x| (0..x).rev().find(|&y| sets[x] & !sets[y] == 0))
        .collect();

    fn emit(node: usize, sets: &[u64], parent: &[Option<usize>], out: &mut Vec<usize>) {
        let mut covered = 0u64;
        for child in (0..sets.len()).filter(|&c| parent[c] == Some(node)) {
            emit(child, sets, parent, out);
            covered |= sets[child];
        }
        let mut own = sets[node] & !covered;
        while own != 0 {
            out.push(own.trailing_zeros() as usize);
            own &= own - 1;
        }
    }

    let mut out = Vec::with_capacity(ncols);
    let mut covered = 0u64;
    for root in (0..sets.len()).filter(|&x| parent[x].is_none()) {
        emit(root, &sets, &parent, &mut out);
        covered |= sets[root];
    }
    out.extend((0..ncols).filter(|&c| covered & (1 << c) == 0));
    out
}

/// Backtracking over column orders; a partial order is abandoned as soon as some row has
/// been opened, interrupted and is still incomplete.
fn search_order(ncols: usize, supports: &[u64]) -> Option<Vec<usize>> {
    fn go(ncols: usize, supports: &[u64], order: &mut Vec<usize>, used: u64) -> bool {
        if order.len() == ncols {
            return true;
        }
        for c in 0..ncols {
            if used & (1 << c) != 0 {
                continue;
            }
            let placed = used | (1 << c);
            let ok = supports.iter().all(|&s| {
                // Row s is broken if it was started, the new column is outside it, the previous
                // column was inside it, and part of it is still unplaced.
                let started = s & used != 0;
                let last_in = order.last().is_some_and(|&l| s & (1 << l) != 0);
                let closes = started && last_in && s & (1 << c) == 0;
                let incomplete = s & !placed != 0;
                let reopened = s & (1 << c) != 0 && started && !last_in;
                !(closes && incomplete) && !reopened
            });
            if ok {
                order.push(c);
                if go(ncols, supports, order, placed) {
                    return true;
                }
                order.pop();
            }
        }
        false
    }
    let mut order = Vec::with_capacity(ncols);
    go(ncols, supports, &mut order, 0).then_some(order)
}

/// A column permutation (0-based column indices, in new order) under which every row's
/// ones are consecutive, or `None` if there is none. Non-binary matrices yield `None`.
pub fn interval_column_order(m: &IntMatrix) -> Result<Option<Vec<usize>>> {
    if !m.is_binary() {
        return Ok(None);
    }
    let supports = m.supports();
    if is_laminar(m) {
        let order = laminar_order(m.ncols, &supports);
        debug_assert!(rows_consecutive(&supports, &order));
        return Ok(Some(order));
    }
    if m.ncols > MAX_PERMUTATION_COLS {
        return Err(Error::TooLarge(format!(
            "{} columns exceed the permutation search limit of {MAX_PERMUTATION_COLS}",
            m.ncols
        )));
    }
    Ok(search_order(m.ncols, &supports).filter(|o| rows_consecutive(&supports, o)))
}

pub fn is_interval_matrix_reorderable(m: &IntMatrix) -> Result<bool> {
    Ok(interval_column_order(m)?.is_some())
}
