use std::str::FromStr;

use num_traits::Zero;

use super::Rational;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::subdivision::CellCollection;
use crate::types::{TropicalType, MAX_D};
use crate::unionfind::DisjointSets;

/// `n × d` exact rational weights `w_{ij}`: row `i` holds the apex coefficients of the
/// tropical hyperplane `max_j (w_{ij} + x_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix {
    n: usize,
    d: usize,
    rows: Vec<Vec<Rational>>,
}

impl WeightMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let d = rows.first().map_or(0, Vec::len);
        if n == 0 || d == 0 {
            return Err(Error::Invalid("weight matrix must be nonempty".into()));
        }
        if d > MAX_D || n > MAX_D {
            return Err(Error::DimensionTooLarge(d.max(n)));
        }
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::Invalid("weight matrix rows differ in length".into()));
        }
        Ok(WeightMatrix { n, d, rows })
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        WeightMatrix::new(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| super::integer(x)).collect())
                .collect(),
        )
    }

    /// Entries as `"p/q"` or integer strings.
    pub fn parse<R: AsRef<[S]>, S: AsRef<str>>(rows: &[R]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .iter()
                    .map(|s| parse_rational(s.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        WeightMatrix::new(parsed)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// `w_{ij}` with `i` 0-based and `j` 1-based.
    pub fn weight(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j - 1]
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    Rational::from_str(s).map_err(|_| Error::Invalid(format!("not a rational number: {s:?}")))
}

/// Type of the point `x`: `A_i = argmax_j (w_{ij} + x_j)`.
pub fn point_type(weights: &WeightMatrix, x: &[Rational]) -> Result<TropicalType> {
    if x.len() != weights.d {
        return Err(Error::Invalid(format!(
            "point has {} coordinates, expected {}",
            x.len(),
            weights.d
        )));
    }
    let coords = weights
        .rows
        .iter()
        .map(|row| {
            let values: Vec<Rational> = row.iter().zip(x).map(|(w, xi)| w + xi).collect();
            let max = values.iter().max().expect("d >= 1");
            values
                .iter()
                .enumerate()
                .filter(|(_, v)| *v == max)
                .fold(ElementSet::EMPTY, |s, (j, _)| s.with(j + 1))
        })
        .collect();
    TropicalType::new(weights.d, coords)
}

/// Every spanning tree of `K_{n,d}` (there are `n^{d-1} d^{n-1}`), by include/exclude
/// backtracking over edges with cycle pruning.
pub fn spanning_trees(n: usize, d: usize) -> Vec<TropicalType> {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (1..=d).map(move |j| (i, j))).collect();
    let need = n + d - 1;
    let mut out = Vec::new();

    fn go(
        edges: &[(usize, usize)],
        at: usize,
        chosen: &mut Vec<(usize, usize)>,
        need: usize,
        n: usize,
        d: usize,
        out: &mut Vec<TropicalType>,
    ) {
        if chosen.len() == need {
            let mut coords = vec![ElementSet::EMPTY; n];
            for &(i, j) in chosen.iter() {
                coords[i] = coords[i].with(j);
            }
            out.push(TropicalType::from_parts_unchecked(d, coords));
            return;
        }
        if edges.len() - at < need - chosen.len() {
            return;
        }
        let (i, j) = edges[at];
        let mut sets = DisjointSets::new(n + d);
        for &(a, b) in chosen.iter() {
            sets.union(a, n + b - 1);
        }
        if sets.find(i) != sets.find(n + j - 1) {
            chosen.push((i, j));
            go(edges, at + 1, chosen, need, n, d, out);
            chosen.pop();
        }
        go(edges, at + 1, chosen, need, n, d, out);
    }

    go(&edges, 0, &mut Vec::new(), need, n, d, &mut out);
    out
}

/// Potentials with `y_i + z_j = w_{ij}` on every tree edge and `z_d = 0`.
pub fn tree_potentials(weights: &WeightMatrix, tree: &TropicalType) -> Result<(Vec<Rational>, Vec<Rational>)> {
    if !tree.is_spanning_tree() || tree.shape() != (weights.n, weights.d) {
        return Err(Error::NotSpanningTree(tree.clone()));
    }
    let (n, d) = (weights.n, weights.d);
    let mut y: Vec<Option<Rational>> = vec![None; n];
    let mut z: Vec<Option<Rational>> = vec![None; d];
    z[d - 1] = Some(Rational::zero());
    let mut progress = true;
    while progress {
        progress = false;
        for (i, j) in tree.edges() {
            match (&y[i], &z[j - 1]) {
                (None, Some(zj)) => {
                    y[i] = Some(weights.weight(i, j) - zj);
                    progress = true;
                }
                (Some(yi), None) => {
                    z[j - 1] = Some(weights.weight(i, j) - yi);
                    progress = true;
                }
                _ => {}
            }
        }
    }
    Ok((
        y.into_iter().map(|v| v.expect("tree is connected")).collect(),
        z.into_iter().map(|v| v.expect("tree is connected")).collect(),
    ))
}

/// Cells of the regular subdivision induced by `weights`: the spanning trees whose
/// potentials strictly dominate every non-tree weight, `y_i + z_j > w_{ij}`.
///
/// A tree whose potentials dominate weakly, with equality on some non-tree edge, signals
/// that the arrangement has a vertex whose type contains a cycle.
pub fn regular_subdivision(weights: &WeightMatrix) -> Result<CellCollection> {
    let (n, d) = (weights.n, weights.d);
    let tree_count = (n as f64).powi(d as i32 - 1) * (d as f64).powi(n as i32 - 1);
    if tree_count > 5.0e6 {
        return Err(Error::TooLarge(format!(
            "K_({n},{d}) has {tree_count:.0} spanning trees"
        )));
    }
    let mut cells = Vec::new();
    for tree in spanning_trees(n, d) {
        let (y, z) = tree_potentials(weights, &tree)?;
        let mut tie = None;
        let mut violated = false;
        'edges: for i in 0..n {
            for j in 1..=d {
                if tree.coord(i).contains(j) {
                    continue;
                }
                let lhs = &y[i] + &z[j - 1];
                let w = weights.weight(i, j);
                if lhs < *w {
                    violated = true;
                    break 'edges;
                }
                if lhs == *w && tie.is_none() {
                    tie = Some((i + 1, j));
                }
            }
        }
        if violated {
            continue;
        }
        if let Some((left, right)) = tie {
            return Err(Error::NonGenericWeights { tree, left, right });
        }
        cells.push(tree);
    }
    cells.sort();
    CellCollection::new(n, d, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{integer, rational};
    use crate::subdivision::{binomial, validate_subdivision};

    fn t(d: usize, lists: &[&[usize]]) -> TropicalType {
        TropicalType::from_lists(d, lists).unwrap()
    }

    #[test]
    fn point_types() {
        let w = WeightMatrix::from_integers(&[[0, 0]]).unwrap();
        assert_eq!(point_type(&w, &[integer(0), integer(0)]).unwrap(), t(2, &[&[1, 2]]));
        assert_eq!(point_type(&w, &[integer(1), integer(0)]).unwrap(), t(2, &[&[1]]));
        let w = WeightMatrix::from_integers(&[[0, 0], [0, 1]]).unwrap();
        assert_eq!(
            point_type(&w, &[integer(0), integer(0)]).unwrap(),
            t(2, &[&[1, 2], &[2]])
        );
        assert!(point_type(&w, &[integer(0)]).is_err());
    }

    #[test]
    fn parse_weights() {
        let w = WeightMatrix::parse(&[["1/2", "-3"], ["0", "4/6"]]).unwrap();
        assert_eq!(w.weight(0, 1), &rational(1, 2));
        assert_eq!(w.weight(1, 2), &rational(2, 3));
        assert!(WeightMatrix::parse(&[["x"]]).is_err());
        assert!(WeightMatrix::parse(&[vec!["1", "2"], vec!["3"]]).is_err());
    }

    #[test]
    fn tree_counts() {
        for (n, d) in [(1, 1), (1, 4), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
            let expected = (n as u64).pow(d as u32 - 1) * (d as u64).pow(n as u32 - 1);
            let trees = spanning_trees(n, d);
            assert_eq!(trees.len() as u64, expected, "K_({n},{d})");
            assert!(trees.iter().all(TropicalType::is_spanning_tree));
        }
    }

    #[test]
    fn square_regular_subdivision() {
        let w = WeightMatrix::from_integers(&[[0, 0], [0, 1]]).unwrap();
        let cells = regular_subdivision(&w).unwrap();
        assert_eq!(cells.cells(), &[t(2, &[&[1], &[1, 2]]), t(2, &[&[1, 2], &[2]])]);
        assert!(validate_subdivision(&cells).is_valid());
    }

    #[test]
    fn zero_weights_are_not_generic() {
        let w = WeightMatrix::from_integers(&[[0, 0, 0], [0, 0, 0]]).unwrap();
        assert!(matches!(regular_subdivision(&w), Err(Error::NonGenericWeights { .. })));
    }

    #[test]
    fn generic_three_by_three() {
        let w = WeightMatrix::from_integers(&[[0, 7, 3], [5, 1, 11], [2, 13, 4]]).unwrap();
        let cells = regular_subdivision(&w).unwrap();
        assert_eq!(cells.len() as u64, binomial(4, 2));
        assert!(validate_subdivision(&cells).is_valid());
        for cell in cells.cells() {
            let (_, z) = tree_potentials(&w, cell).unwrap();
            let x: Vec<Rational> = z.iter().map(|v| -v).collect();
            assert_eq!(&point_type(&w, &x).unwrap(), cell);
        }
    }
}
