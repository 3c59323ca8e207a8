//! Report indices are 0-based in memory and 1-based once serialized.

use serde::Serializer;

pub(crate) fn one_based<S: Serializer>(index: &usize, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(*index as u64 + 1)
}

pub(crate) fn one_based_pair<S: Serializer>(pair: &(usize, usize), s: S) -> Result<S::Ok, S::Error> {
    use serde::Serialize;
    (pair.0 + 1, pair.1 + 1).serialize(s)
}

pub(crate) fn one_based_vec<S: Serializer>(v: &[usize], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|i| i + 1))
}

/// Edge `(i, j)` with `i` a 0-based coordinate and `j` a 1-based element.
pub(crate) fn edge<S: Serializer>(e: &(usize, usize), s: S) -> Result<S::Ok, S::Error> {
    use serde::Serialize;
    (e.0 + 1, e.1).serialize(s)
}
