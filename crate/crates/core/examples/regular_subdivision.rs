//! Draws random integer weight matrices, computes the regular fine mixed subdivisions they
//! induce, and confirms each cell is the type of its own apex point.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tomtri::geometry::tree_potentials;
use tomtri::{check_tom, face_types, point_type, regular_subdivision, validate_subdivision, Error, WeightMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (n, d) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..d).map(|_| rng.gen_range(0..1000)).collect())
            .collect();
        let w = WeightMatrix::from_integers(&rows)?;
        let cells = regular_subdivision(&w)?;
        let system = face_types(&cells)?;
        let apexes_ok = cells.cells().iter().all(|t| {
            let (_, z) = tree_potentials(&w, t).expect("cells are trees");
            let x: Vec<_> = z.iter().map(|v| -v.clone()).collect();
            point_type(&w, &x).ok().as_ref() == Some(t)
        });
        println!(
            "W = {rows:?}: {} cells, valid={}, tom={}, apex types match={apexes_ok}",
            cells.len(),
            validate_subdivision(&cells).is_valid(),
            check_tom(&system).is_tom()
        );
    }

    // All-zero weights put every hyperplane through one point.
    match regular_subdivision(&WeightMatrix::from_integers(&[[0, 0], [0, 0]])?) {
        Err(Error::NonGenericWeights { tree, .. }) => println!("zero weights are not generic (tie at {tree})"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
