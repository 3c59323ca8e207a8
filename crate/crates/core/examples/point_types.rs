//! Types of points in an arrangement of tropical hyperplanes (max-plus convention).

use tomtri::geometry::{integer, rational};
use tomtri::{point_type, WeightMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Two tropical lines in the plane, apexes at -w_i.
    let w = WeightMatrix::from_integers(&[[0, 0, 0], [0, -2, -1]])?;
    let points = [
        vec![integer(0), integer(0), integer(0)],
        vec![integer(0), integer(2), integer(1)],
        vec![integer(0), rational(1, 2), integer(0)],
        vec![integer(5), integer(0), integer(0)],
        vec![integer(0), integer(0), integer(7)],
    ];
    for x in &points {
        let coords: Vec<String> = x.iter().map(|v| v.to_string()).collect();
        println!("x = ({}): type {}", coords.join(", "), point_type(&w, x)?);
    }
    Ok(())
}
