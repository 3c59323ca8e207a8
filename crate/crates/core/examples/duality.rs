//! Transposing every cell of a triangulation of `Δ_{n-1} × Δ_{d-1}` gives a triangulation of
//! `Δ_{d-1} × Δ_{n-1}`; both face systems are tropical oriented matroids.

use tomtri::generators::staircase;
use tomtri::{check_tom, face_types, validate_subdivision};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, d) in [(2, 3), (3, 2), (2, 4), (3, 4), (4, 2)] {
        let cells = staircase(n, d)?;
        let dual = cells.transpose()?;
        let back = dual.transpose()?;
        println!(
            "staircase({n},{d}): dual has {} cells of shape ({},{}), valid={}, tom={}, involution={}",
            dual.len(),
            dual.n(),
            dual.d(),
            validate_subdivision(&dual).is_valid(),
            check_tom(&face_types(&dual)?).is_tom(),
            back.canonical() == cells.canonical()
        );
    }
    let cells = staircase(2, 3)?;
    let cell = &cells.cells()[0];
    println!("{cell} transposes to {}", cell.dual()?);
    Ok(())
}
