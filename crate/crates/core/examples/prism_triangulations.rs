//! Enumerates the triangulations of `Δ_{n-1} × Δ_1` given by permutations of `[n]`, checks
//! each one, and checks their duals, which subdivide `2Δ_{n-1}`.

use tomtri::generators::all_prism_triangulations;
use tomtri::{check_tom, face_types, validate_subdivision};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        let all = all_prism_triangulations(n)?;
        let mut valid = 0;
        let mut toms = 0;
        let mut dual_toms = 0;
        for cells in &all {
            valid += usize::from(validate_subdivision(cells).is_valid());
            toms += usize::from(check_tom(&face_types(cells)?).is_tom());
            dual_toms += usize::from(check_tom(&face_types(&cells.transpose()?)?).is_tom());
        }
        println!(
            "n = {n}: {} distinct triangulations, {valid} valid, {toms} TOMs, {dual_toms} dual TOMs",
            all.len()
        );
    }
    let example = &all_prism_triangulations(3)?[0];
    let cells: Vec<String> = example.cells().iter().map(|c| c.to_string()).collect();
    println!("first for n = 3: {}", cells.join(" "));
    Ok(())
}
