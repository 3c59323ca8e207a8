//! Left degree vectors biject onto lattice points of `(d-1)Δ_{n-1}` and right degree
//! vectors locate the unique unit simplex of each cell.

use tomtri::generators::staircase;
use tomtri::subdivision::binomial;
use tomtri::{ldv_bijection_check, regular_subdivision, unit_simplex_check, WeightMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeightMatrix::from_integers(&[[0, 4, 1], [6, 0, 3], [2, 5, 0]])?;
    for (label, cells) in [
        ("staircase(3,3)", staircase(3, 3)?),
        ("regular 3x3", regular_subdivision(&w)?),
    ] {
        let (n, d) = (cells.n() as u64, cells.d() as u64);
        let bij = ldv_bijection_check(&cells)?;
        let simplices = unit_simplex_check(&cells)?;
        println!(
            "{label}: {} cells (C(n+d-2, d-1) = {}), degree vectors bijective={}, unit simplices at rdv={}",
            cells.len(),
            binomial(n + d - 2, d - 1),
            bij.is_bijective(),
            simplices.all_ok()
        );
        for (t, s) in cells.cells().iter().zip(&simplices.cells) {
            println!(
                "    {t}: ldv {:?} rdv {:?} unit simplex at {:?}",
                t.left_degree_vector().entries,
                s.rdv,
                s.locations
            );
        }
    }
    Ok(())
}
