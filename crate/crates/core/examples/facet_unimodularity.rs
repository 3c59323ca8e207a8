//! Facet inequalities of every cell, with total unimodularity and interval-matrix checks.

use tomtri::generators::staircase;
use tomtri::geometry::{interval_column_order, Sense};
use tomtri::{facet_matrix, is_totally_unimodular, regular_subdivision, WeightMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cells = staircase(2, 3)?;
    for t in cells.cells() {
        println!("{t}");
        for row in facet_matrix(t)?.rows {
            let lhs: Vec<String> = row.support.iter().map(|j| format!("x_{j}")).collect();
            let op = if row.sense == Sense::AtLeast { ">=" } else { "<=" };
            println!("    {} {op} {}", lhs.join(" + "), row.rhs);
        }
    }

    let w = WeightMatrix::from_integers(&[[0, 3, 1, 7], [5, 0, 2, 2], [4, 1, 0, 9]])?;
    let mut all_tu = true;
    let mut all_interval = true;
    let mut total = 0;
    for cells in [staircase(3, 4)?, staircase(4, 3)?, regular_subdivision(&w)?] {
        for t in cells.cells() {
            let m = facet_matrix(t)?.to_int_matrix();
            all_tu &= is_totally_unimodular(&m)?;
            all_interval &= interval_column_order(&m)?.is_some();
            total += 1;
        }
    }
    println!("{total} cells: all totally unimodular={all_tu}, all interval after reordering={all_interval}");
    Ok(())
}
