//! Validates a triangulation, then breaks it in three ways and prints which of the three
//! conditions catches each mutation.

use tomtri::generators::staircase;
use tomtri::{check_tom, validate_subdivision, CellCollection, TropicalType, TypeSystem};

fn show(label: &str, cells: &CellCollection) {
    let report = validate_subdivision(cells);
    println!(
        "{label}: trees={} facets={} acyclic={} -> valid={}",
        report.spanning_trees_ok(),
        report.facets_ok(),
        report.acyclic_ok(),
        report.is_valid()
    );
    for f in report.dangling_facets.iter().take(2) {
        println!("    cell {} has unshared facet {}", f.cell + 1, f.facet);
    }
    for c in report.overlap_cycles.iter().take(2) {
        let walk: Vec<String> = c.cycle.iter().map(|v| v.to_string()).collect();
        println!(
            "    cells {} and {} overlap along {}",
            c.cells.0 + 1,
            c.cells.1 + 1,
            walk.join(" ")
        );
    }
    let verdict = check_tom(&TypeSystem::face_closure(cells));
    println!("    face closure is a tropical oriented matroid: {}", verdict.is_tom());
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cells = staircase(3, 3)?;
    show("staircase(3,3)", &cells);

    // Drop a cell: interior facets lose their partner.
    let fewer = CellCollection::new(3, 3, cells.cells()[1..].to_vec())?;
    show("without cell 1", &fewer);

    // Replace a cell by another spanning tree: it overlaps a neighbour.
    let mut swapped = cells.cells().to_vec();
    swapped[0] = TropicalType::from_lists(3, &[vec![1, 3], vec![2, 3], vec![3]])?;
    if !cells.cells().contains(&swapped[0]) {
        show("cell 1 replaced", &CellCollection::new(3, 3, swapped)?);
    }

    // A cell that is not a tree at all.
    let mut cyclic = cells.cells().to_vec();
    cyclic[0] = TropicalType::from_lists(3, &[vec![1, 2], vec![1, 2], vec![3]])?;
    show("cell 1 cyclic", &CellCollection::new(3, 3, cyclic)?);
    Ok(())
}
