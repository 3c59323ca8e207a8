//! Builds staircase triangulations, expands their face systems, and checks the four
//! tropical oriented matroid axioms on each.
//!
//! ```text
//! cargo run --example staircase_tom -- 4 4
//! ```

use std::time::Instant;

use tomtri::generators::staircase;
use tomtri::{check_tom, face_types, topes, validate_subdivision};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let shapes: Vec<(usize, usize)> = match args.as_slice() {
        [n, d] => vec![(*n, *d)],
        _ => (1..=4).flat_map(|n| (1..=4).map(move |d| (n, d))).collect(),
    };

    for (n, d) in shapes {
        let start = Instant::now();
        let cells = staircase(n, d)?;
        let report = validate_subdivision(&cells);
        let system = face_types(&cells)?;
        let verdict = check_tom(&system);
        println!(
            "staircase({n},{d}): {} cells, {} types, {} topes, valid={}, tom={} [{:.2?}]",
            cells.len(),
            system.len(),
            topes(&system).len(),
            report.is_valid(),
            verdict.is_tom(),
            start.elapsed()
        );
        for r in verdict.reports() {
            println!(
                "    {:?}: {} checks, {} violations",
                r.axiom,
                r.checked,
                r.violations.len()
            );
        }
    }
    Ok(())
}
