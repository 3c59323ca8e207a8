//! Connectivity of `Q_α`, the types whose `i`-th coordinate has more than `α_i` elements.

use tomtri::generators::staircase;
use tomtri::subdivision::weak_compositions;
use tomtri::{face_types, q_alpha_connected, RankVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let system = face_types(&staircase(3, 4)?)?;
    let (n, d) = (system.n(), system.d());
    let mut checked = 0;
    for total in 0..d {
        for alpha in weak_compositions(total, n) {
            let report = q_alpha_connected(&system, &RankVector(alpha.clone()));
            println!(
                "alpha {alpha:?}: {} types in {} component(s)",
                report.size,
                report.component_sizes.len()
            );
            assert!(report.is_connected());
            checked += 1;
        }
    }
    println!("all {checked} sets Q_alpha with sum(alpha) <= d-1 are connected");
    Ok(())
}
