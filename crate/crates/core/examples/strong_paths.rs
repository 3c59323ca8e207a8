//! Strong paths between types of a face system and the elimination witnesses read off them.
//!
//! ```text
//! cargo run --example strong_paths -- '[[1,2],[2],[2,3]]' '[[1],[1,2],[3]]'
//! ```

use tomtri::generators::staircase;
use tomtri::{eliminate_via_path, face_types, is_elimination_witness, strong_path, TropicalType};

fn parse(d: usize, text: &str) -> Result<TropicalType, Box<dyn std::error::Error>> {
    let lists: Vec<Vec<usize>> = serde_json::from_str(text)?;
    Ok(TropicalType::from_lists(d, &lists)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let system = face_types(&staircase(3, 3)?)?;
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (a, b) = match args.as_slice() {
        [a, b] => (parse(3, a)?, parse(3, b)?),
        _ => (system.types()[0].clone(), system.types()[system.len() - 1].clone()),
    };

    let path = strong_path(&system, &a, &b)?;
    let steps: Vec<String> = path.members().iter().map(|t| t.to_string()).collect();
    println!("{a} to {b}, distance {}: {}", a.delta(&b)?, steps.join(" -> "));
    for j in 0..a.n() {
        let c = eliminate_via_path(&system, &a, &b, j)?;
        println!(
            "  eliminate at coordinate {}: {c} (witness: {})",
            j + 1,
            is_elimination_witness(&a, &b, j, &c)
        );
    }

    let mut pairs = 0;
    let mut longest = 0;
    for a in system.iter() {
        for b in system.iter() {
            longest = longest.max(strong_path(&system, a, b)?.len());
            pairs += 1;
        }
    }
    println!("strong paths exist for all {pairs} ordered pairs; longest has {longest} steps");
    Ok(())
}
