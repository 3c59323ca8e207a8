//! Writes an SVG picture of a fine mixed subdivision of `nΔ_2`, cells colored by left degree
//! vector and each cell's unit simplex dashed.
//!
//! ```text
//! cargo run --example plot_svg -- 4 staircase4.svg
//! ```

use tomtri::cli::svg::render;
use tomtri::generators::staircase;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|a| a.parse()).transpose()?.unwrap_or(3);
    let out = args.next().unwrap_or_else(|| format!("staircase{n}.svg"));
    let picture = render(&staircase(n, 3)?)?;
    std::fs::write(&out, picture)?;
    println!("wrote {out}");
    Ok(())
}
