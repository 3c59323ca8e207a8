//! Static SVG drawing of a fine mixed subdivision of `nΔ_2`.
//!
//! Points `(p_1, p_2, p_3)` with `Σ p = n` are drawn in barycentric position, vertex 1 at the
//! bottom left, 2 at the bottom right and 3 on top. Cells are filled by a color derived from
//! their left degree vector; the unit simplex of each cell is outlined at its right degree
//! vector.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::subdivision::{unit_simplex_locations, CellCollection};
use crate::types::TropicalType;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 24.0;

fn project(n: usize, p: [i64; 3]) -> (f64, f64) {
    let s = SIZE / n as f64;
    let h = SIZE * 3f64.sqrt() / 2.0;
    let x = MARGIN + s * (p[1] as f64 + p[2] as f64 / 2.0);
    let y = MARGIN + h - s * (p[2] as f64 * 3f64.sqrt() / 2.0);
    (x, y)
}

/// Vertices of the Minkowski sum `Σ_i Δ_{A_i}` in counterclockwise order.
pub fn cell_polygon(cell: &TropicalType) -> Vec<[i64; 3]> {
    let mut points = vec![[0i64; 3]];
    for a in cell.coords() {
        let mut next = Vec::with_capacity(points.len() * a.len());
        for p in &points {
            for j in a.iter() {
                let mut q = *p;
                q[j - 1] += 1;
                next.push(q);
            }
        }
        next.sort_unstable();
        next.dedup();
        points = next;
    }
    convex_hull(points)
}

fn cross(o: [i64; 3], a: [i64; 3], b: [i64; 3]) -> i64 {
    // Orientation in the (p_2, p_3) chart, which is affine on the plane Σ p = n.
    (a[1] - o[1]) * (b[2] - o[2]) - (a[2] - o[2]) * (b[1] - o[1])
}

fn convex_hull(mut points: Vec<[i64; 3]>) -> Vec<[i64; 3]> {
    points.sort_unstable_by_key(|p| (p[1], p[2]));
    points.dedup();
    if points.len() < 3 {
        return points;
    }
    let mut hull: Vec<[i64; 3]> = Vec::with_capacity(2 * points.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &[i64; 3]>> = if pass == 0 {
            Box::new(points.iter())
        } else {
            Box::new(points.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Hues spaced by the golden angle over the sorted order of the degree vectors.
fn color(rank: usize) -> String {
    let hue = (rank as f64 * 137.508) % 360.0;
    format!("hsl({hue:.1}, 65%, 72%)")
}

fn polygon(out: &mut String, n: usize, pts: &[[i64; 3]], style: &str) {
    let coords: Vec<String> = pts
        .iter()
        .map(|&p| {
            let (x, y) = project(n, p);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(out, r#"  <polygon points="{}" {style}/>"#, coords.join(" "));
}

pub fn render(cells: &CellCollection) -> Result<String> {
    if cells.d() != 3 {
        return Err(Error::Invalid(format!("plotting needs d = 3, got d = {}", cells.d())));
    }
    let n = cells.n();
    let width = SIZE + 2.0 * MARGIN;
    let height = SIZE * 3f64.sqrt() / 2.0 + 2.0 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let ldvs: Vec<Vec<i64>> = cells.cells().iter().map(|c| c.left_degree_vector().entries).collect();
    let mut sorted = ldvs.clone();
    sorted.sort();
    for (k, (cell, ldv)) in cells.cells().iter().zip(&ldvs).enumerate() {
        let rank = sorted.binary_search(ldv).unwrap_or(0);
        let _ = writeln!(out, "  <!-- cell {}: {cell} ldv {ldv:?} -->", k + 1);
        polygon(
            &mut out,
            n,
            &cell_polygon(cell),
            &format!(r#"fill="{}" stroke="black" stroke-width="1.5""#, color(rank)),
        );
    }
    for cell in cells.cells() {
        for a in unit_simplex_locations(cell) {
            let corners: Vec<[i64; 3]> = (0..3)
                .map(|j| {
                    let mut p = [a[0], a[1], a[2]];
                    p[j] += 1;
                    p
                })
                .collect();
            polygon(
                &mut out,
                n,
                &corners,
                r#"fill="none" stroke="black" stroke-width="1" stroke-dasharray="4 3""#,
            );
        }
    }
    for (j, p) in [[n as i64, 0, 0], [0, n as i64, 0], [0, 0, n as i64]]
        .into_iter()
        .enumerate()
    {
        let (x, y) = project(n, p);
        let (dx, dy) = [(-14.0, 14.0), (6.0, 14.0), (-4.0, -8.0)][j];
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14">{}</text>"#,
            x + dx,
            y + dy,
            j + 1
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
