//! Lefschetz numbers of cellular self-maps: degree-d maps of the circle and
//! identity maps of a few CW complexes.
//!
//! Run with `cargo run --example hopf_trace`.

use eqfix::{hopf_lefschetz, ChainMapData, ZMatrix};
use num_bigint::BigInt;

fn z(rows: Vec<Vec<i64>>) -> ZMatrix {
    ZMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()).unwrap()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // circle: one 0-cell, one 1-cell, zero boundary
    for d in -2..=3 {
        let c = ChainMapData::new(vec![z(vec![vec![1]]), z(vec![vec![d]])], Some(vec![z(vec![vec![0]])]));
        println!("circle, degree {d:>2}: L = {}", hopf_lefschetz(&c)?);
    }

    for (name, cells) in [
        ("point", vec![1]),
        ("circle", vec![1, 1]),
        ("2-sphere", vec![1, 0, 1]),
        ("torus", vec![1, 2, 1]),
        ("genus 2 surface", vec![1, 4, 1]),
        ("real projective plane", vec![1, 1, 1]),
    ] {
        println!("identity on the {name}: L = χ = {}", hopf_lefschetz(&ChainMapData::identity(&cells))?);
    }

    // a map that is not a chain map is rejected
    let bad = ChainMapData::new(vec![z(vec![vec![1]]), z(vec![vec![2]])], Some(vec![z(vec![vec![1]])]));
    println!("f_0 = 1, f_1 = 2, ∂_1 = 1: {}", hopf_lefschetz(&bad).map(|l| l.to_string()).unwrap_or_else(|e| e.to_string()));
    Ok(())
}
