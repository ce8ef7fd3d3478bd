//! Equivariant degree of an invertible S3-equivariant map on the
//! permutation representation Q^3.
//!
//! Run with `cargo run --example equivariant_degree`.

use eqfix::{equivariant_degree, EquivariantLinearMap, FiniteGroup, QMatrix, RationalRepresentation, TableOfMarks};
use num_rational::BigRational;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = FiniteGroup::symmetric(3)?;
    let table = TableOfMarks::new(&g);
    let rep = RationalRepresentation::permutation(&g);

    // a·I + b·J commutes with every permutation matrix
    for (a, b) in [(1, 0), (-1, 0), (-2, 1), (2, -1), (3, -1)] {
        let m = QMatrix::from_rows(
            (0..3)
                .map(|i| (0..3).map(|j| q(b + if i == j { a } else { 0 })).collect())
                .collect(),
        )
        .expect("rows of equal length");
        let l = EquivariantLinearMap::new(&rep, m)?;
        match equivariant_degree(&table, &l) {
            Ok(d) => println!("a = {a:>2}, b = {b:>2}: Deg = {d}, marks {}", d.marks()),
            Err(e) => println!("a = {a:>2}, b = {b:>2}: {e}"),
        }
    }
    Ok(())
}
