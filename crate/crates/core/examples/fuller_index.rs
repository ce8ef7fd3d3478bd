//! Rational equivariant Fuller index of a flow with Z/2 symmetry, from the
//! Poincaré maps of its periodic orbits, and what the fixed point maps
//! detect.
//!
//! Run with `cargo run --example fuller_index`.

use eqfix::{
    fuller_detect, fuller_single, fuller_sum, EquivariantLinearMap, FiniteGroup, PeriodicOrbitDatum, QMatrix,
    RationalRepresentation, Subgroup, TableOfMarks,
};
use num_rational::BigRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = FiniteGroup::cyclic(2)?;
    let table = TableOfMarks::new(&g);
    let whole = Subgroup::whole(&g);
    let trivial = Subgroup::trivial(&g);

    // a symmetric orbit whose slice is the sign line, contracting with a flip
    let sign = RationalRepresentation::sign(&whole.promote().group);
    let symmetric = PeriodicOrbitDatum::new(whole.clone(), EquivariantLinearMap::scalar(&sign, q(-1, 2)), 1)?;

    // a pair of orbits swapped by the group, traversed twice, saddle type
    let plane = RationalRepresentation::trivial(&trivial.promote().group, 2);
    let saddle = QMatrix::from_rows(vec![vec![q(3, 1), q(0, 1)], vec![q(0, 1), q(1, 3)]]).expect("rows of equal length");
    let swapped = PeriodicOrbitDatum::new(trivial.clone(), EquivariantLinearMap::new(&plane, saddle)?, 2)?;

    for (name, d) in [("symmetric orbit", &symmetric), ("swapped pair", &swapped)] {
        let f = fuller_single(&table, d)?;
        println!("{name}: F = {f}, m·F = {}", f.scale(&q(d.multiplicity as i64, 1)));
    }

    let f = fuller_sum(&table, &[symmetric, swapped])?;
    println!("total: F = {f}");
    for h in [&trivial, &whole] {
        let seen = fuller_detect(h, &f)?;
        println!(
            "  subgroup of order {}: η ≠ 0 is {seen}{}",
            h.order(),
            if seen { ", so an orbit of at least this type exists" } else { "" }
        );
    }
    Ok(())
}
