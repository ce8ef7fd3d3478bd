//! The map x ↦ x³ on the real line with Z/2 acting by x ↦ −x. Its fixed
//! points are 0 (isotropy G, normal derivative 0) and the orbit {−1, 1}
//! (isotropy e, derivative 3).
//!
//! Run with `cargo run --example lefschetz_cubic`.

use eqfix::{
    check_restriction, lefschetz_from_marks, lefschetz_from_orbits, EquivariantLinearMap, FiniteGroup,
    FixedOrbitDatum, MarkVector, RationalRepresentation, Subgroup, TableOfMarks,
};
use num_rational::BigRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = FiniteGroup::cyclic(2)?;
    let table = TableOfMarks::new(&g);
    let whole = Subgroup::whole(&g);
    let trivial = Subgroup::trivial(&g);

    let sign = RationalRepresentation::sign(&whole.promote().group);
    let line = RationalRepresentation::trivial(&trivial.promote().group, 1);
    let data = [
        FixedOrbitDatum::new(whole.clone(), EquivariantLinearMap::scalar(&sign, BigRational::from_integer(0.into())))?,
        FixedOrbitDatum::new(trivial.clone(), EquivariantLinearMap::scalar(&line, BigRational::from_integer(3.into())))?,
    ];
    let l = lefschetz_from_orbits(&table, &data)?;
    println!("L_G(f) = {l}");
    println!("marks   = {}", l.marks());

    // L(f^e) = -1 (three fixed points on R), L(f^G) = 1 (only 0 on the fixed line)
    let fixed_marks = MarkVector::from_i64(&table, &[-1, 1])?;
    assert_eq!(lefschetz_from_marks(&fixed_marks)?, l);

    for h in [&trivial, &whole] {
        let check = check_restriction(h, &l, &fixed_marks, false)?;
        println!("subgroup of order {}: {}", h.order(), if check.passed() { "consistent" } else { "mismatch" });
    }
    Ok(())
}
