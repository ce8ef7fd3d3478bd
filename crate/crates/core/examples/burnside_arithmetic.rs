//! Products, fixed point maps, induction and restriction in the Burnside
//! ring of S3.
//!
//! Run with `cargo run --example burnside_arithmetic`.

use eqfix::{eta, induce, restrict, BurnsideElement, FiniteGroup, Permutation, Subgroup, TableOfMarks};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = FiniteGroup::symmetric(3)?;
    let table = TableOfMarks::new(&g);
    let n = table.len();

    println!("multiplication table in the basis [G/H_j]:");
    for i in 0..n {
        for j in i..n {
            let p = BurnsideElement::basis(&table, i) * BurnsideElement::basis(&table, j);
            println!("  #{i} · #{j} = {p}");
        }
    }

    let c2 = Subgroup::from_permutations(&g, &[Permutation::from_cycles(3, &[&[0, 1]])?])?;
    let c3 = Subgroup::from_permutations(&g, &[Permutation::from_cycles(3, &[&[0, 1, 2]])?])?;

    let sum: BurnsideElement = (0..n).map(|j| BurnsideElement::basis(&table, j)).fold(BurnsideElement::zero(&table), |a, b| a + b);
    println!("η_C2({sum}) = {}", eta(&c2, &sum)?);
    println!("η_C3({sum}) = {}", eta(&c3, &sum)?);

    let t3 = TableOfMarks::new(&c3.promote().group);
    let free = BurnsideElement::basis(&t3, 0);
    println!("induce [C3/e] = {}", induce(&table, &c3, &free)?);

    let t2 = TableOfMarks::new(&c2.promote().group);
    for j in 0..n {
        let x = BurnsideElement::basis(&table, j);
        println!("restrict {x} to C2 = {}", restrict(&t2, &c2, &x)?);
    }
    Ok(())
}
