//! Prints the table of marks of S4 and checks that a G-set given by an
//! explicit action decomposes the same way through its marks.
//!
//! Run with `cargo run --example table_of_marks`.

use eqfix::{from_marks, gset_to_element, FiniteGroup, GSetAction, TableOfMarks};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = FiniteGroup::symmetric(4)?;
    let table = TableOfMarks::new(&g);
    for row in table.rows() {
        let cells: Vec<String> = row.iter().map(|m| format!("{m:>3}")).collect();
        println!("{}", cells.join(""));
    }

    // S4 acting on the six 2-element subsets of {0, 1, 2, 3}
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
    let images = g
        .elements()
        .iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (p.apply(a), p.apply(b));
                    pairs.iter().position(|&q| q == (x.min(y), x.max(y))).unwrap()
                })
                .collect()
        })
        .collect();
    let action = GSetAction::new(g.clone(), pairs.len(), images)?;
    let x = gset_to_element(&table, &action)?;
    println!("2-subsets of 4 points: {x}");
    println!("marks: {}", x.marks());
    assert_eq!(from_marks(&x.marks())?, x);
    Ok(())
}
