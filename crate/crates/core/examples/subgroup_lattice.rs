//! Conjugacy classes of subgroups of a few small permutation groups, with
//! normalizer and Weyl group orders.
//!
//! Run with `cargo run --example subgroup_lattice`.

use eqfix::{normalizer, subgroup_classes, weyl_group, FiniteGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let groups = [
        ("C2", FiniteGroup::cyclic(2)?),
        ("S3", FiniteGroup::symmetric(3)?),
        ("D8", FiniteGroup::dihedral(4)?),
        ("A4", FiniteGroup::alternating(4)?),
        ("S4", FiniteGroup::symmetric(4)?),
    ];
    for (name, g) in groups {
        let classes = subgroup_classes(&g);
        println!("{name}: order {}, {} subgroup classes", g.order(), classes.len());
        for (j, h) in classes.iter().enumerate() {
            let gens: Vec<String> = h.generators().iter().map(|&s| g.element(s).to_string()).collect();
            println!(
                "  #{j:<2} |H| = {:<2} |N(H)| = {:<2} |W(H)| = {:<2} <{}>",
                h.order(),
                normalizer(h).order(),
                weyl_group(h).group.order(),
                gens.join(", ")
            );
        }
    }
    Ok(())
}
