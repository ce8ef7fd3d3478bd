mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::*;
use eqfix::{
    equivariant_degree, eta, gset_to_element, induce, restrict, weyl_group, BurnsideElement, EquivariantLinearMap,
    FiniteGroup, GSetAction, Permutation, QMatrix, RationalRepresentation, Subgroup, TableOfMarks,
};

#[test]
fn subgroup_classes_match_subset_enumeration() {
    for (name, g) in small_groups() {
        let table = TableOfMarks::new(&g);
        let oracle = subgroup_classes_by_subsets(&g);
        assert_eq!(table.len(), oracle.len(), "{name}");
        let mut ours: Vec<usize> = table.classes().iter().map(|h| h.order()).collect();
        let mut theirs: Vec<usize> = oracle.iter().map(|c| c[0].len()).collect();
        ours.sort();
        theirs.sort();
        assert_eq!(ours, theirs, "{name}");
        // every subgroup lands in the class whose representative is one of its conjugates
        for class in &oracle {
            let mut seen = BTreeSet::new();
            for s in class {
                let members: Vec<Permutation> = s.iter().cloned().collect();
                let h = Subgroup::from_permutations(&g, &members).unwrap();
                let j = table.classes().class_of(&h).unwrap();
                assert!(class.contains(&members_as_set(table.classes().representative(j))), "{name}");
                seen.insert(j);
            }
            assert_eq!(seen.len(), 1, "{name}");
        }
    }
}

#[test]
fn marks_match_fixed_coset_counts() {
    for (name, g) in small_groups().into_iter().chain(medium_groups()) {
        let table = TableOfMarks::new(&g);
        let reps: Vec<BTreeSet<Permutation>> = table.classes().iter().map(members_as_set).collect();
        for (i, h) in reps.iter().enumerate() {
            for (j, k) in reps.iter().enumerate() {
                assert_eq!(table.mark(i, j) as usize, fixed_coset_count(&g, h, k), "{name} ({i}, {j})");
            }
        }
    }
}

/// The natural action of a permutation group on its points.
fn natural_action(g: &Arc<FiniteGroup>) -> GSetAction {
    let images = g.elements().iter().map(|p| p.images().to_vec()).collect();
    GSetAction::new(g.clone(), g.degree(), images).unwrap()
}

/// `G ×_H X` for an `H`-set `X` given by an action of the promoted group.
fn balanced_product(g: &Arc<FiniteGroup>, h: &Subgroup, x: &GSetAction) -> GSetAction {
    let promoted = h.promote();
    // orbit representatives of pairs (g, x) under (g, x) ~ (g·k, k⁻¹·x)
    let n = g.order() * x.points();
    let mut class_of = vec![usize::MAX; n];
    let mut count = 0;
    for a in 0..g.order() {
        for p in 0..x.points() {
            if class_of[a * x.points() + p] != usize::MAX {
                continue;
            }
            for (local, &k) in promoted.to_parent.iter().enumerate() {
                let ga = g.mul(a, k);
                let kp = x.act(promoted.group.inv(local), p);
                class_of[ga * x.points() + kp] = count;
            }
            count += 1;
        }
    }
    let images = (0..g.order())
        .map(|s| {
            let mut row = vec![0; count];
            for a in 0..g.order() {
                for p in 0..x.points() {
                    row[class_of[a * x.points() + p]] = class_of[g.mul(s, a) * x.points() + p];
                }
            }
            row
        })
        .collect();
    GSetAction::new(g.clone(), count, images).unwrap()
}

#[test]
fn induction_matches_balanced_product() {
    for (name, g) in small_groups() {
        let table = TableOfMarks::new(&g);
        for h in table.classes().iter() {
            let promoted = h.promote();
            let th = TableOfMarks::new(&promoted.group);
            // natural action of H on the points of G, plus every basis element of A(H)
            let x = natural_action(&g).restrict_to(&promoted);
            let induced = induce(&table, h, &gset_to_element(&th, &x).unwrap()).unwrap();
            assert_eq!(induced, gset_to_element(&table, &balanced_product(&g, h, &x)).unwrap(), "{name}");
            for j in 0..th.len() {
                let ca = eqfix::coset_action(th.classes().representative(j));
                let expected = gset_to_element(&table, &balanced_product(&g, h, &ca.action)).unwrap();
                assert_eq!(induce(&table, h, &BurnsideElement::basis(&th, j)).unwrap(), expected, "{name}");
            }
        }
    }
}

#[test]
fn restriction_matches_restricted_action() {
    for (name, g) in small_groups() {
        let table = TableOfMarks::new(&g);
        let x = natural_action(&g);
        let gx = gset_to_element(&table, &x).unwrap();
        for h in table.classes().iter() {
            let promoted = h.promote();
            let th = TableOfMarks::new(&promoted.group);
            let expected = gset_to_element(&th, &x.restrict_to(&promoted)).unwrap();
            assert_eq!(restrict(&th, h, &gx).unwrap(), expected, "{name}");
        }
    }
}

#[test]
fn frobenius_reciprocity() {
    for (name, g) in small_groups() {
        let table = TableOfMarks::new(&g);
        for h in table.classes().iter() {
            let th = TableOfMarks::new(&h.promote().group);
            for i in 0..table.len() {
                for j in 0..th.len() {
                    let x = BurnsideElement::basis(&table, i);
                    let y = BurnsideElement::basis(&th, j);
                    let lhs = induce(&table, h, &(restrict(&th, h, &x).unwrap() * y.clone())).unwrap();
                    let rhs = x * induce(&table, h, &y).unwrap();
                    assert_eq!(lhs, rhs, "{name}");
                }
            }
        }
    }
}

/// `η_H(X)` has mark `|X^{π⁻¹(L)}|` at each subgroup `L` of `W(H)`.
#[test]
fn fixed_point_map_matches_preimage_fixed_points() {
    for (name, g) in small_groups() {
        let table = TableOfMarks::new(&g);
        let x = natural_action(&g);
        let gx = gset_to_element(&table, &x).unwrap();
        for h in table.classes().iter() {
            let w = weyl_group(h);
            let image = eta(h, &gx).unwrap();
            for (i, l) in image.table().classes().iter().enumerate() {
                let pre: Vec<usize> = w.normalizer.members().iter().copied().filter(|&n| l.contains(w.quotient(n).unwrap())).collect();
                let fixed = (0..x.points()).filter(|&p| pre.iter().all(|&n| x.act(n, p) == p)).count();
                assert_eq!(image.mark_at(i), fixed.into(), "{name}");
            }
        }
    }
}

#[test]
fn degree_marks_match_projector_oracle() {
    let cases: Vec<(Arc<FiniteGroup>, Vec<i64>)> = vec![
        (FiniteGroup::symmetric(3).unwrap(), vec![-1, 1]),
        (FiniteGroup::symmetric(3).unwrap(), vec![2, -1]),
        (FiniteGroup::dihedral(4).unwrap(), vec![-3, 1]),
        (FiniteGroup::cyclic(4).unwrap(), vec![1, -2]),
        (FiniteGroup::alternating(4).unwrap(), vec![-1, 0]),
    ];
    let mut checked = 0;
    for (g, ab) in cases {
        let table = TableOfMarks::new(&g);
        let rep = RationalRepresentation::permutation(&g);
        let n = g.degree();
        // a + b·(permutation matrix of the first generator) averaged over G
        let gen = g.generators()[0].clone();
        let raw = QMatrix::from_rows(
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| q(if r == c { ab[0] } else { 0 } + if gen.apply(c) == r { ab[1] } else { 0 }))
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        let l = EquivariantLinearMap::symmetrize(&rep, &raw).unwrap();
        let Ok(deg) = equivariant_degree(&table, &l) else { continue };
        for (i, k) in table.classes().iter().enumerate() {
            let images: Vec<&QMatrix> = k.members().iter().map(|&m| rep.image(m)).collect();
            assert_eq!(deg.mark_at(i), fixed_determinant_sign(&images, l.matrix()).into());
        }
        checked += 1;
    }
    assert!(checked >= 4);
}
