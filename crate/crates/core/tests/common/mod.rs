//! Independent oracles shared by the integration tests and the acceptance
//! runner. Nothing here goes through the crate's subgroup enumeration,
//! coset machinery or linear algebra; it works on raw permutations and
//! small matrices.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use eqfix::{FiniteGroup, Permutation, QMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn perm(images: &[usize]) -> Permutation {
    Permutation::new(images.to_vec()).unwrap()
}

pub fn cycles(degree: usize, c: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(degree, c).unwrap()
}

pub fn group(degree: usize, gens: Vec<Permutation>) -> Arc<FiniteGroup> {
    FiniteGroup::generate_with_cap(degree, gens, 2000).unwrap()
}

/// Direct product of two permutation groups acting on disjoint points.
pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Arc<FiniteGroup> {
    let n = a.degree() + b.degree();
    let shift = |p: &Permutation, off: usize, deg: usize| {
        let mut img: Vec<usize> = (0..n).collect();
        for i in 0..deg {
            img[i + off] = p.apply(i) + off;
        }
        Permutation::new(img).unwrap()
    };
    let mut gens: Vec<Permutation> = a.generators().iter().map(|p| shift(p, 0, a.degree())).collect();
    gens.extend(b.generators().iter().map(|p| shift(p, a.degree(), b.degree())));
    group(n, gens)
}

pub fn quaternion() -> Arc<FiniteGroup> {
    group(8, vec![cycles(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]), cycles(8, &[&[0, 4, 2, 6], &[1, 7, 3, 5]])])
}

/// Named test groups of order at most 12.
pub fn small_groups() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    vec![
        ("C1", FiniteGroup::trivial()),
        ("C2", FiniteGroup::cyclic(2).unwrap()),
        ("C3", FiniteGroup::cyclic(3).unwrap()),
        ("C4", FiniteGroup::cyclic(4).unwrap()),
        ("V4", group(4, vec![cycles(4, &[&[0, 1], &[2, 3]]), cycles(4, &[&[0, 2], &[1, 3]])])),
        ("C5", FiniteGroup::cyclic(5).unwrap()),
        ("S3", FiniteGroup::symmetric(3).unwrap()),
        ("C6", FiniteGroup::cyclic(6).unwrap()),
        ("D8", FiniteGroup::dihedral(4).unwrap()),
        ("Q8", quaternion()),
        ("C2^3", product(&product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(2).unwrap()), &FiniteGroup::cyclic(2).unwrap())),
        ("D10", FiniteGroup::dihedral(5).unwrap()),
        ("A4", FiniteGroup::alternating(4).unwrap()),
        ("D12", FiniteGroup::dihedral(6).unwrap()),
        ("C12", FiniteGroup::cyclic(12).unwrap()),
    ]
}

/// Further groups of order between 13 and 24.
pub fn medium_groups() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    vec![
        ("D16", FiniteGroup::dihedral(8).unwrap()),
        ("C4xC4", product(&FiniteGroup::cyclic(4).unwrap(), &FiniteGroup::cyclic(4).unwrap())),
        ("S3xC3", product(&FiniteGroup::symmetric(3).unwrap(), &FiniteGroup::cyclic(3).unwrap())),
        ("D20", FiniteGroup::dihedral(10).unwrap()),
        ("S4", FiniteGroup::symmetric(4).unwrap()),
        ("A4xC2", product(&FiniteGroup::alternating(4).unwrap(), &FiniteGroup::cyclic(2).unwrap())),
        ("S3xC4", product(&FiniteGroup::symmetric(3).unwrap(), &FiniteGroup::cyclic(4).unwrap())),
        ("D24", FiniteGroup::dihedral(12).unwrap()),
        ("C24", FiniteGroup::cyclic(24).unwrap()),
    ]
}

pub fn compose(a: &Permutation, b: &Permutation) -> Permutation {
    a.compose(b).unwrap()
}

/// All subgroups as sets of permutations, by checking every subset that
/// contains the identity for closure.
pub fn all_subgroups_by_subsets(g: &FiniteGroup) -> Vec<BTreeSet<Permutation>> {
    let elems: Vec<Permutation> = g.elements().to_vec();
    let id = Permutation::identity(g.degree());
    let others: Vec<&Permutation> = elems.iter().filter(|p| **p != id).collect();
    let n = others.len();
    assert!(n <= 16, "subset oracle is for small groups");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        set.insert(id.clone());
        for (i, p) in others.iter().enumerate() {
            if mask & (1 << i) != 0 {
                set.insert((*p).clone());
            }
        }
        if set.len() > 1 && !g.order().is_multiple_of(set.len()) {
            continue;
        }
        let closed = set.iter().all(|a| set.iter().all(|b| set.contains(&compose(a, b))));
        if closed {
            out.push(set);
        }
    }
    out
}

pub fn conjugate_set(s: &BTreeSet<Permutation>, g: &Permutation) -> BTreeSet<Permutation> {
    let gi = g.inverse();
    s.iter().map(|x| compose(&compose(g, x), &gi)).collect()
}

/// Conjugacy classes of subgroups by brute force, each as the set of its
/// members; sorted by order.
pub fn subgroup_classes_by_subsets(g: &FiniteGroup) -> Vec<Vec<BTreeSet<Permutation>>> {
    let subs = all_subgroups_by_subsets(g);
    let mut seen: HashSet<BTreeSet<Permutation>> = HashSet::new();
    let mut classes = Vec::new();
    for s in subs {
        if seen.contains(&s) {
            continue;
        }
        let mut class: Vec<BTreeSet<Permutation>> = Vec::new();
        for x in g.elements() {
            let c = conjugate_set(&s, x);
            if seen.insert(c.clone()) {
                class.push(c);
            }
        }
        classes.push(class);
    }
    classes.sort_by_key(|c| c[0].len());
    classes
}

/// Left cosets `xK` as sets of permutations.
pub fn left_cosets(g: &FiniteGroup, k: &BTreeSet<Permutation>) -> Vec<BTreeSet<Permutation>> {
    let mut out: Vec<BTreeSet<Permutation>> = Vec::new();
    for x in g.elements() {
        let c: BTreeSet<Permutation> = k.iter().map(|y| compose(x, y)).collect();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Number of cosets `xK` with `h·xK = xK` for every `h ∈ H`.
pub fn fixed_coset_count(g: &FiniteGroup, h: &BTreeSet<Permutation>, k: &BTreeSet<Permutation>) -> usize {
    left_cosets(g, k)
        .iter()
        .filter(|c| {
            let rep = c.iter().next().unwrap();
            h.iter().all(|a| c.contains(&compose(a, rep)))
        })
        .count()
}

pub fn members_as_set(h: &eqfix::Subgroup) -> BTreeSet<Permutation> {
    h.members().iter().map(|&i| h.parent().element(i).clone()).collect()
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Determinant by cofactor expansion; only for tiny matrices.
pub fn leibniz(m: &QMatrix) -> BigRational {
    let n = m.rows();
    if n == 0 {
        return BigRational::one();
    }
    let mut total = BigRational::zero();
    for c in 0..n {
        let minor = QMatrix::from_rows(
            (1..n)
                .map(|r| (0..n).filter(|&cc| cc != c).map(|cc| m[(r, cc)].clone()).collect())
                .collect(),
        )
        .unwrap_or_else(|| QMatrix::zeros(0, 0));
        let term = &m[(0, c)] * leibniz(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn sign(x: &BigRational) -> i64 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `det(L|V^K)`, via `det(L·P + (1 − P))` with `P` the averaging
/// projector of `K` written out from the representation's matrices. `L`
/// commutes with `P`, so the matrix acts as `L` on the image of `P` and as
/// the identity on its kernel.
pub fn fixed_determinant_sign(images: &[&QMatrix], l: &QMatrix) -> i64 {
    let n = l.rows();
    let mut p = QMatrix::zeros(n, n);
    for m in images {
        for r in 0..n {
            for c in 0..n {
                p[(r, c)] += m[(r, c)].clone();
            }
        }
    }
    let k = BigRational::from_integer(BigInt::from(images.len()));
    let mut a = QMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let mut lp = BigRational::zero();
            for t in 0..n {
                lp += &l[(r, t)] * &p[(t, c)] / &k;
            }
            let id = if r == c { BigRational::one() } else { BigRational::zero() };
            a[(r, c)] = lp + id - &p[(r, c)] / &k;
        }
    }
    sign(&leibniz(&a))
}
