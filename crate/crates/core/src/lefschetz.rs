//! The equivariant Lefschetz number `L_G(f) ∈ A(G)`.
//!
//! Two routes are provided. The local route sums, over the fixed orbits
//! `Gx` of `f`, the induced degrees `t^G_{G_x}(Deg_{G_x}(id − N_x f))` where
//! `N_x f` is the derivative of `f` normal to the orbit. The marks route
//! takes the ordinary Lefschetz numbers `L(f^H)` of the fixed point maps and
//! solves for the unique Burnside ring element with those marks.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::burnside::{from_marks, induce, BurnsideElement, BurnsideError, FixedPointMap, MarkVector, TableOfMarks};
use crate::group::{is_subconjugate, same_group, Subgroup};
use crate::linalg::ZMatrix;
use crate::rep::{equivariant_degree, EquivariantLinearMap, RepError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LefschetzError {
    #[error("fixed orbit {datum}: id − N is singular")]
    SingularMap { datum: usize },
    #[error("fixed orbit {datum}: slice representation is not over the isotropy group")]
    SliceMismatch { datum: usize },
    #[error("chain map violation: {0}")]
    ChainMapViolation(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
}

/// Local data at one fixed orbit `Gx`: the isotropy group `G_x` and the
/// normal derivative `N_x f`, an equivariant map on the slice
/// representation of `G_x`.
#[derive(Clone, Debug)]
pub struct FixedOrbitDatum {
    pub isotropy: Subgroup,
    pub normal_derivative: EquivariantLinearMap,
}

impl FixedOrbitDatum {
    pub fn new(isotropy: Subgroup, normal_derivative: EquivariantLinearMap) -> Result<Self, LefschetzError> {
        if !same_group(&isotropy.promote().group, normal_derivative.rep().group()) {
            return Err(LefschetzError::SliceMismatch { datum: 0 });
        }
        Ok(FixedOrbitDatum {
            isotropy,
            normal_derivative,
        })
    }

    pub fn slice(&self) -> &crate::rep::RationalRepresentation {
        self.normal_derivative.rep()
    }

    /// `t^G_{G_x}(Deg_{G_x}(id − N_x f))`
    pub fn contribution(&self, table: &Arc<TableOfMarks>) -> Result<BurnsideElement, LefschetzError> {
        let local = TableOfMarks::new(self.normal_derivative.rep().group());
        let degree = equivariant_degree(&local, &self.normal_derivative.identity_minus())?;
        Ok(induce(table, &self.isotropy, &degree)?)
    }
}

/// `L_G(f) = Σ_i t^G_{G_{x_i}}(Deg_{G_{x_i}}(id − N_{x_i} f))`.
pub fn lefschetz_from_orbits(
    table: &Arc<TableOfMarks>,
    data: &[FixedOrbitDatum],
) -> Result<BurnsideElement, LefschetzError> {
    let mut total = BurnsideElement::zero(table);
    for (i, d) in data.iter().enumerate() {
        d.isotropy.check_parent(table.group()).map_err(BurnsideError::from)?;
        if !same_group(&d.isotropy.promote().group, d.slice().group()) {
            return Err(LefschetzError::SliceMismatch { datum: i });
        }
        let contribution = d.contribution(table).map_err(|e| match e {
            LefschetzError::Rep(RepError::SingularMap) => LefschetzError::SingularMap { datum: i },
            other => other,
        })?;
        total += &contribution;
    }
    Ok(total)
}

/// The element whose mark at each class `H` is the supplied `L(f^H)`.
pub fn lefschetz_from_marks(v: &MarkVector) -> Result<BurnsideElement, LefschetzError> {
    Ok(from_marks(v)?)
}

/// A cellular self-map: one square integer matrix per dimension, with
/// optional boundary matrices `∂_k : C_k → C_{k−1}` for `k = 1..=top`.
#[derive(Clone, Debug)]
pub struct ChainMapData {
    pub maps: Vec<ZMatrix>,
    pub boundaries: Option<Vec<ZMatrix>>,
}

impl ChainMapData {
    pub fn new(maps: Vec<ZMatrix>, boundaries: Option<Vec<ZMatrix>>) -> Self {
        ChainMapData { maps, boundaries }
    }

    /// Identity chain map on a complex with the given cell counts.
    pub fn identity(cells: &[usize]) -> Self {
        ChainMapData {
            maps: cells.iter().map(|&n| ZMatrix::identity(n)).collect(),
            boundaries: None,
        }
    }

    pub fn validate(&self) -> Result<(), LefschetzError> {
        for (k, f) in self.maps.iter().enumerate() {
            if !f.is_square() {
                return Err(LefschetzError::ChainMapViolation(format!("f_{k} is not square")));
            }
        }
        let Some(boundaries) = &self.boundaries else {
            return Ok(());
        };
        if boundaries.len() + 1 != self.maps.len() {
            return Err(LefschetzError::ChainMapViolation(format!(
                "{} boundary matrices for {} chain groups",
                boundaries.len(),
                self.maps.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            let k = i + 1;
            if d.rows() != self.maps[k - 1].rows() || d.cols() != self.maps[k].rows() {
                return Err(LefschetzError::ChainMapViolation(format!("∂_{k} has the wrong shape")));
            }
            let lhs = self.maps[k - 1].checked_mul(d).expect("shapes checked");
            let rhs = d.checked_mul(&self.maps[k]).expect("shapes checked");
            if lhs != rhs {
                return Err(LefschetzError::ChainMapViolation(format!("f_{} ∂_{k} ≠ ∂_{k} f_{k}", k - 1)));
            }
            if k >= 2 {
                let dd = boundaries[i - 1].checked_mul(d).expect("shapes checked");
                if !dd.is_zero() {
                    return Err(LefschetzError::ChainMapViolation(format!("∂_{} ∂_{k} ≠ 0", k - 1)));
                }
            }
        }
        Ok(())
    }
}

/// `Σ_k (−1)^k trace(f_k)`, equal to the alternating trace on rational
/// homology.
pub fn hopf_lefschetz(c: &ChainMapData) -> Result<BigInt, LefschetzError> {
    c.validate()?;
    Ok(c.maps
        .iter()
        .enumerate()
        .map(|(k, f)| if k % 2 == 0 { f.trace() } else { -f.trace() })
        .sum())
}

/// Outcome of the restriction checks at one subgroup class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCheck {
    pub class: usize,
    /// mark of `L` at `H` equals the supplied `L(f^H)`
    pub mark_matches: bool,
    /// the `W(H)`-set underlying `η_H(L)` has `L(f^H)` points, counted with sign
    pub eta_matches: bool,
    /// `Some(η_H(L) = 0)` when the caller asserted no fixed points of orbit
    /// type at least `(H)`
    pub vanishes: Option<bool>,
}

impl ClassCheck {
    pub fn passed(&self) -> bool {
        self.mark_matches && self.eta_matches && self.vanishes.unwrap_or(true)
    }
}

/// Checks `L` against the ordinary Lefschetz numbers of the fixed point maps
/// at `h`, and, when `no_fixed_points_at_least_h` is set, that `η_H(L)`
/// vanishes.
pub fn check_restriction(
    h: &Subgroup,
    l: &BurnsideElement,
    fixed_marks: &MarkVector,
    no_fixed_points_at_least_h: bool,
) -> Result<ClassCheck, LefschetzError> {
    let table = l.table();
    let class = table.classes().class_of(h).map_err(BurnsideError::from)?;
    let expected = fixed_marks.get(class);
    let eta = FixedPointMap::new(table, h)?.apply(l)?;
    Ok(ClassCheck {
        class,
        mark_matches: l.mark_at(class) == *expected,
        eta_matches: eta.mark_at(0) == *expected,
        vanishes: no_fixed_points_at_least_h.then(|| eta.is_zero()),
    })
}

/// Runs [`check_restriction`] at every class. `isotropy_classes` lists the
/// class indices of the fixed orbits' isotropy groups; the vanishing check
/// is requested at every `H` with no isotropy class containing a conjugate
/// of `H`.
pub fn check_all_restrictions(
    l: &BurnsideElement,
    fixed_marks: &MarkVector,
    isotropy_classes: &[usize],
) -> Result<Vec<ClassCheck>, LefschetzError> {
    let classes = l.table().classes();
    classes
        .iter()
        .map(|h| {
            let free = isotropy_classes
                .iter()
                .all(|&i| !is_subconjugate(h, classes.representative(i)));
            check_restriction(h, l, fixed_marks, free)
        })
        .collect()
}

/// Mark of `L_G(f)` at the trivial subgroup: `Σ_i [G : G_{x_i}] · sign det(id − N_{x_i} f)`.
pub fn underlying_lefschetz(data: &[FixedOrbitDatum]) -> Result<BigInt, LefschetzError> {
    let mut total = BigInt::zero();
    for (i, d) in data.iter().enumerate() {
        let index = d.isotropy.parent().order() / d.isotropy.order();
        let sign = d.normal_derivative.identity_minus().matrix().determinant_sign();
        if sign == 0 {
            return Err(LefschetzError::SingularMap { datum: i });
        }
        total += BigInt::from(index as i64 * sign as i64);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::linalg::QMatrix;
    use crate::rep::RationalRepresentation;
    use num_rational::BigRational;

    fn z(rows: Vec<Vec<i64>>) -> ZMatrix {
        ZMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()).unwrap()
    }

    fn qs(x: i64) -> QMatrix {
        QMatrix::scalar(1, BigRational::from_integer(x.into()))
    }

    /// `f(x) = x³` on the sign line of `C2`: fixed points 0 (isotropy `C2`)
    /// and the free orbit {±1}.
    fn cubic() -> (Arc<TableOfMarks>, Vec<FixedOrbitDatum>) {
        let g = FiniteGroup::cyclic(2).unwrap();
        let t = TableOfMarks::new(&g);
        let whole = Subgroup::whole(&g);
        let sign = RationalRepresentation::sign(&whole.promote().group);
        let at_zero = FixedOrbitDatum::new(whole, EquivariantLinearMap::new(&sign, qs(0)).unwrap()).unwrap();
        let e = Subgroup::trivial(&g);
        let line = RationalRepresentation::trivial(&e.promote().group, 1);
        let at_one = FixedOrbitDatum::new(e, EquivariantLinearMap::new(&line, qs(3)).unwrap()).unwrap();
        (t, vec![at_zero, at_one])
    }

    #[test]
    fn cubic_example() {
        let (t, data) = cubic();
        let l = lefschetz_from_orbits(&t, &data).unwrap();
        assert_eq!(l, BurnsideElement::from_i64(&t, &[-1, 1]).unwrap());
        assert_eq!(l.marks(), MarkVector::from_i64(&t, &[-1, 1]).unwrap());
        assert_eq!(underlying_lefschetz(&data).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn empty_and_constant() {
        let (t, _) = cubic();
        assert!(lefschetz_from_orbits(&t, &[]).unwrap().is_zero());
        let g = t.group().clone();
        let whole = Subgroup::whole(&g);
        let rep = RationalRepresentation::sign(&whole.promote().group);
        let constant = FixedOrbitDatum::new(whole, EquivariantLinearMap::new(&rep, qs(0)).unwrap()).unwrap();
        assert_eq!(lefschetz_from_orbits(&t, &[constant]).unwrap(), BurnsideElement::one(&t));
    }

    #[test]
    fn singular_datum_is_reported() {
        let (t, _) = cubic();
        let e = Subgroup::trivial(t.group());
        let line = RationalRepresentation::trivial(&e.promote().group, 1);
        let bad = FixedOrbitDatum::new(e, EquivariantLinearMap::new(&line, qs(1)).unwrap()).unwrap();
        let (_, mut data) = cubic();
        data.push(bad);
        assert_eq!(lefschetz_from_orbits(&t, &data).unwrap_err(), LefschetzError::SingularMap { datum: 2 });
    }

    #[test]
    fn slice_must_live_over_isotropy() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let rep = RationalRepresentation::sign(&g);
        let e = Subgroup::trivial(&g);
        assert!(matches!(
            FixedOrbitDatum::new(e, EquivariantLinearMap::identity(&rep)),
            Err(LefschetzError::SliceMismatch { .. })
        ));
    }

    #[test]
    fn marks_route_examples() {
        let (t, _) = cubic();
        assert_eq!(
            lefschetz_from_marks(&MarkVector::from_i64(&t, &[1, 1]).unwrap()).unwrap(),
            BurnsideElement::one(&t)
        );
        assert_eq!(
            lefschetz_from_marks(&MarkVector::from_i64(&t, &[-1, 1]).unwrap()).unwrap(),
            BurnsideElement::from_i64(&t, &[-1, 1]).unwrap()
        );
        assert!(matches!(
            lefschetz_from_marks(&MarkVector::from_i64(&t, &[1, 0]).unwrap()),
            Err(LefschetzError::Burnside(BurnsideError::NotInImage { .. }))
        ));
    }

    #[test]
    fn hopf_examples() {
        assert_eq!(hopf_lefschetz(&ChainMapData::identity(&[1, 1])).unwrap(), BigInt::from(0));
        assert_eq!(hopf_lefschetz(&ChainMapData::identity(&[2, 1])).unwrap(), BigInt::from(1));
        for d in -2..=3 {
            let c = ChainMapData::new(vec![z(vec![vec![1]]), z(vec![vec![d]])], Some(vec![z(vec![vec![0]])]));
            assert_eq!(hopf_lefschetz(&c).unwrap(), BigInt::from(1 - d));
        }
    }

    #[test]
    fn chain_map_violations() {
        // interval: two vertices, one edge; f swaps the endpoints but fixes the edge
        let d1 = z(vec![vec![-1], vec![1]]);
        let bad = ChainMapData::new(vec![z(vec![vec![0, 1], vec![1, 0]]), z(vec![vec![1]])], Some(vec![d1.clone()]));
        assert!(matches!(hopf_lefschetz(&bad), Err(LefschetzError::ChainMapViolation(_))));
        let good = ChainMapData::new(vec![z(vec![vec![0, 1], vec![1, 0]]), z(vec![vec![-1]])], Some(vec![d1]));
        assert_eq!(hopf_lefschetz(&good).unwrap(), BigInt::from(1));
        let shape = ChainMapData::new(vec![z(vec![vec![1]]), z(vec![vec![1]])], Some(vec![z(vec![vec![1, 1]])]));
        assert!(hopf_lefschetz(&shape).is_err());
        let not_square = ChainMapData::new(vec![z(vec![vec![1, 0]])], None);
        assert!(hopf_lefschetz(&not_square).is_err());
    }

    #[test]
    fn restriction_checks() {
        let (t, data) = cubic();
        let g = t.group().clone();
        let l = lefschetz_from_orbits(&t, &data).unwrap();
        let marks = MarkVector::from_i64(&t, &[-1, 1]).unwrap();
        let at_g = check_restriction(&Subgroup::whole(&g), &l, &marks, false).unwrap();
        assert!(at_g.passed());

        let zero = BurnsideElement::zero(&t);
        let zero_marks = MarkVector::from_i64(&t, &[0, 0]).unwrap();
        for h in [Subgroup::trivial(&g), Subgroup::whole(&g)] {
            let c = check_restriction(&h, &zero, &zero_marks, true).unwrap();
            assert_eq!(c.vanishes, Some(true));
            assert!(c.passed());
        }

        let free = BurnsideElement::basis(&t, 0);
        let c = check_restriction(&Subgroup::whole(&g), &free, &free.marks(), true).unwrap();
        assert!(c.passed());

        let report = check_all_restrictions(&l, &marks, &[0, 1]).unwrap();
        assert!(report.iter().all(ClassCheck::passed));
        let wrong = MarkVector::from_i64(&t, &[1, 1]).unwrap();
        assert!(!check_all_restrictions(&l, &wrong, &[0, 1]).unwrap()[0].passed());
    }
}
