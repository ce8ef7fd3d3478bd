//! The rational equivariant Fuller index of a flow from data at its
//! periodic orbits.
//!
//! A hyperbolic periodic orbit of multiplicity `m` with spatial isotropy `H`
//! and equivariant Poincaré map `P` on its slice contributes
//! `L_G(P^m) / m`, where `L_G(P^m)` is the single-orbit Lefschetz class
//! `t^G_H(Deg_H(id − P^m))`. Contributions of distinct orbits add.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::burnside::{BurnsideError, FixedPointMap, RationalBurnsideElement, TableOfMarks};
use crate::group::{same_group, Subgroup};
use crate::lefschetz::{FixedOrbitDatum, LefschetzError};
use crate::rep::{matrix_power, EquivariantLinearMap, RationalRepresentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FullerError {
    #[error("periodic orbit {datum}: multiplicity must be positive")]
    InvalidMultiplicity { datum: usize },
    #[error("periodic orbit {datum}: id − P^m is singular")]
    SingularMap { datum: usize },
    #[error("periodic orbit {datum}: slice representation is not over the isotropy group")]
    SliceMismatch { datum: usize },
    #[error(transparent)]
    Lefschetz(#[from] LefschetzError),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
}

/// A periodic orbit: spatial isotropy, linearized Poincaré map on the slice
/// (taken with multiplicity one) and multiplicity.
#[derive(Clone, Debug)]
pub struct PeriodicOrbitDatum {
    pub isotropy: Subgroup,
    pub poincare: EquivariantLinearMap,
    pub multiplicity: u32,
}

impl PeriodicOrbitDatum {
    pub fn new(isotropy: Subgroup, poincare: EquivariantLinearMap, multiplicity: u32) -> Result<Self, FullerError> {
        if multiplicity == 0 {
            return Err(FullerError::InvalidMultiplicity { datum: 0 });
        }
        if !same_group(&isotropy.promote().group, poincare.rep().group()) {
            return Err(FullerError::SliceMismatch { datum: 0 });
        }
        Ok(PeriodicOrbitDatum {
            isotropy,
            poincare,
            multiplicity,
        })
    }

    pub fn slice(&self) -> &RationalRepresentation {
        self.poincare.rep()
    }

    /// The fixed orbit of `P^m` seen as a fixed point datum.
    pub fn iterated(&self) -> FixedOrbitDatum {
        FixedOrbitDatum {
            isotropy: self.isotropy.clone(),
            normal_derivative: matrix_power(&self.poincare, self.multiplicity),
        }
    }
}

fn single(table: &Arc<TableOfMarks>, d: &PeriodicOrbitDatum, index: usize) -> Result<RationalBurnsideElement, FullerError> {
    if d.multiplicity == 0 {
        return Err(FullerError::InvalidMultiplicity { datum: index });
    }
    if !same_group(&d.isotropy.promote().group, d.slice().group()) {
        return Err(FullerError::SliceMismatch { datum: index });
    }
    d.isotropy.check_parent(table.group()).map_err(BurnsideError::from)?;
    let lefschetz = d.iterated().contribution(table).map_err(|e| match e {
        LefschetzError::Rep(crate::rep::RepError::SingularMap) => FullerError::SingularMap { datum: index },
        other => other.into(),
    })?;
    let weight = BigRational::new(BigInt::one(), BigInt::from(d.multiplicity));
    Ok(lefschetz.to_rational().scale(&weight))
}

/// `F_G = L_G(P^m) ⊗ 1/m` for a single periodic orbit.
pub fn fuller_single(table: &Arc<TableOfMarks>, d: &PeriodicOrbitDatum) -> Result<RationalBurnsideElement, FullerError> {
    single(table, d, 0)
}

/// Sum of the single-orbit indices.
pub fn fuller_sum(table: &Arc<TableOfMarks>, data: &[PeriodicOrbitDatum]) -> Result<RationalBurnsideElement, FullerError> {
    let mut total = RationalBurnsideElement::zero(table);
    for (i, d) in data.iter().enumerate() {
        total = total.try_add(&single(table, d, i)?)?;
    }
    Ok(total)
}

/// True iff `η_H(F) ≠ 0`, in which case the flow has a periodic orbit of
/// orbit type at least `(H)`.
pub fn fuller_detect(h: &Subgroup, f: &RationalBurnsideElement) -> Result<bool, FullerError> {
    let map = FixedPointMap::new(f.table(), h)?;
    Ok(!map.apply_rational(f)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::BurnsideElement;
    use crate::group::FiniteGroup;
    use crate::linalg::QMatrix;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn trivial_orbit(p: BigRational, m: u32) -> (Arc<TableOfMarks>, PeriodicOrbitDatum) {
        let g = FiniteGroup::trivial();
        let t = TableOfMarks::new(&g);
        let e = Subgroup::whole(&g);
        let rep = RationalRepresentation::trivial(&e.promote().group, 1);
        let d = PeriodicOrbitDatum::new(e, EquivariantLinearMap::scalar(&rep, p), m).unwrap();
        (t, d)
    }

    #[test]
    fn single_examples() {
        let (t, d) = trivial_orbit(r(1, 2), 1);
        assert_eq!(fuller_single(&t, &d).unwrap().coeffs(), &[r(1, 1)]);
        let (t, d) = trivial_orbit(r(1, 2), 3);
        assert_eq!(fuller_single(&t, &d).unwrap().coeffs(), &[r(1, 3)]);

        let g = FiniteGroup::cyclic(2).unwrap();
        let tg = TableOfMarks::new(&g);
        let whole = Subgroup::whole(&g);
        let sign = RationalRepresentation::sign(&whole.promote().group);
        let d = PeriodicOrbitDatum::new(whole, EquivariantLinearMap::scalar(&sign, r(-1, 2)), 1).unwrap();
        let f = fuller_single(&tg, &d).unwrap();
        assert_eq!(f, BurnsideElement::one(&tg).to_rational());
    }

    #[test]
    fn sum_examples() {
        let (t, once) = trivial_orbit(r(1, 2), 1);
        assert!(fuller_sum(&t, &[]).unwrap().is_zero());
        assert_eq!(fuller_sum(&t, &[once.clone(), once.clone()]).unwrap().coeffs(), &[r(2, 1)]);
        let (_, thrice) = trivial_orbit(r(1, 2), 3);
        assert_eq!(fuller_sum(&t, &[once, thrice]).unwrap().coeffs(), &[r(4, 3)]);
    }

    #[test]
    fn resonant_orbit_is_rejected() {
        // P = −1 with m = 2 gives P² = 1, so id − P² = 0
        let (t, d) = trivial_orbit(r(-1, 1), 2);
        assert_eq!(fuller_single(&t, &d).unwrap_err(), FullerError::SingularMap { datum: 0 });
        let (_, ok) = trivial_orbit(r(1, 2), 1);
        assert_eq!(fuller_sum(&t, &[ok, d]).unwrap_err(), FullerError::SingularMap { datum: 1 });
    }

    #[test]
    fn zero_multiplicity_is_rejected() {
        let g = FiniteGroup::trivial();
        let e = Subgroup::whole(&g);
        let rep = RationalRepresentation::trivial(&e.promote().group, 1);
        assert!(matches!(
            PeriodicOrbitDatum::new(e, EquivariantLinearMap::identity(&rep), 0),
            Err(FullerError::InvalidMultiplicity { .. })
        ));
    }

    #[test]
    fn detect_examples() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let t = TableOfMarks::new(&g);
        let whole = Subgroup::whole(&g);
        let trivial = Subgroup::trivial(&g);
        let zero = RationalBurnsideElement::zero(&t);
        assert!(!fuller_detect(&whole, &zero).unwrap());
        assert!(!fuller_detect(&trivial, &zero).unwrap());
        let unit = BurnsideElement::one(&t).to_rational();
        assert!(fuller_detect(&whole, &unit).unwrap());
        let free_third = BurnsideElement::basis(&t, 0).to_rational().scale(&r(1, 3));
        assert!(!fuller_detect(&whole, &free_third).unwrap());
        assert!(fuller_detect(&trivial, &free_third).unwrap());
    }

    #[test]
    fn multiplicity_matches_power_up_to_weight() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let t = TableOfMarks::new(&g);
        let whole = Subgroup::whole(&g);
        let rep = RationalRepresentation::sign(&whole.promote().group)
            .direct_sum(&RationalRepresentation::trivial(&whole.promote().group, 1))
            .unwrap();
        let p = EquivariantLinearMap::new(
            &rep,
            QMatrix::from_rows(vec![vec![r(-3, 1), r(0, 1)], vec![r(0, 1), r(1, 2)]]).unwrap(),
        )
        .unwrap();
        let m = 3;
        let with_m = fuller_single(&t, &PeriodicOrbitDatum::new(whole.clone(), p.clone(), m).unwrap()).unwrap();
        let power = fuller_single(&t, &PeriodicOrbitDatum::new(whole, matrix_power(&p, m), 1).unwrap()).unwrap();
        assert_eq!(with_m.scale(&r(m as i64, 1)), power);
        assert!(power.is_integral());
    }
}
