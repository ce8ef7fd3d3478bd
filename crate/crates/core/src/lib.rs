//! Burnside-ring valued fixed point invariants of finite group actions.
//!
//! The crate computes, exactly, the equivariant Lefschetz number of a
//! `G`-map from local data at its fixed orbits (or from the ordinary
//! Lefschetz numbers of its fixed point maps), the equivariant degree of an
//! invertible equivariant linear map, and the rational equivariant Fuller
//! index of a flow from data at its periodic orbits. All of these live in
//! the Burnside ring `A(G)` (or `A(G) ⊗ ℚ`), which is modelled through its
//! table of marks.
//!
//! Groups are finite permutation groups; see [`FiniteGroup`].

pub mod burnside;
pub mod cli;
pub mod fuller;
pub mod group;
pub mod lefschetz;
pub mod linalg;
pub mod perm;
pub mod rep;
pub mod scene;
pub mod subgroups;

pub use burnside::{
    eta, from_marks, gset_to_element, induce, rational_add, rational_eta, rational_scale, restrict,
    table_of_marks, BurnsideElement, BurnsideError, FixedPointMap, MarkVector, RationalBurnsideElement,
    TableOfMarks,
};
pub use fuller::{fuller_detect, fuller_single, fuller_sum, FullerError, PeriodicOrbitDatum};
pub use group::{
    coset_action, is_subconjugate, normalizer, weyl_group, CosetAction, FiniteGroup, GSetAction, GroupError,
    PromotedSubgroup, Subgroup, WeylGroup,
};
pub use lefschetz::{
    check_restriction, hopf_lefschetz, lefschetz_from_marks, lefschetz_from_orbits, ChainMapData, FixedOrbitDatum,
    LefschetzError,
};
pub use linalg::{Matrix, QMatrix, ZMatrix};
pub use perm::Permutation;
pub use rep::{
    equivariant_degree, fixed_subspace, matrix_power, rep_from_generators, restrict_rep, EquivariantLinearMap,
    RationalRepresentation, RepError,
};
pub use subgroups::{subgroup_classes, SubgroupClassList};
