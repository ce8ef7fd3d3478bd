//! Exact rational representations and the equivariant degree of invertible
//! equivariant linear maps.
//!
//! For an invertible `G`-map `L : V → V`, the mark of `Deg_G(L)` at a
//! subgroup `K` is the Brouwer degree of `L` restricted to the fixed space
//! `V^K`, which for a linear map is the sign of its determinant there. The
//! zero-dimensional fixed space contributes `+1`.

use std::collections::VecDeque;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::burnside::{from_marks, BurnsideElement, BurnsideError, MarkVector, TableOfMarks};
use crate::group::{same_group, FiniteGroup, GroupError, Subgroup};
use crate::linalg::QMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("generator images do not define a homomorphism (conflict at element {element})")]
    InconsistentImages { element: usize },
    #[error("image of generator {generator} is singular")]
    SingularImage { generator: usize },
    #[error("the given elements do not generate the group")]
    DoesNotGenerate,
    #[error("expected {expected} matrices or size {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix does not commute with the image of generator {generator}")]
    NotEquivariant { generator: usize },
    #[error("map is singular (zero determinant)")]
    SingularMap,
    #[error("representation and Burnside ring belong to different groups")]
    GroupMismatch,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
}

/// A homomorphism `G → GL_n(ℚ)`, stored as one matrix per group element.
#[derive(Clone, Debug)]
pub struct RationalRepresentation {
    group: Arc<FiniteGroup>,
    dimension: usize,
    images: Arc<Vec<QMatrix>>,
}

impl RationalRepresentation {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn image(&self, g: usize) -> &QMatrix {
        &self.images[g]
    }

    pub fn images(&self) -> &[QMatrix] {
        &self.images
    }

    /// `d` copies of the trivial representation.
    pub fn trivial(group: &Arc<FiniteGroup>, d: usize) -> Self {
        RationalRepresentation {
            group: group.clone(),
            dimension: d,
            images: Arc::new(vec![QMatrix::identity(d); group.order()]),
        }
    }

    /// The permutation representation on `ℚ^degree` from the group's own
    /// action on points: `g · e_i = e_{g(i)}`.
    pub fn permutation(group: &Arc<FiniteGroup>) -> Self {
        let n = group.degree();
        let images = group
            .elements()
            .iter()
            .map(|p| {
                let mut m = QMatrix::zeros(n, n);
                for i in 0..n {
                    m[(p.apply(i), i)] = BigRational::one();
                }
                m
            })
            .collect();
        RationalRepresentation {
            group: group.clone(),
            dimension: n,
            images: Arc::new(images),
        }
    }

    /// The one-dimensional sign representation of a permutation group.
    pub fn sign(group: &Arc<FiniteGroup>) -> Self {
        let images = group
            .elements()
            .iter()
            .map(|p| {
                let odd = p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 1;
                QMatrix::scalar(1, if odd { -BigRational::one() } else { BigRational::one() })
            })
            .collect();
        RationalRepresentation {
            group: group.clone(),
            dimension: 1,
            images: Arc::new(images),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        if !same_group(&self.group, &other.group) {
            return Err(RepError::GroupMismatch);
        }
        let (a, b) = (self.dimension, other.dimension);
        let images = self
            .images
            .iter()
            .zip(other.images.iter())
            .map(|(x, y)| {
                let mut m = QMatrix::zeros(a + b, a + b);
                for i in 0..a {
                    for j in 0..a {
                        m[(i, j)] = x[(i, j)].clone();
                    }
                }
                for i in 0..b {
                    for j in 0..b {
                        m[(a + i, a + j)] = y[(i, j)].clone();
                    }
                }
                m
            })
            .collect();
        Ok(RationalRepresentation {
            group: self.group.clone(),
            dimension: a + b,
            images: Arc::new(images),
        })
    }

    /// `(1/|K|) Σ_{k ∈ K} ρ(k)`, the projection onto `V^K`.
    pub fn averaging_projector(&self, k: &Subgroup) -> Result<QMatrix, RepError> {
        k.check_parent(&self.group)?;
        let mut sum = QMatrix::zeros(self.dimension, self.dimension);
        for &m in k.members() {
            sum = sum.checked_add(&self.images[m]).expect("square matrices of one size");
        }
        Ok(sum.scale(&BigRational::new(BigInt::one(), BigInt::from(k.order()))))
    }
}

/// Builds a representation from matrices for the group's own generators.
pub fn rep_from_generators(
    group: &Arc<FiniteGroup>,
    dimension: usize,
    generator_images: Vec<QMatrix>,
) -> Result<RationalRepresentation, RepError> {
    if generator_images.len() != group.generators().len() {
        return Err(RepError::DimensionMismatch {
            expected: group.generators().len(),
            found: generator_images.len(),
        });
    }
    let pairs: Vec<(usize, QMatrix)> = group.generator_indices().into_iter().zip(generator_images).collect();
    rep_from_images(group, dimension, &pairs)
}

/// Builds a representation from matrices assigned to a generating set of
/// element indices.
///
/// Images are propagated breadth first along `ρ(s·x) = ρ(s)·ρ(x)`; every
/// product is checked against any image already assigned along another
/// factorization, which together with `ρ(e) = 1` makes the result a
/// homomorphism.
pub fn rep_from_images(
    group: &Arc<FiniteGroup>,
    dimension: usize,
    pairs: &[(usize, QMatrix)],
) -> Result<RationalRepresentation, RepError> {
    for (k, (g, m)) in pairs.iter().enumerate() {
        if *g >= group.order() {
            return Err(RepError::DoesNotGenerate);
        }
        if m.rows() != dimension || m.cols() != dimension {
            return Err(RepError::DimensionMismatch {
                expected: dimension,
                found: m.rows().max(m.cols()),
            });
        }
        if m.determinant().is_zero() {
            return Err(RepError::SingularImage { generator: k });
        }
    }
    let mut images: Vec<Option<QMatrix>> = vec![None; group.order()];
    images[0] = Some(QMatrix::identity(dimension));
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let rx = images[x].clone().expect("queued elements have images");
        for (s, ms) in pairs {
            let sx = group.mul(*s, x);
            let candidate = ms.checked_mul(&rx).expect("square matrices of one size");
            match &images[sx] {
                Some(existing) if *existing != candidate => {
                    return Err(RepError::InconsistentImages { element: sx })
                }
                Some(_) => {}
                None => {
                    images[sx] = Some(candidate);
                    queue.push_back(sx);
                }
            }
        }
    }
    let images = images
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(RepError::DoesNotGenerate)?;
    Ok(RationalRepresentation {
        group: group.clone(),
        dimension,
        images: Arc::new(images),
    })
}

/// The representation restricted to `h`, over the promoted group of `h`.
pub fn restrict_rep(rep: &RationalRepresentation, h: &Subgroup) -> Result<RationalRepresentation, RepError> {
    h.check_parent(&rep.group)?;
    let promoted = h.promote();
    let images = promoted.to_parent.iter().map(|&g| rep.images[g].clone()).collect();
    Ok(RationalRepresentation {
        group: promoted.group,
        dimension: rep.dimension,
        images: Arc::new(images),
    })
}

/// Basis of `V^K` in reduced form, with the rows on which it is the identity.
fn fixed_basis(rep: &RationalRepresentation, k: &Subgroup) -> Result<(QMatrix, Vec<usize>), RepError> {
    Ok(rep.averaging_projector(k)?.column_space())
}

/// A basis of `V^K` as the columns of a `dim V × dim V^K` matrix.
pub fn fixed_subspace(rep: &RationalRepresentation, k: &Subgroup) -> Result<QMatrix, RepError> {
    Ok(fixed_basis(rep, k)?.0)
}

/// A linear map commuting with a representation.
#[derive(Clone, Debug)]
pub struct EquivariantLinearMap {
    rep: RationalRepresentation,
    matrix: QMatrix,
}

impl EquivariantLinearMap {
    /// Checks equivariance against the images of the group's generators.
    pub fn new(rep: &RationalRepresentation, matrix: QMatrix) -> Result<Self, RepError> {
        if matrix.rows() != rep.dimension || matrix.cols() != rep.dimension {
            return Err(RepError::DimensionMismatch {
                expected: rep.dimension,
                found: matrix.rows().max(matrix.cols()),
            });
        }
        for (k, g) in rep.group.generator_indices().into_iter().enumerate() {
            let rg = &rep.images[g];
            if matrix.checked_mul(rg) != rg.checked_mul(&matrix) {
                return Err(RepError::NotEquivariant { generator: k });
            }
        }
        Ok(EquivariantLinearMap {
            rep: rep.clone(),
            matrix,
        })
    }

    pub fn identity(rep: &RationalRepresentation) -> Self {
        EquivariantLinearMap {
            rep: rep.clone(),
            matrix: QMatrix::identity(rep.dimension),
        }
    }

    pub fn scalar(rep: &RationalRepresentation, value: BigRational) -> Self {
        EquivariantLinearMap {
            rep: rep.clone(),
            matrix: QMatrix::scalar(rep.dimension, value),
        }
    }

    /// Averages an arbitrary matrix over the group, `(1/|G|) Σ ρ(g) A ρ(g⁻¹)`,
    /// which always yields an equivariant map.
    pub fn symmetrize(rep: &RationalRepresentation, matrix: &QMatrix) -> Result<Self, RepError> {
        let g = &rep.group;
        let n = rep.dimension;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(RepError::DimensionMismatch {
                expected: n,
                found: matrix.rows().max(matrix.cols()),
            });
        }
        let mut sum = QMatrix::zeros(n, n);
        for x in 0..g.order() {
            let term = rep.images[x]
                .checked_mul(matrix)
                .and_then(|m| m.checked_mul(&rep.images[g.inv(x)]))
                .expect("square matrices of one size");
            sum = sum.checked_add(&term).expect("same size");
        }
        Ok(EquivariantLinearMap {
            rep: rep.clone(),
            matrix: sum.scale(&BigRational::new(BigInt::one(), BigInt::from(g.order()))),
        })
    }

    pub fn rep(&self) -> &RationalRepresentation {
        &self.rep
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn determinant(&self) -> BigRational {
        self.matrix.determinant()
    }

    /// `id − L`
    pub fn identity_minus(&self) -> Self {
        EquivariantLinearMap {
            rep: self.rep.clone(),
            matrix: QMatrix::identity(self.rep.dimension)
                .checked_sub(&self.matrix)
                .expect("same size"),
        }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Result<Self, RepError> {
        if !same_group(&self.rep.group, &other.rep.group) || self.rep.images != other.rep.images {
            return Err(RepError::GroupMismatch);
        }
        Ok(EquivariantLinearMap {
            rep: self.rep.clone(),
            matrix: self.matrix.checked_mul(&other.matrix).expect("same size"),
        })
    }

    /// Matrix of `L` restricted to `V^K`, in the reduced basis of `V^K`.
    pub fn restrict_to_fixed(&self, k: &Subgroup) -> Result<QMatrix, RepError> {
        let (basis, pivots) = fixed_basis(&self.rep, k)?;
        // L maps V^K into V^K, and the basis is the identity on its pivot
        // rows, so coordinates are read off those rows.
        let image = self.matrix.checked_mul(&basis).expect("compatible shapes");
        Ok(image.select_rows(&pivots))
    }
}

/// `L^m` over the same representation.
pub fn matrix_power(l: &EquivariantLinearMap, m: u32) -> EquivariantLinearMap {
    EquivariantLinearMap {
        rep: l.rep.clone(),
        matrix: l.matrix.pow(m),
    }
}

/// Marks of `Deg_G(L)`: the sign of `det(L|V^K)` for each subgroup class `K`.
pub fn degree_marks(table: &Arc<TableOfMarks>, l: &EquivariantLinearMap) -> Result<MarkVector, RepError> {
    if !same_group(table.group(), &l.rep.group) {
        return Err(RepError::GroupMismatch);
    }
    if l.determinant().is_zero() {
        return Err(RepError::SingularMap);
    }
    let values = table
        .classes()
        .iter()
        .map(|k| {
            let sign = l.restrict_to_fixed(k)?.determinant_sign();
            debug_assert_ne!(sign, 0, "L is injective on every fixed space");
            Ok(BigInt::from(sign))
        })
        .collect::<Result<Vec<_>, RepError>>()?;
    Ok(MarkVector::new(table, values)?)
}

/// The equivariant degree `Deg_G(L) ∈ A(G)` of an invertible equivariant map.
pub fn equivariant_degree(table: &Arc<TableOfMarks>, l: &EquivariantLinearMap) -> Result<BurnsideElement, RepError> {
    let marks = degree_marks(table, l)?;
    Ok(from_marks(&marks).expect("sign vectors of equivariant maps satisfy the Burnside congruences"))
}
