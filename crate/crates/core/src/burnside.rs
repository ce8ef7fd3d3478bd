//! The Burnside ring `A(G)` of a finite group in the basis of transitive
//! G-sets `[G/H]`, one basis element per conjugacy class of subgroups.
//!
//! The table of marks embeds `A(G)` into integer vectors indexed by the
//! same classes; multiplication is carried out there, since marks are
//! multiplicative. All arithmetic is exact.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::group::{coset_action, same_group, weyl_group, FiniteGroup, GSetAction, GroupError, Subgroup, WeylGroup};
use crate::subgroups::{subgroup_classes, SubgroupClassList};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BurnsideError {
    #[error("marks are not the marks of any element of A(G): coefficient of class {class} is {value}")]
    NotInImage { class: usize, value: BigRational },
    #[error("elements belong to Burnside rings of different groups")]
    GroupMismatch,
    #[error("expected {expected} coordinates, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Table of marks: `marks[i][j]` is the number of cosets in `G/H_j` fixed
/// by `H_i`. Upper triangular in the canonical class order.
pub struct TableOfMarks {
    group: Arc<FiniteGroup>,
    classes: SubgroupClassList,
    marks: Vec<Vec<i64>>,
}

pub fn table_of_marks(group: &Arc<FiniteGroup>) -> Arc<TableOfMarks> {
    TableOfMarks::new(group)
}

impl TableOfMarks {
    pub fn new(group: &Arc<FiniteGroup>) -> Arc<Self> {
        let classes = subgroup_classes(group);
        let n = classes.len();
        let gens: Vec<Vec<usize>> = classes.iter().map(Subgroup::generators).collect();
        let mut marks = vec![vec![0i64; n]; n];
        for (j, hj) in classes.iter().enumerate() {
            let action = coset_action(hj).action;
            for (i, gi) in gens.iter().enumerate().take(j + 1) {
                marks[i][j] = (0..action.points())
                    .filter(|&p| gi.iter().all(|&s| action.act(s, p) == p))
                    .count() as i64;
            }
        }
        Arc::new(TableOfMarks {
            group: group.clone(),
            classes,
            marks,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn classes(&self) -> &SubgroupClassList {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn mark(&self, i: usize, j: usize) -> i64 {
        self.marks[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.marks
    }

    /// `|W(H_j)| = |N(H_j)| / |H_j|`, read off the diagonal.
    pub fn weyl_order(&self, j: usize) -> i64 {
        self.marks[j][j]
    }

    /// Short label used when printing: `e`, `G` or `H<index>`.
    pub fn class_label(&self, j: usize) -> String {
        if self.classes.representative(j).order() == 1 {
            "e".to_string()
        } else if j + 1 == self.len() {
            "G".to_string()
        } else {
            format!("H{j}")
        }
    }

    pub fn group_label(&self) -> &'static str {
        if self.group.order() == 1 {
            "e"
        } else {
            "G"
        }
    }

    fn check_len(&self, found: usize) -> Result<(), BurnsideError> {
        if found == self.len() {
            Ok(())
        } else {
            Err(BurnsideError::LengthMismatch {
                expected: self.len(),
                found,
            })
        }
    }

    /// Solves `marks · c = v` over `ℚ` by back substitution from the largest
    /// class down.
    fn solve(&self, values: &[BigRational]) -> Vec<BigRational> {
        let n = self.len();
        let mut c = vec![BigRational::zero(); n];
        for i in (0..n).rev() {
            let mut rhs = values[i].clone();
            for (cj, &m) in c.iter().zip(&self.marks[i]).skip(i + 1) {
                if m != 0 {
                    rhs -= cj * BigInt::from(m);
                }
            }
            c[i] = rhs / BigInt::from(self.marks[i][i]);
        }
        c
    }
}

impl fmt::Debug for TableOfMarks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TableOfMarks")
            .field("order", &self.group.order())
            .field("marks", &self.marks)
            .finish()
    }
}

fn same_table(a: &Arc<TableOfMarks>, b: &Arc<TableOfMarks>) -> bool {
    Arc::ptr_eq(a, b) || same_group(&a.group, &b.group)
}

/// An element `Σ c_j [G/H_j]` of `A(G)`.
#[derive(Clone)]
pub struct BurnsideElement {
    table: Arc<TableOfMarks>,
    coeffs: Vec<BigInt>,
}

/// A vector of marks `(φ_{H_i}(x))_i`, indexed by subgroup classes.
#[derive(Clone)]
pub struct MarkVector {
    table: Arc<TableOfMarks>,
    values: Vec<BigInt>,
}

impl MarkVector {
    pub fn new(table: &Arc<TableOfMarks>, values: Vec<BigInt>) -> Result<Self, BurnsideError> {
        table.check_len(values.len())?;
        Ok(MarkVector {
            table: table.clone(),
            values,
        })
    }

    pub fn from_i64(table: &Arc<TableOfMarks>, values: &[i64]) -> Result<Self, BurnsideError> {
        Self::new(table, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn table(&self) -> &Arc<TableOfMarks> {
        &self.table
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.values[i]
    }

    pub fn pointwise_mul(&self, other: &MarkVector) -> Result<MarkVector, BurnsideError> {
        if !same_table(&self.table, &other.table) {
            return Err(BurnsideError::GroupMismatch);
        }
        Ok(MarkVector {
            table: self.table.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }
}

impl PartialEq for MarkVector {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.values == other.values
    }
}

impl Eq for MarkVector {}

impl fmt::Debug for MarkVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MarkVector{:?}", self.values)
    }
}

impl fmt::Display for MarkVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(signed_text).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Integer text with a typographic minus sign.
fn signed_text<T: fmt::Display + Signed>(x: &T) -> String {
    if x.is_negative() {
        format!("−{}", x.abs())
    } else {
        x.to_string()
    }
}

/// Solves for the unique element with the given marks.
pub fn from_marks(v: &MarkVector) -> Result<BurnsideElement, BurnsideError> {
    let rational: Vec<BigRational> = v.values.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    let c = v.table.solve(&rational);
    let coeffs = c
        .into_iter()
        .enumerate()
        .map(|(class, value)| {
            if value.is_integer() {
                Ok(value.to_integer())
            } else {
                Err(BurnsideError::NotInImage { class, value })
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BurnsideElement {
        table: v.table.clone(),
        coeffs,
    })
}

impl BurnsideElement {
    pub fn new(table: &Arc<TableOfMarks>, coeffs: Vec<BigInt>) -> Result<Self, BurnsideError> {
        table.check_len(coeffs.len())?;
        Ok(BurnsideElement {
            table: table.clone(),
            coeffs,
        })
    }

    pub fn from_i64(table: &Arc<TableOfMarks>, coeffs: &[i64]) -> Result<Self, BurnsideError> {
        Self::new(table, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(table: &Arc<TableOfMarks>) -> Self {
        BurnsideElement {
            table: table.clone(),
            coeffs: vec![BigInt::zero(); table.len()],
        }
    }

    /// The basis element `[G/H_j]`.
    pub fn basis(table: &Arc<TableOfMarks>, j: usize) -> Self {
        let mut x = Self::zero(table);
        x.coeffs[j] = BigInt::one();
        x
    }

    /// `[G/G]`, the unit.
    pub fn one(table: &Arc<TableOfMarks>) -> Self {
        Self::basis(table, table.len() - 1)
    }

    pub fn table(&self) -> &Arc<TableOfMarks> {
        &self.table
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.table.group
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &BigInt {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn marks(&self) -> MarkVector {
        let n = self.table.len();
        let values = (0..n)
            .map(|i| {
                (i..n)
                    .filter(|&j| self.table.marks[i][j] != 0 && !self.coeffs[j].is_zero())
                    .map(|j| &self.coeffs[j] * self.table.marks[i][j])
                    .sum()
            })
            .collect();
        MarkVector {
            table: self.table.clone(),
            values,
        }
    }

    /// Mark of the element at class `i`.
    pub fn mark_at(&self, i: usize) -> BigInt {
        (i..self.table.len())
            .filter(|&j| self.table.marks[i][j] != 0)
            .map(|j| &self.coeffs[j] * self.table.marks[i][j])
            .sum()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, BurnsideError> {
        if !same_table(&self.table, &other.table) {
            return Err(BurnsideError::GroupMismatch);
        }
        Ok(BurnsideElement {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Product through marks. A non-integral result would mean the table of
    /// marks is wrong, so it panics rather than returning an error.
    pub fn try_mul(&self, other: &Self) -> Result<Self, BurnsideError> {
        let m = self.marks().pointwise_mul(&other.marks())?;
        Ok(from_marks(&m).expect("products of G-sets have integral marks"))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        BurnsideElement {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn to_rational(&self) -> RationalBurnsideElement {
        RationalBurnsideElement {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        }
    }
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.coeffs == other.coeffs
    }
}

impl Eq for BurnsideElement {}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BurnsideElement({self})")
    }
}

/// Writes `Σ c_j·[G/H_j]` with the largest classes first.
fn write_combination<T>(f: &mut fmt::Formatter<'_>, table: &TableOfMarks, coeffs: &[T]) -> fmt::Result
where
    T: fmt::Display + Signed + Zero + One + PartialEq,
{
    let mut first = true;
    for j in (0..coeffs.len()).rev() {
        let c = &coeffs[j];
        if c.is_zero() {
            continue;
        }
        let basis = format!("[{}/{}]", table.group_label(), table.class_label(j));
        let magnitude = c.abs();
        let term = if magnitude.is_one() {
            basis
        } else {
            format!("{magnitude}·{basis}")
        };
        match (first, c.is_negative()) {
            (true, false) => write!(f, "{term}")?,
            (true, true) => write!(f, "−{term}")?,
            (false, false) => write!(f, " + {term}")?,
            (false, true) => write!(f, " − {term}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.table, &self.coeffs)
    }
}

impl Add for &BurnsideElement {
    type Output = BurnsideElement;
    fn add(self, rhs: &BurnsideElement) -> BurnsideElement {
        self.try_add(rhs).expect("Burnside ring mismatch")
    }
}

impl Add for BurnsideElement {
    type Output = BurnsideElement;
    fn add(self, rhs: BurnsideElement) -> BurnsideElement {
        &self + &rhs
    }
}

impl AddAssign<&BurnsideElement> for BurnsideElement {
    fn add_assign(&mut self, rhs: &BurnsideElement) {
        assert!(same_table(&self.table, &rhs.table), "Burnside ring mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        BurnsideElement {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        -&self
    }
}

impl Sub for &BurnsideElement {
    type Output = BurnsideElement;
    fn sub(self, rhs: &BurnsideElement) -> BurnsideElement {
        self + &(-rhs)
    }
}

impl Sub for BurnsideElement {
    type Output = BurnsideElement;
    fn sub(self, rhs: BurnsideElement) -> BurnsideElement {
        &self - &rhs
    }
}

impl Mul for &BurnsideElement {
    type Output = BurnsideElement;
    fn mul(self, rhs: &BurnsideElement) -> BurnsideElement {
        self.try_mul(rhs).expect("Burnside ring mismatch")
    }
}

impl Mul for BurnsideElement {
    type Output = BurnsideElement;
    fn mul(self, rhs: BurnsideElement) -> BurnsideElement {
        &self * &rhs
    }
}

/// Decomposes a finite G-set into orbits `G/Stab(p)`.
pub fn gset_to_element(table: &Arc<TableOfMarks>, action: &GSetAction) -> Result<BurnsideElement, BurnsideError> {
    if !same_group(&table.group, action.group()) {
        return Err(BurnsideError::GroupMismatch);
    }
    let mut x = BurnsideElement::zero(table);
    for orbit in action.orbits() {
        let stab = action.stabilizer(orbit[0]);
        x.coeffs[table.classes.class_of(&stab)?] += 1;
    }
    Ok(x)
}

/// Induction `A(H) → A(G)`, `[H/K] ↦ [G/K]`. `x` must live in the Burnside
/// ring of the promoted group of `h`.
pub fn induce(table: &Arc<TableOfMarks>, h: &Subgroup, x: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
    h.check_parent(&table.group)?;
    let promoted = h.promote();
    if !same_group(&promoted.group, x.group()) {
        return Err(BurnsideError::GroupMismatch);
    }
    let mut out = BurnsideElement::zero(table);
    for (j, c) in x.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = promoted.subgroup_to_parent(x.table.classes.representative(j));
        out.coeffs[table.classes.class_of(&k)?] += c;
    }
    Ok(out)
}

/// Restriction `A(G) → A(H)`: each `G/K` viewed as an `H`-set. The target
/// table must be the table of marks of the promoted group of `h`.
pub fn restrict(
    target: &Arc<TableOfMarks>,
    h: &Subgroup,
    x: &BurnsideElement,
) -> Result<BurnsideElement, BurnsideError> {
    h.check_parent(x.group())?;
    let promoted = h.promote();
    if !same_group(&promoted.group, &target.group) {
        return Err(BurnsideError::GroupMismatch);
    }
    let mut out = BurnsideElement::zero(target);
    for (j, c) in x.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let action = coset_action(x.table.classes.representative(j)).action.restrict_to(&promoted);
        out += &gset_to_element(target, &action)?.scale(c);
    }
    Ok(out)
}

/// Precomputed data for the fixed point homomorphism `η_H : A(G) → A(W(H))`.
#[derive(Debug, Clone)]
pub struct FixedPointMap {
    pub weyl: WeylGroup,
    pub target: Arc<TableOfMarks>,
    // image of each basis element [G/H_j]
    images: Vec<BurnsideElement>,
}

impl FixedPointMap {
    pub fn new(table: &Arc<TableOfMarks>, h: &Subgroup) -> Result<Self, BurnsideError> {
        h.check_parent(&table.group)?;
        let weyl = weyl_group(h);
        let target = TableOfMarks::new(&weyl.group);
        let images = table
            .classes
            .iter()
            .map(|k| {
                let ca = coset_action(k);
                let fixed = ca.action.fixed_points(h);
                let mut slot = vec![usize::MAX; ca.action.points()];
                for (i, &p) in fixed.iter().enumerate() {
                    slot[p] = i;
                }
                let images = (0..weyl.group.order())
                    .map(|w| {
                        let n = weyl.lift(w);
                        fixed.iter().map(|&p| slot[ca.action.act(n, p)]).collect()
                    })
                    .collect();
                let action = GSetAction::new_unchecked(weyl.group.clone(), fixed.len(), images);
                gset_to_element(&target, &action)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FixedPointMap { weyl, target, images })
    }

    pub fn apply(&self, x: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
        if x.table.len() != self.images.len() {
            return Err(BurnsideError::GroupMismatch);
        }
        let mut out = BurnsideElement::zero(&self.target);
        for (c, img) in x.coeffs.iter().zip(&self.images) {
            if !c.is_zero() {
                out += &img.scale(c);
            }
        }
        Ok(out)
    }

    pub fn apply_rational(&self, x: &RationalBurnsideElement) -> Result<RationalBurnsideElement, BurnsideError> {
        if x.table.len() != self.images.len() {
            return Err(BurnsideError::GroupMismatch);
        }
        let mut coeffs = vec![BigRational::zero(); self.target.len()];
        for (c, img) in x.coeffs.iter().zip(&self.images) {
            for (slot, k) in coeffs.iter_mut().zip(&img.coeffs) {
                *slot += c * k;
            }
        }
        Ok(RationalBurnsideElement {
            table: self.target.clone(),
            coeffs,
        })
    }
}

/// `η_H(x)`: the `W(H)`-set of `H`-fixed points.
pub fn eta(h: &Subgroup, x: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
    FixedPointMap::new(&x.table, h)?.apply(x)
}

/// An element of `A(G) ⊗ ℚ`.
#[derive(Clone)]
pub struct RationalBurnsideElement {
    table: Arc<TableOfMarks>,
    coeffs: Vec<BigRational>,
}

impl RationalBurnsideElement {
    pub fn new(table: &Arc<TableOfMarks>, coeffs: Vec<BigRational>) -> Result<Self, BurnsideError> {
        table.check_len(coeffs.len())?;
        Ok(RationalBurnsideElement {
            table: table.clone(),
            coeffs,
        })
    }

    /// Builds from `(numerator, denominator)` pairs, rejecting zero denominators.
    pub fn from_fractions(table: &Arc<TableOfMarks>, parts: &[(BigInt, BigInt)]) -> Result<Self, BurnsideError> {
        let coeffs = parts
            .iter()
            .map(|(n, d)| {
                if d.is_zero() {
                    Err(BurnsideError::ZeroDenominator)
                } else {
                    Ok(BigRational::new(n.clone(), d.clone()))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(table, coeffs)
    }

    pub fn zero(table: &Arc<TableOfMarks>) -> Self {
        RationalBurnsideElement {
            table: table.clone(),
            coeffs: vec![BigRational::zero(); table.len()],
        }
    }

    /// Unique rational element with the given rational marks.
    pub fn from_marks(table: &Arc<TableOfMarks>, marks: &[BigRational]) -> Result<Self, BurnsideError> {
        table.check_len(marks.len())?;
        Ok(RationalBurnsideElement {
            table: table.clone(),
            coeffs: table.solve(marks),
        })
    }

    pub fn table(&self) -> &Arc<TableOfMarks> {
        &self.table
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn to_integral(&self) -> Option<BurnsideElement> {
        self.is_integral().then(|| BurnsideElement {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(BigRational::to_integer).collect(),
        })
    }

    pub fn marks(&self) -> Vec<BigRational> {
        let n = self.table.len();
        (0..n)
            .map(|i| {
                (i..n)
                    .filter(|&j| self.table.marks[i][j] != 0)
                    .map(|j| &self.coeffs[j] * BigInt::from(self.table.marks[i][j]))
                    .sum()
            })
            .collect()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, BurnsideError> {
        if !same_table(&self.table, &other.table) {
            return Err(BurnsideError::GroupMismatch);
        }
        Ok(RationalBurnsideElement {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        RationalBurnsideElement {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }
}

pub fn rational_add(
    x: &RationalBurnsideElement,
    y: &RationalBurnsideElement,
) -> Result<RationalBurnsideElement, BurnsideError> {
    x.try_add(y)
}

pub fn rational_scale(q: &BigRational, x: &RationalBurnsideElement) -> RationalBurnsideElement {
    x.scale(q)
}

pub fn rational_eta(h: &Subgroup, x: &RationalBurnsideElement) -> Result<RationalBurnsideElement, BurnsideError> {
    FixedPointMap::new(&x.table, h)?.apply_rational(x)
}

impl PartialEq for RationalBurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.coeffs == other.coeffs
    }
}

impl Eq for RationalBurnsideElement {}

impl fmt::Debug for RationalBurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalBurnsideElement({self})")
    }
}

impl fmt::Display for RationalBurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.table, &self.coeffs)
    }
}

impl Add for &RationalBurnsideElement {
    type Output = RationalBurnsideElement;
    fn add(self, rhs: &RationalBurnsideElement) -> RationalBurnsideElement {
        self.try_add(rhs).expect("Burnside ring mismatch")
    }
}

impl Neg for &RationalBurnsideElement {
    type Output = RationalBurnsideElement;
    fn neg(self) -> RationalBurnsideElement {
        self.scale(&-BigRational::one())
    }
}
