//! Finite permutation groups, subgroups, normalizers, Weyl groups and coset
//! actions.
//!
//! Elements of a [`FiniteGroup`] are addressed by their index in the
//! canonical (lexicographic) element list. The identity is always index 0,
//! since the identity image list `0, 1, …, n−1` is lexicographically least.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::perm::Permutation;

/// Default bound on the order of a generated group.
pub const DEFAULT_ORDER_CAP: usize = 200;
/// Largest cap a caller may request.
pub const HARD_ORDER_CAP: usize = 2000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("image list {0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds the cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("requested order cap {cap} is above the hard maximum {HARD_ORDER_CAP}")]
    CapTooLarge { cap: usize },
    #[error("permutation {0} is not an element of the group")]
    NotInGroup(Permutation),
    #[error("element indices do not form a subgroup")]
    NotASubgroup,
    #[error("subgroup belongs to a different group")]
    GroupMismatch,
    #[error("invalid group action: {0}")]
    InvalidAction(String),
}

/// A finite group of permutations, closed and canonically ordered.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    // table[a * order + b] = index of elements[a] ∘ elements[b]
    table: Vec<u32>,
    inverse: Vec<usize>,
    // elements[x] = generators[k] ∘ elements[y] for words[x] = Some((k, y))
    words: Vec<Option<(usize, usize)>>,
}

impl FiniteGroup {
    /// Closure of `generators` with the default order cap.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Arc<Self>, GroupError> {
        Self::generate_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn generate_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Arc<Self>, GroupError> {
        if cap > HARD_ORDER_CAP {
            return Err(GroupError::CapTooLarge { cap });
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }

        let identity = Permutation::identity(degree);
        let mut found: HashMap<Permutation, usize> = HashMap::new();
        let mut discovered = vec![identity.clone()];
        let mut words = vec![None];
        found.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(y) = queue.pop_front() {
            for (k, s) in generators.iter().enumerate() {
                let x = s.compose_unchecked(&discovered[y]);
                if found.contains_key(&x) {
                    continue;
                }
                if discovered.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                found.insert(x.clone(), discovered.len());
                queue.push_back(discovered.len());
                discovered.push(x);
                words.push(Some((k, y)));
            }
        }

        let mut order: Vec<usize> = (0..discovered.len()).collect();
        order.sort_by(|&a, &b| discovered[a].cmp(&discovered[b]));
        let mut rank = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let sorted_words = order
            .iter()
            .map(|&old| words[old].map(|(k, y)| (k, rank[y])))
            .collect();
        let elements: Vec<Permutation> = order.iter().map(|&old| discovered[old].clone()).collect();
        Ok(Arc::new(Self::from_sorted(degree, generators, elements, sorted_words)))
    }

    fn from_sorted(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
        words: Vec<Option<(usize, usize)>>,
    ) -> Self {
        let n = elements.len();
        let index: HashMap<Permutation, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let ab = elements[a].compose_unchecked(&elements[b]);
                table[a * n + b] = index[&ab] as u32;
            }
        }
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == 0).expect("closed group"))
            .collect();
        FiniteGroup {
            degree,
            generators,
            elements,
            index,
            table,
            inverse,
            words,
        }
    }

    /// The symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Result<Arc<Self>, GroupError> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
        }
        if n >= 3 {
            let cycle: Vec<usize> = (0..n).collect();
            gens.push(Permutation::from_cycles(n, &[&cycle])?);
        }
        Self::generate_with_cap(n.max(1), gens, HARD_ORDER_CAP)
    }

    /// The cyclic group of order `n` acting regularly on `n` points.
    pub fn cyclic(n: usize) -> Result<Arc<Self>, GroupError> {
        let n = n.max(1);
        let cycle: Vec<usize> = (0..n).collect();
        let gens = if n > 1 {
            vec![Permutation::from_cycles(n, &[&cycle])?]
        } else {
            vec![]
        };
        Self::generate_with_cap(n, gens, HARD_ORDER_CAP)
    }

    /// The dihedral group of order `2n` acting on the vertices of an `n`-gon.
    pub fn dihedral(n: usize) -> Result<Arc<Self>, GroupError> {
        let rotation = Permutation::new((0..n).map(|i| (i + 1) % n).collect())?;
        let reflection = Permutation::new((0..n).map(|i| (n - i) % n).collect())?;
        Self::generate_with_cap(n, vec![rotation, reflection], HARD_ORDER_CAP)
    }

    /// The alternating group on `n ≥ 3` points.
    pub fn alternating(n: usize) -> Result<Arc<Self>, GroupError> {
        let gens = (2..n)
            .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]))
            .collect::<Result<Vec<_>, _>>()?;
        Self::generate_with_cap(n.max(1), gens, HARD_ORDER_CAP)
    }

    pub fn trivial() -> Arc<Self> {
        Self::generate(1, vec![]).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element indices of the generators, in generator order.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    /// The factorization `elements[x] = generators[k] ∘ elements[y]` found
    /// during closure, or `None` for the identity.
    pub fn word_step(&self, x: usize) -> Option<(usize, usize)> {
        self.words[x]
    }

    /// Indices of all elements of the subgroup generated by `gens`.
    pub fn generated_members(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut members = vec![0];
        let mut cursor = 0;
        while cursor < members.len() {
            let x = members[cursor];
            cursor += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || (self.degree == other.degree && self.elements == other.elements)
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A subgroup, stored as the sorted element indices of its parent.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
}

impl Subgroup {
    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        Subgroup {
            members: (0..parent.order()).collect(),
            parent: parent.clone(),
        }
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Self {
        Subgroup {
            members: vec![0],
            parent: parent.clone(),
        }
    }

    pub fn generated_by(parent: &Arc<FiniteGroup>, gens: &[usize]) -> Self {
        Subgroup {
            members: parent.generated_members(gens),
            parent: parent.clone(),
        }
    }

    pub fn from_permutations(
        parent: &Arc<FiniteGroup>,
        gens: &[Permutation],
    ) -> Result<Self, GroupError> {
        let idx = gens
            .iter()
            .map(|g| parent.index_of(g).ok_or_else(|| GroupError::NotInGroup(g.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::generated_by(parent, &idx))
    }

    /// Validates that `members` is closed under the group law.
    pub fn from_members(parent: &Arc<FiniteGroup>, mut members: Vec<usize>) -> Result<Self, GroupError> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) || members.iter().any(|&m| m >= parent.order()) {
            return Err(GroupError::NotASubgroup);
        }
        let sub = Subgroup {
            parent: parent.clone(),
            members,
        };
        for &a in &sub.members {
            if !sub.contains(parent.inv(a)) {
                return Err(GroupError::NotASubgroup);
            }
            for &b in &sub.members {
                if !sub.contains(parent.mul(a, b)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(sub)
    }

    pub(crate) fn from_sorted_unchecked(parent: &Arc<FiniteGroup>, members: Vec<usize>) -> Self {
        Subgroup {
            parent: parent.clone(),
            members,
        }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// `g H g⁻¹`
    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&h| self.parent.conjugate(g, h)).collect();
        members.sort_unstable();
        Subgroup {
            parent: self.parent.clone(),
            members,
        }
    }

    /// A small generating set, chosen greedily in member order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        for &m in &self.members {
            if span.binary_search(&m).is_err() {
                gens.push(m);
                span = self.parent.generated_members(&gens);
                if span.len() == self.members.len() {
                    break;
                }
            }
        }
        gens
    }

    pub(crate) fn check_parent(&self, group: &Arc<FiniteGroup>) -> Result<(), GroupError> {
        if same_group(&self.parent, group) {
            Ok(())
        } else {
            Err(GroupError::GroupMismatch)
        }
    }

    /// Realizes the subgroup as a standalone permutation group through its
    /// left-regular action on its own members.
    pub fn promote(&self) -> PromotedSubgroup {
        let g = &self.parent;
        let pos: HashMap<usize, usize> = self.members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let regular = |h: usize| {
            let images = self.members.iter().map(|&m| pos[&g.mul(h, m)]).collect();
            Permutation::new(images).expect("left translation is a bijection")
        };
        let gens: Vec<Permutation> = self.generators().into_iter().map(regular).collect();
        let group = FiniteGroup::generate_with_cap(self.order(), gens, HARD_ORDER_CAP)
            .expect("subgroup order is below the hard cap");
        let mut to_parent = vec![0; self.order()];
        for &m in &self.members {
            let k = group.index_of(&regular(m)).expect("regular image lies in the promoted group");
            to_parent[k] = m;
        }
        let from_parent = to_parent.iter().enumerate().map(|(k, &m)| (m, k)).collect();
        PromotedSubgroup {
            group,
            subgroup: self.clone(),
            to_parent,
            from_parent,
        }
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_group(&self.parent, &other.parent)
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("members", &self.members)
            .finish()
    }
}

/// A subgroup re-realized as its own [`FiniteGroup`], with the index maps
/// between the two element numberings.
#[derive(Clone, Debug)]
pub struct PromotedSubgroup {
    pub group: Arc<FiniteGroup>,
    pub subgroup: Subgroup,
    /// promoted element index → parent element index
    pub to_parent: Vec<usize>,
    pub from_parent: HashMap<usize, usize>,
}

impl PromotedSubgroup {
    /// Maps a subgroup of the promoted group into the parent group.
    pub fn subgroup_to_parent(&self, k: &Subgroup) -> Subgroup {
        let mut members: Vec<usize> = k.members().iter().map(|&i| self.to_parent[i]).collect();
        members.sort_unstable();
        Subgroup::from_sorted_unchecked(self.subgroup.parent(), members)
    }

    /// Maps a subgroup of the parent contained in the promoted subgroup into
    /// the promoted group.
    pub fn subgroup_from_parent(&self, k: &Subgroup) -> Result<Subgroup, GroupError> {
        let members = k
            .members()
            .iter()
            .map(|m| self.from_parent.get(m).copied().ok_or(GroupError::NotASubgroup))
            .collect::<Result<Vec<_>, _>>()?;
        let mut members = members;
        members.sort_unstable();
        Ok(Subgroup::from_sorted_unchecked(&self.group, members))
    }
}

/// `N(H) = { g : g H g⁻¹ ⊆ H }`
pub fn normalizer(h: &Subgroup) -> Subgroup {
    let g = h.parent();
    let gens = h.generators();
    let members = (0..g.order())
        .filter(|&x| gens.iter().all(|&s| h.contains(g.conjugate(x, s))))
        .collect();
    Subgroup::from_sorted_unchecked(g, members)
}

/// True iff some conjugate of `k` lies in `h`.
pub fn is_subconjugate(k: &Subgroup, h: &Subgroup) -> bool {
    if !h.order().is_multiple_of(k.order()) {
        return false;
    }
    let g = k.parent();
    let gens = k.generators();
    (0..g.order()).any(|x| gens.iter().all(|&s| h.contains(g.conjugate(x, s))))
}

/// Returns `Some(x)` with `x k x⁻¹ = h` when the two subgroups are conjugate.
pub fn conjugating_element(k: &Subgroup, h: &Subgroup) -> Option<usize> {
    if k.order() != h.order() {
        return None;
    }
    let g = k.parent();
    let gens = k.generators();
    (0..g.order()).find(|&x| gens.iter().all(|&s| h.contains(g.conjugate(x, s))))
}

/// A finite G-set: `images[g][p]` is the image of point `p` under element `g`.
#[derive(Clone, Debug)]
pub struct GSetAction {
    group: Arc<FiniteGroup>,
    points: usize,
    images: Vec<Vec<usize>>,
}

impl GSetAction {
    /// Checks that every image list is a bijection and that the assignment
    /// is a homomorphism.
    pub fn new(group: Arc<FiniteGroup>, points: usize, images: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        if images.len() != group.order() {
            return Err(GroupError::InvalidAction(format!(
                "{} image lists for a group of order {}",
                images.len(),
                group.order()
            )));
        }
        for row in &images {
            if row.len() != points {
                return Err(GroupError::DegreeMismatch {
                    expected: points,
                    found: row.len(),
                });
            }
            Permutation::new(row.clone())?;
        }
        if images[0].iter().enumerate().any(|(i, &j)| i != j) {
            return Err(GroupError::InvalidAction("identity acts nontrivially".into()));
        }
        for s in group.generator_indices() {
            for x in 0..group.order() {
                let sx = group.mul(s, x);
                if (0..points).any(|p| images[sx][p] != images[s][images[x][p]]) {
                    return Err(GroupError::InvalidAction(format!("not a homomorphism at element {sx}")));
                }
            }
        }
        Ok(GSetAction { group, points, images })
    }

    pub(crate) fn new_unchecked(group: Arc<FiniteGroup>, points: usize, images: Vec<Vec<usize>>) -> Self {
        GSetAction { group, points, images }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.points
    }

    #[inline]
    pub fn act(&self, g: usize, p: usize) -> usize {
        self.images[g][p]
    }

    /// Orbits as sorted point lists, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.points];
        let mut out = Vec::new();
        for start in 0..self.points {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> = Vec::new();
            for g in 0..self.group.order() {
                let q = self.images[g][start];
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn stabilizer(&self, p: usize) -> Subgroup {
        let members = (0..self.group.order()).filter(|&g| self.images[g][p] == p).collect();
        Subgroup::from_sorted_unchecked(&self.group, members)
    }

    /// Points fixed by every element of `h`.
    pub fn fixed_points(&self, h: &Subgroup) -> Vec<usize> {
        let gens = h.generators();
        (0..self.points)
            .filter(|&p| gens.iter().all(|&s| self.images[s][p] == p))
            .collect()
    }

    /// The same set viewed as a `K`-set for a subgroup `K`, realized over the
    /// promoted group of `K`.
    pub fn restrict_to(&self, k: &PromotedSubgroup) -> GSetAction {
        let images = k.to_parent.iter().map(|&g| self.images[g].clone()).collect();
        GSetAction::new_unchecked(k.group.clone(), self.points, images)
    }
}

/// The left action of `G` on the cosets `gH`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    /// Each coset as sorted element indices; cosets are ordered by least element.
    pub cosets: Vec<Vec<usize>>,
    /// element index → coset number
    pub coset_of: Vec<usize>,
    pub action: GSetAction,
}

pub fn coset_action(h: &Subgroup) -> CosetAction {
    let g = h.parent();
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets = Vec::new();
    // scanning in index order keys every coset by its least element
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = h.members().iter().map(|&m| g.mul(x, m)).collect();
        coset.sort_unstable();
        for &y in &coset {
            coset_of[y] = cosets.len();
        }
        cosets.push(coset);
    }
    let images = (0..n)
        .map(|a| cosets.iter().map(|c| coset_of[g.mul(a, c[0])]).collect())
        .collect();
    CosetAction {
        action: GSetAction::new_unchecked(g.clone(), cosets.len(), images),
        cosets,
        coset_of,
    }
}

/// `W(H) = N(H)/H`, realized by left translation on the cosets of `H` in `N(H)`.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub group: Arc<FiniteGroup>,
    pub subgroup: Subgroup,
    pub normalizer: Subgroup,
    /// parent element index → Weyl element index, defined on `N(H)`
    quotient: Vec<Option<usize>>,
    /// Weyl element index → one preimage in `N(H)`
    lift: Vec<usize>,
}

impl WeylGroup {
    pub fn quotient(&self, g: usize) -> Option<usize> {
        self.quotient[g]
    }

    pub fn lift(&self, w: usize) -> usize {
        self.lift[w]
    }
}

pub fn weyl_group(h: &Subgroup) -> WeylGroup {
    let g = h.parent();
    let norm = normalizer(h);
    let mut coset_of: HashMap<usize, usize> = HashMap::new();
    let mut reps = Vec::new();
    for &x in norm.members() {
        if coset_of.contains_key(&x) {
            continue;
        }
        for &m in h.members() {
            coset_of.insert(g.mul(x, m), reps.len());
        }
        reps.push(x);
    }
    let translation = |n: usize| {
        let images = reps.iter().map(|&r| coset_of[&g.mul(n, r)]).collect();
        Permutation::new(images).expect("translation permutes cosets")
    };
    let gens = norm.generators().into_iter().map(translation).collect();
    let group = FiniteGroup::generate_with_cap(reps.len(), gens, HARD_ORDER_CAP)
        .expect("Weyl group order is below the hard cap");
    let mut quotient = vec![None; g.order()];
    let mut lift = vec![usize::MAX; group.order()];
    for &n in norm.members() {
        let w = group.index_of(&translation(n)).expect("translation lies in the Weyl group");
        quotient[n] = Some(w);
        if lift[w] == usize::MAX {
            lift[w] = n;
        }
    }
    WeylGroup {
        group,
        subgroup: h.clone(),
        normalizer: norm,
        quotient,
        lift,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::symmetric(3).unwrap()
    }

    #[test]
    fn closure_examples() {
        let c2 = FiniteGroup::generate(2, vec![Permutation::from_cycles(2, &[&[0, 1]]).unwrap()]).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(s3().order(), 6);
        let t = FiniteGroup::generate(1, vec![]).unwrap();
        assert_eq!(t.order(), 1);
        assert!(t.element(0).is_identity());
    }

    #[test]
    fn elements_are_sorted_and_identity_first() {
        let g = FiniteGroup::symmetric(4).unwrap();
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(g.element(0).is_identity());
        assert_eq!(g.generators().len(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = FiniteGroup::symmetric(6).unwrap().generators().to_vec();
        assert_eq!(
            FiniteGroup::generate(6, gens.clone()).unwrap_err(),
            GroupError::CapExceeded { cap: DEFAULT_ORDER_CAP }
        );
        assert_eq!(FiniteGroup::generate_with_cap(6, gens.clone(), 720).unwrap().order(), 720);
        assert!(matches!(
            FiniteGroup::generate_with_cap(6, gens, 5000),
            Err(GroupError::CapTooLarge { .. })
        ));
    }

    #[test]
    fn words_reconstruct_elements() {
        let g = FiniteGroup::dihedral(4).unwrap();
        for x in 0..g.order() {
            match g.word_step(x) {
                None => assert_eq!(x, 0),
                Some((k, y)) => {
                    assert_eq!(g.generators()[k].compose_unchecked(g.element(y)), *g.element(x))
                }
            }
        }
    }

    #[test]
    fn normalizer_examples() {
        let g = s3();
        assert_eq!(normalizer(&Subgroup::whole(&g)), Subgroup::whole(&g));
        assert_eq!(normalizer(&Subgroup::trivial(&g)), Subgroup::whole(&g));
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let h = Subgroup::from_permutations(&g, &[t]).unwrap();
        assert_eq!(normalizer(&h), h);
    }

    #[test]
    fn weyl_examples() {
        let g = s3();
        assert_eq!(weyl_group(&Subgroup::whole(&g)).group.order(), 1);
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let h = Subgroup::from_permutations(&g, &[t]).unwrap();
        assert_eq!(weyl_group(&h).group.order(), 1);

        let c4 = FiniteGroup::cyclic(4).unwrap();
        let r2 = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        let h = Subgroup::from_permutations(&c4, &[r2]).unwrap();
        let w = weyl_group(&h);
        assert_eq!(w.group.order(), 2);
        // quotient map is a homomorphism on N(H)
        for &a in w.normalizer.members() {
            for &b in w.normalizer.members() {
                let ab = c4.mul(a, b);
                assert_eq!(
                    w.quotient(ab),
                    Some(w.group.mul(w.quotient(a).unwrap(), w.quotient(b).unwrap()))
                );
            }
        }
    }

    #[test]
    fn subconjugacy_examples() {
        let g = FiniteGroup::symmetric(4).unwrap();
        let e = Subgroup::trivial(&g);
        let all = Subgroup::whole(&g);
        let c3 = Subgroup::from_permutations(&g, &[Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap()]).unwrap();
        let c2 = Subgroup::from_permutations(&g, &[Permutation::from_cycles(4, &[&[2, 3]]).unwrap()]).unwrap();
        let v4 = Subgroup::from_permutations(
            &g,
            &[
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(is_subconjugate(&e, &c3));
        assert!(is_subconjugate(&c3, &c3));
        assert!(is_subconjugate(&c3, &all));
        assert!(!is_subconjugate(&c3, &v4));
        // a transposition is not conjugate into the normal Klein group
        assert!(!is_subconjugate(&c2, &v4));
    }

    #[test]
    fn coset_action_examples() {
        let g = s3();
        assert_eq!(coset_action(&Subgroup::whole(&g)).action.points(), 1);
        assert_eq!(coset_action(&Subgroup::trivial(&g)).action.points(), 6);
        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let h = Subgroup::from_permutations(&g, &[t]).unwrap();
        let ca = coset_action(&h);
        assert_eq!(ca.action.points(), 3);
        // validated constructor accepts the table
        GSetAction::new(g.clone(), 3, ca.action.images.clone()).unwrap();
        assert_eq!(ca.action.orbits().len(), 1);
        assert_eq!(ca.action.stabilizer(0), h);
    }

    #[test]
    fn promotion_preserves_member_order() {
        let g = FiniteGroup::symmetric(4).unwrap();
        let v4 = Subgroup::from_permutations(
            &g,
            &[
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let p = v4.promote();
        assert_eq!(p.group.order(), 4);
        assert_eq!(p.to_parent, v4.members());
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(p.to_parent[p.group.mul(a, b)], g.mul(p.to_parent[a], p.to_parent[b]));
            }
        }
    }

    #[test]
    fn from_members_validates() {
        let g = s3();
        assert_eq!(Subgroup::from_members(&g, vec![0, 1, 2]).unwrap_err(), GroupError::NotASubgroup);
        assert!(Subgroup::from_members(&g, (0..6).collect()).is_ok());
    }
}
