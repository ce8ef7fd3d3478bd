//! Conjugacy classes of subgroups by cyclic extension.
//!
//! Every subgroup is generated by its cyclic subgroups, so starting from the
//! trivial subgroup and repeatedly joining a class representative with a
//! cyclic subgroup reaches every conjugacy class. Only representatives are
//! extended; joins with conjugates of a representative are covered by
//! joining the representative with the conjugated cyclic subgroup.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::group::{FiniteGroup, GroupError, Subgroup};

/// Representatives of the conjugacy classes of subgroups, in canonical order.
///
/// Classes are sorted by `(order, least member list among conjugates)`, and
/// each representative is that least member list. The trivial subgroup is
/// always class 0 and the whole group is the last class.
#[derive(Clone, Debug)]
pub struct SubgroupClassList {
    group: Arc<FiniteGroup>,
    classes: Vec<Subgroup>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl SubgroupClassList {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Subgroup] {
        &self.classes
    }

    pub fn representative(&self, i: usize) -> &Subgroup {
        &self.classes[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subgroup> {
        self.classes.iter()
    }

    /// Index of the conjugacy class containing `h`.
    pub fn class_of(&self, h: &Subgroup) -> Result<usize, GroupError> {
        h.check_parent(&self.group)?;
        let key = canonical_members(&self.group, h.members());
        Ok(*self.lookup.get(&key).expect("every subgroup belongs to an enumerated class"))
    }
}

/// Lexicographically least member list among all conjugates of `members`.
pub(crate) fn canonical_members(g: &FiniteGroup, members: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut buf = Vec::with_capacity(members.len());
    for x in 0..g.order() {
        buf.clear();
        buf.extend(members.iter().map(|&m| g.conjugate(x, m)));
        buf.sort_unstable();
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    best.expect("groups are nonempty")
}

pub fn subgroup_classes(group: &Arc<FiniteGroup>) -> SubgroupClassList {
    let g: &FiniteGroup = group;

    let mut cyclic_gens: Vec<usize> = Vec::new();
    let mut seen_cyclic: HashSet<Vec<usize>> = HashSet::new();
    for x in 1..g.order() {
        if seen_cyclic.insert(g.generated_members(&[x])) {
            cyclic_gens.push(x);
        }
    }

    // every subgroup of every discovered class, for O(1) rediscovery checks
    let mut known: HashSet<Vec<usize>> = HashSet::new();
    // (canonical members, generators of the canonical representative)
    let mut reps: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();

    let add_class = |members: Vec<usize>, gens: Vec<usize>, known: &mut HashSet<Vec<usize>>| {
        let mut best: Option<(Vec<usize>, usize)> = None;
        for x in 0..g.order() {
            let mut conj: Vec<usize> = members.iter().map(|&m| g.conjugate(x, m)).collect();
            conj.sort_unstable();
            if best.as_ref().is_none_or(|(b, _)| conj < *b) {
                best = Some((conj.clone(), x));
            }
            known.insert(conj);
        }
        let (canon, x) = best.expect("nonempty group");
        let canon_gens = gens.iter().map(|&s| g.conjugate(x, s)).collect();
        (canon, canon_gens)
    };

    let first = add_class(vec![0], vec![], &mut known);
    reps.push(first);
    let mut cursor = 0;
    while cursor < reps.len() {
        let (members, gens) = reps[cursor].clone();
        cursor += 1;
        for &c in &cyclic_gens {
            if members.binary_search(&c).is_ok() {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(c);
            let joined = g.generated_members(&joined_gens);
            if known.contains(&joined) {
                continue;
            }
            let class = add_class(joined, joined_gens, &mut known);
            reps.push(class);
        }
    }

    reps.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let lookup = reps.iter().enumerate().map(|(i, (m, _))| (m.clone(), i)).collect();
    let classes = reps
        .into_iter()
        .map(|(m, _)| Subgroup::from_sorted_unchecked(group, m))
        .collect();
    SubgroupClassList {
        group: group.clone(),
        classes,
        lookup,
    }
}
