//! Permutations of `{0, …, n−1}` stored as image lists.

use std::fmt;

use crate::group::GroupError;

/// A permutation of `{0, …, degree − 1}`; entry `i` of the image list is the
/// image of point `i`.
///
/// The derived ordering is the lexicographic order of image lists, which is
/// the canonical element order of every [`FiniteGroup`](crate::FiniteGroup).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree || touched[a] {
                    return Err(GroupError::NotAPermutation(images));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn compose_examples() {
        let swap = c(2, &[&[0, 1]]);
        let id = Permutation::identity(2);
        assert_eq!(swap.compose(&id).unwrap(), swap);
        assert!(swap.compose(&swap).unwrap().is_identity());

        // (0 1 2)∘(0 1 2): 0 → 1 → 2, 1 → 2 → 0, 2 → 0 → 1
        let r = c(3, &[&[0, 1, 2]]);
        let rr = r.compose(&r).unwrap();
        assert_eq!(rr.images(), &[2, 0, 1]);
        assert_eq!(rr, c(3, &[&[0, 2, 1]]));
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let p = c(3, &[&[0, 1]]);
        let q = c(3, &[&[1, 2]]);
        let pq = p.compose(&q).unwrap();
        for i in 0..3 {
            assert_eq!(pq.apply(i), p.apply(q.apply(i)));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
        let a = Permutation::identity(2);
        let b = Permutation::identity(3);
        assert!(matches!(
            a.compose(&b),
            Err(GroupError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(c(4, &[&[2, 0], &[1, 3]]).to_string(), "(0 2)(1 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn inverse_cancels() {
        let p = c(5, &[&[0, 3, 1], &[2, 4]]);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }
}
