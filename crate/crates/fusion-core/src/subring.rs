//! Subrings: support sets closed under unit, duals and products.

use thiserror::Error;

use crate::ring::{FusionRing, RingData, RingError};

/// Default rank bound for full subring enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubringError {
    #[error("subring index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("subring does not contain the unit")]
    MissingUnit,
    #[error("subring is not closed under duals at index {0}")]
    NotDualClosed(usize),
    #[error("subring is not closed under products: {i} * {j} meets {k}")]
    NotProductClosed { i: usize, j: usize, k: usize },
}

/// A sorted set of simple indices forming a subring of some fixed ring.
/// Ordering is lexicographic on the index list, which gives the
/// deterministic report order used throughout.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subring {
    indices: Vec<usize>,
}

impl Subring {
    /// Validates closure of an index set in `ring`.
    pub fn new(ring: &FusionRing, indices: impl IntoIterator<Item = usize>) -> Result<Self, SubringError> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i >= ring.rank()) {
            return Err(SubringError::IndexOutOfRange(bad));
        }
        if !indices.contains(&ring.unit()) {
            return Err(SubringError::MissingUnit);
        }
        let member = |k: usize| indices.binary_search(&k).is_ok();
        for &i in &indices {
            if !member(ring.dual_of(i)) {
                return Err(SubringError::NotDualClosed(i));
            }
            for &j in &indices {
                for &(k, _) in ring.product(i, j) {
                    if !member(k) {
                        return Err(SubringError::NotProductClosed { i, j, k });
                    }
                }
            }
        }
        Ok(Subring { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn rank(&self) -> usize {
        self.indices.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.indices.len() == 1
    }

    pub fn is_full(&self, ring: &FusionRing) -> bool {
        self.indices.len() == ring.rank()
    }

    /// Proper (not the whole ring) and nontrivial (more than the unit).
    pub fn is_proper_nontrivial(&self, ring: &FusionRing) -> bool {
        !self.is_trivial() && !self.is_full(ring)
    }
}

/// Least subring containing `seed`: closure of `seed ∪ {unit}` under duals
/// and product supports, to a fixed point. Idempotent and monotone in the
/// seed.
pub fn generated_subring(ring: &FusionRing, seed: &[usize]) -> Subring {
    let rank = ring.rank();
    let mut member = vec![false; rank];
    let mut stack: Vec<usize> = Vec::new();
    let push = |i: usize, member: &mut Vec<bool>, stack: &mut Vec<usize>| {
        if !member[i] {
            member[i] = true;
            stack.push(i);
        }
    };
    push(ring.unit(), &mut member, &mut stack);
    for &i in seed {
        assert!(i < rank, "seed index out of range");
        push(i, &mut member, &mut stack);
    }
    while let Some(i) = stack.pop() {
        push(ring.dual_of(i), &mut member, &mut stack);
        for j in 0..rank {
            if member[j] {
                for &(k, _) in ring.product(i, j) {
                    push(k, &mut member, &mut stack);
                }
                for &(k, _) in ring.product(j, i) {
                    push(k, &mut member, &mut stack);
                }
            }
        }
    }
    let indices = (0..rank).filter(|&i| member[i]).collect();
    Subring { indices }
}

/// Subring generated by all invertible simples.
pub fn pointed_part(ring: &FusionRing) -> Subring {
    generated_subring(ring, &ring.invertibles())
}

/// All distinct subrings, sorted lexicographically by index set.
///
/// Every subring is the join of the principal subrings of its members, so
/// the full lattice is obtained from the principal closures by saturating
/// under pairwise joins; a powerset scan is never needed.
pub fn enumerate_subrings(ring: &FusionRing, bound: usize) -> Result<Vec<Subring>, RingError> {
    if ring.rank() > bound {
        return Err(RingError::RankBoundExceeded { rank: ring.rank(), bound });
    }
    let mut lattice: std::collections::BTreeSet<Subring> = std::collections::BTreeSet::new();
    lattice.insert(generated_subring(ring, &[]));
    for i in 0..ring.rank() {
        lattice.insert(generated_subring(ring, &[i]));
    }
    loop {
        let snapshot: Vec<Subring> = lattice.iter().cloned().collect();
        let before = lattice.len();
        for (a, left) in snapshot.iter().enumerate() {
            for right in snapshot.iter().skip(a + 1) {
                let mut union: Vec<usize> = left.indices.clone();
                union.extend_from_slice(&right.indices);
                lattice.insert(generated_subring(ring, &union));
            }
        }
        if lattice.len() == before {
            break;
        }
    }
    Ok(lattice.into_iter().collect())
}

/// New fusion ring on the sub-basis with inherited constants. Closure of the
/// subring guarantees validity.
pub fn restrict_to_subring(ring: &FusionRing, sub: &Subring) -> FusionRing {
    let indices = sub.indices();
    let position = |k: usize| indices.binary_search(&k).expect("closure guarantees membership");
    let labels = indices.iter().map(|&i| ring.label(i).to_string()).collect();
    let dual = indices.iter().map(|&i| position(ring.dual_of(i))).collect();
    let mut constants = Vec::new();
    for (a, &i) in indices.iter().enumerate() {
        for (b, &j) in indices.iter().enumerate() {
            for &(k, v) in ring.product(i, j) {
                constants.push((a, b, position(k), v));
            }
        }
    }
    let name = ring.name().map(|n| format!("{n} restricted to {:?}", indices));
    RingData {
        name,
        rank: indices.len(),
        labels,
        unit: position(ring.unit()),
        dual,
        constants,
    }
    .validate()
    .expect("restriction of a closed subring is a valid fusion ring")
}
