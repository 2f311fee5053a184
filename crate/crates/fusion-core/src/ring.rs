//! Fusion rings and their axioms.
//!
//! A fusion ring is a free Z-module on a finite basis of simples with
//! nonnegative integer structure constants `N_{ij}^k`, a distinguished unit,
//! and a dual involution, subject to the unit, duality, Frobenius-symmetry
//! and associativity axioms. [`RingData`] is the raw, serializable
//! description; [`FusionRing`] is the validated, immutable value every other
//! module consumes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::GroupTable;

/// Largest rank accepted by the validator. Keeps the O(rank^3) axiom checks
/// at desk scale; the subring enumerator has its own, much smaller bound.
pub const MAX_VALIDATE_RANK: usize = 256;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RingError {
    #[error("structural error: {0}")]
    Structural(String),
    #[error("duplicate structure constant triple ({0}, {1}, {2})")]
    DuplicateTriple(usize, usize, usize),
    #[error("unit axiom violation at ({i}, {j}, {k}): N = {found}, expected {expected}")]
    UnitAxiomViolation { i: usize, j: usize, k: usize, found: u64, expected: u64 },
    #[error("duality violation at ({i}, {j}): N_(i,j)^unit = {found}, expected {expected}")]
    DualityViolation { i: usize, j: usize, found: u64, expected: u64 },
    #[error("duality violation: dual map is not an involution fixing the unit (index {index})")]
    DualMapViolation { index: usize },
    #[error("Frobenius symmetry violation at ({i}, {j}, {k})")]
    FrobeniusSymmetryViolation { i: usize, j: usize, k: usize },
    #[error("associativity violation at ({i}, {j}, {k}, {l})")]
    AssociativityViolation { i: usize, j: usize, k: usize, l: usize },
    #[error("rank {rank} exceeds bound {bound}")]
    RankBoundExceeded { rank: usize, bound: usize },
    #[error("dimension iteration did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize },
}

/// Raw ring description as it appears on disk:
/// `{"name", "rank", "labels", "unit", "dual", "N": [[i, j, k, value], ...]}`.
/// Triples absent from `N` are zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rank: usize,
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    #[serde(rename = "N")]
    pub constants: Vec<(usize, usize, usize, u64)>,
}

impl RingData {
    /// Checks every fusion-ring axiom and returns the validated ring.
    pub fn validate(self) -> Result<FusionRing, RingError> {
        FusionRing::from_data(self)
    }
}

/// A validated fusion ring. Immutable; all operations are pure, so shared
/// references may be used concurrently.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionRing {
    name: Option<String>,
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    /// Sparse products: entry `i * rank + j` lists `(k, N_{ij}^k)` for the
    /// nonzero constants, sorted by `k`.
    table: Vec<Vec<(usize, u64)>>,
}

impl FusionRing {
    pub fn from_data(data: RingData) -> Result<Self, RingError> {
        let rank = data.rank;
        if rank == 0 {
            return Err(RingError::Structural("rank must be positive".into()));
        }
        if rank > MAX_VALIDATE_RANK {
            return Err(RingError::RankBoundExceeded { rank, bound: MAX_VALIDATE_RANK });
        }
        if data.labels.len() != rank {
            return Err(RingError::Structural(format!(
                "expected {rank} labels, found {}",
                data.labels.len()
            )));
        }
        {
            let mut seen = std::collections::BTreeSet::new();
            for label in &data.labels {
                if !seen.insert(label) {
                    return Err(RingError::Structural(format!("duplicate label `{label}`")));
                }
            }
        }
        if data.unit >= rank {
            return Err(RingError::Structural(format!("unit index {} out of range", data.unit)));
        }
        if data.dual.len() != rank || data.dual.iter().any(|&d| d >= rank) {
            return Err(RingError::Structural("dual must map [0, rank) into itself".into()));
        }
        {
            let mut hit = vec![false; rank];
            for &d in &data.dual {
                if hit[d] {
                    return Err(RingError::Structural("dual is not a permutation".into()));
                }
                hit[d] = true;
            }
        }

        let mut sparse: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
        for &(i, j, k, v) in &data.constants {
            if i >= rank || j >= rank || k >= rank {
                return Err(RingError::Structural(format!(
                    "structure constant index ({i}, {j}, {k}) out of range"
                )));
            }
            if sparse.insert((i, j, k), v).is_some() {
                return Err(RingError::DuplicateTriple(i, j, k));
            }
        }
        sparse.retain(|_, v| *v > 0);

        let mut table: Vec<Vec<(usize, u64)>> = vec![Vec::new(); rank * rank];
        for (&(i, j, k), &v) in &sparse {
            table[i * rank + j].push((k, v));
        }

        let ring = FusionRing {
            name: data.name,
            labels: data.labels,
            unit: data.unit,
            dual: data.dual,
            table,
        };
        ring.check_dual_map()?;
        ring.check_unit_axiom()?;
        ring.check_duality()?;
        ring.check_frobenius_symmetry()?;
        ring.check_associativity()?;
        Ok(ring)
    }

    fn check_dual_map(&self) -> Result<(), RingError> {
        if self.dual[self.unit] != self.unit {
            return Err(RingError::DualMapViolation { index: self.unit });
        }
        for i in 0..self.rank() {
            if self.dual[self.dual[i]] != i {
                return Err(RingError::DualMapViolation { index: i });
            }
        }
        Ok(())
    }

    fn check_unit_axiom(&self) -> Result<(), RingError> {
        let u = self.unit;
        for j in 0..self.rank() {
            for &(k, v) in self.product(u, j) {
                if k != j || v != 1 {
                    return Err(RingError::UnitAxiomViolation {
                        i: u,
                        j,
                        k,
                        found: v,
                        expected: u64::from(k == j),
                    });
                }
            }
            if self.n(u, j, j) != 1 {
                return Err(RingError::UnitAxiomViolation { i: u, j, k: j, found: 0, expected: 1 });
            }
            for &(k, v) in self.product(j, u) {
                if k != j || v != 1 {
                    return Err(RingError::UnitAxiomViolation {
                        i: j,
                        j: u,
                        k,
                        found: v,
                        expected: u64::from(k == j),
                    });
                }
            }
            if self.n(j, u, j) != 1 {
                return Err(RingError::UnitAxiomViolation { i: j, j: u, k: j, found: 0, expected: 1 });
            }
        }
        Ok(())
    }

    fn check_duality(&self) -> Result<(), RingError> {
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                let expected = u64::from(j == self.dual[i]);
                let found = self.n(i, j, self.unit);
                if found != expected {
                    return Err(RingError::DualityViolation { i, j, found, expected });
                }
            }
        }
        Ok(())
    }

    fn check_frobenius_symmetry(&self) -> Result<(), RingError> {
        // N_{ij}^k = N_{j* i*}^{k*} = N_{k j*}^{i}; checking every nonzero
        // entry against its two partners also catches zero-vs-nonzero
        // mismatches, since the offending nonzero partner is itself visited.
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                for &(k, v) in self.product(i, j) {
                    if self.n(self.dual[j], self.dual[i], self.dual[k]) != v
                        || self.n(k, self.dual[j], i) != v
                    {
                        return Err(RingError::FrobeniusSymmetryViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<(), RingError> {
        let rank = self.rank();
        let mut lhs = vec![0u128; rank];
        let mut rhs = vec![0u128; rank];
        let mut touched: Vec<usize> = Vec::with_capacity(rank);
        for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    // (X_i X_j) X_k
                    for &(m, a) in self.product(i, j) {
                        for &(l, b) in self.product(m, k) {
                            if lhs[l] == 0 && rhs[l] == 0 {
                                touched.push(l);
                            }
                            lhs[l] += u128::from(a) * u128::from(b);
                        }
                    }
                    // X_i (X_j X_k)
                    for &(m, a) in self.product(j, k) {
                        for &(l, b) in self.product(i, m) {
                            if lhs[l] == 0 && rhs[l] == 0 {
                                touched.push(l);
                            }
                            rhs[l] += u128::from(a) * u128::from(b);
                        }
                    }
                    let mut bad: Option<usize> = None;
                    for &l in &touched {
                        if lhs[l] != rhs[l] {
                            bad = Some(match bad {
                                Some(prev) => prev.min(l),
                                None => l,
                            });
                        }
                        lhs[l] = 0;
                        rhs[l] = 0;
                    }
                    touched.clear();
                    if let Some(l) = bad {
                        return Err(RingError::AssociativityViolation { i, j, k, l });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dual_of(&self, i: usize) -> usize {
        self.dual[i]
    }

    /// Structure constant `N_{ij}^k`.
    pub fn n(&self, i: usize, j: usize, k: usize) -> u64 {
        self.product(i, j)
            .binary_search_by_key(&k, |&(k0, _)| k0)
            .map(|pos| self.product(i, j)[pos].1)
            .unwrap_or(0)
    }

    /// Nonzero part of the product `X_i ⊗ X_j`, sorted by simple index.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, u64)] {
        &self.table[i * self.rank() + j]
    }

    /// Exact invertibility test: the fusion matrix of `i` times the fusion
    /// matrix of `i*` must be the identity. Never decided by floats.
    pub fn is_invertible(&self, i: usize) -> bool {
        let rank = self.rank();
        let istar = self.dual[i];
        for j in 0..rank {
            // row j of N_i N_{i*}: expand X_{i*} (X_i X_j)
            let mut row = vec![0u128; rank];
            for &(m, a) in self.product(i, j) {
                for &(l, b) in self.product(istar, m) {
                    row[l] += u128::from(a) * u128::from(b);
                }
            }
            for (l, &v) in row.iter().enumerate() {
                if v != u128::from(l == j) {
                    return false;
                }
            }
        }
        true
    }

    /// Indices of the invertible simples, ascending.
    pub fn invertibles(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_invertible(i)).collect()
    }

    /// Group of invertible simples under fusion. The product of two
    /// invertibles is a single simple with multiplicity one, so the group
    /// table is read straight off the structure constants; closure and the
    /// group laws are re-checked on construction.
    pub fn picard_group(&self) -> PicardGroup {
        let members = self.invertibles();
        let pos: BTreeMap<usize, usize> =
            members.iter().enumerate().map(|(p, &g)| (g, p)).collect();
        let order = members.len();
        let mut mult = vec![vec![0usize; order]; order];
        for (pa, &a) in members.iter().enumerate() {
            for (pb, &b) in members.iter().enumerate() {
                let support = self.product(a, b);
                assert!(
                    support.len() == 1 && support[0].1 == 1,
                    "product of invertibles must be a single simple"
                );
                let k = support[0].0;
                let pk = *pos
                    .get(&k)
                    .expect("product of invertibles must be invertible");
                mult[pa][pb] = pk;
            }
        }
        let identity = pos[&self.unit];
        let table = GroupTable::new(crate::group::GroupData { order, mult, identity })
            .expect("invertibles must form a group in a valid fusion ring");
        for (p, &g) in members.iter().enumerate() {
            assert_eq!(
                members[table.inverse(p)],
                self.dual[g],
                "inverse of an invertible must be its dual"
            );
        }
        PicardGroup { members, table }
    }

    /// Componentwise product ring: basis = pairs of simples, constants
    /// multiply factorwise. Errors when the combined rank exceeds the
    /// validator bound.
    pub fn product_ring(&self, rhs: &FusionRing) -> Result<FusionRing, RingError> {
        let (n, m) = (self.rank(), rhs.rank());
        let rank = n.checked_mul(m).filter(|&r| r <= MAX_VALIDATE_RANK).ok_or(
            RingError::RankBoundExceeded { rank: n.saturating_mul(m), bound: MAX_VALIDATE_RANK },
        )?;
        let enc = |a: usize, b: usize| a * m + b;
        let labels = (0..rank)
            .map(|x| format!("({},{})", self.labels[x / m], rhs.labels[x % m]))
            .collect();
        let dual = (0..rank).map(|x| enc(self.dual[x / m], rhs.dual[x % m])).collect();
        let mut constants = Vec::new();
        for i1 in 0..n {
            for j1 in 0..n {
                for &(k1, v1) in self.product(i1, j1) {
                    for i2 in 0..m {
                        for j2 in 0..m {
                            for &(k2, v2) in rhs.product(i2, j2) {
                                constants.push((enc(i1, i2), enc(j1, j2), enc(k1, k2), v1 * v2));
                            }
                        }
                    }
                }
            }
        }
        let name = match (self.name(), rhs.name()) {
            (Some(a), Some(b)) => Some(format!("{a} x {b}")),
            _ => None,
        };
        RingData { name, rank, labels, unit: enc(self.unit, rhs.unit), dual, constants }.validate()
    }

    pub fn to_data(&self) -> RingData {
        let mut constants = Vec::new();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                for &(k, v) in self.product(i, j) {
                    constants.push((i, j, k, v));
                }
            }
        }
        RingData {
            name: self.name.clone(),
            rank: self.rank(),
            labels: self.labels.clone(),
            unit: self.unit,
            dual: self.dual.clone(),
            constants,
        }
    }

    /// Structural equality that ignores names and labels.
    pub fn same_fusion_rules(&self, rhs: &FusionRing) -> bool {
        self.unit == rhs.unit && self.dual == rhs.dual && self.table == rhs.table
    }
}

/// The Picard group: invertible simple indices plus their multiplication
/// table (positions in `members` index the table).
#[derive(Debug, Clone)]
pub struct PicardGroup {
    pub members: Vec<usize>,
    pub table: GroupTable,
}
