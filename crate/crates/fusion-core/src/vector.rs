//! Nonnegative integer combinations of simples.

use std::sync::Arc;

use crate::dims::DimensionData;
use crate::ring::FusionRing;

/// An object of the ring: coefficient `i` is the multiplicity of simple `i`.
/// Products extend the structure constants bilinearly, so the set of object
/// vectors is closed under multiplication.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectVector {
    ring: Arc<FusionRing>,
    coeffs: Vec<u64>,
}

impl ObjectVector {
    pub fn new(ring: Arc<FusionRing>, coeffs: Vec<u64>) -> Self {
        assert_eq!(coeffs.len(), ring.rank(), "coefficient vector must match ring rank");
        ObjectVector { ring, coeffs }
    }

    pub fn zero(ring: Arc<FusionRing>) -> Self {
        let coeffs = vec![0; ring.rank()];
        ObjectVector { ring, coeffs }
    }

    pub fn simple(ring: Arc<FusionRing>, i: usize) -> Self {
        let mut v = Self::zero(ring);
        v.coeffs[i] = 1;
        v
    }

    pub fn unit(ring: Arc<FusionRing>) -> Self {
        let i = ring.unit();
        Self::simple(ring, i)
    }

    pub fn ring(&self) -> &Arc<FusionRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Indices with nonzero multiplicity, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, &c)| (c > 0).then_some(i))
            .collect()
    }

    fn same_ring(&self, rhs: &ObjectVector) -> bool {
        Arc::ptr_eq(&self.ring, &rhs.ring) || *self.ring == *rhs.ring
    }

    pub fn add(&self, rhs: &ObjectVector) -> ObjectVector {
        assert!(self.same_ring(rhs), "object vectors live over different rings");
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        ObjectVector { ring: Arc::clone(&self.ring), coeffs }
    }

    /// Bilinear product through the structure constants.
    pub fn mul(&self, rhs: &ObjectVector) -> ObjectVector {
        assert!(self.same_ring(rhs), "object vectors live over different rings");
        let mut coeffs = vec![0u64; self.ring.rank()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                for &(k, n) in self.ring.product(i, j) {
                    coeffs[k] += a * b * n;
                }
            }
        }
        ObjectVector { ring: Arc::clone(&self.ring), coeffs }
    }

    /// Applies the dual involution coefficientwise.
    pub fn dual(&self) -> ObjectVector {
        let mut coeffs = vec![0u64; self.ring.rank()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[self.ring.dual_of(i)] = c;
        }
        ObjectVector { ring: Arc::clone(&self.ring), coeffs }
    }

    /// FP dimension of the object under the given dimension data.
    pub fn fpdim(&self, dims: &DimensionData) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c as f64 * dims.dim(i))
            .sum()
    }

    /// `Some(n)` when the vector is `n * unit` with `n > 0`.
    pub fn unit_multiple(&self) -> Option<u64> {
        let unit = self.ring.unit();
        let n = self.coeffs[unit];
        if n > 0 && self.coeffs.iter().enumerate().all(|(i, &c)| i == unit || c == 0) {
            Some(n)
        } else {
            None
        }
    }
}
