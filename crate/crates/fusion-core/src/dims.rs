//! Frobenius-Perron dimensions.
//!
//! The dimension vector is the unique positive character of the ring,
//! computed as the Perron eigenvector of `M = Σ_i N_i` (a strictly positive
//! matrix for any valid fusion ring, so the eigenvector is unique up to
//! scale) normalized to `d_unit = 1`. The global dimension is `Σ_i d_i²`.
//!
//! Integrality is never asserted from floating-point output alone. Each
//! `d_i²` is snapped to the nearest integer `m_i` (within [`SNAP_TOLERANCE`])
//! and decomposed as `m_i = c_i² s_i` with `s_i` squarefree; the candidate
//! vector `d_i = c_i √s_i` is then re-verified against the homomorphism
//! identity `d_i d_j = Σ_k N_{ij}^k d_k` in exact integer arithmetic, by
//! matching coefficients per squarefree radicand (square roots of distinct
//! squarefree integers are linearly independent over the rationals). Success
//! pins the dimensions exactly: `integral` means every `s_i = 1`, and the
//! global dimension `Σ c_i² s_i` is an exact integer. When the verification
//! fails, weak integrality falls back to numeric snapping and is flagged
//! `numeric-only`.

use serde::Serialize;

use crate::ring::{FusionRing, RingError};

/// Default comparison tolerance; the CLI records the active value in every
/// JSON report.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Snap window for integrality decisions, fixed independently of the
/// comparison tolerance.
pub const SNAP_TOLERANCE: f64 = 1e-6;

/// Iteration budget for the power method.
pub const MAX_ITERATIONS: usize = 1_000_000;

/// How an integrality decision was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    /// Re-verified in exact integer arithmetic.
    Exact,
    /// Decided by floating-point snapping only.
    NumericOnly,
}

/// Exact dimension certificate: `d_i = coeff_i * sqrt(radicand_i)` with
/// squarefree radicands, verified against the structure constants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalDims {
    pub coeff: Vec<u64>,
    pub radicand: Vec<u64>,
}

impl RadicalDims {
    pub fn global(&self) -> u64 {
        self.coeff
            .iter()
            .zip(&self.radicand)
            .map(|(&c, &s)| c * c * s)
            .sum()
    }

    pub fn dim_as_f64(&self, i: usize) -> f64 {
        self.coeff[i] as f64 * (self.radicand[i] as f64).sqrt()
    }

    pub fn is_integral(&self) -> bool {
        self.radicand.iter().all(|&s| s == 1)
    }
}

/// Per-simple and global Frobenius-Perron data for one ring.
#[derive(Debug, Clone, Serialize)]
pub struct DimensionData {
    per_simple: Vec<f64>,
    global: f64,
    tolerance: f64,
    integral: bool,
    weakly_integral: bool,
    integrality_evidence: Evidence,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<RadicalDims>,
}

impl DimensionData {
    pub fn dim(&self, i: usize) -> f64 {
        self.per_simple[i]
    }

    pub fn per_simple(&self) -> &[f64] {
        &self.per_simple
    }

    pub fn global(&self) -> f64 {
        self.global
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn is_weakly_integral(&self) -> bool {
        self.weakly_integral
    }

    pub fn evidence(&self) -> Evidence {
        self.integrality_evidence
    }

    pub fn exact(&self) -> Option<&RadicalDims> {
        self.exact.as_ref()
    }

    /// `Some(n)` when `d_i` is exactly the integer `n`. The unit is always
    /// exactly 1 by normalization; other simples need the certificate.
    pub fn dim_exact_integer(&self, i: usize, unit: usize) -> Option<u64> {
        if let Some(cert) = &self.exact {
            (cert.radicand[i] == 1).then_some(cert.coeff[i])
        } else {
            (i == unit).then_some(1)
        }
    }

    /// Exactly verified integer global dimension, when available.
    pub fn global_exact_integer(&self) -> Option<u64> {
        self.exact.as_ref().map(RadicalDims::global)
    }
}

/// Computes the dimension data with the default tolerance.
pub fn fp_dimensions(ring: &FusionRing) -> Result<DimensionData, RingError> {
    fp_dimensions_with_tolerance(ring, DEFAULT_TOLERANCE)
}

/// Computes the dimension data with an explicit comparison tolerance.
pub fn fp_dimensions_with_tolerance(
    ring: &FusionRing,
    tolerance: f64,
) -> Result<DimensionData, RingError> {
    assert!(tolerance > 0.0, "tolerance must be positive");
    let per_simple = perron_vector(ring, tolerance)?;
    let exact = verify_radical(ring, &per_simple);
    let (per_simple, global, integral, weakly_integral, evidence) = match &exact {
        Some(cert) => {
            let per_simple = (0..ring.rank()).map(|i| cert.dim_as_f64(i)).collect();
            let global = cert.global() as f64;
            (per_simple, global, cert.is_integral(), true, Evidence::Exact)
        }
        None => {
            let global: f64 = per_simple.iter().map(|d| d * d).sum();
            let weakly = (global - global.round()).abs() <= SNAP_TOLERANCE;
            (per_simple, global, false, weakly, Evidence::NumericOnly)
        }
    };
    Ok(DimensionData {
        per_simple,
        global,
        tolerance,
        integral,
        weakly_integral,
        integrality_evidence: evidence,
        exact,
    })
}

/// Power iteration on `M = Σ_i N_i`, normalized at the unit entry.
fn perron_vector(ring: &FusionRing, tolerance: f64) -> Result<Vec<f64>, RingError> {
    let rank = ring.rank();
    let unit = ring.unit();
    if rank == 1 {
        return Ok(vec![1.0]);
    }
    let mut m = vec![0f64; rank * rank];
    for i in 0..rank {
        for j in 0..rank {
            for &(k, v) in ring.product(i, j) {
                m[j * rank + k] += v as f64;
            }
        }
    }
    // converge well below the comparison tolerance, bounded by what f64
    // can resolve
    let threshold = (tolerance * 1e-3).max(1e-14);
    let mut d = vec![1f64; rank];
    let mut next = vec![0f64; rank];
    let mut last_diff = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        for j in 0..rank {
            next[j] = (0..rank).map(|k| m[j * rank + k] * d[k]).sum();
        }
        let scale = next[unit];
        let mut diff = 0f64;
        for j in 0..rank {
            let value = next[j] / scale;
            diff = diff.max((value - d[j]).abs());
            d[j] = value;
        }
        last_diff = diff;
        if diff <= threshold {
            return Ok(d);
        }
    }
    if last_diff <= tolerance {
        return Ok(d);
    }
    Err(RingError::NonConvergence { iterations: MAX_ITERATIONS })
}

/// `m = c² s` with `s` squarefree.
fn squarefree_decompose(m: u64) -> (u64, u64) {
    let mut c = 1u64;
    let mut s = 1u64;
    let mut rest = m;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            c *= p.pow(e / 2);
            if e % 2 == 1 {
                s *= p;
            }
        }
        p += 1;
    }
    s *= rest;
    (c, s)
}

/// Attempts the exact certificate for a numeric dimension vector.
fn verify_radical(ring: &FusionRing, dims: &[f64]) -> Option<RadicalDims> {
    let rank = ring.rank();
    let mut coeff = vec![0u64; rank];
    let mut radicand = vec![0u64; rank];
    for i in 0..rank {
        let square = dims[i] * dims[i];
        let m = square.round();
        if (square - m).abs() > SNAP_TOLERANCE || m < 1.0 || m > 1e15 {
            return None;
        }
        let (c, s) = squarefree_decompose(m as u64);
        coeff[i] = c;
        radicand[i] = s;
    }
    // homomorphism identity per squarefree radicand class
    let mut buckets: std::collections::BTreeMap<u64, u128> = std::collections::BTreeMap::new();
    for i in 0..rank {
        for j in 0..rank {
            buckets.clear();
            for &(k, v) in ring.product(i, j) {
                *buckets.entry(radicand[k]).or_insert(0) +=
                    u128::from(v) * u128::from(coeff[k]);
            }
            let (g, u) = squarefree_decompose(radicand[i] * radicand[j]);
            let lhs = u128::from(coeff[i]) * u128::from(coeff[j]) * u128::from(g);
            if buckets.len() != 1 {
                return None;
            }
            match buckets.get(&u) {
                Some(&rhs) if rhs == lhs => {}
                _ => return None,
            }
        }
    }
    Some(RadicalDims { coeff, radicand })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::GroupTable;

    /// Substitution oracle for the golden ratio: the positive root of
    /// x² = x + 1, evaluated in f64.
    fn golden_ratio_oracle() -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((phi * phi - phi - 1.0).abs() < 1e-12);
        phi
    }

    #[test]
    fn pointed_ring_dimensions_are_all_ones() {
        let ring = catalog::group_ring(&GroupTable::by_name("Z4").unwrap());
        let dims = fp_dimensions(&ring).unwrap();
        assert_eq!(dims.per_simple(), &[1.0, 1.0, 1.0, 1.0]);
        assert_eq!(dims.global(), 4.0);
        assert!(dims.is_integral());
        assert!(dims.is_weakly_integral());
        assert_eq!(dims.evidence(), Evidence::Exact);
        assert_eq!(dims.global_exact_integer(), Some(4));
    }

    #[test]
    fn ty_z3_dimension_is_sqrt_three() {
        let ring = catalog::tambara_yamagami(&GroupTable::cyclic(3)).unwrap();
        let dims = fp_dimensions(&ring).unwrap();
        assert!((dims.dim(3) - 3f64.sqrt()).abs() < 1e-9);
        assert!((dims.global() - 6.0).abs() < 1e-9);
        assert!(!dims.is_integral());
        assert!(dims.is_weakly_integral());
        assert_eq!(dims.evidence(), Evidence::Exact);
        let cert = dims.exact().unwrap();
        assert_eq!(cert.coeff[3], 1);
        assert_eq!(cert.radicand[3], 3);
    }

    #[test]
    fn fibonacci_dimensions_match_golden_ratio_oracle() {
        let ring = catalog::builtin_ring("fibonacci").unwrap();
        let dims = fp_dimensions(&ring).unwrap();
        let phi = golden_ratio_oracle();
        assert!((dims.dim(1) - phi).abs() < 1e-9);
        assert!((dims.global() - (5.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
        assert!(!dims.is_integral());
        assert!(!dims.is_weakly_integral());
        assert_eq!(dims.evidence(), Evidence::NumericOnly);
        assert!(dims.exact().is_none());
    }

    #[test]
    fn homomorphism_identity_holds_numerically() {
        for ring in [
            catalog::builtin_ring("rep_S3").unwrap(),
            catalog::builtin_ring("fibonacci").unwrap(),
            catalog::tambara_yamagami(&GroupTable::by_name("Z2xZ2").unwrap()).unwrap(),
        ] {
            let dims = fp_dimensions(&ring).unwrap();
            for i in 0..ring.rank() {
                assert!((dims.dim(ring.dual_of(i)) - dims.dim(i)).abs() < 1e-9);
                for j in 0..ring.rank() {
                    let sum: f64 = ring
                        .product(i, j)
                        .iter()
                        .map(|&(k, v)| v as f64 * dims.dim(k))
                        .sum();
                    assert!(
                        (dims.dim(i) * dims.dim(j) - sum).abs() < 1e-9,
                        "homomorphism identity fails at ({i}, {j})"
                    );
                }
            }
            assert_eq!(dims.dim(ring.unit()), 1.0);
        }
    }

    #[test]
    fn invertibility_matches_unit_dimension() {
        for ring in [
            catalog::builtin_ring("rep_S3").unwrap(),
            catalog::builtin_ring("ising").unwrap(),
            catalog::builtin_ring("fibonacci").unwrap(),
        ] {
            let dims = fp_dimensions(&ring).unwrap();
            for i in 0..ring.rank() {
                assert_eq!(ring.is_invertible(i), (dims.dim(i) - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn product_ring_global_dimension_multiplies() {
        let fib = catalog::builtin_ring("fibonacci").unwrap();
        let prod = fib.product_ring(&fib).unwrap();
        let dims = fp_dimensions(&prod).unwrap();
        let expected = ((5.0 + 5f64.sqrt()) / 2.0) * ((5.0 + 5f64.sqrt()) / 2.0);
        assert!((dims.global() - expected).abs() < 1e-8);
        assert!((dims.global() - 13.090169943749475).abs() < 1e-8);
    }

    #[test]
    fn ty_square_order_is_integral() {
        let ring = catalog::tambara_yamagami(&GroupTable::by_name("Z2xZ2").unwrap()).unwrap();
        let dims = fp_dimensions(&ring).unwrap();
        assert!(dims.is_integral());
        assert_eq!(dims.dim(4), 2.0);
        assert_eq!(dims.global_exact_integer(), Some(8));
    }

    #[test]
    fn squarefree_decomposition() {
        assert_eq!(squarefree_decompose(1), (1, 1));
        assert_eq!(squarefree_decompose(4), (2, 1));
        assert_eq!(squarefree_decompose(12), (2, 3));
        assert_eq!(squarefree_decompose(360), (6, 10));
        assert_eq!(squarefree_decompose(49), (7, 1));
    }
}
