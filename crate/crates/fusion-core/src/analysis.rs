//! Dimension-arithmetic obstructions and the simplicity decision procedure.
//!
//! A subring can be ruled out as the kernel of any ring-level exact sequence
//! by pure dimension arithmetic. Three rules are implemented, each emitted
//! only when its preconditions are verified on exact integer data:
//!
//! - **R1** — the ring has an exactly verified integer global dimension but
//!   the quotient dimension is exactly not an integer.
//! - **R2** — the quotient dimension is exactly a prime integer while the
//!   ring is exactly not integral (a normal subring of prime index would
//!   force an integral ring).
//! - **R3** — the ring is exactly not integral and the quotient dimension is
//!   exactly 1 or a prime (such quotients admit a dimension-1-per-simple
//!   character, which a non-integral ring rules out).
//!
//! An empty obstruction list means "no obstruction found", never "normal".
//! Certifying non-simplicity requires an explicit witness morphism whose
//! exact-sequence certificate passes.

use serde::Serialize;
use thiserror::Error;

use crate::dims::{fp_dimensions_with_tolerance, DimensionData};
use crate::morphism::RingMorphism;
use crate::ring::{FusionRing, RingError};
use crate::subring::{enumerate_subrings, pointed_part, restrict_to_subring, Subring};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("ring is not Tambara-Yamagami shaped: {0}")]
    NotTambaraYamagami(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Exact value of a quotient of two exactly-integer global dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExactQuotient {
    Integer { value: u64 },
    NonInteger { total: u64, sub: u64 },
}

/// Index of a subring: FPdim(ring) / FPdim(subring).
#[derive(Debug, Clone, Serialize)]
pub struct SubcategoryIndex {
    pub value: f64,
    /// Present when both global dimensions are exactly verified integers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactQuotient>,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ObstructionRule {
    R1,
    R2,
    R3,
}

/// One verified dimension obstruction against a candidate kernel.
#[derive(Debug, Clone, Serialize)]
pub struct Obstruction {
    pub rule: ObstructionRule,
    pub subring: Vec<usize>,
    pub quotient_dim: f64,
    /// Exact integer data backing the rule, for independent re-verification.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_dim_exact: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subring_dim_exact: Option<u64>,
    pub explanation: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CandidateReport {
    pub subring: Vec<usize>,
    pub quotient_dim: f64,
    pub obstructions: Vec<Obstruction>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub index: usize,
    pub certified: bool,
    pub kernel: Vec<usize>,
    pub proper_nontrivial_kernel: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status")]
pub enum SimplicityStatus {
    /// Every proper nontrivial subring carries at least one obstruction.
    SimpleCertified,
    /// A supplied witness yields a certified exact sequence with proper
    /// nontrivial kernel.
    NotSimple { witness: usize },
    /// Honest terminal state: unobstructed candidates remain and no witness
    /// settles them.
    Inconclusive { unobstructed: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, Serialize)]
pub struct SimplicityVerdict {
    #[serde(flatten)]
    pub status: SimplicityStatus,
    pub candidates: Vec<CandidateReport>,
    pub witnesses: Vec<WitnessReport>,
    pub tolerance: f64,
}

/// Structured report for a Tambara-Yamagami shaped ring.
#[derive(Debug, Clone, Serialize)]
pub struct TyReport {
    pub gamma_order: usize,
    pub d_x: f64,
    pub pointed_part: Vec<usize>,
    pub pointed_index: SubcategoryIndex,
    pub gamma_order_is_square: bool,
    pub pointed_part_obstructions: Vec<Obstruction>,
    pub simplicity: SimplicityVerdict,
    pub tolerance: f64,
}

/// FPdim(ring) / FPdim(sub), decided exactly when both global dimensions
/// carry exact integer certificates.
pub fn subcategory_index(
    ring: &FusionRing,
    dims: &DimensionData,
    sub: &Subring,
) -> SubcategoryIndex {
    let restricted = restrict_to_subring(ring, sub);
    let sub_dims = fp_dimensions_with_tolerance(&restricted, dims.tolerance())
        .expect("restriction of a valid ring has convergent dimensions");
    let value = dims.global() / sub_dims.global();
    let exact = match (dims.global_exact_integer(), sub_dims.global_exact_integer()) {
        (Some(total), Some(sub_dim)) => Some(if total % sub_dim == 0 {
            ExactQuotient::Integer { value: total / sub_dim }
        } else {
            ExactQuotient::NonInteger { total, sub: sub_dim }
        }),
        _ => None,
    };
    let note = match exact {
        Some(ExactQuotient::Integer { value }) => {
            format!("integer {value}, decided exactly")
        }
        Some(ExactQuotient::NonInteger { total, sub }) => {
            format!("exactly {total}/{sub}, not an integer")
        }
        None => {
            "reported numerically; the ratio is an algebraic integer but its \
             integrality is not decided exactly here"
                .to_string()
        }
    };
    SubcategoryIndex { value, exact, note }
}

/// Dimension obstructions against `sub` being the kernel of a ring-level
/// exact sequence. `sub` must be proper and nontrivial. Empty output means
/// no obstruction was found, not that a sequence exists.
pub fn normality_obstructions(
    ring: &FusionRing,
    dims: &DimensionData,
    sub: &Subring,
) -> Vec<Obstruction> {
    assert!(
        sub.is_proper_nontrivial(ring),
        "obstructions are defined for proper nontrivial subrings"
    );
    let index = subcategory_index(ring, dims, sub);
    let mut out = Vec::new();
    let exactly_non_integral = dims.exact().is_some_and(|cert| !cert.is_integral());

    if dims.is_weakly_integral() && dims.global_exact_integer().is_some() {
        if let Some(ExactQuotient::NonInteger { total, sub: sub_dim }) = index.exact {
            out.push(Obstruction {
                rule: ObstructionRule::R1,
                subring: sub.indices().to_vec(),
                quotient_dim: index.value,
                total_dim_exact: Some(total),
                subring_dim_exact: Some(sub_dim),
                explanation: format!(
                    "this subring cannot be normal: the ring has integer global dimension \
                     {total} but the quotient dimension {total}/{sub_dim} is not an integer"
                ),
            });
        }
    }
    if let Some(ExactQuotient::Integer { value: q }) = index.exact {
        if exactly_non_integral && is_prime(q) {
            out.push(Obstruction {
                rule: ObstructionRule::R2,
                subring: sub.indices().to_vec(),
                quotient_dim: index.value,
                total_dim_exact: dims.global_exact_integer(),
                subring_dim_exact: dims.global_exact_integer().map(|t| t / q),
                explanation: format!(
                    "this subring cannot be normal: the quotient dimension is the prime {q}, \
                     but a normal subring of prime index forces an integral ring and this \
                     ring has an exactly non-integral simple dimension"
                ),
            });
        }
        if exactly_non_integral && (q == 1 || is_prime(q)) {
            out.push(Obstruction {
                rule: ObstructionRule::R3,
                subring: sub.indices().to_vec(),
                quotient_dim: index.value,
                total_dim_exact: dims.global_exact_integer(),
                subring_dim_exact: dims.global_exact_integer().map(|t| t / q),
                explanation: format!(
                    "this subring cannot be normal: a ring that is not integral admits no \
                     ring-level quotient of dimension 1 or a prime, and the quotient \
                     dimension here is exactly {q}"
                ),
            });
        }
    }
    out
}

/// Runs the obstruction rules over every proper nontrivial subring and
/// weighs any supplied witness morphisms. Witness sources must carry the
/// same fusion rules as `ring`; others are ignored in the verdict but still
/// reported.
pub fn simplicity_check(
    ring: &FusionRing,
    witnesses: &[RingMorphism],
    bound: usize,
    tolerance: f64,
) -> Result<SimplicityVerdict, AnalysisError> {
    let dims = fp_dimensions_with_tolerance(ring, tolerance)?;
    let subrings = enumerate_subrings(ring, bound)?;
    let mut candidates = Vec::new();
    for sub in &subrings {
        if !sub.is_proper_nontrivial(ring) {
            continue;
        }
        let index = subcategory_index(ring, &dims, sub);
        let obstructions = normality_obstructions(ring, &dims, sub);
        candidates.push(CandidateReport {
            subring: sub.indices().to_vec(),
            quotient_dim: index.value,
            obstructions,
        });
    }

    let mut witness_reports = Vec::new();
    let mut not_simple: Option<usize> = None;
    for (index, witness) in witnesses.iter().enumerate() {
        if !witness.source().same_fusion_rules(ring) {
            witness_reports.push(WitnessReport {
                index,
                certified: false,
                kernel: Vec::new(),
                proper_nontrivial_kernel: false,
            });
            continue;
        }
        let certificate = witness.exact_sequence_certificate();
        let kernel = witness.kernel_subring();
        let proper = kernel.is_proper_nontrivial(ring);
        if certificate.certified && proper {
            // soundness: a certified kernel must be an unobstructed candidate
            let entry = candidates
                .iter()
                .find(|c| c.subring == kernel.indices())
                .expect("certified kernel must appear among enumerated subrings");
            assert!(
                entry.obstructions.is_empty(),
                "soundness violation: certified witness kernel carries an obstruction"
            );
            not_simple.get_or_insert(index);
        }
        witness_reports.push(WitnessReport {
            index,
            certified: certificate.certified,
            kernel: kernel.indices().to_vec(),
            proper_nontrivial_kernel: proper,
        });
    }

    let status = if let Some(witness) = not_simple {
        SimplicityStatus::NotSimple { witness }
    } else {
        let unobstructed: Vec<Vec<usize>> = candidates
            .iter()
            .filter(|c| c.obstructions.is_empty())
            .map(|c| c.subring.clone())
            .collect();
        if unobstructed.is_empty() {
            SimplicityStatus::SimpleCertified
        } else {
            SimplicityStatus::Inconclusive { unobstructed }
        }
    };
    Ok(SimplicityVerdict { status, candidates, witnesses: witness_reports, tolerance })
}

/// Recognizes a Tambara-Yamagami shaped ring — exactly one non-invertible
/// simple X with X·X = Σ_g g over all invertibles, each exactly once — and
/// reports its dimension arithmetic: |Γ|, d_X, the index-2 pointed part, the
/// square criterion with its obstructions, and the simplicity verdict.
pub fn ty_report(
    ring: &FusionRing,
    bound: usize,
    tolerance: f64,
) -> Result<TyReport, AnalysisError> {
    let invertibles = ring.invertibles();
    let non_invertible: Vec<usize> =
        (0..ring.rank()).filter(|&i| !invertibles.contains(&i)).collect();
    if non_invertible.len() != 1 {
        return Err(AnalysisError::NotTambaraYamagami(format!(
            "expected exactly one non-invertible simple, found {}",
            non_invertible.len()
        )));
    }
    let x = non_invertible[0];
    let square = ring.product(x, x);
    let expected: Vec<(usize, u64)> = invertibles.iter().map(|&g| (g, 1)).collect();
    if square != expected.as_slice() {
        return Err(AnalysisError::NotTambaraYamagami(
            "X ⊗ X must be the sum of all invertibles, each with multiplicity one".into(),
        ));
    }
    let dims = fp_dimensions_with_tolerance(ring, tolerance)?;
    let gamma_order = invertibles.len();
    let pointed = pointed_part(ring);
    let pointed_index = subcategory_index(ring, &dims, &pointed);
    let root = (gamma_order as f64).sqrt().round() as usize;
    let gamma_order_is_square = root * root == gamma_order;
    let pointed_part_obstructions = normality_obstructions(ring, &dims, &pointed);
    let simplicity = simplicity_check(ring, &[], bound, tolerance)?;
    Ok(TyReport {
        gamma_order,
        d_x: dims.dim(x),
        pointed_part: pointed.indices().to_vec(),
        pointed_index,
        gamma_order_is_square,
        pointed_part_obstructions,
        simplicity,
        tolerance,
    })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
