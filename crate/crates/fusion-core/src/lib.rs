//! Computing with fusion rings.
//!
//! A fusion ring is the integer-combinatorial shadow of a fusion category:
//! a finite basis of simples with nonnegative integer structure constants,
//! a unit, and a dual involution satisfying associativity and Frobenius
//! symmetry. This crate validates such rings, computes their
//! Frobenius-Perron dimensions with exact integrality certificates, models
//! dominant ring morphisms with their induced algebras and indices, and
//! decides normality obstructions and simplicity by dimension arithmetic.
//!
//! The main pieces:
//!
//! - [`ring`] — [`FusionRing`](ring::FusionRing) with full axiom validation.
//! - [`dims`] — Perron-eigenvector dimensions plus exact radical
//!   certificates; integrality is never asserted from floats alone.
//! - [`subring`] — closure, pointed parts, and full lattice enumeration.
//! - [`morphism`] — dominant morphisms, induced algebras, Frobenius-Perron
//!   indices, normality, exact-sequence certificates, and the small-index
//!   classification.
//! - [`catalog`] — group rings, Tambara-Yamagami rings, and the built-in
//!   example morphisms.
//! - [`analysis`] — dimension obstructions (R1/R2/R3), simplicity verdicts,
//!   and Tambara-Yamagami reports.
//! - [`files`] — the JSON interchange formats.
//!
//! Everything is immutable after validation and safe to share across
//! threads.

pub mod analysis;
pub mod catalog;
pub mod dims;
pub mod files;
pub mod group;
pub mod morphism;
pub mod ring;
pub mod subring;
pub mod vector;

pub use analysis::{
    normality_obstructions, simplicity_check, subcategory_index, ty_report, AnalysisError,
    Obstruction, ObstructionRule, SimplicityStatus, SimplicityVerdict, TyReport,
};
pub use catalog::{
    builtin_morphism, builtin_ring, group_ring, quotient_morphism, tambara_yamagami,
    CatalogError,
};
pub use dims::{
    fp_dimensions, fp_dimensions_with_tolerance, DimensionData, Evidence, RadicalDims,
    DEFAULT_TOLERANCE,
};
pub use group::{GroupData, GroupError, GroupTable};
pub use morphism::{
    validate_morphism, ExactSequenceCertificate, InducedAlgebra, MorphismData, MorphismError,
    NormalityReport, RingMorphism, SmallIndexReport, SumOfInvertiblesReport,
};
pub use ring::{FusionRing, PicardGroup, RingData, RingError};
pub use subring::{
    enumerate_subrings, generated_subring, pointed_part, restrict_to_subring, Subring,
    SubringError, DEFAULT_ENUMERATION_BOUND,
};
pub use vector::ObjectVector;
