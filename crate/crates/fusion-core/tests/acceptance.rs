//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test -p fusion-core --test acceptance -- --nocapture`.

mod common;

use fusion_core::{
    analysis::{normality_obstructions, simplicity_check, subcategory_index, ExactQuotient,
        ObstructionRule, SimplicityStatus},
    catalog,
    dims::fp_dimensions,
    group::GroupTable,
    morphism::{validate_morphism, MorphismError, SmallIndexReport, SumOfInvertiblesReport},
    subring::{enumerate_subrings, pointed_part, DEFAULT_ENUMERATION_BOUND},
};

const TOL: f64 = 1e-9;

fn ty(table: &GroupTable) -> fusion_core::FusionRing {
    catalog::tambara_yamagami(table).unwrap()
}

#[test]
fn criterion_01_ty_prime_simplicity() {
    let start = std::time::Instant::now();
    for q in [3usize, 5, 7, 11, 13] {
        let ring = ty(&GroupTable::cyclic(q));
        let verdict = simplicity_check(&ring, &[], DEFAULT_ENUMERATION_BOUND, TOL).unwrap();
        assert_eq!(
            verdict.status,
            SimplicityStatus::SimpleCertified,
            "TY over Z{q} must be certified simple"
        );
        let pointed: Vec<usize> = (0..q).collect();
        let candidate = verdict
            .candidates
            .iter()
            .find(|c| c.subring == pointed)
            .expect("pointed part must appear in the trail");
        assert!((candidate.quotient_dim - 2.0).abs() < TOL);
        let rules: Vec<ObstructionRule> =
            candidate.obstructions.iter().map(|o| o.rule).collect();
        assert!(rules.contains(&ObstructionRule::R2), "R2 must fire for Z{q}");
        assert!(rules.contains(&ObstructionRule::R3), "R3 must fire for Z{q}");
        for obstruction in &candidate.obstructions {
            assert_eq!(obstruction.total_dim_exact, Some(2 * q as u64));
            assert_eq!(obstruction.subring_dim_exact, Some(q as u64));
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "runtime {elapsed:?} must stay under 1 s");
    println!("ACCEPTANCE 1 (TY prime-order simplicity, runtime {elapsed:?}): PASS");
}

#[test]
fn criterion_02_index_two_pointed_part_obstructions() {
    let groups: &[(&str, bool)] = &[
        ("Z2", true),
        ("Z3", true),
        ("Z5", true),
        ("Z6", true),
        ("Z7", true),
        ("Z4", false),
        ("Z2xZ2", false),
        ("Z9", false),
        ("Z3xZ3", false),
    ];
    for &(name, expect_obstructed) in groups {
        let table = GroupTable::by_name(name).unwrap();
        let ring = ty(&table);
        let dims = fp_dimensions(&ring).unwrap();
        let pointed = pointed_part(&ring);
        let index = subcategory_index(&ring, &dims, &pointed);
        assert_eq!(
            index.exact,
            Some(ExactQuotient::Integer { value: 2 }),
            "index of the pointed part in TY over {name} must be exactly 2"
        );
        let obstructions = normality_obstructions(&ring, &dims, &pointed);
        assert_eq!(
            !obstructions.is_empty(),
            expect_obstructed,
            "obstruction expectation fails for {name}"
        );
    }
    println!("ACCEPTANCE 2 (non-square pointed parts obstructed, squares clean): PASS");
}

#[test]
fn criterion_03_ty_dimensions() {
    for (name, table) in common::abelian_groups_up_to(12) {
        let order = table.order();
        let ring = ty(&table);
        let dims = fp_dimensions(&ring).unwrap();
        let d_x = dims.dim(order);
        assert!(
            (d_x - (order as f64).sqrt()).abs() < 1e-9,
            "d_X for {name}: {d_x} vs sqrt {order}"
        );
        assert!(
            (dims.global() - 2.0 * order as f64).abs() < 1e-9,
            "global dimension for {name}"
        );
    }
    println!("ACCEPTANCE 3 (TY dimensions match sqrt of the group order): PASS");
}

#[test]
fn criterion_04_index_equals_induced_algebra_dimension() {
    let corpus = common::morphism_corpus(50);
    assert_eq!(corpus.len(), 4 + 50);
    for (name, morphism) in &corpus {
        let algebra = morphism.induced_algebra().unwrap();
        let index =
            morphism.source_dims().global() / morphism.target_dims().global();
        assert!(
            (index - algebra.fpdim).abs() < 1e-9,
            "{name}: index {index} vs algebra dimension {}",
            algebra.fpdim
        );
        // the library route performs the same consistency check internally
        morphism.fp_index().unwrap();
    }
    println!("ACCEPTANCE 4 (index = induced algebra dimension on {} morphisms): PASS", corpus.len());
}

#[test]
fn criterion_05_multiplicity_bound_and_normality_cross_check() {
    let corpus = common::morphism_corpus(50);
    for (name, morphism) in &corpus {
        let algebra = morphism.induced_algebra().unwrap();
        let dims = morphism.source_dims();
        for (i, &m) in algebra.vector.coeffs().iter().enumerate() {
            assert!(
                m as f64 <= dims.dim(i) + 1e-9,
                "{name}: multiplicity {m} exceeds dimension {} at simple {i}",
                dims.dim(i)
            );
        }
        let normality = morphism.normality().unwrap();
        assert_eq!(
            normality.normal,
            common::support_in_kernel(morphism),
            "{name}: multiplicity criterion disagrees with the kernel-support route"
        );
    }
    println!("ACCEPTANCE 5 (multiplicity bound and normality cross-check): PASS");
}

#[test]
fn criterion_06_index_two_shadow() {
    let corpus = common::morphism_corpus(50);
    let mut index_two_seen = 0;
    for (name, morphism) in &corpus {
        let index = morphism.fp_index().unwrap();
        if (index - 2.0).abs() > 1e-9 {
            continue;
        }
        index_two_seen += 1;
        assert!(morphism.normality().unwrap().normal, "{name} of index 2 must be normal");
        let algebra = morphism.induced_algebra().unwrap();
        let support = algebra.vector.support();
        assert_eq!(support.len(), 2, "{name}: algebra must be 1 + S");
        assert_eq!(algebra.vector.coeff(morphism.source().unit()), 1);
        let s = *support
            .iter()
            .find(|&&i| i != morphism.source().unit())
            .expect("second summand");
        assert_eq!(algebra.vector.coeff(s), 1, "{name}: S must occur once");
        assert!(morphism.source().is_invertible(s), "{name}: S must be invertible");
        assert_eq!(morphism.kernel_subring().rank(), 2, "{name}: kernel rank 2");
    }
    assert!(index_two_seen >= 2, "corpus must contain index-2 morphisms");

    for name in ["repS3_res_Z3", "z4_to_z2"] {
        let morphism = catalog::builtin_morphism(name).unwrap();
        match morphism.small_index_classification().unwrap() {
            SmallIndexReport::EquivariantizationType { p: 2, label, .. } => {
                assert_eq!(label, "equivariantization-type (Z2, ring level)");
            }
            other => panic!("{name}: expected the index-2 claim, got {other:?}"),
        }
    }
    println!("ACCEPTANCE 6 (index-2 morphisms normal with invertible complement, {index_two_seen} instances): PASS");
}

#[test]
fn criterion_07_smallest_prime_negative_control() {
    let morphism = catalog::builtin_morphism("repS3_res_Z2").unwrap();
    let index = morphism.fp_index().unwrap();
    assert!((index - 3.0).abs() < 1e-9);
    match morphism.small_index_classification().unwrap() {
        SmallIndexReport::NoClaim { reason, .. } => {
            assert!(reason.contains("smallest prime factor 2"), "reason: {reason}");
        }
        other => panic!("expected no claim, got {other:?}"),
    }
    assert!(!morphism.normality().unwrap().normal);
    println!("ACCEPTANCE 7 (index 3 over global dimension 6: no claim, not normal): PASS");
}

#[test]
fn criterion_08_sum_of_invertibles() {
    let morphism = catalog::builtin_morphism("ty4_to_z2").unwrap();
    match morphism.sum_of_invertibles().unwrap() {
        SumOfInvertiblesReport::Applicable {
            members,
            gamma,
            multiplicities_all_one,
            normal,
            kernel_is_gamma_closure,
        } => {
            assert_eq!(members, vec![0, 1, 2, 3]);
            assert!(multiplicities_all_one, "every invertible occurs exactly once");
            assert!(normal);
            assert!(kernel_is_gamma_closure);
            let table = GroupTable::new(gamma).unwrap();
            assert_eq!(table.order(), 4);
            for a in 0..4 {
                if a != table.identity() {
                    assert_eq!(table.element_order(a), 2, "Klein four group expected");
                }
            }
        }
        other => panic!("expected applicable, got {other:?}"),
    }
    let pointed = pointed_part(morphism.source());
    assert_eq!(morphism.kernel_subring(), pointed);
    let cert = morphism.exact_sequence_certificate();
    assert!(cert.certified);
    assert_eq!(cert.total_fpdim, 8.0);
    assert_eq!(cert.kernel_fpdim, 4.0);
    assert_eq!(cert.quotient_fpdim, 2.0);
    println!("ACCEPTANCE 8 (sum of invertibles over the Klein four group, 8 = 4 * 2): PASS");
}

#[test]
fn criterion_09_weak_integrality_transfer() {
    let corpus = common::morphism_corpus(50);
    let mut certified_seen = 0;
    for (name, morphism) in &corpus {
        let cert = morphism.exact_sequence_certificate();
        if cert.certified {
            certified_seen += 1;
            assert_eq!(
                morphism.source_dims().is_weakly_integral(),
                morphism.target_dims().is_weakly_integral(),
                "{name}: weak integrality must transfer across a certified sequence"
            );
        }
    }
    assert!(certified_seen >= 10, "corpus must contain certified sequences");

    // Fibonacci admits no certified sequence with nontrivial kernel: the only
    // proper subring is the trivial one, and a trivializing morphism would
    // need an integer image dimension equal to the golden ratio.
    let fib = catalog::builtin_ring("fibonacci").unwrap();
    let subrings = enumerate_subrings(&fib, DEFAULT_ENUMERATION_BOUND).unwrap();
    assert!(subrings.iter().all(|s| !s.is_proper_nontrivial(&fib)));
    let trivial = common::arc(catalog::builtin_ring("trivial").unwrap());
    let fib = common::arc(fib);
    for c in 0..4u64 {
        let attempt = validate_morphism(
            std::sync::Arc::clone(&fib),
            std::sync::Arc::clone(&trivial),
            vec![vec![1], vec![c]],
            TOL,
        );
        match attempt {
            Err(MorphismError::MultiplicativityViolation { .. })
            | Err(MorphismError::DimensionMismatch { .. }) => {}
            other => panic!("trivializing the golden ratio must fail, got {other:?}"),
        }
    }
    // the identity is certified but its kernel is trivial
    let identity = validate_morphism(
        std::sync::Arc::clone(&fib),
        std::sync::Arc::clone(&fib),
        vec![vec![1, 0], vec![0, 1]],
        TOL,
    )
    .unwrap();
    let cert = identity.exact_sequence_certificate();
    assert!(cert.certified);
    assert_eq!(cert.kernel_rank, 1);
    println!("ACCEPTANCE 9 (weak integrality transfers; no nontrivial-kernel sequence out of the golden-ratio ring; {certified_seen} certified): PASS");
}

#[test]
fn criterion_10_subring_lattice_matches_subgroup_oracle() {
    for (name, table) in common::abelian_groups_up_to(16) {
        let ring = catalog::group_ring(&table);
        let dims = fp_dimensions(&ring).unwrap();
        assert_eq!(
            dims.per_simple(),
            vec![1.0; table.order()].as_slice(),
            "{name}: pointed ring dimensions must be exactly one"
        );
        let subrings = enumerate_subrings(&ring, DEFAULT_ENUMERATION_BOUND).unwrap();
        let oracle = common::subgroups_oracle(&table);
        assert_eq!(
            subrings.iter().map(|s| s.indices().to_vec()).collect::<Vec<_>>(),
            oracle,
            "{name}: subring lattice must equal the subgroup lattice"
        );
    }
    println!("ACCEPTANCE 10 (subring lattices equal subgroup lattices up to order 16): PASS");
}
