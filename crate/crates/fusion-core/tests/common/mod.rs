//! Shared helpers for the integration suites: independent oracles and the
//! randomized morphism corpus. Everything here stays independent of the
//! library paths it is used to check.

#![allow(dead_code)]

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use fusion_core::{catalog, group::GroupTable, morphism::RingMorphism, FusionRing};

/// Brute-force subgroup oracle: scans every subset of the group and keeps
/// those closed under multiplication and inverses. Only usable up to
/// order 16.
pub fn subgroups_oracle(table: &GroupTable) -> Vec<Vec<usize>> {
    let n = table.order();
    assert!(n <= 16, "oracle scans 2^order subsets");
    let mut out = Vec::new();
    'subset: for mask in 0u32..(1u32 << n) {
        if mask & (1 << table.identity()) == 0 {
            continue;
        }
        let member = |a: usize| mask & (1 << a) != 0;
        for a in 0..n {
            if !member(a) {
                continue;
            }
            if !member(table.inverse(a)) {
                continue 'subset;
            }
            for b in 0..n {
                if member(b) && !member(table.mul(a, b)) {
                    continue 'subset;
                }
            }
        }
        out.push((0..n).filter(|&a| member(a)).collect());
    }
    out.sort();
    out
}

/// All abelian groups of order at most `max_order`, as products of cyclic
/// factors (isomorphic duplicates included; harmless for the checks).
pub fn abelian_groups_up_to(max_order: usize) -> Vec<(String, GroupTable)> {
    let mut factor_lists: Vec<Vec<usize>> = vec![vec![]];
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(list) = stack.pop() {
        let product: usize = list.iter().product();
        let start = list.last().copied().unwrap_or(2);
        for f in start..=max_order {
            if product * f > max_order {
                break;
            }
            let mut next = list.clone();
            next.push(f);
            factor_lists.push(next.clone());
            stack.push(next);
        }
    }
    factor_lists
        .into_iter()
        .map(|factors| {
            if factors.is_empty() {
                ("Z1".to_string(), GroupTable::cyclic(1))
            } else {
                let name = factors
                    .iter()
                    .map(|f| format!("Z{f}"))
                    .collect::<Vec<_>>()
                    .join("x");
                let table = factors
                    .iter()
                    .skip(1)
                    .fold(GroupTable::cyclic(factors[0]), |acc, &f| {
                        acc.direct_product(&GroupTable::cyclic(f))
                    });
                (name, table)
            }
        })
        .collect()
}

/// Named morphism corpus: the built-in morphisms plus `count` seeded random
/// group-quotient morphisms over abelian groups of order at most 16.
pub fn morphism_corpus(count: usize) -> Vec<(String, RingMorphism)> {
    let mut corpus: Vec<(String, RingMorphism)> = catalog::BUILTIN_MORPHISMS
        .iter()
        .map(|name| (name.to_string(), catalog::builtin_morphism(name).unwrap()))
        .collect();
    let groups = abelian_groups_up_to(16);
    let subgroup_lists: Vec<Vec<Vec<usize>>> =
        groups.iter().map(|(_, table)| subgroups_oracle(table)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for draw in 0..count {
        let which = rng.gen_range(0..groups.len());
        let (name, table) = &groups[which];
        let subgroups = &subgroup_lists[which];
        let subgroup = &subgroups[rng.gen_range(0..subgroups.len())];
        let morphism = catalog::quotient_morphism(table, subgroup)
            .expect("subgroups of abelian groups are normal");
        corpus.push((format!("quotient {draw}: {name} / |N|={}", subgroup.len()), morphism));
    }
    corpus
}

/// Character-theoretic restriction oracle for the rank-3 ring with
/// dimensions (1, 1, 2): multiplicities of the cyclic-group characters in
/// the restriction of each irreducible, computed from character values by
/// the orthogonality relations in complex arithmetic.
pub mod characters {
    /// Character values of the three irreducibles on (e, transposition,
    /// 3-cycle).
    const CHI: [[f64; 3]; 3] = [[1.0, 1.0, 1.0], [1.0, -1.0, 1.0], [2.0, 0.0, -1.0]];

    /// Restriction to the cyclic subgroup of order 3: images as multiplicity
    /// rows over the characters of Z3.
    pub fn restrict_to_z3() -> Vec<Vec<u64>> {
        let mut rows = Vec::new();
        for chi in CHI {
            // elements c^0, c^1, c^2 have class values chi[0], chi[2], chi[2]
            let values = [chi[0], chi[2], chi[2]];
            let mut row = Vec::new();
            for j in 0..3 {
                let mut re = 0.0;
                for (k, value) in values.iter().enumerate() {
                    let angle = -2.0 * std::f64::consts::PI * (j * k) as f64 / 3.0;
                    re += value * angle.cos();
                }
                let m = re / 3.0;
                assert!((m - m.round()).abs() < 1e-9, "multiplicity must be integral");
                row.push(m.round() as u64);
            }
            rows.push(row);
        }
        rows
    }

    /// Restriction to a subgroup of order 2 generated by a transposition.
    pub fn restrict_to_z2() -> Vec<Vec<u64>> {
        let mut rows = Vec::new();
        for chi in CHI {
            let values = [chi[0], chi[1]];
            let signs = [[1.0, 1.0], [1.0, -1.0]];
            let mut row = Vec::new();
            for sign in signs {
                let m = (values[0] * sign[0] + values[1] * sign[1]) / 2.0;
                assert!((m - m.round()).abs() < 1e-9);
                row.push(m.round() as u64);
            }
            rows.push(row);
        }
        rows
    }
}

/// Support of an induced algebra and the kernel, computed independently of
/// `RingMorphism::normality`.
pub fn support_in_kernel(morphism: &RingMorphism) -> bool {
    let target_unit = morphism.target().unit();
    let mut kernel = Vec::new();
    for (i, image) in morphism.images().iter().enumerate() {
        let on_unit_only = image
            .coeffs()
            .iter()
            .enumerate()
            .all(|(j, &c)| j == target_unit || c == 0);
        if on_unit_only && image.coeff(target_unit) > 0 {
            kernel.push(i);
        }
    }
    morphism
        .images()
        .iter()
        .enumerate()
        .filter(|(_, image)| image.coeff(target_unit) > 0)
        .all(|(i, _)| kernel.contains(&i))
}

pub fn arc(ring: FusionRing) -> Arc<FusionRing> {
    Arc::new(ring)
}
