//! Built-in example rings, morphisms, and the constructors behind them.

use std::sync::Arc;

use thiserror::Error;

use crate::group::{GroupError, GroupTable};
use crate::morphism::{validate_morphism, MorphismError, RingMorphism};
use crate::ring::{FusionRing, RingData};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("Tambara-Yamagami rings require an abelian group")]
    NonAbelianGroup,
    #[error("subset is not a normal subgroup (element {element}, conjugator {conjugator})")]
    NotNormalSubgroup { element: usize, conjugator: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

pub const BUILTIN_RINGS: &[&str] = &["fibonacci", "rep_S3", "trivial", "ising"];
pub const BUILTIN_MORPHISMS: &[&str] =
    &["z4_to_z2", "repS3_res_Z3", "repS3_res_Z2", "ty4_to_z2"];

fn group_labels(table: &GroupTable) -> Vec<String> {
    (0..table.order())
        .map(|a| if a == table.identity() { "1".to_string() } else { format!("g{a}") })
        .collect()
}

/// Pointed ring of a finite group: every simple invertible, dual = inverse.
pub fn group_ring(table: &GroupTable) -> FusionRing {
    group_ring_named(table, None)
}

fn group_ring_named(table: &GroupTable, name: Option<String>) -> FusionRing {
    let n = table.order();
    let constants = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b, table.mul(a, b), 1)))
        .collect();
    RingData {
        name,
        rank: n,
        labels: group_labels(table),
        unit: table.identity(),
        dual: (0..n).map(|a| table.inverse(a)).collect(),
        constants,
    }
    .validate()
    .expect("group ring construction is always valid")
}

/// Tambara-Yamagami ring over an abelian group: the group's invertibles plus
/// one self-dual simple X with g·X = X·g = X and X·X = Σ_g g.
pub fn tambara_yamagami(table: &GroupTable) -> Result<FusionRing, CatalogError> {
    if !table.is_abelian() {
        return Err(CatalogError::NonAbelianGroup);
    }
    let n = table.order();
    let x = n;
    let mut labels = group_labels(table);
    labels.push("X".to_string());
    let mut dual: Vec<usize> = (0..n).map(|a| table.inverse(a)).collect();
    dual.push(x);
    let mut constants: Vec<(usize, usize, usize, u64)> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            constants.push((a, b, table.mul(a, b), 1));
        }
        constants.push((a, x, x, 1));
        constants.push((x, a, x, 1));
        constants.push((x, x, a, 1));
    }
    let ring = RingData {
        name: Some(format!("TY(order {n})")),
        rank: n + 1,
        labels,
        unit: table.identity(),
        dual,
        constants,
    }
    .validate()
    .expect("Tambara-Yamagami construction over an abelian group is always valid");
    Ok(ring)
}

/// Named rings: `fibonacci`, `rep_S3`, `trivial`, `ising`.
pub fn builtin_ring(name: &str) -> Result<FusionRing, CatalogError> {
    let data = match name {
        "trivial" => RingData {
            name: Some("trivial".into()),
            rank: 1,
            labels: vec!["1".into()],
            unit: 0,
            dual: vec![0],
            constants: vec![(0, 0, 0, 1)],
        },
        "fibonacci" => RingData {
            name: Some("fibonacci".into()),
            rank: 2,
            labels: vec!["1".into(), "tau".into()],
            unit: 0,
            dual: vec![0, 1],
            constants: vec![
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (1, 0, 1, 1),
                (1, 1, 0, 1),
                (1, 1, 1, 1),
            ],
        },
        // hard-coded from the symmetric-group character table: V² = 1 + sgn + V
        "rep_S3" => RingData {
            name: Some("rep_S3".into()),
            rank: 3,
            labels: vec!["1".into(), "sgn".into(), "V".into()],
            unit: 0,
            dual: vec![0, 1, 2],
            constants: vec![
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (0, 2, 2, 1),
                (1, 0, 1, 1),
                (2, 0, 2, 1),
                (1, 1, 0, 1),
                (1, 2, 2, 1),
                (2, 1, 2, 1),
                (2, 2, 0, 1),
                (2, 2, 1, 1),
                (2, 2, 2, 1),
            ],
        },
        "ising" => {
            let mut ring = tambara_yamagami(&GroupTable::cyclic(2))?.to_data();
            ring.name = Some("ising".into());
            return Ok(ring.validate().expect("renaming preserves validity"));
        }
        other => return Err(CatalogError::UnknownName(other.to_string())),
    };
    Ok(data.validate().expect("builtin rings are valid"))
}

/// Named morphisms realizing the worked examples:
/// `z4_to_z2`, `repS3_res_Z3`, `repS3_res_Z2`, `ty4_to_z2`.
pub fn builtin_morphism(name: &str) -> Result<RingMorphism, CatalogError> {
    match name {
        "z4_to_z2" => {
            quotient_morphism(&GroupTable::cyclic(4), &[0, 2])
        }
        "repS3_res_Z3" => {
            let source = Arc::new(builtin_ring("rep_S3")?);
            let target = Arc::new(group_ring_named(&GroupTable::cyclic(3), Some("rep_Z3".into())));
            let images = vec![vec![1, 0, 0], vec![1, 0, 0], vec![0, 1, 1]];
            Ok(validate_morphism(source, target, images, crate::dims::DEFAULT_TOLERANCE)?)
        }
        "repS3_res_Z2" => {
            let source = Arc::new(builtin_ring("rep_S3")?);
            let target = Arc::new(group_ring_named(&GroupTable::cyclic(2), Some("rep_Z2".into())));
            let images = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
            Ok(validate_morphism(source, target, images, crate::dims::DEFAULT_TOLERANCE)?)
        }
        "ty4_to_z2" => {
            let v4 = GroupTable::by_name("V4")?;
            let source = Arc::new(tambara_yamagami(&v4)?);
            let target = Arc::new(group_ring(&GroupTable::cyclic(2)));
            let images = vec![
                vec![1, 0],
                vec![1, 0],
                vec![1, 0],
                vec![1, 0],
                vec![0, 2],
            ];
            Ok(validate_morphism(source, target, images, crate::dims::DEFAULT_TOLERANCE)?)
        }
        other => Err(CatalogError::UnknownName(other.to_string())),
    }
}

/// Quotient map `Z[G] -> Z[G/N]` for a normal subgroup `N`, sending each
/// group element to its coset. Always dominant and normal; the kernel is
/// `Z[N]` and the index is `|N|`.
pub fn quotient_morphism(
    table: &GroupTable,
    normal_subgroup: &[usize],
) -> Result<RingMorphism, CatalogError> {
    let set: std::collections::BTreeSet<usize> = normal_subgroup.iter().copied().collect();
    if !table.is_normal_subgroup(normal_subgroup) {
        // locate a witness for the error message
        for g in 0..table.order() {
            for &a in &set {
                let conj = table.mul(table.mul(g, a), table.inverse(g));
                if !set.contains(&conj) {
                    return Err(CatalogError::NotNormalSubgroup { element: a, conjugator: g });
                }
            }
        }
        return Err(CatalogError::NotNormalSubgroup {
            element: *set.iter().next().unwrap_or(&0),
            conjugator: 0,
        });
    }
    let n = table.order();
    // coset of a = min over x in N of a·x
    let coset_rep = |a: usize| set.iter().map(|&x| table.mul(a, x)).min().unwrap();
    let mut reps: Vec<usize> = (0..n).map(coset_rep).collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    reps.sort_unstable();
    let coset_index = |a: usize| reps.binary_search(&coset_rep(a)).unwrap();
    let order = reps.len();
    let mult = (0..order)
        .map(|a| (0..order).map(|b| coset_index(table.mul(reps[a], reps[b]))).collect())
        .collect();
    let quotient = GroupTable::new(crate::group::GroupData {
        order,
        mult,
        identity: coset_index(table.identity()),
    })
    .expect("quotient by a normal subgroup is a group");

    let source = Arc::new(group_ring(table));
    let target = Arc::new(group_ring(&quotient));
    let images = (0..n)
        .map(|a| {
            let mut row = vec![0u64; order];
            row[coset_index(a)] = 1;
            row
        })
        .collect();
    Ok(validate_morphism(source, target, images, crate::dims::DEFAULT_TOLERANCE)?)
}
