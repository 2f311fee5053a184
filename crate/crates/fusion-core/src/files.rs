//! Loading rings, groups and morphisms from `catalog:` references or paths.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use thiserror::Error;

use crate::catalog::{self, CatalogError};
use crate::group::{GroupData, GroupTable};
use crate::morphism::{validate_morphism, MorphismData, MorphismError, RingMorphism};
use crate::ring::{FusionRing, RingData, RingError};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read `{path}`: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot parse `{path}`: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error("catalog reference `{0}` needs a group; pass --group")]
    MissingGroup(String),
    #[error("catalog reference `{0}` needs a group name; pass --name")]
    MissingName(String),
}

impl LoadError {
    /// True for IO or JSON syntax problems, as opposed to axiom violations.
    pub fn is_io_or_parse(&self) -> bool {
        matches!(
            self,
            LoadError::Io { .. }
                | LoadError::Parse { .. }
                | LoadError::MissingGroup(_)
                | LoadError::MissingName(_)
        ) || matches!(self, LoadError::Catalog(CatalogError::UnknownName(_)))
            || matches!(self, LoadError::Catalog(CatalogError::Group(_)))
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| LoadError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text)
        .map_err(|source| LoadError::Parse { path: path.to_path_buf(), source })
}

/// Extra arguments a `catalog:` ring reference may need.
#[derive(Debug, Clone, Default)]
pub struct CatalogArgs {
    /// Group for `catalog:ty`, e.g. `Z3` or `Z2xZ2`.
    pub group: Option<String>,
    /// Group name for `catalog:group`.
    pub name: Option<String>,
}

/// Resolves a group given by name (`Z6`, `Z2xZ2`, `V4`) or by the path of a
/// JSON table file.
pub fn resolve_group(value: &str, base: Option<&Path>) -> Result<GroupTable, LoadError> {
    match GroupTable::by_name(value) {
        Ok(table) => Ok(table),
        Err(crate::group::GroupError::UnknownName(_)) => {
            let path = resolve(value, base);
            if path.is_file() {
                load_group(&path)
            } else {
                Err(CatalogError::from(crate::group::GroupError::UnknownName(
                    value.to_string(),
                ))
                .into())
            }
        }
        Err(err) => Err(CatalogError::from(err).into()),
    }
}

/// Resolves a ring reference: `catalog:<name>` or a JSON file path.
/// Relative paths resolve against `base` when given.
pub fn load_ring(
    reference: &str,
    args: &CatalogArgs,
    base: Option<&Path>,
) -> Result<FusionRing, LoadError> {
    if let Some(name) = reference.strip_prefix("catalog:") {
        return match name {
            "ty" => {
                let group_ref = args
                    .group
                    .as_deref()
                    .ok_or_else(|| LoadError::MissingGroup(reference.to_string()))?;
                let table = resolve_group(group_ref, base)?;
                Ok(catalog::tambara_yamagami(&table)?)
            }
            "group" => {
                let group_ref = args
                    .name
                    .as_deref()
                    .or(args.group.as_deref())
                    .ok_or_else(|| LoadError::MissingName(reference.to_string()))?;
                let table = resolve_group(group_ref, base)?;
                Ok(catalog::group_ring(&table))
            }
            other => Ok(catalog::builtin_ring(other)?),
        };
    }
    let path = resolve(reference, base);
    let data: RingData = read_json(&path)?;
    Ok(data.validate()?)
}

/// Resolves a morphism reference: `catalog:<name>` or a JSON file path. Ring
/// references inside a morphism file resolve against the file's directory.
pub fn load_morphism(
    reference: &str,
    tolerance: f64,
    base: Option<&Path>,
) -> Result<RingMorphism, LoadError> {
    if let Some(name) = reference.strip_prefix("catalog:") {
        return Ok(catalog::builtin_morphism(name)?);
    }
    let path = resolve(reference, base);
    let data: MorphismData = read_json(&path)?;
    let dir = path.parent().map(Path::to_path_buf);
    let source = load_ring(&data.source, &CatalogArgs::default(), dir.as_deref())?;
    let target = load_ring(&data.target, &CatalogArgs::default(), dir.as_deref())?;
    Ok(validate_morphism(Arc::new(source), Arc::new(target), data.images, tolerance)?)
}

/// Loads a group table from a JSON file.
pub fn load_group(path: &Path) -> Result<GroupTable, LoadError> {
    let data: GroupData = read_json(path)?;
    Ok(GroupTable::new(data).map_err(CatalogError::from)?)
}

fn resolve(reference: &str, base: Option<&Path>) -> PathBuf {
    let path = Path::new(reference);
    match base {
        Some(dir) if path.is_relative() => dir.join(path),
        _ => path.to_path_buf(),
    }
}
