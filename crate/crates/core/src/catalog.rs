//! Built-in algebras, extendable through `ORBITKIT_CATALOG_DIR`.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::file::AlgebraFile;
use crate::liealg::{Covector, LieAlgebra};

pub const CATALOG_ENV: &str = "ORBITKIT_CATALOG_DIR";

const BUILTIN: &[(&str, &str)] = &[
    ("abelian3", include_str!("../catalog/abelian3.json")),
    ("affine2", include_str!("../catalog/affine2.json")),
    ("e2", include_str!("../catalog/e2.json")),
    ("filiform4", include_str!("../catalog/filiform4.json")),
    ("heisenberg3", include_str!("../catalog/heisenberg3.json")),
    ("heisenberg5", include_str!("../catalog/heisenberg5.json")),
    ("poincare", include_str!("../catalog/poincare.json")),
    ("sl2", include_str!("../catalog/sl2.json")),
    ("sl3", include_str!("../catalog/sl3.json")),
];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub file: AlgebraFile,
    pub algebra: LieAlgebra,
    pub samples: Vec<Covector>,
}

impl CatalogEntry {
    /// Parses and validates; an entry that fails antisymmetry or Jacobi is an error.
    pub fn from_text(name: &str, text: &str) -> Result<Self> {
        let file = AlgebraFile::parse(text).map_err(|e| Error::Parse(format!("catalog entry {name}: {e}")))?;
        let algebra = file.build()?;
        if !algebra.is_valid() {
            return Err(Error::InvalidAlgebra(format!("catalog entry {name} fails validation")));
        }
        let samples = file.sample_covectors()?;
        for s in &file.ideals {
            s.resolve(algebra.dim())?;
        }
        file.resolved_complements()?;
        Ok(Self {
            name: name.to_string(),
            file,
            algebra,
            samples,
        })
    }
}

fn extra_dir() -> Option<PathBuf> {
    std::env::var_os(CATALOG_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

fn dir_entries(dir: &Path) -> Result<Vec<(String, PathBuf)>> {
    let rd = std::fs::read_dir(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut out = Vec::new();
    for item in rd {
        let path = item.map_err(|e| Error::Io(e.to_string()))?.path();
        if path.extension().is_some_and(|e| e == "json") {
            if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                out.push((stem.to_string(), path));
            }
        }
    }
    Ok(out)
}

/// Sorted names: built-ins plus any `*.json` in the extension directory.
pub fn names() -> Result<Vec<String>> {
    let mut names: Vec<String> = BUILTIN.iter().map(|(n, _)| n.to_string()).collect();
    if let Some(dir) = extra_dir() {
        names.extend(dir_entries(&dir)?.into_iter().map(|(n, _)| n));
    }
    names.sort();
    names.dedup();
    Ok(names)
}

/// Entries in the extension directory shadow built-ins of the same name.
pub fn load(name: &str) -> Result<CatalogEntry> {
    if let Some(dir) = extra_dir() {
        let path = dir.join(format!("{name}.json"));
        if path.is_file() {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            return CatalogEntry::from_text(name, &text);
        }
    }
    let (_, text) = BUILTIN
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Parse(format!("unknown catalog entry {name:?}")))?;
    CatalogEntry::from_text(name, text)
}

pub fn builtin_names() -> Vec<&'static str> {
    BUILTIN.iter().map(|(n, _)| *n).collect()
}

pub fn load_builtin(name: &str) -> Result<CatalogEntry> {
    let (_, text) = BUILTIN
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Parse(format!("unknown catalog entry {name:?}")))?;
    CatalogEntry::from_text(name, text)
}

pub fn all_builtin() -> Vec<CatalogEntry> {
    BUILTIN
        .iter()
        .map(|(n, t)| CatalogEntry::from_text(n, t).expect("built-in catalog entries validate"))
        .collect()
}
