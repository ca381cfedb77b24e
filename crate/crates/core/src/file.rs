//! JSON algebra definitions and subspace files.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactla::{parse_scalar, Matrix, Scalar, Subspace};
use crate::liealg::{Covector, LieAlgebra};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDef {
    pub i: usize,
    pub j: usize,
    #[serde(default)]
    pub coeffs: BTreeMap<String, String>,
}

/// A subspace given either by basis indices or by generator rows.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedSubspace {
    pub name: String,
    #[serde(default)]
    pub indices: Option<Vec<usize>>,
    #[serde(default)]
    pub generators: Option<Vec<Vec<String>>>,
}

impl NamedSubspace {
    pub fn resolve(&self, dim: usize) -> Result<Subspace> {
        match (&self.indices, &self.generators) {
            (Some(ix), None) => subspace_from_indices(dim, ix),
            (None, Some(gens)) => subspace_from_generators(dim, gens),
            _ => Err(Error::Parse(format!(
                "subspace {} needs exactly one of indices or generators",
                self.name
            ))),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketDef>,
    #[serde(default)]
    pub matrix_rep: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default)]
    pub description: Option<String>,
    #[serde(default)]
    pub samples: Vec<Vec<String>>,
    #[serde(default)]
    pub ideals: Vec<NamedSubspace>,
    #[serde(default)]
    pub complements: Vec<NamedSubspace>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Builds the algebra. Pairs with `i < j` are filled antisymmetrically; any
    /// other pair is written as given, so that validation reports it.
    pub fn build(&self) -> Result<LieAlgebra> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.basis.len(),
            });
        }
        let mut c = vec![Scalar::zero(); n * n * n];
        let mut raw = Vec::new();
        for b in &self.brackets {
            if b.i >= n || b.j >= n {
                return Err(Error::Parse(format!("bracket pair ({}, {}) out of range", b.i, b.j)));
            }
            let mut coeffs = Vec::with_capacity(b.coeffs.len());
            for (k, v) in &b.coeffs {
                let k: usize = k
                    .parse()
                    .map_err(|_| Error::Parse(format!("bracket index {k:?} is not an integer")))?;
                if k >= n {
                    return Err(Error::Parse(format!("bracket index {k} out of range")));
                }
                coeffs.push((k, parse_scalar(v)?));
            }
            if b.i < b.j {
                for (k, v) in coeffs {
                    c[(b.i * n + b.j) * n + k] = v.clone();
                    c[(b.j * n + b.i) * n + k] = -v;
                }
            } else {
                raw.push((b.i, b.j, coeffs));
            }
        }
        for (i, j, coeffs) in raw {
            for (k, v) in coeffs {
                c[(i * n + j) * n + k] = v;
            }
        }
        let alg = LieAlgebra::new(self.name.clone(), self.basis.clone(), c)?;
        match &self.matrix_rep {
            None => Ok(alg),
            Some(mats) => {
                let mats = mats.iter().map(|m| matrix_from_grid(m)).collect::<Result<Vec<_>>>()?;
                alg.with_matrix_rep(mats)
            }
        }
    }

    pub fn sample_covectors(&self) -> Result<Vec<Covector>> {
        self.samples
            .iter()
            .map(|s| covector_from_strings(self.dim, s))
            .collect()
    }

    pub fn ideal(&self, name: &str) -> Option<&NamedSubspace> {
        self.ideals.iter().find(|s| s.name == name)
    }

    pub fn resolved_complements(&self) -> Result<Vec<(String, Subspace)>> {
        self.complements
            .iter()
            .map(|s| Ok((s.name.clone(), s.resolve(self.dim)?)))
            .collect()
    }
}

pub fn matrix_from_grid(grid: &[Vec<String>]) -> Result<Matrix> {
    let rows = grid
        .iter()
        .map(|r| r.iter().map(|x| parse_scalar(x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::from_rows(cols, &rows)
}

pub fn covector_from_strings(dim: usize, s: &[String]) -> Result<Covector> {
    if s.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: s.len(),
        });
    }
    Ok(Covector::new(s.iter().map(|x| parse_scalar(x)).collect::<Result<_>>()?))
}

pub fn subspace_from_indices(dim: usize, indices: &[usize]) -> Result<Subspace> {
    if let Some(&bad) = indices.iter().find(|&&i| i >= dim) {
        return Err(Error::Parse(format!("basis index {bad} out of range")));
    }
    Ok(Subspace::coordinate(dim, indices))
}

pub fn subspace_from_generators(dim: usize, gens: &[Vec<String>]) -> Result<Subspace> {
    let rows = gens
        .iter()
        .map(|g| covector_from_strings(dim, g).map(Covector::into_coords))
        .collect::<Result<Vec<_>>>()?;
    Subspace::from_generators(dim, &rows)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SubspaceFile {
    Rows(Vec<Vec<String>>),
    Object { generators: Vec<Vec<String>> },
}

/// A generator file: either `[[...], ...]` or `{"generators": [[...], ...]}`.
pub fn parse_subspace_file(dim: usize, text: &str) -> Result<Subspace> {
    let file: SubspaceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let gens = match file {
        SubspaceFile::Rows(g) | SubspaceFile::Object { generators: g } => g,
    };
    subspace_from_generators(dim, &gens)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ChainFile {
    Plain(Vec<Vec<Vec<String>>>),
    Object { chain: Vec<Vec<Vec<String>>> },
}

/// A list of subspaces, each given by generator rows.
pub fn parse_chain_file(dim: usize, text: &str) -> Result<Vec<Subspace>> {
    let file: ChainFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let chain = match file {
        ChainFile::Plain(c) | ChainFile::Object { chain: c } => c,
    };
    chain.iter().map(|g| subspace_from_generators(dim, g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    const H3: &str = r#"{"name": "h3", "dim": 3, "basis": ["e1", "e2", "e3"],
        "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}]}"#;

    #[test]
    fn loads_heisenberg() {
        let g = AlgebraFile::parse(H3).unwrap().build().unwrap();
        assert!(g.is_valid());
        assert_eq!(g.bracket_basis(1, 0), vec![int(0), int(0), int(-1)]);
    }

    #[test]
    fn reversed_pair_is_reported() {
        let text = r#"{"name": "bad", "dim": 2, "basis": ["a", "b"],
            "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1"}}, {"i": 1, "j": 0, "coeffs": {"1": "1"}}]}"#;
        let g = AlgebraFile::parse(text).unwrap().build().unwrap();
        assert!(!g.validate().antisymmetry_failures.is_empty());
    }

    #[test]
    fn rejects_malformed() {
        assert!(AlgebraFile::parse(r#"{"name": "x"}"#).is_err());
        let text =
            r#"{"name": "x", "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 0, "j": 1, "coeffs": {"5": "1"}}]}"#;
        assert!(AlgebraFile::parse(text).unwrap().build().is_err());
        let text =
            r#"{"name": "x", "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1/0"}}]}"#;
        assert!(AlgebraFile::parse(text).unwrap().build().is_err());
    }

    #[test]
    fn subspace_files() {
        let s = parse_subspace_file(3, r#"[["0", "1", "0"], ["0", "1", "1"]]"#).unwrap();
        assert_eq!(s, Subspace::coordinate(3, &[1, 2]));
        let s = parse_subspace_file(3, r#"{"generators": [["1", "0", "0"]]}"#).unwrap();
        assert_eq!(s, Subspace::coordinate(3, &[0]));
        let chain = parse_chain_file(3, r#"[[["0", "0", "1"]]]"#).unwrap();
        assert_eq!(chain, vec![Subspace::coordinate(3, &[2])]);
    }
}
