//! Algebra sources, covectors, subspaces, and matrices from the command line.

use std::path::Path;

use orbitkit::catalog;
use orbitkit::file::{parse_chain_file, parse_subspace_file, subspace_from_indices, AlgebraFile};
use orbitkit::{Covector, Error, LieAlgebra, Matrix, Subspace};

pub struct Source {
    pub algebra: LieAlgebra,
    pub file: AlgebraFile,
}

impl Source {
    /// `catalog:<name>` or a path to a JSON definition. Does not require validity.
    pub fn load(spec: &str) -> Result<Self, Error> {
        if let Some(name) = spec.strip_prefix("catalog:") {
            let entry = catalog::load(name)?;
            return Ok(Self {
                algebra: entry.algebra,
                file: entry.file,
            });
        }
        let file = AlgebraFile::read(Path::new(spec))?;
        Ok(Self {
            algebra: file.build()?,
            file,
        })
    }

    /// Explicit points, or the documented samples when none are given.
    pub fn points(&self, given: &[String]) -> Result<Vec<Covector>, Error> {
        if given.is_empty() {
            let samples = self.file.sample_covectors()?;
            if samples.is_empty() {
                return Err(Error::Parse("no --point given and the algebra has no samples".into()));
            }
            return Ok(samples);
        }
        given.iter().map(|p| self.point(p)).collect()
    }

    pub fn point(&self, s: &str) -> Result<Covector, Error> {
        let c = Covector::parse(s)?;
        self.algebra.check_len(c.dim())?;
        Ok(c)
    }

    /// Indices `0,2`, `@name` for a declared ideal or complement,
    /// `span:1,0,0;0,1,0` for inline generators, or a generator file.
    pub fn subspace(&self, spec: &str) -> Result<Subspace, Error> {
        let n = self.algebra.dim();
        if let Some(name) = spec.strip_prefix('@') {
            let named = self
                .file
                .ideals
                .iter()
                .chain(&self.file.complements)
                .find(|s| s.name == name)
                .ok_or_else(|| Error::Parse(format!("no declared subspace named {name:?}")))?;
            return named.resolve(n);
        }
        if let Some(rows) = spec.strip_prefix("span:") {
            let m = Matrix::parse(rows)?;
            if m.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.cols(),
                });
            }
            return Subspace::from_generators(n, &m.row_vectors());
        }
        if spec.trim().is_empty() {
            return Ok(Subspace::zero(n));
        }
        if let Ok(ix) = spec
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
        {
            return subspace_from_indices(n, &ix);
        }
        parse_subspace_file(n, &read(spec)?)
    }

    pub fn chain(&self, path: &str) -> Result<Vec<Subspace>, Error> {
        parse_chain_file(self.algebra.dim(), &read(path)?)
    }

    pub fn complements(&self) -> Result<Vec<(String, Subspace)>, Error> {
        self.file.resolved_complements()
    }
}

fn read(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
}
