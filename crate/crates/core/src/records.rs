//! Dimension bookkeeping for induced spaces `Ind_H^G Y`, induction in stages,
//! and Frobenius reciprocity where orbit hulls are exact.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{sub_vectors, Subspace};
use crate::liealg::{restrict_to, Covector, LieAlgebra, OrbitRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Fiber {
    /// An orbit of the subalgebra, in coordinates of its RREF basis.
    Orbit(OrbitRecord),
    Induced(Box<InducedRecord>),
}

impl Fiber {
    pub fn dim(&self) -> usize {
        match self {
            Fiber::Orbit(r) => r.orbit_dim,
            Fiber::Induced(r) => r.computed_dim,
        }
    }
}

/// `Ind_H^G Y`; all subspaces are in coordinates of one fixed ambient algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedRecord {
    pub ambient: Subspace,
    pub sub: Subspace,
    pub fiber: Fiber,
    pub computed_dim: usize,
}

impl InducedRecord {
    pub fn new(ambient: Subspace, sub: Subspace, fiber: Fiber) -> Result<Self> {
        if sub.ambient_dim() != ambient.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: ambient.ambient_dim(),
                found: sub.ambient_dim(),
            });
        }
        if !ambient.contains(&sub) {
            return Err(Error::ChainInclusion("subalgebra not contained in the ambient".into()));
        }
        match &fiber {
            Fiber::Induced(inner) if inner.ambient != sub => {
                return Err(Error::ChainInclusion(
                    "nested record is not induced to the enclosing subalgebra".into(),
                ))
            }
            Fiber::Orbit(r) if r.covector.dim() != sub.dim() => {
                return Err(Error::DimensionMismatch {
                    expected: sub.dim(),
                    found: r.covector.dim(),
                })
            }
            _ => {}
        }
        let computed_dim = 2 * (ambient.dim() - sub.dim()) + fiber.dim();
        Ok(Self {
            ambient,
            sub,
            fiber,
            computed_dim,
        })
    }

    /// Record of `Ind_H^G {orbit of c|h}` over the subalgebra `h` of `alg`.
    pub fn from_orbit(alg: &LieAlgebra, h: &Subspace, c: &Covector) -> Result<Self> {
        let local = alg.subalgebra(h)?;
        let fiber = local.orbit_record(&restrict_to(c, h))?;
        Self::new(Subspace::full(alg.dim()), h.clone(), Fiber::Orbit(fiber))
    }

    /// The innermost subalgebra of the chain.
    pub fn base(&self) -> &Subspace {
        match &self.fiber {
            Fiber::Orbit(_) => &self.sub,
            Fiber::Induced(inner) => inner.base(),
        }
    }

    pub fn depth(&self) -> usize {
        match &self.fiber {
            Fiber::Orbit(_) => 1,
            Fiber::Induced(inner) => 1 + inner.depth(),
        }
    }
}

/// `2 dim(G/H) + dim Y`, recursively.
pub fn induced_dim(rec: &InducedRecord) -> Result<usize> {
    if !rec.ambient.contains(&rec.sub) {
        return Err(Error::ChainInclusion("subalgebra not contained in the ambient".into()));
    }
    let fiber = match &rec.fiber {
        Fiber::Orbit(r) => r.orbit_dim,
        Fiber::Induced(inner) => {
            if inner.ambient != rec.sub {
                return Err(Error::ChainInclusion(
                    "nested ambient differs from the subalgebra".into(),
                ));
            }
            induced_dim(inner)?
        }
    };
    Ok(2 * (rec.ambient.dim() - rec.sub.dim()) + fiber)
}

/// `Ind_K^G Ind_H^K Y = Ind_H^G Y`, applied down to the innermost level.
pub fn stages_flatten(rec: &InducedRecord) -> Result<InducedRecord> {
    match &rec.fiber {
        Fiber::Orbit(_) => InducedRecord::new(rec.ambient.clone(), rec.sub.clone(), rec.fiber.clone()),
        Fiber::Induced(inner) => {
            if inner.ambient != rec.sub || !rec.sub.contains(&inner.sub) {
                return Err(Error::ChainInclusion(
                    "nested record does not sit inside the enclosing subalgebra".into(),
                ));
            }
            let flat = stages_flatten(inner)?;
            InducedRecord::new(rec.ambient.clone(), flat.sub, flat.fiber)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub verdict: Verdict,
    pub reason: String,
}

/// Decides whether `M|h` meets the fiber orbit, comparing affine hulls. Only
/// decided for nilpotent algebras with exact hulls; `M` is an orbit of `alg`
/// (ambient coordinates) and the record is flattened first.
pub fn frobenius_check(alg: &LieAlgebra, rec: &InducedRecord, m: &OrbitRecord) -> Result<FrobeniusReport> {
    alg.check_len(m.covector.dim())?;
    let flat = stages_flatten(rec)?;
    let undecided = |reason: &str| {
        Ok(FrobeniusReport {
            verdict: Verdict::Undecided,
            reason: reason.into(),
        })
    };
    if !flat.ambient.is_full() {
        return undecided("record is not induced to the whole algebra");
    }
    let Fiber::Orbit(y) = &flat.fiber else {
        unreachable!("flattened records end in an orbit")
    };
    if !alg.is_nilpotent() {
        return undecided("algebra is not nilpotent");
    }
    if !m.hull_is_exact() || !y.hull_is_exact() {
        return undecided("an orbit is not its affine hull");
    }
    let h = &flat.sub;
    // Restriction g* -> h*: row r is the r-th basis vector of h.
    let restriction = h.basis().clone();
    let moved = m.affine_hull.image(&restriction);
    let gap = sub_vectors(y.covector.coords(), restrict_to(&m.covector, h).coords());
    let reachable = moved.sum(&y.affine_hull);
    let meets = reachable.contains_vector(&gap);
    Ok(FrobeniusReport {
        verdict: if meets { Verdict::Yes } else { Verdict::No },
        reason: if meets {
            "restricted hull meets the fiber".into()
        } else {
            "restricted hull misses the fiber".into()
        },
    })
}
