//! Seeded random rational data for fuzzing and batch runs.

use rand::Rng;

use crate::exactla::{Matrix, Scalar, Subspace};
use crate::liealg::{Covector, LieAlgebra};

/// `p/q` with `|p| <= bound`, `1 <= q <= bound`.
pub fn scalar<R: Rng>(rng: &mut R, bound: i64) -> Scalar {
    let bound = bound.max(1);
    Scalar::new(rng.gen_range(-bound..=bound).into(), rng.gen_range(1..=bound).into())
}

pub fn vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Scalar> {
    (0..n).map(|_| scalar(rng, bound)).collect()
}

pub fn covector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Covector {
    Covector::new(vector(rng, n, bound))
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| scalar(rng, bound))
}

/// Random elements of `s`.
pub fn element_of<R: Rng>(rng: &mut R, s: &Subspace, bound: i64) -> Vec<Scalar> {
    s.combine(&vector(rng, s.dim(), bound))
}

/// Ideals read off the structure: the terms of the derived, lower central
/// and upper central series, the center, and the whole algebra, deduplicated.
pub fn structural_ideals(alg: &LieAlgebra) -> Vec<Subspace> {
    let n = alg.dim();
    let mut out: Vec<Subspace> = Vec::new();
    let mut push = |s: Subspace| {
        if !s.is_zero() && !out.contains(&s) {
            out.push(s);
        }
    };
    push(Subspace::full(n));
    push(alg.center());
    alg.derived_series().into_iter().for_each(&mut push);
    alg.lower_central_series().into_iter().for_each(&mut push);
    alg.upper_central_series_mod(&Subspace::zero(n))
        .into_iter()
        .for_each(&mut push);
    out
}
