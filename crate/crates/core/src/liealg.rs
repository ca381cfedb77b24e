//! Lie algebras given by structure constants, and the coadjoint data of a
//! covector: the KKS pairing, stabilizer, orbit dimension and affine hull.
//!
//! Sign conventions: `Z(m)` denotes the coadjoint action, `<Z(m), W> = <m, [W, Z]>`,
//! so that `exp(Z)(m) = m + Z(m) + ...` as a series in `-ad(Z)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{
    dot, format_scalar, format_vector, is_zero_vector, parse_vector, rank_kernel, ser, symmetric_signature,
    unit_vector, Matrix, Scalar, Signature, Subspace,
};

/// A covector in dual-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Covector(Vec<Scalar>);

impl Covector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Self(coords)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![Scalar::zero(); n])
    }

    /// The dual basis vector `e_i^*`.
    pub fn dual_basis(n: usize, i: usize) -> Self {
        Self(unit_vector(n, i))
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse_vector(s).map(Self)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn pair(&self, v: &[Scalar]) -> Scalar {
        dot(&self.0, v)
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.0)
    }

    pub fn add(&self, other: &Covector) -> Covector {
        Covector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Covector) -> Covector {
        Covector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_vector(&self.0).join(", "))
    }
}

impl Serialize for Covector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ser::vector(&self.0, s)
    }
}

/// Antisymmetry and Jacobi failures, each as a basis triple `(i, j, k)`.
///
/// An antisymmetry entry `(i, j, k)` means `c[i][j][k] != -c[j][i][k]`; a
/// Jacobi entry means the cyclic sum for `(e_i, e_j, e_k)` is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub antisymmetry_failures: Vec<[usize; 3]>,
    pub jacobi_failures: Vec<[usize; 3]>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry_failures.is_empty() && self.jacobi_failures.is_empty()
    }
}

/// Orbit data of a covector: `dim X = rank B`, stabilizer `ker B`, and the
/// direction space of the affine hull of the identity-component orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    pub covector: Covector,
    pub pairing: Matrix,
    pub orbit_dim: usize,
    pub stabilizer: Subspace,
    pub affine_hull: Subspace,
}

impl OrbitRecord {
    /// The orbit fills its affine hull (so the hull describes it exactly).
    pub fn hull_is_exact(&self) -> bool {
        self.orbit_dim == self.affine_hull.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProbe {
    pub center: Subspace,
    pub derived_series: Vec<Subspace>,
    pub lower_central_series: Vec<Subspace>,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
    pub killing_form: Matrix,
    pub killing_signature: Signature,
}

/// `(i, j, [(k, c_ijk)])`: the nonzero part of `[e_i, e_j]`.
pub type Bracket = (usize, usize, Vec<(usize, Scalar)>);

/// A finite-dimensional Lie algebra over Q with `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    structure: Vec<Scalar>,
    matrix_rep: Option<Vec<Matrix>>,
    validation: ValidationReport,
}

impl LieAlgebra {
    /// Wraps a raw structure tensor (`dim^3` entries, index `(i*n + j)*n + k`).
    /// The tensor is not required to satisfy the axioms; see [`LieAlgebra::validate`].
    pub fn new(name: impl Into<String>, labels: Vec<String>, structure: Vec<Scalar>) -> Result<Self> {
        let n = labels.len();
        if structure.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: structure.len(),
            });
        }
        let mut alg = Self {
            name: name.into(),
            labels,
            structure,
            matrix_rep: None,
            validation: ValidationReport::default(),
        };
        alg.validation = alg.compute_validation();
        Ok(alg)
    }

    /// Builds from brackets `[e_i, e_j]` with `i < j`; omitted pairs are zero.
    pub fn from_brackets(name: impl Into<String>, labels: Vec<String>, brackets: &[Bracket]) -> Result<Self> {
        let n = labels.len();
        let mut c = vec![Scalar::zero(); n * n * n];
        for (i, j, coeffs) in brackets {
            let (i, j) = (*i, *j);
            if i >= j || j >= n {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket pair ({i}, {j}) must satisfy i < j < {n}"
                )));
            }
            for (k, v) in coeffs {
                if *k >= n {
                    return Err(Error::InvalidAlgebra(format!("bracket index {k} out of range")));
                }
                c[(i * n + j) * n + k] = v.clone();
                c[(j * n + i) * n + k] = -v.clone();
            }
        }
        Self::new(name, labels, c)
    }

    /// Structure constants read off a faithful family of matrices.
    pub fn from_matrices(name: impl Into<String>, labels: Vec<String>, mats: Vec<Matrix>) -> Result<Self> {
        let n = labels.len();
        if mats.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: mats.len(),
            });
        }
        let flat = flatten_matrices(&mats);
        let mut c = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let br = mats[i].commutator(&mats[j]);
                let coords = crate::exactla::solve(&flat, br.entries())?
                    .ok_or_else(|| Error::InvalidAlgebra(format!("[{}, {}] leaves the span of the matrices", i, j)))?;
                for (k, v) in coords.into_iter().enumerate() {
                    c[(i * n + j) * n + k] = v;
                }
            }
        }
        Self::new(name, labels, c)?.with_matrix_rep(mats)
    }

    /// Attaches a matrix representation after checking it realizes the brackets.
    pub fn with_matrix_rep(mut self, mats: Vec<Matrix>) -> Result<Self> {
        let n = self.dim();
        if mats.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: mats.len(),
            });
        }
        let size = mats.first().map_or(0, Matrix::rows);
        if mats.iter().any(|m| m.rows() != size || m.cols() != size) {
            return Err(Error::RepresentationMismatch(
                "matrices must be square of one size".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = mats[i].commutator(&mats[j]);
                let rhs = combine_matrices(&mats, &self.bracket_basis(i, j));
                if lhs != rhs {
                    return Err(Error::RepresentationMismatch(format!(
                        "[{}, {}] differs from the structure constants",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        self.matrix_rep = Some(mats);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix_rep(&self) -> Option<&[Matrix]> {
        self.matrix_rep.as_deref()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.structure[(i * n + j) * n + k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let n = self.dim();
        self.structure[(i * n + j) * n..(i * n + j + 1) * n].to_vec()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "bracket argument length");
        let mut out = vec![Scalar::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                let base = (i * n + j) * n;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.structure[base + k];
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> &ValidationReport {
        &self.validation
    }

    pub fn is_valid(&self) -> bool {
        self.validation.is_valid()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidAlgebra(format!("{} fails the bracket axioms", self.name)))
        }
    }

    fn compute_validation(&self) -> ValidationReport {
        let n = self.dim();
        let mut report = ValidationReport::default();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if self.structure_constant(i, j, k) + self.structure_constant(j, i, k) != Scalar::zero() {
                        report.antisymmetry_failures.push([i, j, k]);
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
                    let t1 = self.bracket(&a, &self.bracket(&b, &c));
                    let t2 = self.bracket(&b, &self.bracket(&c, &a));
                    let t3 = self.bracket(&c, &self.bracket(&a, &b));
                    let sum: Vec<Scalar> = (0..n).map(|x| &t1[x] + &t2[x] + &t3[x]).collect();
                    if !is_zero_vector(&sum) {
                        report.jacobi_failures.push([i, j, k]);
                    }
                }
            }
        }
        report
    }

    /// `ad(Z)`: column `j` holds the coordinates of `[Z, e_j]`.
    pub fn ad_matrix(&self, z: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.bracket(z, &unit_vector(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    /// `B_ij = <c, [e_i, e_j]>`.
    pub fn kks_pairing(&self, c: &Covector) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| c.pair(&self.bracket_basis(i, j)))
    }

    /// Coadjoint action `Z(m)` with `<Z(m), W> = <m, [W, Z]>`.
    pub fn coadjoint(&self, z: &[Scalar], m: &Covector) -> Covector {
        let n = self.dim();
        Covector::new((0..n).map(|j| m.pair(&self.bracket(&unit_vector(n, j), z))).collect())
    }

    /// Tangent space `g(c) = {Z(c)}` of the orbit, in dual coordinates.
    pub fn tangent_space(&self, c: &Covector) -> Subspace {
        self.kks_pairing(c).column_space()
    }

    /// Smallest coadjoint-invariant subspace containing `g(c)`.
    pub fn krylov_hull(&self, c: &Covector) -> Subspace {
        let n = self.dim();
        let mut hull = self.tangent_space(c);
        loop {
            let mut gens = hull.vectors();
            for u in hull.vectors() {
                let u = Covector::new(u);
                for i in 0..n {
                    gens.push(self.coadjoint(&unit_vector(n, i), &u).into_coords());
                }
            }
            let next = Subspace::span(n, gens);
            if next == hull {
                return hull;
            }
            hull = next;
        }
    }

    /// `ann(X) = {Z : <x, Z> = 0 for all x in c + hull}` for the identity-component orbit.
    pub fn orbit_annihilator(&self, c: &Covector) -> Subspace {
        let hull = self.krylov_hull(c);
        let mut gens = hull.vectors();
        gens.push(c.coords().to_vec());
        Subspace::span(self.dim(), gens).annihilator()
    }

    pub fn orbit_record(&self, c: &Covector) -> Result<OrbitRecord> {
        self.ensure_valid()?;
        self.check_len(c.dim())?;
        let pairing = self.kks_pairing(c);
        let (rank, stabilizer) = rank_kernel(&pairing);
        Ok(OrbitRecord {
            covector: c.clone(),
            orbit_dim: rank,
            stabilizer,
            affine_hull: self.krylov_hull(c),
            pairing,
        })
    }

    /// Stabilizer `g_c = ker B_c`.
    pub fn stabilizer(&self, c: &Covector) -> Subspace {
        self.kks_pairing(c).kernel()
    }

    pub fn check_len(&self, len: usize) -> Result<()> {
        if len == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: len,
            })
        }
    }

    pub fn check_subspace(&self, s: &Subspace) -> Result<()> {
        self.check_len(s.ambient_dim())
    }

    /// A pair of basis vectors of `s` whose bracket leaves `s`.
    pub fn subalgebra_witness(&self, s: &Subspace) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
        let vs = s.vectors();
        for (a, x) in vs.iter().enumerate() {
            for y in &vs[a + 1..] {
                if !s.contains_vector(&self.bracket(x, y)) {
                    return Some((x.clone(), y.clone()));
                }
            }
        }
        None
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.subalgebra_witness(s).is_none()
    }

    /// `(e_i, v)` with `v` in `s` and `[e_i, v]` outside `s`.
    pub fn ideal_witness(&self, s: &Subspace) -> Option<(usize, Vec<Scalar>)> {
        let n = self.dim();
        for v in s.vectors() {
            for i in 0..n {
                if !s.contains_vector(&self.bracket(&unit_vector(n, i), &v)) {
                    return Some((i, v));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.ideal_witness(s).is_none()
    }

    pub fn require_subalgebra(&self, s: &Subspace) -> Result<()> {
        self.check_subspace(s)?;
        match self.subalgebra_witness(s) {
            None => Ok(()),
            Some((x, y)) => Err(Error::NotSubalgebra(format!(
                "[{}, {}] is not in the subspace",
                self.format_element(&x),
                self.format_element(&y)
            ))),
        }
    }

    pub fn require_ideal(&self, s: &Subspace) -> Result<()> {
        self.check_subspace(s)?;
        match self.ideal_witness(s) {
            None => Ok(()),
            Some((i, v)) => Err(Error::NotIdeal(format!(
                "[{}, {}] is not in the subspace",
                self.labels[i],
                self.format_element(&v)
            ))),
        }
    }

    /// `span{[x, y] : x in a, y in b}`.
    pub fn bracket_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut gens = Vec::new();
        for x in a.vectors() {
            for y in b.vectors() {
                gens.push(self.bracket(&x, &y));
            }
        }
        Subspace::span(self.dim(), gens)
    }

    /// `{Z : [Z, s] = 0}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for v in s.vectors() {
            rows.extend(self.ad_matrix(&v).row_vectors());
        }
        Matrix::from_rows(n, &rows).expect("rows of length dim").kernel()
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim()))
    }

    /// `g, [g,g], [[g,g],[g,g]], ...` up to stabilization (last entry repeats nothing).
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_space(last, last);
            if next == *last {
                return series;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_space(&full, last);
            if next == *last {
                return series;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    /// Ascending central series relative to an ideal `j`:
    /// `Z_0 = j`, `Z_{k+1} = {Y : [g, Y] in Z_k}`, up to stabilization.
    pub fn upper_central_series_mod(&self, j: &Subspace) -> Vec<Subspace> {
        let mut series = vec![j.clone()];
        loop {
            let next = self.preimage_of_center(series.last().unwrap());
            if next == *series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    /// `{Y : [e_i, Y] in target for all i}`.
    fn preimage_of_center(&self, target: &Subspace) -> Subspace {
        let n = self.dim();
        let ann = target.annihilator();
        let mut rows = Vec::new();
        for i in 0..n {
            let ad = self.ad_matrix(&unit_vector(n, i));
            for f in ann.vectors() {
                rows.push(ad.vec_mul(&f));
            }
        }
        Matrix::from_rows(n, &rows).expect("rows of length dim").kernel()
    }

    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_matrix(&unit_vector(n, i))).collect();
        Matrix::from_fn(n, n, |i, j| ads[i].mul(&ads[j]).trace())
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn structure_probe(&self) -> Result<StructureProbe> {
        self.ensure_valid()?;
        let derived_series = self.derived_series();
        let lower_central_series = self.lower_central_series();
        let killing_form = self.killing_form();
        Ok(StructureProbe {
            center: self.center(),
            is_solvable: derived_series.last().unwrap().is_zero(),
            is_nilpotent: lower_central_series.last().unwrap().is_zero(),
            killing_signature: symmetric_signature(&killing_form),
            derived_series,
            lower_central_series,
            killing_form,
        })
    }

    /// Restriction of `c` to a subalgebra, in coordinates of its RREF basis.
    pub fn restrict(&self, c: &Covector, sub: &Subspace) -> Result<Covector> {
        self.check_len(c.dim())?;
        self.require_subalgebra(sub)?;
        Ok(restrict_to(c, sub))
    }

    /// The subalgebra `s` as a Lie algebra in coordinates of its RREF basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        self.require_subalgebra(s)?;
        let m = s.dim();
        let vs = s.vectors();
        let mut c = vec![Scalar::zero(); m * m * m];
        for i in 0..m {
            for j in 0..m {
                let coords = s
                    .coordinates(&self.bracket(&vs[i], &vs[j]))
                    .expect("subalgebra closed under bracket");
                for (k, v) in coords.into_iter().enumerate() {
                    c[(i * m + j) * m + k] = v;
                }
            }
        }
        let labels = vs.iter().map(|v| self.format_element(v)).collect();
        LieAlgebra::new(format!("{}|sub", self.name), labels, c)
    }

    /// `g / a` with basis the unit vectors off the pivot columns of `a`.
    pub fn quotient(&self, a: &Subspace) -> Result<LieAlgebra> {
        self.require_ideal(a)?;
        let n = self.dim();
        let comp = a.complement_indices();
        let q = comp.len();
        let mut c = vec![Scalar::zero(); q * q * q];
        for (x, &i) in comp.iter().enumerate() {
            for (y, &j) in comp.iter().enumerate() {
                let r = a.reduce(&self.bracket_basis(i, j));
                for (z, &k) in comp.iter().enumerate() {
                    c[(x * q + y) * q + z] = r[k].clone();
                }
            }
        }
        let labels = comp.iter().map(|&i| format!("{}+I", self.labels[i])).collect();
        debug_assert!(n >= q);
        LieAlgebra::new(format!("{}/ideal", self.name), labels, c)
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        let mut out = String::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Scalar::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            if !a.is_one() {
                out.push_str(&format_scalar(&a));
                out.push('*');
            }
            out.push_str(&self.labels[i]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `c` paired with the RREF basis of `sub` (no subalgebra check).
pub fn restrict_to(c: &Covector, sub: &Subspace) -> Covector {
    Covector::new(sub.vectors().iter().map(|v| c.pair(v)).collect())
}

/// A subspace of `g` expressed in the coordinates of the subalgebra `sub ⊇ s`.
pub fn localize(sub: &Subspace, s: &Subspace) -> Subspace {
    let coords: Vec<Vec<Scalar>> = s
        .vectors()
        .iter()
        .map(|v| sub.coordinates(v).expect("subspace lies in the subalgebra"))
        .collect();
    Subspace::span(sub.dim(), coords)
}

/// A subspace given in coordinates of `sub`, pushed back into `g`.
pub fn globalize(sub: &Subspace, local: &Subspace) -> Subspace {
    Subspace::span(sub.ambient_dim(), local.vectors().iter().map(|v| sub.combine(v)))
}

/// Matrices flattened column-wise into a `(size^2) x count` matrix.
pub(crate) fn flatten_matrices(mats: &[Matrix]) -> Matrix {
    let cols: Vec<Vec<Scalar>> = mats.iter().map(|m| m.entries().to_vec()).collect();
    let rows = mats.first().map_or(0, |m| m.rows() * m.cols());
    Matrix::from_columns(rows, &cols)
}

pub(crate) fn combine_matrices(mats: &[Matrix], coeffs: &[Scalar]) -> Matrix {
    let size = mats[0].rows();
    let mut acc = Matrix::zeros(size, mats[0].cols());
    for (m, c) in mats.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    fn h3() -> LieAlgebra {
        LieAlgebra::from_brackets("h3", labels(3), &[(0, 1, vec![(2, int(1))])]).unwrap()
    }

    fn sl2() -> LieAlgebra {
        let names = vec!["H".to_string(), "E".into(), "F".into()];
        LieAlgebra::from_brackets(
            "sl2",
            names,
            &[
                (0, 1, vec![(1, int(2))]),
                (0, 2, vec![(2, int(-2))]),
                (1, 2, vec![(0, int(1))]),
            ],
        )
        .unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn validate_examples() {
        assert!(h3().is_valid());
        let abelian = LieAlgebra::from_brackets("a3", labels(3), &[]).unwrap();
        assert!(abelian.is_valid());
        // c[0][1] = e3 without the antisymmetric partner
        let mut c = vec![Scalar::zero(); 27];
        c[5] = int(1);
        let broken = LieAlgebra::new("broken", labels(3), c).unwrap();
        assert_eq!(broken.validate().antisymmetry_failures, vec![[0, 1, 2]]);
        assert!(broken.orbit_record(&Covector::zero(3)).is_err());
    }

    #[test]
    fn jacobi_failure_detected() {
        // [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1 violates Jacobi
        let alg = LieAlgebra::from_brackets(
            "bad",
            labels(3),
            &[
                (0, 1, vec![(2, int(1))]),
                (1, 2, vec![(0, int(1))]),
                (0, 2, vec![(0, int(1))]),
            ],
        )
        .unwrap();
        assert_eq!(alg.validate().jacobi_failures, vec![[0, 1, 2]]);
    }

    #[test]
    fn ad_matrix_examples() {
        let g = h3();
        assert!(g.ad_matrix(&v(&[0, 0, 1])).is_zero());
        let ad1 = g.ad_matrix(&v(&[1, 0, 0]));
        assert_eq!(ad1, Matrix::from_i64(&[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]]));
        let ad_h = sl2().ad_matrix(&v(&[1, 0, 0]));
        assert_eq!(ad_h, Matrix::from_i64(&[&[0, 0, 0], &[0, 2, 0], &[0, 0, -2]]));
    }

    #[test]
    fn kks_pairing_examples() {
        let g = h3();
        let b = g.kks_pairing(&Covector::dual_basis(3, 2));
        assert_eq!(b, Matrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]));
        assert!(g.kks_pairing(&Covector::zero(3)).is_zero());
        // Trace form image of H in sl2: (Tr HH, Tr HE, Tr HF) = (2, 0, 0).
        let b = sl2().kks_pairing(&Covector::new(v(&[2, 0, 0])));
        assert_eq!(b.rank(), 2);
        assert_eq!(b[(1, 2)], int(2));
    }

    #[test]
    fn orbit_record_examples() {
        let g = h3();
        let rec = g.orbit_record(&Covector::dual_basis(3, 2)).unwrap();
        assert_eq!(rec.orbit_dim, 2);
        assert_eq!(rec.stabilizer, Subspace::coordinate(3, &[2]));
        assert_eq!(rec.affine_hull, Subspace::coordinate(3, &[0, 1]));
        assert!(rec.hull_is_exact());

        let a = LieAlgebra::from_brackets("a3", labels(3), &[]).unwrap();
        let rec = a.orbit_record(&Covector::new(v(&[1, 2, 3]))).unwrap();
        assert_eq!(rec.orbit_dim, 0);
        assert!(rec.stabilizer.is_full());
        assert!(rec.affine_hull.is_zero());
    }

    #[test]
    fn restrict_examples() {
        let g = h3();
        let sub = Subspace::coordinate(3, &[1, 2]);
        let r = g.restrict(&Covector::dual_basis(3, 2), &sub).unwrap();
        assert_eq!(r.coords(), &v(&[0, 1])[..]);
        let c = Covector::new(v(&[4, 5, 6]));
        assert_eq!(g.restrict(&c, &Subspace::full(3)).unwrap(), c);
        let r = g
            .restrict(&Covector::dual_basis(3, 0), &Subspace::coordinate(3, &[2]))
            .unwrap();
        assert!(r.is_zero());
        let bad = Subspace::coordinate(3, &[0, 1]);
        assert!(matches!(g.restrict(&c, &bad), Err(Error::NotSubalgebra(_))));
    }

    #[test]
    fn structure_probe_examples() {
        let p = h3().structure_probe().unwrap();
        assert!(p.is_nilpotent && p.is_solvable);
        assert_eq!(p.center, Subspace::coordinate(3, &[2]));
        assert_eq!(p.derived_series[1], Subspace::coordinate(3, &[2]));

        let p = sl2().structure_probe().unwrap();
        assert!(!p.is_solvable);
        assert_eq!((p.killing_signature.positive, p.killing_signature.negative), (2, 1));
        // Killing form = 4 * trace form on sl2: K(H,H) = 8, K(E,F) = 4.
        assert_eq!(p.killing_form[(0, 0)], int(8));
        assert_eq!(p.killing_form[(1, 2)], int(4));

        let a = LieAlgebra::from_brackets("a2", labels(2), &[]).unwrap();
        let p = a.structure_probe().unwrap();
        assert!(p.is_nilpotent);
        assert!(p.center.is_full());
    }

    #[test]
    fn subalgebra_and_quotient() {
        let g = h3();
        let sub = g.subalgebra(&Subspace::coordinate(3, &[1, 2])).unwrap();
        assert_eq!(sub.dim(), 2);
        assert!(sub.is_nilpotent());
        let q = g.quotient(&Subspace::coordinate(3, &[2])).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.bracket_basis(0, 1).iter().all(Zero::is_zero));
        assert!(g.quotient(&Subspace::coordinate(3, &[0])).is_err());
    }

    #[test]
    fn from_matrices_recovers_sl2() {
        let h = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let f = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let alg = LieAlgebra::from_matrices("sl2", vec!["H".into(), "E".into(), "F".into()], vec![h, e, f]).unwrap();
        assert_eq!(alg.bracket_basis(0, 1), v(&[0, 2, 0]));
        assert_eq!(alg.bracket_basis(1, 2), v(&[1, 0, 0]));
    }
}
