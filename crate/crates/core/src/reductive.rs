//! Matrix Lie algebras with the trace form, exact Jordan decomposition
//! `x = x_h + x_e + x_n`, the `ad(x_h)` grading, and parabolic induction data.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{dot, ser, solve, Matrix, Scalar, Subspace};
use crate::homogeneous::tangent_image;
use crate::liealg::{combine_matrices, flatten_matrices, restrict_to, Covector, LieAlgebra, OrbitRecord};
use crate::poly::{charpoly, Poly};

/// A Lie algebra together with its (checked) matrix representation and the
/// trace form `<Z, Z'> = Tr(Z Z')`.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    alg: LieAlgebra,
    frame: Matrix,
    trace_form: Matrix,
}

impl MatrixLieAlgebra {
    pub fn new(alg: LieAlgebra) -> Result<Self> {
        let reps = alg.matrix_rep().ok_or(Error::NoMatrixRepresentation)?;
        let n = reps.len();
        let frame = flatten_matrices(reps);
        if frame.rank() != n {
            return Err(Error::RepresentationMismatch("representation is not faithful".into()));
        }
        let trace_form = Matrix::from_fn(n, n, |i, j| reps[i].mul(&reps[j]).trace());
        Ok(Self { alg, frame, trace_form })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn reps(&self) -> &[Matrix] {
        self.alg.matrix_rep().expect("checked at construction")
    }

    pub fn size(&self) -> usize {
        self.reps().first().map_or(0, Matrix::rows)
    }

    pub fn trace_form(&self) -> &Matrix {
        &self.trace_form
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.trace_form.rank() == self.alg.dim()
    }

    /// Coordinates of a matrix lying in the span of the representation.
    pub fn coords(&self, x: &Matrix) -> Result<Vec<Scalar>> {
        if x.rows() != self.size() || x.cols() != self.size() {
            return Err(Error::DimensionMismatch {
                expected: self.size(),
                found: x.rows(),
            });
        }
        solve(&self.frame, x.entries())?.ok_or(Error::NotInAlgebra)
    }

    pub fn matrix(&self, coords: &[Scalar]) -> Matrix {
        combine_matrices(self.reps(), coords)
    }

    /// `x ↦ (Tr(x e_j))_j`.
    pub fn to_covector(&self, x: &Matrix) -> Covector {
        Covector::new(self.reps().iter().map(|m| x.mul(m).trace()).collect())
    }

    /// Inverse of [`MatrixLieAlgebra::to_covector`] on the algebra.
    pub fn from_covector(&self, c: &Covector) -> Result<Matrix> {
        self.alg.check_len(c.dim())?;
        let inv = self.trace_form.inverse().ok_or(Error::DegenerateTraceForm)?;
        Ok(self.matrix(&inv.mul_vec(c.coords())))
    }
}

/// Semisimple and nilpotent parts by Newton iteration against the squarefree
/// part `p` of the characteristic polynomial: `s <- s - p(s) u(s)` with
/// `u = 1/p' mod p`.
pub fn jordan_chevalley(x: &Matrix) -> (Matrix, Matrix) {
    assert!(x.is_square(), "square matrix required");
    let size = x.rows();
    if size == 0 {
        return (x.clone(), x.clone());
    }
    let p = charpoly(x).squarefree_part();
    let (_, u, _) = Poly::ext_gcd(&p.derivative(), &p);
    let mut s = x.clone();
    for _ in 0..=usize::BITS {
        let ps = p.eval_matrix(&s);
        if ps.is_zero() {
            break;
        }
        s = s.sub(&ps.mul(&u.eval_matrix(&s)));
    }
    let n = x.sub(&s);
    (s, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralFactor {
    pub factor: String,
    #[serde(serialize_with = "ser::scalar")]
    pub real_part: Scalar,
    /// `b^2` for roots `a ± bi`; zero for a rational root.
    #[serde(serialize_with = "ser::scalar")]
    pub imaginary_square: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Split {
    pub hyperbolic: Matrix,
    pub elliptic: Matrix,
    pub factors: Vec<SpectralFactor>,
}

/// `s = x_h + x_e` for semisimple `s` whose eigenvalues lie in `Q(i)`.
pub fn hyperbolic_elliptic_split(s: &Matrix) -> Result<Split> {
    assert!(s.is_square(), "square matrix required");
    if s.rows() == 0 {
        return Ok(Split {
            hyperbolic: s.clone(),
            elliptic: s.clone(),
            factors: Vec::new(),
        });
    }
    let m = charpoly(s).squarefree_part();
    if !m.eval_matrix(s).is_zero() {
        return Err(Error::NotSemisimple);
    }
    let factors = split_factors(&m)?;

    // x_h = h(s) with h ≡ a_i mod f_i (Chinese remainders).
    let mut h = Poly::zero();
    for (f, info) in &factors {
        let cofactor = m.exact_div(f);
        let (_, u, _) = Poly::ext_gcd(&cofactor.rem(f), f);
        let idem = (&cofactor * &u).rem(&m);
        h = &h + &idem.scale(&info.real_part);
    }
    let hyperbolic = h.rem(&m).eval_matrix(s);
    let elliptic = s.sub(&hyperbolic);
    Ok(Split {
        hyperbolic,
        elliptic,
        factors: factors.into_iter().map(|(_, info)| info).collect(),
    })
}

/// Factors a monic squarefree polynomial into `x - r` and `(x - a)^2 + b^2`
/// over Q, or names the part that does not split that way.
fn split_factors(m: &Poly) -> Result<Vec<(Poly, SpectralFactor)>> {
    let mut out = Vec::new();
    let mut rest = m.clone();
    for r in m.rational_roots() {
        let f = Poly::linear_root(&r);
        rest = rest.exact_div(&f);
        out.push((
            f.clone(),
            SpectralFactor {
                factor: f.to_string(),
                real_part: r,
                imaginary_square: Scalar::zero(),
            },
        ));
    }
    while rest.degree().unwrap_or(0) > 0 {
        let before = rest.degree();
        // Conjugate pairs a ± bi sum to 2a, a rational root of the pairwise-sum polynomial.
        for twice_a in rest.pairwise_sum_poly().rational_roots() {
            let a = &twice_a / Scalar::from_integer(2.into());
            let mirrored = rest.reflect().shift(&-twice_a.clone());
            let g = Poly::gcd(&rest, &mirrored);
            if g.degree().unwrap_or(0) < 2 {
                continue;
            }
            let Some(big_d) = g.shift(&a).even_to_square_variable() else {
                continue;
            };
            for z in big_d.rational_roots() {
                let quad = Poly::new(vec![a.clone() * a.clone() - z.clone(), -twice_a.clone(), Scalar::one()]);
                if z >= Scalar::zero() {
                    return Err(Error::UnsupportedSpectrum {
                        factor: quad.to_string(),
                        reason: "irrational real eigenvalues".into(),
                    });
                }
                let b2 = -z;
                if !is_rational_square(&b2) {
                    return Err(Error::UnsupportedSpectrum {
                        factor: quad.to_string(),
                        reason: "imaginary part is irrational".into(),
                    });
                }
                if !quad.divides(&rest) {
                    continue;
                }
                rest = rest.exact_div(&quad);
                out.push((
                    quad.clone(),
                    SpectralFactor {
                        factor: quad.to_string(),
                        real_part: a.clone(),
                        imaginary_square: b2,
                    },
                ));
            }
            if rest.degree() != before {
                break;
            }
        }
        if rest.degree() == before {
            let reason = if rest.degree() == Some(2) {
                "irrational real eigenvalues"
            } else {
                "irreducible factor of degree greater than 2"
            };
            return Err(Error::UnsupportedSpectrum {
                factor: rest.to_string(),
                reason: reason.into(),
            });
        }
    }
    Ok(out)
}

fn is_rational_square(q: &Scalar) -> bool {
    if q < &Scalar::zero() {
        return false;
    }
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    &(&rn * &rn) == n && &(&rd * &rd) == d
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanTriple {
    pub x: Matrix,
    pub hyperbolic: Matrix,
    pub elliptic: Matrix,
    pub nilpotent: Matrix,
}

impl JordanTriple {
    /// Sum, pairwise commutation, and nilpotency of the nilpotent part.
    pub fn is_consistent(&self) -> bool {
        let parts = [&self.hyperbolic, &self.elliptic, &self.nilpotent];
        let sum = self.hyperbolic.add(&self.elliptic).add(&self.nilpotent);
        sum == self.x
            && self.nilpotent.is_nilpotent()
            && (0..3).all(|i| (0..3).all(|j| parts[i].commutator(parts[j]).is_zero()))
    }
}

pub fn jordan_decomposition(x: &Matrix) -> Result<JordanTriple> {
    let (s, n) = jordan_chevalley(x);
    let split = hyperbolic_elliptic_split(&s)?;
    Ok(JordanTriple {
        x: x.clone(),
        hyperbolic: split.hyperbolic,
        elliptic: split.elliptic,
        nilpotent: n,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradePiece {
    #[serde(serialize_with = "ser::scalar")]
    pub eigenvalue: Scalar,
    pub space: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grading {
    /// Eigenspaces of `ad(x_h)`, by decreasing eigenvalue.
    pub pieces: Vec<GradePiece>,
    pub direct_sum: bool,
    /// `[g^a, g^b] ⊆ g^{a+b}` for all pairs.
    pub bracket_graded: bool,
}

impl Grading {
    pub fn piece(&self, a: &Scalar) -> Option<&Subspace> {
        self.pieces.iter().find(|p| &p.eigenvalue == a).map(|p| &p.space)
    }
}

/// Eigenspace decomposition of `ad(x_h)`; `x_h` in algebra coordinates.
pub fn grade(alg: &LieAlgebra, xh: &[Scalar]) -> Result<Grading> {
    alg.check_len(xh.len())?;
    let n = alg.dim();
    let ad = alg.ad_matrix(xh);
    let sf = charpoly(&ad).squarefree_part();
    let mut roots = sf.rational_roots();
    if roots.len() != sf.degree().unwrap_or(0) {
        return Err(Error::NonRationalGrading);
    }
    roots.sort_by(|a, b| b.cmp(a));
    let pieces: Vec<GradePiece> = roots
        .into_iter()
        .map(|a| {
            let shifted = ad.sub(&Matrix::identity(n).scale(&a));
            GradePiece {
                space: shifted.kernel(),
                eigenvalue: a,
            }
        })
        .collect();
    let total: usize = pieces.iter().map(|p| p.space.dim()).sum();
    if total != n {
        return Err(Error::NonRationalGrading);
    }
    let sum = pieces.iter().fold(Subspace::zero(n), |acc, p| acc.sum(&p.space));
    let mut bracket_graded = true;
    for p in &pieces {
        for q in &pieces {
            let br = alg.bracket_space(&p.space, &q.space);
            let target = pieces
                .iter()
                .find(|r| r.eigenvalue == &p.eigenvalue + &q.eigenvalue)
                .map_or_else(|| Subspace::zero(n), |r| r.space.clone());
            if !target.contains(&br) {
                bracket_graded = false;
            }
        }
    }
    Ok(Grading {
        direct_sum: sum.is_full(),
        pieces,
        bracket_graded,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockFailure {
    #[serde(serialize_with = "ser::scalar")]
    pub a: Scalar,
    #[serde(serialize_with = "ser::scalar")]
    pub b: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicReport {
    pub x: Matrix,
    pub covector: Covector,
    pub jordan: JordanTriple,
    pub grading: Grading,
    /// `g^0`
    pub levi: Subspace,
    /// `u`, the sum of the positive eigenspaces.
    pub nilradical: Subspace,
    /// `q = g^0 ⊕ u`
    pub parabolic: Subspace,
    /// `ann(q)` in dual coordinates.
    pub annihilator: Subspace,
    /// `ker ad(x) ⊆ g^0`
    pub contains_stabilizer: bool,
    /// `u(x) = ann(q)`
    pub coisotropic: bool,
    /// `ad(x)` maps `u` onto `u`.
    pub ad_bijective_on_u: bool,
    /// Krylov hull of `u(x)` under `u`.
    pub u_orbit_hull: Subspace,
    /// `U(x) = x + ann(q)`: bijectivity plus hull equality.
    pub orbit_affine: bool,
    pub block_law: bool,
    pub block_failures: Vec<BlockFailure>,
    /// `<x, u> = 0`
    pub levi_vanishes: bool,
    pub fiber: OrbitRecord,
    pub x_dim: usize,
    pub dimension_identity: bool,
}

impl ParabolicReport {
    pub fn passed(&self) -> bool {
        self.contains_stabilizer
            && self.coisotropic
            && self.orbit_affine
            && self.block_law
            && self.levi_vanishes
            && self.dimension_identity
            && self.grading.direct_sum
            && self.grading.bracket_graded
    }
}

pub fn parabolic_report(malg: &MatrixLieAlgebra, x: &Matrix) -> Result<ParabolicReport> {
    let alg = malg.algebra();
    alg.ensure_valid()?;
    if !malg.is_nondegenerate() {
        return Err(Error::DegenerateTraceForm);
    }
    let n = alg.dim();
    let x_coords = malg.coords(x)?;
    let jordan = jordan_decomposition(x)?;
    let xh = malg.coords(&jordan.hyperbolic)?;
    let grading = grade(alg, &xh)?;
    let zero = Scalar::zero();
    let levi = grading.piece(&zero).cloned().unwrap_or_else(|| Subspace::zero(n));
    let nilradical = grading
        .pieces
        .iter()
        .filter(|p| p.eigenvalue > zero)
        .fold(Subspace::zero(n), |acc, p| acc.sum(&p.space));
    let parabolic = levi.sum(&nilradical);
    let annihilator = parabolic.annihilator();
    let covector = malg.to_covector(x);

    let contains_stabilizer = levi.contains(&alg.ad_matrix(&x_coords).kernel());
    let u_image = tangent_image(alg, &nilradical, &covector);
    let coisotropic = u_image == annihilator;
    let ad_bijective_on_u = nilradical.image(&alg.ad_matrix(&x_coords)) == nilradical;
    let u_orbit_hull = krylov_under(alg, &nilradical, &u_image);
    let orbit_affine = ad_bijective_on_u && u_orbit_hull == annihilator && u_image.dim() == u_orbit_hull.dim();

    let form = malg.trace_form();
    let mut block_failures = Vec::new();
    for p in &grading.pieces {
        for q in &grading.pieces {
            let block = Matrix::from_fn(p.space.dim(), q.space.dim(), |i, j| {
                dot(&form.vec_mul(p.space.vector(i)), q.space.vector(j))
            });
            let ok = if (&p.eigenvalue + &q.eigenvalue).is_zero() {
                block.is_square() && block.rank() == block.rows()
            } else {
                block.is_zero()
            };
            if !ok {
                block_failures.push(BlockFailure {
                    a: p.eigenvalue.clone(),
                    b: q.eigenvalue.clone(),
                });
            }
        }
    }
    let levi_vanishes = nilradical.vectors().iter().all(|u| covector.pair(u).is_zero());
    let fiber = alg
        .subalgebra(&parabolic)?
        .orbit_record(&restrict_to(&covector, &parabolic))?;
    let x_dim = alg.kks_pairing(&covector).rank();
    let dimension_identity = x_dim == 2 * (n - parabolic.dim()) + fiber.orbit_dim;
    Ok(ParabolicReport {
        x: x.clone(),
        covector,
        jordan,
        grading,
        levi,
        nilradical,
        parabolic,
        annihilator,
        contains_stabilizer,
        coisotropic,
        ad_bijective_on_u,
        u_orbit_hull,
        orbit_affine,
        block_law: block_failures.is_empty(),
        block_failures,
        levi_vanishes,
        fiber,
        x_dim,
        dimension_identity,
    })
}

/// Smallest subspace containing `start` and stable under the coadjoint action of `sub`.
fn krylov_under(alg: &LieAlgebra, sub: &Subspace, start: &Subspace) -> Subspace {
    let mut hull = start.clone();
    loop {
        let mut gens = hull.vectors();
        for u in hull.vectors() {
            let u = Covector::new(u);
            for z in sub.vectors() {
                gens.push(alg.coadjoint(&z, &u).into_coords());
            }
        }
        let next = Subspace::span(alg.dim(), gens);
        if next == hull {
            return hull;
        }
        hull = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn sl2() -> MatrixLieAlgebra {
        let h = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let f = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let alg = LieAlgebra::from_matrices("sl2", vec!["H".into(), "E".into(), "F".into()], vec![h, e, f]).unwrap();
        MatrixLieAlgebra::new(alg).unwrap()
    }

    fn sl3() -> MatrixLieAlgebra {
        let unit = |i: usize, j: usize| Matrix::from_fn(3, 3, |a, b| if (a, b) == (i, j) { int(1) } else { int(0) });
        let mut mats = vec![unit(0, 0).sub(&unit(1, 1)), unit(1, 1).sub(&unit(2, 2))];
        let mut labels = vec!["H1".to_string(), "H2".into()];
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    mats.push(unit(i, j));
                    labels.push(format!("E{}{}", i + 1, j + 1));
                }
            }
        }
        MatrixLieAlgebra::new(LieAlgebra::from_matrices("sl3", labels, mats).unwrap()).unwrap()
    }

    #[test]
    fn jordan_chevalley_examples() {
        let x = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let (s, n) = jordan_chevalley(&x);
        assert_eq!(s, Matrix::identity(2));
        assert_eq!(n, Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        let d = Matrix::from_i64(&[&[2, 1], &[0, 3]]);
        assert_eq!(jordan_chevalley(&d), (d.clone(), Matrix::zeros(2, 2)));
        let j = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(jordan_chevalley(&j), (Matrix::zeros(3, 3), j.clone()));
    }

    #[test]
    fn split_examples() {
        let d = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let s = hyperbolic_elliptic_split(&d).unwrap();
        assert_eq!((s.hyperbolic, s.elliptic.is_zero()), (d, true));
        let rot = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let s = hyperbolic_elliptic_split(&rot).unwrap();
        assert!(s.hyperbolic.is_zero());
        assert_eq!(s.elliptic, rot);
        let bad = Matrix::from_i64(&[&[1, -2], &[1, 1]]);
        match hyperbolic_elliptic_split(&bad) {
            Err(Error::UnsupportedSpectrum { factor, .. }) => assert_eq!(factor, "x^2 - 2*x + 3"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn split_mixed_spectrum() {
        // Eigenvalues 1 ± 2i and 3.
        let x = Matrix::from_i64(&[&[1, -2, 0], &[2, 1, 0], &[0, 0, 3]]);
        let s = hyperbolic_elliptic_split(&x).unwrap();
        assert_eq!(s.hyperbolic, Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 3]]));
        assert_eq!(s.elliptic, Matrix::from_i64(&[&[0, -2, 0], &[2, 0, 0], &[0, 0, 0]]));
    }

    #[test]
    fn irrational_real_spectrum_rejected() {
        let x = Matrix::from_i64(&[&[0, 2], &[1, 0]]);
        assert!(matches!(
            hyperbolic_elliptic_split(&x),
            Err(Error::UnsupportedSpectrum { .. })
        ));
    }

    #[test]
    fn grading_examples() {
        let g = sl2();
        let gr = grade(g.algebra(), &[int(1), int(0), int(0)]).unwrap();
        let vals: Vec<_> = gr.pieces.iter().map(|p| p.eigenvalue.clone()).collect();
        assert_eq!(vals, vec![int(2), int(0), int(-2)]);
        assert_eq!(gr.piece(&int(2)).unwrap(), &Subspace::coordinate(3, &[1]));
        let gr = grade(g.algebra(), &[int(0), int(0), int(0)]).unwrap();
        assert_eq!(gr.pieces.len(), 1);
        let g3 = sl3();
        let xh = g3
            .coords(&Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]))
            .unwrap();
        let gr = grade(g3.algebra(), &xh).unwrap();
        let dims: Vec<_> = gr
            .pieces
            .iter()
            .map(|p| (p.eigenvalue.clone(), p.space.dim()))
            .collect();
        assert_eq!(
            dims,
            vec![(int(2), 1), (int(1), 2), (int(0), 2), (int(-1), 2), (int(-2), 1)]
        );
        assert!(gr.bracket_graded && gr.direct_sum);
    }

    #[test]
    fn covector_roundtrip() {
        let g = sl3();
        let x = Matrix::from_i64(&[&[1, 2, 0], &[0, -3, 5], &[7, 0, 2]]);
        assert_eq!(g.from_covector(&g.to_covector(&x)).unwrap(), x);
        assert!(matches!(g.coords(&Matrix::identity(3)), Err(Error::NotInAlgebra)));
    }

    #[test]
    fn sl2_parabolic_at_h() {
        let g = sl2();
        let r = parabolic_report(&g, &Matrix::from_i64(&[&[1, 0], &[0, -1]])).unwrap();
        assert_eq!(r.parabolic, Subspace::coordinate(3, &[0, 1]));
        assert_eq!(r.annihilator, Subspace::coordinate(3, &[2]));
        assert_eq!((r.x_dim, r.fiber.orbit_dim), (2, 0));
        assert!(r.passed());
    }

    #[test]
    fn sl2_parabolic_at_e() {
        let g = sl2();
        let r = parabolic_report(&g, &Matrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap();
        assert!(r.parabolic.is_full());
        assert_eq!((r.x_dim, r.fiber.orbit_dim), (2, 2));
        assert!(r.passed());
    }

    #[test]
    fn sl3_parabolic() {
        let g = sl3();
        let r = parabolic_report(&g, &Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]])).unwrap();
        assert_eq!(r.parabolic.dim(), 5);
        assert!(r.passed());
    }
}
