//! Normal-subalgebra analysis at the Lie algebra level: little group,
//! induction-step relations, the infinitesimal Mackey obstruction, and the
//! abelian (Mackey–Wigner) specialization.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{is_zero_vector, ser, solve, symmetric_signature, Matrix, Scalar, Signature, Subspace};
use crate::homogeneous::{orth_unchecked, tangent_image};
use crate::liealg::{localize, restrict_to, Covector, LieAlgebra, OrbitRecord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LittleGroupData {
    pub ideal: Subspace,
    pub covector: Covector,
    /// `c`, the restriction of the covector to the ideal (RREF coordinates).
    pub restricted: Covector,
    /// `g_c`
    pub little: Subspace,
    /// `n_c = n ∩ g_c`
    pub ideal_stabilizer: Subspace,
    /// `h = n + g_c`
    pub h: Subspace,
}

pub fn little_group_step(alg: &LieAlgebra, n: &Subspace, c: &Covector) -> Result<LittleGroupData> {
    alg.ensure_valid()?;
    alg.check_len(c.dim())?;
    alg.require_ideal(n)?;
    let little = orth_unchecked(alg, n, c);
    let ideal_stabilizer = n.intersect(&little);
    Ok(LittleGroupData {
        ideal: n.clone(),
        covector: c.clone(),
        restricted: restrict_to(c, n),
        h: n.sum(&little),
        little,
        ideal_stabilizer,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpLinearFailure {
    #[serde(serialize_with = "ser::vector")]
    pub element: Vec<Scalar>,
    /// Power of `ad` at which the pairing is nonzero; 1 flags `<c, [n_c, n]>`.
    pub power: usize,
}

/// Flags for the three relations that make `H` satisfy the homogeneous-case
/// hypotheses: `g_c ⊆ h`, `n_c(c) = ann(h)`, and exactness of
/// `exp(Z)(c) = c + Z(c)` for `Z` in `n_c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepRelations {
    pub contains_stabilizer: bool,
    #[serde(serialize_with = "ser::opt_vector")]
    pub stabilizer_witness: Option<Vec<Scalar>>,
    pub orbit_tangent: bool,
    pub ideal_image: Subspace,
    pub annihilator: Subspace,
    pub exp_linear: bool,
    pub exp_linear_failure: Option<ExpLinearFailure>,
    /// Set when the tangent relation fails for a genuine ideal, which the
    /// underlying theorem rules out.
    pub theorem_violated: bool,
}

impl StepRelations {
    pub fn all(&self) -> bool {
        self.contains_stabilizer && self.orbit_tangent && self.exp_linear
    }
}

pub fn verify_step_relations(alg: &LieAlgebra, data: &LittleGroupData) -> Result<StepRelations> {
    alg.check_subspace(&data.h)?;
    let c = &data.covector;
    let stabilizer = alg.stabilizer(c);
    let stabilizer_witness = data.h.missing_from(&stabilizer);
    let ideal_image = tangent_image(alg, &data.ideal_stabilizer, c);
    let annihilator = data.h.annihilator();
    let orbit_tangent = ideal_image == annihilator;
    let exp_linear_failure = exp_linear_failure(alg, data);
    Ok(StepRelations {
        contains_stabilizer: stabilizer_witness.is_none(),
        stabilizer_witness,
        orbit_tangent,
        ideal_image,
        annihilator,
        exp_linear: exp_linear_failure.is_none(),
        exp_linear_failure,
        theorem_violated: !orbit_tangent && alg.is_ideal(&data.ideal),
    })
}

fn exp_linear_failure(alg: &LieAlgebra, data: &LittleGroupData) -> Option<ExpLinearFailure> {
    let c = &data.covector;
    let n_vectors = data.ideal.vectors();
    for z in data.ideal_stabilizer.vectors() {
        if n_vectors.iter().any(|w| !c.pair(&alg.bracket(&z, w)).is_zero()) {
            return Some(ExpLinearFailure { element: z, power: 1 });
        }
        let ad = alg.ad_matrix(&z);
        let mut image = Subspace::full(alg.dim()).image(&ad);
        let mut power = 1;
        loop {
            let next = image.image(&ad);
            power += 1;
            if next.vectors().iter().any(|v| !c.pair(v).is_zero()) {
                return Some(ExpLinearFailure { element: z, power });
            }
            if next.is_zero() || next == image {
                break;
            }
            image = next;
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionDims {
    /// `dim n_c / j`
    pub center: usize,
    /// `dim h_c / j`
    pub total: usize,
    /// `dim h_c / n_c`
    pub quotient: usize,
}

/// The central extension `0 -> n_c/j -> h_c/j -> h_c/n_c -> 0` through a
/// section of `h_c -> h_c/n_c`, its cocycle, and the coboundary test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    /// `j = ker(c|n_c)`
    pub kernel: Subspace,
    #[serde(serialize_with = "ser::vectors")]
    pub section: Vec<Vec<Scalar>>,
    /// Structure constants of `h_c/n_c` in the section basis: `quotient_bracket[a][b]`.
    #[serde(skip)]
    pub quotient_bracket: Vec<Vec<Vec<Scalar>>>,
    pub cocycle: Matrix,
    pub trivial: bool,
    #[serde(serialize_with = "ser::opt_vector")]
    pub primitive: Option<Vec<Scalar>>,
    pub dims: ExtensionDims,
    pub cocycle_identity: bool,
    /// `<c_ext, [σa, σb]>` for the chosen extension covector.
    pub extension_cocycle: Matrix,
    pub extension_cohomologous: bool,
}

pub fn obstruction_step(
    alg: &LieAlgebra,
    data: &LittleGroupData,
    extension: Option<&Covector>,
) -> Result<ObstructionReport> {
    obstruction_with_section(alg, data, extension, None)
}

/// As [`obstruction_step`], with an explicit section: vectors of `g_c` whose
/// classes form a basis of `g_c / n_c`.
pub fn obstruction_with_section(
    alg: &LieAlgebra,
    data: &LittleGroupData,
    extension: Option<&Covector>,
    section: Option<&[Vec<Scalar>]>,
) -> Result<ObstructionReport> {
    let c = &data.covector;
    let extension = match extension {
        Some(e) => {
            alg.check_len(e.dim())?;
            if restrict_to(e, &data.ideal) != data.restricted {
                return Err(Error::InconsistentExtension);
            }
            e.clone()
        }
        None => c.clone(),
    };
    let hc = &data.little;
    let nc = &data.ideal_stabilizer;
    let section = match section {
        Some(s) => {
            let span = Subspace::span(alg.dim(), s.iter().cloned()).sum(nc);
            if s.len() + nc.dim() != hc.dim() || span != *hc {
                return Err(Error::InvalidSection(format!(
                    "{} vectors do not complete n_c to g_c",
                    s.len()
                )));
            }
            s.to_vec()
        }
        None => canonical_section(hc, nc),
    };
    let r = section.len();
    let nc_vectors = nc.vectors();
    let mut columns = section.clone();
    columns.extend(nc_vectors.iter().cloned());
    let frame = Matrix::from_columns(alg.dim(), &columns);

    // [σa, σb] = Σ q_k σ_k + ν with ν in n_c; f(a, b) = <c, ν>.
    let mut quotient_bracket = vec![vec![vec![Scalar::zero(); r]; r]; r];
    let mut cocycle_entries = vec![vec![Scalar::zero(); r]; r];
    let mut extension_entries = vec![vec![Scalar::zero(); r]; r];
    for a in 0..r {
        for b in 0..r {
            let br = alg.bracket(&section[a], &section[b]);
            let coords = solve(&frame, &br)?.expect("g_c is a subalgebra");
            let nu = nc_combination(&nc_vectors, &coords[r..], alg.dim());
            quotient_bracket[a][b] = coords[..r].to_vec();
            extension_entries[a][b] = extension.pair(&br);
            cocycle_entries[a][b] = c.pair(&nu);
        }
    }

    let cocycle = Matrix::from_fn(r, r, |a, b| cocycle_entries[a][b].clone());
    let kernel = Subspace::span(
        alg.dim(),
        Matrix::from_rows(alg.dim(), &[c.coords().to_vec()])
            .expect("covector length")
            .kernel()
            .intersect(nc)
            .vectors(),
    );
    let center = nc.dim() - kernel.dim();
    let primitive = coboundary_primitive(&quotient_bracket, &cocycle);
    let extension_cocycle = Matrix::from_fn(r, r, |a, b| extension_entries[a][b].clone());
    let difference = extension_cocycle.sub(&cocycle);
    Ok(ObstructionReport {
        kernel,
        cocycle_identity: satisfies_cocycle_identity(&quotient_bracket, &cocycle),
        extension_cohomologous: coboundary_primitive(&quotient_bracket, &difference).is_some(),
        trivial: primitive.is_some(),
        primitive,
        dims: ExtensionDims {
            center,
            total: hc.dim() - (nc.dim() - center),
            quotient: r,
        },
        section,
        quotient_bracket,
        cocycle,
        extension_cocycle,
    })
}

fn nc_combination(nc: &[Vec<Scalar>], coords: &[Scalar], n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n];
    for (v, k) in nc.iter().zip(coords) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += k * x;
        }
    }
    out
}

/// RREF basis vectors of `hc` at the local complement positions of `nc`.
fn canonical_section(hc: &Subspace, nc: &Subspace) -> Vec<Vec<Scalar>> {
    let local = localize(hc, nc);
    local
        .complement_indices()
        .into_iter()
        .map(|i| hc.vector(i).to_vec())
        .collect()
}

/// `β` with `f(a, b) = β(q(a, b))` for all `a < b`, if one exists.
pub fn coboundary_primitive(q: &[Vec<Vec<Scalar>>], f: &Matrix) -> Option<Vec<Scalar>> {
    let r = q.len();
    if r == 0 {
        return Some(Vec::new());
    }
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            rows.push(q[a][b].clone());
            rhs.push(f[(a, b)].clone());
        }
    }
    if rows.is_empty() {
        return Some(vec![Scalar::zero(); r]);
    }
    let m = Matrix::from_rows(r, &rows).expect("row length");
    solve(&m, &rhs).expect("dimensions agree")
}

fn satisfies_cocycle_identity(q: &[Vec<Vec<Scalar>>], f: &Matrix) -> bool {
    let r = q.len();
    let form = |u: &[Scalar], w: usize| -> Scalar { (0..r).fold(Scalar::zero(), |acc, k| acc + &u[k] * &f[(k, w)]) };
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let s = form(&q[a][b], c) + form(&q[b][c], a) + form(&q[c][a], b);
                if !s.is_zero() {
                    return false;
                }
            }
        }
    }
    (0..r).all(|a| (0..r).all(|b| f[(a, b)] == -f[(b, a)].clone()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemidirectWitness {
    pub name: String,
    /// The complement intersected with `h`.
    pub complement: Subspace,
    pub obstruction: ObstructionReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemidirectReport {
    pub witness: Option<SemidirectWitness>,
    pub rejected: Vec<String>,
}

/// Looks for a declared complement `s` with `(s ∩ h) ⊕ n = h` a subalgebra
/// splitting on which the obstruction cocycle vanishes identically.
///
/// Requires `c` to be fixed by `h`, i.e. `n_c = n`.
pub fn semidirect_witness(
    alg: &LieAlgebra,
    n: &Subspace,
    c: &Covector,
    candidates: &[(String, Subspace)],
) -> Result<SemidirectReport> {
    let data = little_group_step(alg, n, c)?;
    if data.ideal_stabilizer != data.ideal {
        return Err(Error::NotPointOrbit);
    }
    let mut rejected = Vec::new();
    for (name, s) in candidates {
        alg.check_subspace(s)?;
        let part = s.intersect(&data.h);
        if !alg.is_subalgebra(&part) {
            rejected.push(format!("{name}: not a subalgebra"));
            continue;
        }
        if part.dim() + n.dim() != data.h.dim() || part.sum(n) != data.h {
            rejected.push(format!("{name}: does not complement the ideal in h"));
            continue;
        }
        let obstruction = obstruction_with_section(alg, &data, None, Some(&part.vectors()))?;
        if !obstruction.cocycle.is_zero() {
            rejected.push(format!("{name}: cocycle does not vanish"));
            continue;
        }
        return Ok(SemidirectReport {
            witness: Some(SemidirectWitness {
                name: name.clone(),
                complement: part,
                obstruction,
            }),
            rejected,
        });
    }
    Ok(SemidirectReport {
        witness: None,
        rejected,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianStep {
    pub h: Subspace,
    pub y: OrbitRecord,
    pub x_dim: usize,
    /// `dim g/h`
    pub quotient_dim: usize,
    /// `dim a(c)`
    pub ideal_image_dim: usize,
    /// `dim h/h^⊥`
    pub h_over_orth_dim: usize,
    pub quotient_identity: bool,
    pub fiber_identity: bool,
    pub induced_identity: bool,
}

impl AbelianStep {
    pub fn all(&self) -> bool {
        self.quotient_identity && self.fiber_identity && self.induced_identity
    }
}

/// Checks `[a, a] ⊆ ann(X)` for the identity-component orbit through `c`.
pub fn require_orbit_abelian(alg: &LieAlgebra, a: &Subspace, c: &Covector) -> Result<()> {
    let ann = alg.orbit_annihilator(c);
    let derived = alg.bracket_space(a, a);
    match ann.missing_from(&derived) {
        None => Ok(()),
        Some(v) => Err(Error::NotOrbitAbelian(alg.format_element(&v))),
    }
}

pub fn abelian_step(alg: &LieAlgebra, a: &Subspace, c: &Covector) -> Result<AbelianStep> {
    alg.ensure_valid()?;
    alg.check_len(c.dim())?;
    alg.require_ideal(a)?;
    require_orbit_abelian(alg, a, c)?;
    let n = alg.dim();
    let x_dim = alg.kks_pairing(c).rank();
    let h = orth_unchecked(alg, a, c);
    let sub = alg.subalgebra(&h)?;
    let y = sub.orbit_record(&restrict_to(c, &h))?;
    let h_orth = orth_unchecked(alg, &h, c);
    let quotient_dim = n - h.dim();
    let ideal_image_dim = tangent_image(alg, a, c).dim();
    let h_over_orth_dim = h.dim() - h_orth.dim();
    Ok(AbelianStep {
        quotient_identity: quotient_dim == ideal_image_dim,
        fiber_identity: h.contains(&h_orth) && h_over_orth_dim == y.orbit_dim,
        induced_identity: x_dim == 2 * quotient_dim + y.orbit_dim,
        h,
        y,
        x_dim,
        quotient_dim,
        ideal_image_dim,
        h_over_orth_dim,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LittleKind {
    Trivial,
    So3,
    E2,
    Sl2,
    Lorentz,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LittleAlgebraClass {
    /// `h / a` where `h` stabilizes `c|a`.
    pub h: Subspace,
    pub dim: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    pub killing_rank: usize,
    pub killing_signature: Signature,
    pub kind: LittleKind,
}

pub fn classify_little_algebra(alg: &LieAlgebra, a: &Subspace, c: &Covector) -> Result<LittleAlgebraClass> {
    alg.ensure_valid()?;
    alg.check_len(c.dim())?;
    alg.require_ideal(a)?;
    if let Some(v) = alg.bracket_space(a, a).vectors().into_iter().next() {
        return Err(Error::NotAbelianIdeal(alg.format_element(&v)));
    }
    let h = orth_unchecked(alg, a, c);
    let sub = alg.subalgebra(&h)?;
    let quotient = sub.quotient(&localize(&h, a))?;
    let killing = quotient.killing_form();
    let sig = symmetric_signature(&killing);
    let dim = quotient.dim();
    let solvable = quotient.is_solvable();
    let kind = match (dim, solvable, sig.positive, sig.negative) {
        (0, _, _, _) => LittleKind::Trivial,
        (3, false, 0, 3) => LittleKind::So3,
        (3, true, 0, 1) if !quotient.is_nilpotent() => LittleKind::E2,
        (3, false, 2, 1) | (3, false, 1, 2) => LittleKind::Sl2,
        (6, false, 3, 3) => LittleKind::Lorentz,
        _ => LittleKind::Other,
    };
    Ok(LittleAlgebraClass {
        h,
        dim,
        solvable,
        nilpotent: quotient.is_nilpotent(),
        killing_rank: sig.rank(),
        killing_signature: sig,
        kind,
    })
}

/// `exp(Z)(c) = Σ Z^k(c) / k!`, a finite sum when `ad(Z)` is nilpotent.
pub fn exp_coadjoint(alg: &LieAlgebra, z: &[Scalar], c: &Covector) -> Result<Covector> {
    alg.check_len(z.len())?;
    alg.check_len(c.dim())?;
    if !alg.ad_matrix(z).is_nilpotent() {
        return Err(Error::NotNilpotent(alg.format_element(z)));
    }
    let mut total = c.coords().to_vec();
    let mut term = c.clone();
    for k in 1..=alg.dim() + 1 {
        let next = alg.coadjoint(z, &term).into_coords();
        if is_zero_vector(&next) {
            break;
        }
        let scaled: Vec<Scalar> = next.iter().map(|x| x / Scalar::from_integer(k.into())).collect();
        for (t, s) in total.iter_mut().zip(&scaled) {
            *t += s;
        }
        term = Covector::new(scaled);
    }
    Ok(Covector::new(total))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SynopsisDims {
    pub x: usize,
    /// `dim n - dim n_c`
    pub u: usize,
    /// `dim g - dim h`
    pub g_over_h: usize,
    pub y: usize,
    /// `dim X - 2 dim(G/H) - dim U`; negative values indicate a failed relation.
    pub v: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MackeyReport {
    pub little: LittleGroupData,
    pub relations: StepRelations,
    pub obstruction: ObstructionReport,
    pub dims: SynopsisDims,
    pub v_even: bool,
    /// `dim V == dim Y - dim U` with `Y` the orbit of `c|h` under `h`.
    pub v_consistent: bool,
}

impl MackeyReport {
    pub fn passed(&self) -> bool {
        self.relations.all() && self.v_even && self.v_consistent && self.obstruction.cocycle_identity
    }
}

pub fn mackey_report(
    alg: &LieAlgebra,
    n: &Subspace,
    c: &Covector,
    extension: Option<&Covector>,
) -> Result<MackeyReport> {
    let little = little_group_step(alg, n, c)?;
    let relations = verify_step_relations(alg, &little)?;
    let obstruction = obstruction_step(alg, &little, extension)?;
    let x = alg.kks_pairing(c).rank();
    let u = n.dim() - little.ideal_stabilizer.dim();
    let g_over_h = alg.dim() - little.h.dim();
    let y = alg
        .subalgebra(&little.h)?
        .kks_pairing(&restrict_to(c, &little.h))
        .rank();
    let v = x as i64 - 2 * g_over_h as i64 - u as i64;
    Ok(MackeyReport {
        v_even: v >= 0 && v % 2 == 0,
        v_consistent: v == y as i64 - u as i64,
        dims: SynopsisDims { x, u, g_over_h, y, v },
        little,
        relations,
        obstruction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use num_traits::One;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    fn h3() -> LieAlgebra {
        LieAlgebra::from_brackets("h3", labels(3), &[(0, 1, vec![(2, int(1))])]).unwrap()
    }

    fn n4() -> LieAlgebra {
        LieAlgebra::from_brackets("n4", labels(4), &[(0, 1, vec![(2, int(1))]), (0, 2, vec![(3, int(1))])]).unwrap()
    }

    #[test]
    fn heisenberg_center_little_group() {
        let g = h3();
        let n = Subspace::coordinate(3, &[2]);
        let d = little_group_step(&g, &n, &Covector::dual_basis(3, 2)).unwrap();
        assert!(d.little.is_full());
        assert_eq!(d.ideal_stabilizer, n);
        assert!(d.h.is_full());
        let rel = verify_step_relations(&g, &d).unwrap();
        assert!(rel.all());
        assert!(rel.annihilator.is_zero());
    }

    #[test]
    fn heisenberg_plane_relations() {
        let g = h3();
        let n = Subspace::coordinate(3, &[1, 2]);
        let d = little_group_step(&g, &n, &Covector::dual_basis(3, 2)).unwrap();
        assert_eq!(d.little, n);
        assert_eq!(d.ideal_stabilizer, n);
        assert_eq!(d.h, n);
        let rel = verify_step_relations(&g, &d).unwrap();
        assert!(rel.all());
        assert_eq!(rel.ideal_image, Subspace::coordinate(3, &[0]));
    }

    #[test]
    fn zero_covector_little_group() {
        let g = n4();
        let n = Subspace::coordinate(4, &[2, 3]);
        let d = little_group_step(&g, &n, &Covector::zero(4)).unwrap();
        assert!(d.little.is_full() && d.h.is_full());
    }

    #[test]
    fn heisenberg_center_obstruction_nontrivial() {
        let g = h3();
        let d = little_group_step(&g, &Subspace::coordinate(3, &[2]), &Covector::dual_basis(3, 2)).unwrap();
        let ob = obstruction_step(&g, &d, None).unwrap();
        assert!(ob.kernel.is_zero());
        assert_eq!(ob.cocycle[(0, 1)], int(1));
        assert!(!ob.trivial);
        assert!(ob.cocycle_identity);
        assert_eq!((ob.dims.center, ob.dims.total, ob.dims.quotient), (1, 3, 2));
    }

    #[test]
    fn vanishing_restriction_gives_trivial_obstruction() {
        let g = h3();
        let d = little_group_step(&g, &Subspace::coordinate(3, &[2]), &Covector::dual_basis(3, 0)).unwrap();
        let ob = obstruction_step(&g, &d, None).unwrap();
        assert!(ob.trivial);
        assert!(ob.cocycle.is_zero());
    }

    #[test]
    fn inconsistent_extension_rejected() {
        let g = h3();
        let d = little_group_step(&g, &Subspace::coordinate(3, &[2]), &Covector::dual_basis(3, 2)).unwrap();
        let bad = Covector::dual_basis(3, 0);
        assert_eq!(obstruction_step(&g, &d, Some(&bad)), Err(Error::InconsistentExtension));
        let good = Covector::new(vec![int(5), int(-1), int(1)]);
        let ob = obstruction_step(&g, &d, Some(&good)).unwrap();
        assert!(ob.extension_cohomologous);
    }

    #[test]
    fn heisenberg_semidirect_none() {
        let g = h3();
        let cands = vec![("plane".to_string(), Subspace::coordinate(3, &[0, 1]))];
        let r = semidirect_witness(&g, &Subspace::coordinate(3, &[2]), &Covector::dual_basis(3, 2), &cands).unwrap();
        assert!(r.witness.is_none());
        assert_eq!(r.rejected.len(), 1);
    }

    #[test]
    fn abelian_splitting_witness() {
        let g = LieAlgebra::from_brackets("a3", labels(3), &[]).unwrap();
        let cands = vec![("s".to_string(), Subspace::coordinate(3, &[0, 1]))];
        let c = Covector::new(vec![int(1), int(2), int(3)]);
        let r = semidirect_witness(&g, &Subspace::coordinate(3, &[2]), &c, &cands).unwrap();
        assert!(r.witness.unwrap().obstruction.cocycle.is_zero());
    }

    #[test]
    fn heisenberg_abelian_step() {
        let g = h3();
        let s = abelian_step(&g, &Subspace::coordinate(3, &[1, 2]), &Covector::dual_basis(3, 2)).unwrap();
        assert_eq!(s.x_dim, 2);
        assert_eq!(s.quotient_dim, 1);
        assert_eq!(s.y.orbit_dim, 0);
        assert_eq!(s.h, Subspace::coordinate(3, &[1, 2]));
        assert!(s.all());
    }

    #[test]
    fn exp_coadjoint_examples() {
        let g = h3();
        let c = Covector::dual_basis(3, 2);
        assert_eq!(exp_coadjoint(&g, &[int(0), int(0), int(1)], &c).unwrap(), c);
        let moved = exp_coadjoint(&g, &[int(0), int(1), int(0)], &c).unwrap();
        assert_eq!(moved.coords(), &[int(1), int(0), int(1)][..]);
        let sl2 = LieAlgebra::from_brackets(
            "sl2",
            vec!["H".into(), "E".into(), "F".into()],
            &[
                (0, 1, vec![(1, int(2))]),
                (0, 2, vec![(2, int(-2))]),
                (1, 2, vec![(0, int(1))]),
            ],
        )
        .unwrap();
        assert!(matches!(
            exp_coadjoint(&sl2, &[int(1), int(0), int(0)], &Covector::zero(3)),
            Err(Error::NotNilpotent(_))
        ));
    }

    #[test]
    fn exp_matches_matrix_exponential_on_n4() {
        let g = n4();
        let c = Covector::new(vec![int(1), int(-2), int(3), int(5)]);
        let z = vec![int(2), int(1), int(0), int(-1)];
        // The coadjoint generator as a matrix on dual coordinates is -ad(Z)^T.
        let gen = g.ad_matrix(&z).transpose().neg();
        let mut exp = Matrix::identity(4);
        let mut term = Matrix::identity(4);
        for k in 1..=4 {
            term = term.mul(&gen).scale(&(Scalar::one() / int(k)));
            exp = exp.add(&term);
        }
        assert_eq!(
            exp_coadjoint(&g, &z, &c).unwrap().coords(),
            &exp.mul_vec(c.coords())[..]
        );
    }
}
