//! Iterative construction of Pukánszky polarizations for exponential Lie
//! algebras, and exact verification of the monomial property.
//!
//! The procedure does not produce every Pukánszky polarization; it produces
//! one, determined by the candidate order below.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{int, ser, solve, sub_vectors, unit_vector, Matrix, Scalar, Subspace};
use crate::homogeneous::{check_conditions, orth_unchecked, ConditionReport};
use crate::liealg::{globalize, localize, restrict_to, Covector, LieAlgebra};
use crate::mackey::exp_coadjoint;
use crate::poly::{charpoly, Poly};
use crate::records::Verdict;

/// `true` when `m` has a nonzero purely imaginary eigenvalue.
///
/// Such eigenvalues `±bi` are common roots of `p(x)` and `p(-x)`; writing the
/// common factor (zero roots removed) as `D(x^2)`, they are the negative roots of `D`.
pub fn has_imaginary_eigenvalue(m: &Matrix) -> bool {
    let p = charpoly(m);
    let d = Poly::gcd(&p, &p.reflect());
    let (d, _) = d.strip_zero_roots();
    match d.even_to_square_variable() {
        Some(big_d) if big_d.degree().unwrap_or(0) > 0 => big_d.count_real_roots(None, Some(&int(0))) > 0,
        _ => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrecheckReport {
    pub solvable: bool,
    /// Elements tested: every basis vector plus `random_samples` random ones.
    pub tested: usize,
    #[serde(serialize_with = "ser::opt_vector")]
    pub witness: Option<Vec<Scalar>>,
    pub witness_label: Option<String>,
    /// The eigenvalue condition is only sampled, so a pass is necessary-only.
    pub sampled: bool,
}

impl PrecheckReport {
    pub fn passed(&self) -> bool {
        self.solvable && self.witness.is_none()
    }
}

pub fn exponential_precheck(alg: &LieAlgebra, random_samples: usize, seed: u64) -> PrecheckReport {
    let n = alg.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut elements: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vector(n, i)).collect();
    for _ in 0..random_samples {
        elements.push((0..n).map(|_| int(rng.gen_range(-3..=3))).collect());
    }
    let witness = elements
        .iter()
        .find(|z| has_imaginary_eigenvalue(&alg.ad_matrix(z)))
        .cloned();
    PrecheckReport {
        solvable: alg.is_solvable(),
        tested: elements.len(),
        witness_label: witness.as_ref().map(|w| alg.format_element(w)),
        witness,
        sampled: true,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    /// One ideal per step, given in coordinates of the ambient algebra.
    Chain(Vec<Subspace>),
}

#[derive(Clone, Debug)]
pub struct PolarizeOptions {
    pub strategy: Strategy,
    pub override_precheck: bool,
    pub random_samples: usize,
    pub seed: u64,
}

impl Default for PolarizeOptions {
    fn default() -> Self {
        Self {
            strategy: Strategy::Auto,
            override_precheck: false,
            random_samples: 8,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepCertificates {
    pub ideal: bool,
    /// `[a, a] ⊆ ann(X_i)`
    pub orbit_abelian: bool,
    /// `[g_i, a] ⊄ ann(X_i)`
    pub not_orbit_central: bool,
    /// `a ⊆ a^⊥`
    pub isotropic: bool,
    /// `a^⊥ ⊉ g_i`
    pub proper: bool,
}

impl StepCertificates {
    pub fn all(&self) -> bool {
        self.ideal && self.orbit_abelian && self.not_orbit_central && self.isotropic && self.proper
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarizationStep {
    pub algebra: Subspace,
    pub ideal: Subspace,
    pub source: String,
    pub ideal_orth: Subspace,
    pub next: Subspace,
    pub certificates: StepCertificates,
    pub rejected: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarizationTrace {
    pub covector: Covector,
    pub precheck: PrecheckReport,
    pub precheck_overridden: bool,
    pub steps: Vec<PolarizationStep>,
    pub result: Subspace,
    pub conditions: ConditionReport,
    /// `a_i ⊆ h ⊆ a_i^⊥` and `g_i^⊥ ⊆ h ⊆ g_i` at every step.
    pub sandwich: bool,
    pub dims_decrease: bool,
}

impl PolarizationTrace {
    pub fn passed(&self) -> bool {
        self.sandwich
            && self.dims_decrease
            && self.steps.iter().all(|s| s.certificates.all())
            && self.conditions.flags.is_polarization
            && self.conditions.flags.contains_stabilizer
    }
}

pub fn pukanszky_polarization(alg: &LieAlgebra, c: &Covector, opts: &PolarizeOptions) -> Result<PolarizationTrace> {
    alg.ensure_valid()?;
    alg.check_len(c.dim())?;
    let precheck = exponential_precheck(alg, opts.random_samples, opts.seed);
    if !opts.override_precheck {
        if !precheck.solvable {
            return Err(Error::NotSolvable);
        }
        if let Some(label) = &precheck.witness_label {
            return Err(Error::NotExponential { witness: label.clone() });
        }
    }
    let steps = run(alg, c, &opts.strategy, None)?;
    let result = steps
        .last()
        .map_or_else(|| Subspace::full(alg.dim()), |s| s.next.clone());
    let conditions = check_conditions(alg, &result, c)?;
    let sandwich = steps.iter().all(|s| {
        let g_orth = orth_within(alg, &s.algebra, c);
        result.contains(&s.ideal)
            && s.ideal_orth.contains(&result)
            && result.contains(&g_orth)
            && s.algebra.contains(&result)
    });
    let dims_decrease = steps.iter().all(|s| s.next.dim() < s.algebra.dim());
    Ok(PolarizationTrace {
        covector: c.clone(),
        precheck,
        precheck_overridden: opts.override_precheck,
        steps,
        result,
        conditions,
        sandwich,
        dims_decrease,
    })
}

/// `g_i^⊥` computed inside `g_i` at `c|g_i`, returned in ambient coordinates.
fn orth_within(alg: &LieAlgebra, g: &Subspace, c: &Covector) -> Subspace {
    let sub = alg.subalgebra(g).expect("chain terms are subalgebras");
    globalize(g, &sub.stabilizer(&restrict_to(c, g)))
}

/// Runs the iteration; with a `target`, only ideals `a` with `a ⊆ target ⊆ a^⊥` are admissible.
fn run(
    alg: &LieAlgebra,
    c: &Covector,
    strategy: &Strategy,
    target: Option<&Subspace>,
) -> Result<Vec<PolarizationStep>> {
    let mut steps = Vec::new();
    let mut g = Subspace::full(alg.dim());
    loop {
        let sub = alg.subalgebra(&g)?;
        let ci = restrict_to(c, &g);
        if sub.stabilizer(&ci).is_full() {
            return Ok(steps);
        }
        let ann_x = sub.orbit_annihilator(&ci);
        let target_local = target.map(|t| localize(&g, t));
        let candidates: Vec<(String, Subspace)> = match strategy {
            Strategy::Auto => auto_candidates(&sub, &ann_x),
            Strategy::Chain(chain) => match chain.get(steps.len()) {
                Some(a) => {
                    alg.check_subspace(a)?;
                    if !g.contains(a) {
                        return Err(Error::ChainInclusion(format!(
                            "ideal {} is not contained in the current subalgebra",
                            steps.len()
                        )));
                    }
                    vec![(format!("chain[{}]", steps.len()), localize(&g, a))]
                }
                None => {
                    return Err(Error::StrategyExhausted {
                        step: steps.len(),
                        rejected: vec!["chain ended before reaching a polarization".into()],
                    })
                }
            },
        };
        let mut rejected = Vec::new();
        let mut chosen = None;
        for (name, a) in candidates {
            match admissibility(&sub, &ci, &ann_x, &a, target_local.as_ref()) {
                Ok((orth, certificates)) => {
                    chosen = Some((name, a, orth, certificates));
                    break;
                }
                Err(reason) => rejected.push(format!("{name}: {reason}")),
            }
        }
        let Some((source, a, orth, certificates)) = chosen else {
            return Err(Error::StrategyExhausted {
                step: steps.len(),
                rejected,
            });
        };
        let next = globalize(&g, &orth);
        steps.push(PolarizationStep {
            algebra: g.clone(),
            ideal: globalize(&g, &a),
            source,
            ideal_orth: next.clone(),
            next: next.clone(),
            certificates,
            rejected,
        });
        g = next;
    }
}

fn admissibility(
    sub: &LieAlgebra,
    ci: &Covector,
    ann_x: &Subspace,
    a: &Subspace,
    target: Option<&Subspace>,
) -> std::result::Result<(Subspace, StepCertificates), &'static str> {
    if a.is_zero() {
        return Err("zero ideal");
    }
    if !sub.is_ideal(a) {
        return Err("not an ideal");
    }
    if !ann_x.contains(&sub.bracket_space(a, a)) {
        return Err("not abelian modulo ann(X)");
    }
    let full = Subspace::full(sub.dim());
    if ann_x.contains(&sub.bracket_space(&full, a)) {
        return Err("central modulo ann(X)");
    }
    let orth = orth_unchecked(sub, a, ci);
    let certificates = StepCertificates {
        ideal: true,
        orbit_abelian: true,
        not_orbit_central: true,
        isotropic: orth.contains(a),
        proper: !orth.is_full(),
    };
    if !certificates.isotropic || !certificates.proper {
        return Err("fails a ⊆ a^⊥ ⊉ g");
    }
    if let Some(t) = target {
        if !(t.contains(a) && orth.contains(t)) {
            return Err("does not sandwich the target");
        }
    }
    Ok((orth, certificates))
}

/// Candidate ideals of `sub`, in selection order: the last nonzero derived
/// term; the ascending central series modulo `ann(X)` and its one-step
/// extensions `Z_k + span(v)` (complement vectors in reverse order); the
/// centralizer of the derived algebra.
fn auto_candidates(sub: &LieAlgebra, ann_x: &Subspace) -> Vec<(String, Subspace)> {
    let mut out: Vec<(String, Subspace)> = Vec::new();
    let mut push = |name: String, s: Subspace| {
        if !out.iter().any(|(_, t)| *t == s) {
            out.push((name, s));
        }
    };
    let derived = sub.derived_series();
    if let Some(last) = derived.iter().rev().find(|s| !s.is_zero()) {
        push("derived".into(), last.clone());
    }
    let series = sub.upper_central_series_mod(ann_x);
    for (k, z) in series.iter().enumerate().skip(1) {
        push(format!("central[{k}]"), z.clone());
    }
    for k in 0..series.len().saturating_sub(1) {
        let (low, high) = (&series[k], &series[k + 1]);
        let local = localize(high, low);
        for i in local.complement_indices().into_iter().rev() {
            let v = high.vector(i).to_vec();
            push(
                format!("central[{k}]+{}", sub.format_element(&v)),
                low.sum(&Subspace::span(sub.dim(), [v])),
            );
        }
    }
    if derived.len() > 1 {
        push("centralizer(derived)".into(), sub.centralizer(&derived[1]));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reach {
    #[serde(serialize_with = "ser::vector")]
    pub direction: Vec<Scalar>,
    /// `exp(flows[0]) ... exp(flows[k-1])` carries `c` to `c + direction`.
    #[serde(serialize_with = "ser::vectors")]
    pub flows: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialReport {
    pub point_orbit: bool,
    /// A pair in `h` with `<c, [W, W']> != 0`.
    #[serde(serialize_with = "ser::vectors")]
    pub point_orbit_witness: Vec<Vec<Scalar>>,
    pub orbit_dim: usize,
    pub dimension_identity: bool,
    pub pukanszky: Verdict,
    pub reached: Vec<Reach>,
}

impl MonomialReport {
    pub fn passed(&self) -> bool {
        self.point_orbit && self.dimension_identity && self.pukanszky == Verdict::Yes
    }
}

/// Point-orbit condition, `dim X = 2 dim(g/h)`, and, for nilpotent algebras,
/// exact reachability of `c + ann(h)` by products of one-parameter flows.
///
/// The flows come from a chain of ideals sandwiching `h`: the supplied trace
/// when it ends at `h`, otherwise one searched for with `h` as target.
pub fn verify_monomial(
    alg: &LieAlgebra,
    c: &Covector,
    h: &Subspace,
    trace: Option<&PolarizationTrace>,
) -> Result<MonomialReport> {
    alg.ensure_valid()?;
    alg.check_len(c.dim())?;
    alg.require_subalgebra(h)?;
    let vs = h.vectors();
    let mut witness = Vec::new();
    'outer: for (i, x) in vs.iter().enumerate() {
        for y in &vs[i + 1..] {
            if !c.pair(&alg.bracket(x, y)).is_zero() {
                witness = vec![x.clone(), y.clone()];
                break 'outer;
            }
        }
    }
    let orbit_dim = alg.kks_pairing(c).rank();
    let dimension_identity = orbit_dim == 2 * (alg.dim() - h.dim());
    let point_orbit = witness.is_empty();

    let (pukanszky, reached) = if !point_orbit || !alg.is_nilpotent() {
        (Verdict::Undecided, Vec::new())
    } else {
        let chain = match trace {
            Some(t) if t.result == *h && t.covector == *c => Some(t.steps.clone()),
            _ => run(alg, c, &Strategy::Auto, Some(h))
                .ok()
                .filter(|s| s.last().map_or(h.is_full(), |l| l.next == *h)),
        };
        match chain {
            Some(steps) => reach_annihilator(alg, c, h, &steps)?,
            None => (Verdict::Undecided, Vec::new()),
        }
    };

    Ok(MonomialReport {
        point_orbit,
        point_orbit_witness: witness,
        orbit_dim,
        dimension_identity,
        pukanszky,
        reached,
    })
}

fn reach_annihilator(
    alg: &LieAlgebra,
    c: &Covector,
    h: &Subspace,
    steps: &[PolarizationStep],
) -> Result<(Verdict, Vec<Reach>)> {
    let hull = alg.krylov_hull(c);
    let mut reached = Vec::new();
    for alpha in h.annihilator().vectors() {
        if !hull.contains_vector(&alpha) {
            return Ok((Verdict::No, reached));
        }
        let target = Covector::new(c.coords().iter().zip(&alpha).map(|(a, b)| a + b).collect());
        let mut m = c.clone();
        let mut flows = Vec::new();
        for step in steps.iter().rev() {
            let g = &step.algebra;
            let basis = step.ideal.vectors();
            let columns: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|z| restrict_to(&alg.coadjoint(z, &m), g).into_coords())
                .collect();
            let rhs = restrict_to(&Covector::new(sub_vectors(target.coords(), m.coords())), g);
            let frame = Matrix::from_columns(g.dim(), &columns);
            let Some(coeffs) = solve(&frame, rhs.coords())? else {
                return Ok((Verdict::Undecided, reached));
            };
            let z = Matrix::from_rows(alg.dim(), &basis)?.vec_mul(&coeffs);
            m = exp_coadjoint(alg, &z, &m)?;
            flows.push(z);
        }
        if m != target {
            return Ok((Verdict::Undecided, reached));
        }
        flows.reverse();
        reached.push(Reach {
            direction: alpha,
            flows,
        });
    }
    Ok((Verdict::Yes, reached))
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

    fn n4() -> LieAlgebra {
        LieAlgebra::from_brackets("n4", labels(4), &[(0, 1, vec![(2, int(1))]), (0, 2, vec![(3, int(1))])]).unwrap()
    }

    fn e2() -> LieAlgebra {
        // [J, P1] = P2, [J, P2] = -P1
        LieAlgebra::from_brackets(
            "e2",
            vec!["J".into(), "P1".into(), "P2".into()],
            &[(0, 1, vec![(2, int(1))]), (0, 2, vec![(1, int(-1))])],
        )
        .unwrap()
    }

    fn affine2() -> LieAlgebra {
        LieAlgebra::from_brackets("aff", vec!["A".into(), "B".into()], &[(0, 1, vec![(1, int(1))])]).unwrap()
    }

    #[test]
    fn precheck_examples() {
        assert!(exponential_precheck(&h3(), 4, 1).passed());
        let r = exponential_precheck(&e2(), 4, 1);
        assert!(r.solvable);
        assert_eq!(r.witness, Some(unit_vector(3, 0)));
        assert!(exponential_precheck(&affine2(), 4, 1).passed());
    }

    #[test]
    fn heisenberg_polarization() {
        let t = pukanszky_polarization(&h3(), &Covector::dual_basis(3, 2), &PolarizeOptions::default()).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].ideal, Subspace::coordinate(3, &[1, 2]));
        assert!(t.steps[0].rejected.iter().any(|r| r.starts_with("derived")));
        assert_eq!(t.result, Subspace::coordinate(3, &[1, 2]));
        assert!(t.passed());
        let m = verify_monomial(&h3(), &Covector::dual_basis(3, 2), &t.result, Some(&t)).unwrap();
        assert!(m.passed());
        assert_eq!(m.reached[0].flows, vec![unit_vector(3, 1)]);
    }

    #[test]
    fn abelian_polarization_is_everything() {
        let g = LieAlgebra::from_brackets("a3", labels(3), &[]).unwrap();
        let t = pukanszky_polarization(
            &g,
            &Covector::new(vec![int(1), int(2), int(3)]),
            &PolarizeOptions::default(),
        )
        .unwrap();
        assert!(t.steps.is_empty());
        assert!(t.result.is_full());
    }

    #[test]
    fn filiform_polarization() {
        let g = n4();
        let c = Covector::dual_basis(4, 3);
        let t = pukanszky_polarization(&g, &c, &PolarizeOptions::default()).unwrap();
        assert_eq!(t.result, Subspace::coordinate(4, &[1, 2, 3]));
        assert!(t.passed());
        let m = verify_monomial(&g, &c, &t.result, None).unwrap();
        assert!(m.passed());
    }

    #[test]
    fn point_orbit_failure() {
        let g = h3();
        let m = verify_monomial(&g, &Covector::dual_basis(3, 2), &Subspace::full(3), None).unwrap();
        assert!(!m.point_orbit);
        assert_eq!(m.point_orbit_witness.len(), 2);
    }

    #[test]
    fn non_exponential_refused_without_override() {
        let g = e2();
        let c = Covector::dual_basis(3, 1);
        assert!(matches!(
            pukanszky_polarization(&g, &c, &PolarizeOptions::default()),
            Err(Error::NotExponential { .. })
        ));
    }

    #[test]
    fn chain_strategy() {
        let g = h3();
        let opts = PolarizeOptions {
            strategy: Strategy::Chain(vec![Subspace::coordinate(3, &[0, 2])]),
            ..Default::default()
        };
        let t = pukanszky_polarization(&g, &Covector::dual_basis(3, 2), &opts).unwrap();
        assert_eq!(t.result, Subspace::coordinate(3, &[0, 2]));
        let bad = PolarizeOptions {
            strategy: Strategy::Chain(vec![Subspace::coordinate(3, &[2])]),
            ..Default::default()
        };
        assert!(matches!(
            pukanszky_polarization(&g, &Covector::dual_basis(3, 2), &bad),
            Err(Error::StrategyExhausted { step: 0, .. })
        ));
    }
}
