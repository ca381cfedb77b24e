//! Coisotropy, polarization and the infinitesimal Pukánszky condition for a
//! subalgebra at a covector.

use serde::Serialize;

use crate::error::Result;
use crate::exactla::{ser, Matrix, Scalar, Subspace};
use crate::liealg::{Covector, LieAlgebra};

/// `h^⊥ = {Z : <c, [W, Z]> = 0 for all W in h}`.
pub fn orth(alg: &LieAlgebra, h: &Subspace, c: &Covector) -> Result<Subspace> {
    alg.check_subspace(h)?;
    alg.check_len(c.dim())?;
    Ok(orth_unchecked(alg, h, c))
}

pub(crate) fn orth_unchecked(alg: &LieAlgebra, h: &Subspace, c: &Covector) -> Subspace {
    let b = alg.kks_pairing(c);
    let rows: Vec<Vec<Scalar>> = h.vectors().iter().map(|w| b.vec_mul(w)).collect();
    Matrix::from_rows(alg.dim(), &rows)
        .expect("rows of length dim")
        .kernel()
}

/// `h(c) = {W(c) : W in h}` in dual coordinates.
pub fn tangent_image(alg: &LieAlgebra, h: &Subspace, c: &Covector) -> Subspace {
    Subspace::span(alg.dim(), h.vectors().iter().map(|w| alg.coadjoint(w, c).into_coords()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionFlags {
    pub contains_stabilizer: bool,
    pub coisotropic: bool,
    pub is_polarization: bool,
    pub pukanszky_infinitesimal: bool,
}

impl ConditionFlags {
    pub fn all(&self) -> bool {
        self.contains_stabilizer && self.coisotropic && self.is_polarization && self.pukanszky_infinitesimal
    }
}

/// Vectors violating the inclusion behind each failed flag.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConditionWitnesses {
    /// In the stabilizer but not in `h`.
    #[serde(serialize_with = "ser::opt_vector")]
    pub stabilizer_outside: Option<Vec<Scalar>>,
    /// In `h^⊥` but not in `h`.
    #[serde(serialize_with = "ser::opt_vector")]
    pub orth_outside: Option<Vec<Scalar>>,
    /// In `h` but not in `h^⊥` (only when coisotropic).
    #[serde(serialize_with = "ser::opt_vector")]
    pub polarization_gap: Option<Vec<Scalar>>,
    /// Covector in `ann(h)` outside `h(c)`.
    #[serde(serialize_with = "ser::opt_vector")]
    pub annihilator_outside: Option<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub subalgebra: Subspace,
    pub covector: Covector,
    pub orth: Subspace,
    pub stabilizer: Subspace,
    pub flags: ConditionFlags,
    pub witnesses: ConditionWitnesses,
    /// `2 dim h == dim g + dim g_c`.
    pub polarization_dimension: bool,
    /// The stabilizer test uses the Lie algebra of the stabilizer only, and
    /// the Pukánszky test is its tangent form.
    pub infinitesimal_only: bool,
}

pub fn check_conditions(alg: &LieAlgebra, h: &Subspace, c: &Covector) -> Result<ConditionReport> {
    alg.check_len(c.dim())?;
    alg.require_subalgebra(h)?;
    let n = alg.dim();
    let stabilizer = alg.stabilizer(c);
    let orth = orth_unchecked(alg, h, c);
    let image = tangent_image(alg, h, c);
    let ann = h.annihilator();

    let stabilizer_outside = h.missing_from(&stabilizer);
    let orth_outside = h.missing_from(&orth);
    let coisotropic = orth_outside.is_none();
    let polarization_gap = if coisotropic { orth.missing_from(h) } else { None };
    let is_polarization = coisotropic && polarization_gap.is_none();
    let annihilator_outside = image.missing_from(&ann);
    let polarization_dimension = 2 * h.dim() == n + stabilizer.dim();
    debug_assert!(!is_polarization || polarization_dimension);

    Ok(ConditionReport {
        flags: ConditionFlags {
            contains_stabilizer: stabilizer_outside.is_none(),
            coisotropic,
            is_polarization,
            pukanszky_infinitesimal: annihilator_outside.is_none(),
        },
        witnesses: ConditionWitnesses {
            stabilizer_outside,
            orth_outside,
            polarization_gap,
            annihilator_outside,
        },
        subalgebra: h.clone(),
        covector: c.clone(),
        orth,
        stabilizer,
        polarization_dimension,
        infinitesimal_only: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn h3() -> LieAlgebra {
        let labels = (1..=3).map(|i| format!("e{i}")).collect();
        LieAlgebra::from_brackets("h3", labels, &[(0, 1, vec![(2, int(1))])]).unwrap()
    }

    fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            "sl2",
            vec!["H".into(), "E".into(), "F".into()],
            &[
                (0, 1, vec![(1, int(2))]),
                (0, 2, vec![(2, int(-2))]),
                (1, 2, vec![(0, int(1))]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn orth_examples() {
        let g = h3();
        let c = Covector::dual_basis(3, 2);
        let h = Subspace::coordinate(3, &[1, 2]);
        assert_eq!(orth(&g, &h, &c).unwrap(), h);
        assert_eq!(orth(&g, &Subspace::full(3), &c).unwrap(), g.stabilizer(&c));
        assert!(orth(&g, &Subspace::zero(3), &c).unwrap().is_full());
    }

    #[test]
    fn heisenberg_polarization() {
        let g = h3();
        let r = check_conditions(&g, &Subspace::coordinate(3, &[1, 2]), &Covector::dual_basis(3, 2)).unwrap();
        assert!(r.flags.all());
        assert!(r.polarization_dimension);
    }

    #[test]
    fn whole_algebra_is_coisotropic() {
        let g = h3();
        let r = check_conditions(&g, &Subspace::full(3), &Covector::new(vec![int(1), int(2), int(3)])).unwrap();
        assert!(r.flags.coisotropic && r.flags.pukanszky_infinitesimal);
        assert!(!r.flags.is_polarization);
    }

    #[test]
    fn sl2_cartan_not_coisotropic() {
        // x = H through the trace form is the covector (2, 0, 0).
        let g = sl2();
        let r = check_conditions(
            &g,
            &Subspace::coordinate(3, &[0]),
            &Covector::new(vec![int(2), int(0), int(0)]),
        )
        .unwrap();
        assert!(r.flags.contains_stabilizer);
        assert!(!r.flags.coisotropic);
        assert!(r.orth.is_full());
        assert!(r.witnesses.orth_outside.is_some());
    }

    #[test]
    fn non_subalgebra_rejected() {
        let g = h3();
        let err = check_conditions(&g, &Subspace::coordinate(3, &[0, 1]), &Covector::zero(3));
        assert!(err.is_err());
    }
}
