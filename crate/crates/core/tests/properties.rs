use orbitkit::catalog::{all_builtin, load_builtin, CatalogEntry};
use orbitkit::exactla::{int, Matrix, Subspace};
use orbitkit::liealg::restrict_to;
use orbitkit::mackey::{
    exp_coadjoint, little_group_step, mackey_report, obstruction_with_section, verify_step_relations,
};
use orbitkit::polarization::{pukanszky_polarization, verify_monomial, PolarizeOptions};
use orbitkit::poly::charpoly;
use orbitkit::records::{induced_dim, stages_flatten, Fiber, InducedRecord, Verdict};
use orbitkit::reductive::{jordan_chevalley, jordan_decomposition, parabolic_report, MatrixLieAlgebra};
use orbitkit::sample;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn catalog() -> &'static [CatalogEntry] {
    static CAT: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CAT.get_or_init(all_builtin)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_rank_is_even(seed in any::<u64>()) {
        let mut r = rng(seed);
        for e in catalog() {
            let g = &e.algebra;
            let c = sample::covector(&mut r, g.dim(), 5);
            let rec = g.orbit_record(&c).unwrap();
            prop_assert_eq!(rec.orbit_dim % 2, 0);
            prop_assert_eq!(rec.orbit_dim + rec.stabilizer.dim(), g.dim());
            prop_assert!(g.is_subalgebra(&rec.stabilizer));
        }
    }

    #[test]
    fn ad_is_a_morphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        for e in catalog() {
            let g = &e.algebra;
            let z = sample::vector(&mut r, g.dim(), 4);
            let w = sample::vector(&mut r, g.dim(), 4);
            prop_assert_eq!(g.ad_matrix(&g.bracket(&z, &w)), g.ad_matrix(&z).commutator(&g.ad_matrix(&w)));
        }
    }

    #[test]
    fn flows_stay_in_affine_hull(seed in any::<u64>()) {
        let mut r = rng(seed);
        for e in catalog().iter().filter(|e| e.algebra.is_nilpotent()) {
            let g = &e.algebra;
            let c = sample::covector(&mut r, g.dim(), 4);
            let rec = g.orbit_record(&c).unwrap();
            let mut m = c.clone();
            for _ in 0..3 {
                let z = sample::vector(&mut r, g.dim(), 3);
                m = exp_coadjoint(g, &z, &m).unwrap();
                prop_assert!(rec.affine_hull.contains_vector(m.sub(&c).coords()));
            }
        }
    }

    #[test]
    fn induction_step_relations(seed in any::<u64>()) {
        let mut r = rng(seed);
        for e in catalog() {
            let g = &e.algebra;
            for n in sample::structural_ideals(g) {
                let c = sample::covector(&mut r, g.dim(), 4);
                let data = little_group_step(g, &n, &c).unwrap();
                let rel = verify_step_relations(g, &data).unwrap();
                prop_assert!(rel.orbit_tangent && rel.contains_stabilizer, "{} {:?}", e.name, n);
                prop_assert!(!rel.theorem_violated);
                let rep = mackey_report(g, &n, &c, None).unwrap();
                prop_assert!(rep.v_even && rep.v_consistent, "{} {:?}", e.name, rep.dims);
            }
        }
    }

    #[test]
    fn obstruction_verdict_ignores_section(seed in any::<u64>()) {
        let mut r = rng(seed);
        let cases = [
            ("heisenberg3", vec![2], vec![int(0), int(0), int(1)]),
            ("poincare", vec![6, 7, 8, 9], { let mut v = vec![int(0); 10]; v[6] = int(1); v }),
            ("filiform4", vec![3], vec![int(0), int(0), int(0), int(1)]),
        ];
        for (name, ix, c) in cases {
            let e = load_builtin(name).unwrap();
            let g = &e.algebra;
            let n = Subspace::coordinate(g.dim(), &ix);
            let data = little_group_step(g, &n, &orbitkit::Covector::new(c)).unwrap();
            let base = obstruction_with_section(g, &data, None, None).unwrap();
            let nc = &data.ideal_stabilizer;
            for _ in 0..5 {
                // Unitriangular mixing of the canonical section plus n_c noise.
                let s0 = &base.section;
                let section: Vec<_> = (0..s0.len())
                    .map(|a| {
                        let mut v = s0[a].clone();
                        for w in &s0[a + 1..] {
                            let k = sample::scalar(&mut r, 3);
                            v = orbitkit::exactla::add_vectors(&v, &orbitkit::exactla::scale_vector(&k, w));
                        }
                        orbitkit::exactla::add_vectors(&v, &sample::element_of(&mut r, nc, 3))
                    })
                    .collect();
                let other = obstruction_with_section(g, &data, None, Some(&section)).unwrap();
                prop_assert_eq!(other.trivial, base.trivial, "{}", name);
                prop_assert!(other.cocycle_identity);
            }
        }
    }

    #[test]
    fn jordan_invariants(seed in any::<u64>()) {
        let mut r = rng(seed);
        let size = r.gen_range(1..=6);
        let x = sample::matrix(&mut r, size, size, 3);
        let (s, n) = jordan_chevalley(&x);
        prop_assert_eq!(s.add(&n), x.clone());
        prop_assert!(s.commutator(&n).is_zero());
        prop_assert!(n.is_nilpotent());
        prop_assert!(charpoly(&s).squarefree_part().eval_matrix(&s).is_zero());
        prop_assert_eq!(jordan_chevalley(&s), (s.clone(), Matrix::zeros(size, size)));
    }

    #[test]
    fn stages_preserve_dimension(seed in any::<u64>()) {
        let mut r = rng(seed);
        for e in catalog() {
            let g = &e.algebra;
            let mut ideals = sample::structural_ideals(g);
            ideals.sort_by_key(|s| std::cmp::Reverse(s.dim()));
            // A descending chain of ideals, each one a subalgebra of the last.
            let mut chain = vec![Subspace::full(g.dim())];
            for s in ideals {
                if chain.last().unwrap().contains(&s) && r.gen_bool(0.7) {
                    chain.push(s);
                }
            }
            let c = sample::covector(&mut r, g.dim(), 4);
            let base = chain.last().unwrap().clone();
            let y = g.subalgebra(&base).unwrap().orbit_record(&restrict_to(&c, &base)).unwrap();
            let mut rec = InducedRecord::new(chain[chain.len().saturating_sub(2)].clone(), base, Fiber::Orbit(y)).unwrap();
            for w in chain.windows(2).rev().skip(1) {
                rec = InducedRecord::new(w[0].clone(), w[1].clone(), Fiber::Induced(Box::new(rec))).unwrap();
            }
            let flat = stages_flatten(&rec).unwrap();
            prop_assert_eq!(induced_dim(&flat).unwrap(), induced_dim(&rec).unwrap());
        }
    }

    #[test]
    fn subspace_identities(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=7);
        let a = Subspace::span(n, (0..r.gen_range(0..=n)).map(|_| sample::vector(&mut r, n, 2)));
        let b = Subspace::span(n, (0..r.gen_range(0..=n)).map(|_| sample::vector(&mut r, n, 2)));
        prop_assert_eq!(a.annihilator().annihilator(), a.clone());
        prop_assert_eq!(a.sum(&b).dim() + a.intersect(&b).dim(), a.dim() + b.dim());
        prop_assert!(a.sum(&b).contains(&a) && a.contains(&a.intersect(&b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn nilpotent_polarizations_are_monomial(seed in any::<u64>()) {
        let mut r = rng(seed);
        for e in catalog().iter().filter(|e| e.algebra.is_nilpotent()) {
            let g = &e.algebra;
            let c = sample::covector(&mut r, g.dim(), 4);
            let t = pukanszky_polarization(g, &c, &PolarizeOptions::default()).unwrap();
            prop_assert!(t.passed(), "{} {}", e.name, c);
            let m = verify_monomial(g, &c, &t.result, Some(&t)).unwrap();
            prop_assert_eq!(m.pukanszky, Verdict::Yes);
            prop_assert!(m.passed());
        }
    }

    #[test]
    fn parabolic_relations_on_sl3(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = MatrixLieAlgebra::new(load_builtin("sl3").unwrap().algebra).unwrap();
        // Conjugate of a traceless upper-triangular matrix with rational spectrum.
        let a = int(r.gen_range(-2..=2));
        let b = int(r.gen_range(-2..=2));
        let mut t = sample::matrix(&mut r, 3, 3, 2);
        for i in 0..3 {
            for j in 0..i {
                t[(i, j)] = int(0);
            }
        }
        t[(0, 0)] = a.clone();
        t[(1, 1)] = b.clone();
        t[(2, 2)] = -(a + b);
        let p = sample::matrix(&mut r, 3, 3, 2);
        let Some(pinv) = p.inverse() else { return Ok(()) };
        let x = p.mul(&t).mul(&pinv);
        let rep = parabolic_report(&g, &x).unwrap();
        prop_assert!(rep.passed(), "{:?}", x);
        prop_assert!(jordan_decomposition(&x).unwrap().is_consistent());
    }
}
