use std::sync::Arc;

use pinosp::geometry::{QuadraticSpace, RatMatrix};
use pinosp::oracle::{random_element, random_homogeneous, rng};
use pinosp::scalars::{int, rat};
use pinosp::{Algebra, BaseNumber, Element, KappaMode, ReflectionGroup, Scalar};
use proptest::prelude::*;

fn algebra(spec: &str) -> Arc<Algebra> {
    Algebra::symbolic(ReflectionGroup::build(spec.parse().unwrap()).unwrap())
}

fn base() -> impl Strategy<Value = BaseNumber> {
    (-4i64..=4, -4i64..=4, -2i64..=2, -2i64..=2, 1i64..=3)
        .prop_map(|(a, b, c, d, q)| BaseNumber::new(rat(a, q), rat(b, q), rat(c, q), rat(d, q)))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((base(), 0u32..3, 0u32..2), 1..4).prop_map(|terms| {
        let mut s = Scalar::zero();
        for (b, k0, k1) in terms {
            s +=
                &(&(&Scalar::from_base(b) * &Scalar::kappa(0).pow(k0)) * &Scalar::kappa(1).pow(k1));
        }
        s
    })
}

proptest! {
    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in scalar(), b in scalar(), v0 in base(), v1 in base()) {
        let vals = [v0, v1];
        let lhs = (&a * &b).substitute_kappa(&vals).unwrap();
        let rhs = &a.substitute_kappa(&vals).unwrap() * &b.substitute_kappa(&vals).unwrap();
        prop_assert_eq!(lhs.kappa_degree(), 0);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn beta_is_an_involution(c in prop::collection::vec(-5i64..=5, 3)) {
        let gram = RatMatrix::from_rows(&[
            vec![int(2), rat(1, 2), int(0)],
            vec![rat(1, 2), int(1), int(0)],
            vec![int(0), int(0), int(3)],
        ]).unwrap();
        let sp = QuadraticSpace::with_gram(gram).unwrap();
        let u = pinosp::Covector::from_rationals(&c.iter().map(|&k| int(k)).collect::<Vec<_>>());
        prop_assert_eq!(sp.beta_inv(&sp.beta(&u)), u.clone());
        for j in 0..3 {
            for k in 0..3 {
                prop_assert_eq!(sp.x(k).pair(&sp.beta(&sp.x(j))), sp.form(&sp.x(j), &sp.x(k)));
            }
        }
    }
}

fn check_associativity(spec: &str, samples: usize, seed: u64) {
    let a = algebra(spec);
    let mut r = rng(seed);
    for _ in 0..samples {
        let x = random_element(&a, &mut r, 2, 3);
        let y = random_element(&a, &mut r, 2, 3);
        let z = random_element(&a, &mut r, 2, 3);
        assert_eq!(&(&x * &y) * &z, &x * &(&y * &z), "{spec}");
        let p = &x * &y;
        assert_eq!(p.renormalize(), p);
    }
}

#[test]
fn associativity_on_seeded_triples() {
    for spec in ["A1@2", "A2@3", "B2@2"] {
        check_associativity(spec, 40, 101);
    }
}

#[test]
fn super_jacobi_and_skew_symmetry() {
    for spec in ["A1@2", "B2@2"] {
        let a = algebra(spec);
        let mut r = rng(7);
        for k in 0..30 {
            let (pa, pb, pc) = (k % 2 == 1, k % 3 == 1, k % 5 < 2);
            let x = random_homogeneous(&a, &mut r, 2, 2, pa);
            let y = random_homogeneous(&a, &mut r, 2, 2, pb);
            let z = random_homogeneous(&a, &mut r, 2, 2, pc);
            let sgn = |p: bool, q: bool| if p && q { -1 } else { 1 };
            assert_eq!(
                x.supercommutator(&y),
                y.supercommutator(&x).scale_rational(int(-sgn(pa, pb)))
            );
            // (−1)^{|x||z|}[x,[y,z]] + cyclic = 0
            let t1 = x
                .supercommutator(&y.supercommutator(&z))
                .scale_rational(int(sgn(pa, pc)));
            let t2 = y
                .supercommutator(&z.supercommutator(&x))
                .scale_rational(int(sgn(pb, pa)));
            let t3 = z
                .supercommutator(&x.supercommutator(&y))
                .scale_rational(int(sgn(pc, pb)));
            assert!((&(&t1 + &t2) + &t3).is_zero());
        }
    }
}

#[test]
fn group_invariants() {
    for spec in ["A2@3", "B2@2", "B3@3", "D4@4"] {
        let g = ReflectionGroup::build(spec.parse().unwrap()).unwrap();
        let sp = g.space().clone();
        let d = g.dim();
        for k in 0..g.order() {
            for i in 0..d {
                for j in 0..d {
                    let (u, v) = (g.act_covector(k, &sp.x(i)), g.act_covector(k, &sp.x(j)));
                    assert_eq!(sp.form(&u, &v), sp.form(&sp.x(i), &sp.x(j)));
                }
            }
        }
        for r in g.reflections() {
            assert_eq!(g.mul(r.element, r.element), 0);
            let alpha = r.root_covector();
            assert_eq!(g.act_covector(r.element, &alpha), -&alpha);
            for k in (0..g.order()).step_by(3) {
                let conj = g.mul(g.mul(k, r.element), g.inverse(k));
                assert_eq!(g.reflection(conj).unwrap().class, r.class);
            }
            for i in 0..d {
                let u = sp.x(i);
                let s_u = &u - &alpha.scale(&r.coroot_pairing_base(&u));
                assert_eq!(g.act_covector(r.element, &u), s_u);
            }
        }
    }
}

#[test]
fn numeric_kappa_agrees_with_symbolic() {
    let g = ReflectionGroup::build("B2@2".parse().unwrap()).unwrap();
    let sym = Algebra::symbolic(g.clone());
    let vals = vec![
        BaseNumber::from_int(1),
        BaseNumber::from_rational(rat(-1, 2)),
    ];
    let num = Algebra::new(g, KappaMode::Numeric(vals.clone())).unwrap();
    let mut r = rng(3);
    for _ in 0..20 {
        let x = random_element(&sym, &mut r, 2, 3);
        let y = random_element(&sym, &mut r, 2, 3);
        let xs = x.substitute_kappa(&num, &vals).unwrap();
        let ys = y.substitute_kappa(&num, &vals).unwrap();
        assert_eq!((&x * &y).substitute_kappa(&num, &vals).unwrap(), &xs * &ys);
    }
}

#[test]
fn dual_pairing_lemmas() {
    for spec in ["A1@2", "A2@3", "B2@2"] {
        let a = algebra(spec);
        let sp = a.space().clone();
        let d = a.dim();
        let cov = |j| Element::covector(&a, &sp.x(j));
        let vec = |j| Element::vector(&a, &sp.y(j));
        for p in 0..d {
            for q in 0..d {
                let (u, v) = (sp.x(p), sp.x(q));
                let lhs = Element::beta(&a, &u).commutator(&Element::covector(&a, &v));
                assert_eq!(
                    lhs,
                    Element::beta(&a, &v).commutator(&Element::covector(&a, &u))
                );
                assert_eq!(lhs, pinosp::special::b_kappa(&a, &u, &v));
                for r in 0..d {
                    assert_eq!(
                        cov(r).commutator(&vec(p)).commutator(&vec(q)),
                        cov(r).commutator(&vec(q)).commutator(&vec(p))
                    );
                    assert_eq!(
                        cov(p).commutator(&vec(q)).commutator(&cov(r)),
                        cov(r).commutator(&vec(q)).commutator(&cov(p))
                    );
                }
            }
        }
    }
}
