use super::*;
use crate::geometry::{Covector, RatMatrix};
use crate::groups::GroupSpec;
use crate::scalars::{int, rat};

fn ctx(spec: &str) -> Arc<Algebra> {
    Algebra::symbolic(ReflectionGroup::build(spec.parse::<GroupSpec>().unwrap()).unwrap())
}

#[test]
fn cherednik_relation_examples() {
    let a = ctx("A1@2");
    let (x1, x2, y1) = (Element::x(&a, 0), Element::x(&a, 1), Element::y(&a, 0));
    let s = Element::group(&a, 1);
    let k = Element::scalar(&a, Scalar::kappa(0));
    let one = Element::one(&a);
    assert_eq!(&y1 * &x1, &(&(&x1 * &y1) + &one) + &(&k * &s));
    assert_eq!(&y1 * &x2, &(&x2 * &y1) - &(&k * &s));
    assert_eq!(&s * &x1, &x2 * &s);
    assert_eq!((&y1 * &x1).to_string(), "1 + k1*s1 + x1*y1");
    assert_eq!(x1.supercommutator(&y1), -(&one + &(&k * &s)));
}

#[test]
fn clifford_examples() {
    let a = ctx("A1@2");
    let (e1, e2) = (Element::e(&a, 0), Element::e(&a, 1));
    assert_eq!(&e2 * &e1, -(&e1 * &e2));
    assert_eq!(e1.supercommutator(&e1), Element::rational(&a, int(2)));
    let s = Element::group(&a, 1);
    for blade in [Element::one(&a), e1.clone(), e2.clone(), &e1 * &e2] {
        assert!(s.supercommutator(&blade).is_zero());
    }
    let u = &a.space().x(0) - &a.space().x(1);
    assert_eq!(Element::gamma(&a, &u), &e1 - &e2);
    let w = a.space().witt_basis(1).unwrap();
    let zp = Element::gamma(&a, &w.plus[0]);
    assert_eq!(zp, (&e1 + &(&e2 * &Scalar::i())).scale_rational(rat(1, 2)));
    assert!((&zp * &zp).is_zero());
}

#[test]
fn general_gram_products_are_associative() {
    let gram = RatMatrix::from_rows(&[vec![int(2), int(1)], vec![int(1), int(2)]]).unwrap();
    let space = QuadraticSpace::with_gram(gram).unwrap();
    // reflection through the root x1 − x2 preserves this form
    let swap = RatMatrix::from_rows(&[vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap();
    let g = ReflectionGroup::from_generators("custom".into(), space, &[swap], None, 100).unwrap();
    let a = Algebra::symbolic(g);
    let gens: Vec<Element> = (0..2)
        .flat_map(|p| [Element::x(&a, p), Element::y(&a, p), Element::e(&a, p)])
        .chain([Element::group(&a, 1)])
        .collect();
    for p in &gens {
        for q in &gens {
            for r in &gens {
                assert_eq!(&(p * q) * r, p * &(q * r));
            }
        }
    }
    let (e1, e2) = (Element::e(&a, 0), Element::e(&a, 1));
    assert_eq!(e1.supercommutator(&e2), Element::rational(&a, int(2)));
    assert_eq!(e1.anticommutator(&e2), &(&e1 * &e2) - &(&e2 * &e1));
    let u = Covector::from_rationals(&[int(1), int(1)]);
    let gu = Element::gamma(&a, &u);
    assert_eq!(
        &gu * &gu,
        Element::rational(&a, a.space().form(&u, &u).as_rational().unwrap())
    );
}

#[test]
fn renormalize_is_identity_on_normal_forms() {
    let a = ctx("B2@2");
    let e = &(&Element::y(&a, 0) * &Element::x(&a, 1).pow(2)) * &Element::group(&a, 5);
    let f = &e * &(&Element::e(&a, 1) + &Element::y(&a, 1));
    assert_eq!(f.renormalize(), f);
}

#[test]
fn numeric_kappa_context() {
    let g = ReflectionGroup::build("A1@2".parse().unwrap()).unwrap();
    let a = Algebra::new(g, KappaMode::Numeric(vec![BaseNumber::zero()])).unwrap();
    let c = Element::y(&a, 0).supercommutator(&Element::x(&a, 0));
    assert_eq!(c.to_string(), "1");
    let g = ReflectionGroup::build("A1@2".parse().unwrap()).unwrap();
    assert!(matches!(
        Algebra::new(g, KappaMode::Numeric(vec![])),
        Err(AlgebraError::KappaCount { .. })
    ));
}

#[test]
fn substitution_matches_numeric_context() {
    let sym = ctx("B2@2");
    let g = ReflectionGroup::build("B2@2".parse().unwrap()).unwrap();
    let vals = vec![
        BaseNumber::from_int(1),
        BaseNumber::from_rational(rat(-1, 2)),
    ];
    let num = Algebra::new(g, KappaMode::Numeric(vals.clone())).unwrap();
    let build = |a: &Arc<Algebra>| {
        let p = &Element::y(a, 0).pow(2) * &Element::x(a, 0).pow(2);
        &p * &(&Element::y(a, 1) * &Element::x(a, 0))
    };
    assert_eq!(
        build(&sym).substitute_kappa(&num, &vals).unwrap(),
        build(&num)
    );
}

#[test]
#[should_panic(expected = "different algebra contexts")]
fn context_mismatch_panics() {
    let a = ctx("A1@2");
    let b = ctx("A1@2");
    let _ = &Element::x(&a, 0) + &Element::x(&b, 0);
}

#[test]
fn index_errors() {
    let a = ctx("A1@2");
    assert!(matches!(
        Element::try_x(&a, 2),
        Err(AlgebraError::IndexOutOfRange { index: 3, dim: 2 })
    ));
    assert!(matches!(
        Element::try_group(&a, 2),
        Err(AlgebraError::NoSuchElement(2))
    ));
}
