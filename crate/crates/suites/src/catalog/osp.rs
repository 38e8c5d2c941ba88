//! osp(1|2) relations, projectors and generalized symmetries.

use pinosp::osp::{pair_element, SuperBasis};
use pinosp::{Element, Rational};

use super::{each_projector, parity_sign};
use crate::env::Env;
use crate::expr::Expr;
use crate::CaseError;

type Out = Result<Vec<Expr>, CaseError>;

fn r(n: i64) -> Rational {
    Rational::from(n)
}

pub fn odd_odd_mixed(e: &Env) -> Out {
    Ok(vec![&e.x.sc(&e.d) - &e.h.scale_rational(r(2))])
}

pub fn cartan_odd(e: &Env) -> Out {
    Ok(vec![&e.h.sc(&e.x) - &e.x, &e.h.sc(&e.d) + &e.d])
}

pub fn odd_squares(e: &Env) -> Out {
    Ok(vec![
        &e.x.sc(&e.x) - &e.ep.scale_rational(r(4)),
        &e.d.sc(&e.d) + &e.em.scale_rational(r(4)),
    ])
}

pub fn even_raise_lower(e: &Env) -> Out {
    Ok(vec![&e.ep.sc(&e.em) - &e.h])
}

pub fn cartan_even(e: &Env) -> Out {
    Ok(vec![
        &e.h.sc(&e.ep) - &e.ep.scale_rational(r(2)),
        &e.h.sc(&e.em) + &e.em.scale_rational(r(2)),
    ])
}

pub fn odd_even(e: &Env) -> Out {
    Ok(vec![&e.x.sc(&e.em) - &e.d, &e.d.sc(&e.ep) - &e.x])
}

pub fn realization(e: &Env) -> Out {
    let xd = e.x.sc(&e.d);
    Ok(vec![
        &xd.sc(&e.x) - &e.x.scale_rational(r(2)),
        &xd.sc(&e.d) + &e.d.scale_rational(r(2)),
    ])
}

pub fn generators_as_pairings(e: &Env) -> Out {
    use SuperBasis::*;
    let p = |a, b| Expr::el(&pair_element(e.ctx(), a, b));
    Ok(vec![
        &p(XPlus, XMinus) - &e.h,
        &p(XPlus, XPlus) - &e.ep.scale_rational(r(2)),
        &p(XMinus, XMinus) + &e.em.scale_rational(r(2)),
        &p(XPlus, Gamma) - &e.x,
        &p(XMinus, Gamma) - &e.d,
    ])
}

pub fn casimir_central(e: &Env) -> Out {
    let c = e.casimir();
    Ok([&e.h, &e.ep, &e.em, &e.x, &e.d]
        .into_iter()
        .map(|a| c.sc(a))
        .collect())
}

pub fn scasimir_grading(e: &Env) -> Out {
    let s = e.scasimir();
    Ok(vec![
        s.comm(&e.h),
        s.comm(&e.ep),
        s.comm(&e.em),
        s.ac(&e.x),
        s.ac(&e.d),
    ])
}

pub fn scasimir_square(e: &Env) -> Out {
    let s = e.scasimir();
    Ok(vec![
        &(&(&s * &s) - &e.casimir()) - &Expr::rational(Rational::new(1, 4)),
    ])
}

pub fn scasimir_projected(e: &Env) -> Out {
    let s = e.scasimir();
    let rhs = &e.casimir().scale_rational(r(2)) + &Expr::rational(Rational::new(1, 2));
    let sq = (&s * &s).scale_rational(r(2));
    Ok(vec![
        &e.p_plus(&s) - &rhs,
        &e.p_minus(&s) - &rhs,
        &e.p_plus(&s) - &sq,
    ])
}

/// Homogeneous elements of the centralizer of the even part.
fn sl2_samples(e: &Env) -> Vec<Expr> {
    let us = e.sample_covectors();
    let mut out = vec![e.gamma(&us[0])];
    if let Some(&s) = e.reflections().first() {
        out.push(e.el(&Element::group(e.ctx(), s)));
    }
    if e.dim() >= 2 {
        out.push(e.gamma(&us[us.len() - 1]));
        out.push(e.m(&us[0], &us[1]));
        out.push(e.agamma(&us[..2]));
        out.push(&e.m(&us[0], &us[1]) * &e.gamma(&us[0]));
    }
    out
}

fn sl2_preconditions(e: &Env, a: &Expr) -> Vec<Expr> {
    vec![e.h.sc(a), e.ep.sc(a), e.em.sc(a)]
}

fn membership(e: &Env, plus: bool) -> Out {
    let mut out = Vec::new();
    for a in sl2_samples(e) {
        out.extend(sl2_preconditions(e, &a));
        let p = if plus { e.p_plus(&a) } else { e.p_minus(&a) };
        out.push(e.x.sc(&p));
        out.push(e.d.sc(&p));
    }
    Ok(out)
}

pub fn plus_membership(e: &Env) -> Out {
    membership(e, true)
}

pub fn minus_membership(e: &Env) -> Out {
    membership(e, false)
}

/// Assorted homogeneous elements, not necessarily commuting with anything.
fn generic_samples(e: &Env) -> Vec<Expr> {
    let ctx = e.ctx();
    let mut out = vec![
        e.el(&Element::x(ctx, 0)),
        e.el(&Element::y(ctx, 0)),
        e.el(&Element::e(ctx, 0)),
        e.el(&(&Element::x(ctx, 0) * &Element::y(ctx, 0))),
    ];
    if let Some(&s) = e.reflections().first() {
        out.push(&e.el(&Element::group(ctx, s)) * &e.el(&Element::y(ctx, 0)));
    }
    out
}

pub fn plus_minus_difference(e: &Env) -> Out {
    let mut samples = generic_samples(e);
    samples.extend(sl2_samples(e));
    Ok(samples
        .iter()
        .map(|a| &(&e.p_minus(a) - &e.p_plus(a)) - &e.h.sc(a))
        .collect())
}

pub fn additive(e: &Env) -> Out {
    let s = generic_samples(e);
    let mut out = Vec::new();
    for w in s.windows(2) {
        let sum = &w[0] + &w[1];
        out.push(&(&e.p_plus(&sum) - &e.p_plus(&w[0])) - &e.p_plus(&w[1]));
        out.push(&(&e.p_minus(&sum) - &e.p_minus(&w[0])) - &e.p_minus(&w[1]));
    }
    Ok(out)
}

/// Homogeneous elements that supercommute with osp(1|2).
fn centralizer_samples(e: &Env) -> Result<Vec<Expr>, CaseError> {
    let mut out = vec![e.o(&[e.xc(0)])];
    if e.dim() >= 2 {
        out.push(e.o(&[e.xc(0), e.xc(1)]));
    }
    if let Some(&s) = e.reflections().first() {
        out.push(e.rho(s)?);
    }
    Ok(out)
}

pub fn fixes_centralizer(e: &Env) -> Out {
    let mut samples = centralizer_samples(e)?;
    samples.push(e.casimir());
    let mut out = Vec::new();
    for a in &samples {
        out.push(&e.p_plus(a) - a);
        out.push(&e.p_minus(a) - a);
    }
    Ok(out)
}

pub fn central_factor(e: &Env) -> Out {
    let mut cs = centralizer_samples(e)?;
    cs.push(e.casimir());
    let bs = vec![
        e.gamma(&e.xc(0)),
        e.el(&(&Element::x(e.ctx(), 0) * &Element::y(e.ctx(), 0))),
    ];
    let mut out = Vec::new();
    for c in &cs {
        for b in &bs {
            each_projector(e, |p| {
                out.push(&p(&(c * b)) - &(&p(c) * &p(b)));
                out.push(&p(&(b * c)) - &(&p(b) * &p(c)));
            });
        }
    }
    Ok(out)
}

pub fn central_sandwich(e: &Env) -> Out {
    let cs = centralizer_samples(e)?;
    let b = &e.gamma(&e.xc(0)) * &e.el(&Element::y(e.ctx(), 0));
    let mut out = Vec::new();
    for a in &cs {
        for c in &cs {
            let abc = &(a * &b) * c;
            each_projector(e, |p| out.push(&p(&abc) - &(&(a * &p(&b)) * c)));
        }
    }
    Ok(out)
}

pub fn sl2_extremal(e: &Env) -> Out {
    let ctx = e.ctx();
    let xy = |p, q| &Element::x(ctx, p) * &Element::y(ctx, q);
    let mut samples = vec![xy(0, 0), &xy(0, 0) * &Element::e(ctx, 0)];
    if e.dim() >= 2 {
        samples.push(&xy(0, 0) - &xy(1, 1));
        samples.push(xy(0, 1));
    }
    let mut out = Vec::new();
    for a in &samples {
        let p = Expr::el(&e.osp().p_alpha(a)?);
        out.extend([e.ep.sc(&p), e.em.sc(&p), e.h.sc(&p)]);
    }
    let m = e.dim() >= 2;
    if m {
        let mm = e.cent().m(&e.xc(0), &e.xc(1));
        out.push(&Expr::el(&e.osp().p_alpha(&mm)?) - &Expr::el(&mm));
    }
    Ok(out)
}

pub fn gamma_single(e: &Env) -> Out {
    let mut out = Vec::new();
    for v in e.sample_covectors() {
        let rhs = e.of(&v).scale_rational(r(-2));
        out.push(&e.p_plus(&e.gamma(&v)) - &rhs);
        out.push(&e.p_minus(&e.gamma(&v)) - &rhs);
    }
    Ok(out)
}

fn gamma_chain(e: &Env, n: usize) -> Out {
    let mut out = Vec::new();
    for us in e.sample_tuples(n, 2) {
        let gs: Vec<Expr> = us.iter().map(|u| e.gamma(u)).collect();
        let prod = |f: &dyn Fn(usize) -> Option<Expr>| {
            let mut acc = e.one();
            for (j, g) in gs.iter().enumerate() {
                match f(j) {
                    Some(x) => acc = &acc * &x,
                    None => acc = &acc * g,
                }
            }
            acc
        };
        let mut rhs = prod(&|_| None).scale_rational(r(1 - n as i64));
        for (j, u) in us.iter().enumerate() {
            let t = prod(&|k| (k == j).then(|| e.of(u)));
            rhs = &rhs - &t.scale_rational(r(2));
        }
        for j in 0..n {
            for k in j + 1..n {
                let sign = parity_sign(j + k + 1);
                let mom = &(&e.cov(&us[j]) * &e.beta(&us[k])) - &(&e.beta(&us[j]) * &e.cov(&us[k]));
                let rest = prod(&|i| (i == j || i == k).then(|| e.one()));
                rhs = &rhs - &(&mom * &rest).scale_rational(r(2 * sign));
            }
        }
        let lhs = e.gammas(&us);
        out.push(&e.p_plus(&lhs) - &rhs);
        out.push(&e.p_minus(&lhs) - &rhs);
    }
    Ok(out)
}

pub fn gamma_chain_2(e: &Env) -> Out {
    gamma_chain(e, 2)
}

pub fn gamma_chain_3(e: &Env) -> Out {
    gamma_chain(e, 3)
}

pub fn gamma_chain_4(e: &Env) -> Out {
    gamma_chain(e, 4)
}

pub fn gamma_pair(e: &Env) -> Out {
    let mut out = Vec::new();
    for us in e.sample_tuples(2, 3) {
        let g = &e.gamma(&us[0]) * &e.gamma(&us[1]);
        let rhs = &e.o(&us) - &e.form_e(&us[0], &us[1]).scale_rational(Rational::new(1, 2));
        out.push(&e.p_plus(&g).scale_rational(Rational::new(-1, 2)) - &rhs);
        out.push(&e.p_minus(&g).scale_rational(Rational::new(-1, 2)) - &rhs);
    }
    Ok(out)
}

pub fn angular_momentum(e: &Env) -> Out {
    let mut out = Vec::new();
    for us in e.sample_tuples(2, 3) {
        let (u, v) = (&us[0], &us[1]);
        let m = e.m(u, v);
        let rhs = &(&e.o(&us) + &(&e.of(u) * &e.of(v))) - &(&e.of(v) * &e.of(u));
        let rhs = rhs.scale_rational(r(2));
        out.push(&e.p_plus(&m) - &rhs);
        out.push(&e.p_minus(&m) - &rhs);
    }
    Ok(out)
}

pub fn pin_reflection(e: &Env) -> Out {
    let mut out = Vec::new();
    for refl in e.ctx().group().reflections() {
        let s = e.el(&Element::group(e.ctx(), refl.element));
        let c = e.sqrt_inv(refl.root_norm)?;
        let rhs = (&e.of(&refl.root_covector()) * &e.rho(refl.element)?)
            .scale(&c)
            .scale_rational(r(-2));
        out.push(&e.p_plus(&s) - &rhs);
        out.push(&e.p_minus(&s) - &rhs);
    }
    Ok(out)
}

/// `D Q⁻(a) − (−1)^|a| (Q⁻(a) + a − (−1)^|a| X b) D` together with the
/// hypothesis `[E⁻, a] − bD`.
fn q_minus_residuals(e: &Env, a: &Expr, odd: bool, b: &Expr) -> Vec<Expr> {
    let sa = if odd { -1 } else { 1 };
    let q = e.q_minus(a);
    let inner = &(&q + a) - &(&e.x * b).scale_rational(r(sa));
    vec![
        &e.em.sc(a) - &(b * &e.d),
        &(&e.d * &q) - &(&inner * &e.d).scale_rational(r(sa)),
    ]
}

pub fn q_minus_symmetry(e: &Env) -> Out {
    let mut out = Vec::new();
    let zero = Expr::zero();
    let mut samples: Vec<(Expr, bool)> = vec![(e.gamma(&e.xc(0)), true), (e.one(), false)];
    if let Some(&s) = e.reflections().first() {
        samples.push((e.el(&Element::group(e.ctx(), s)), false));
    }
    if e.dim() >= 2 {
        samples.push((e.m(&e.xc(0), &e.xc(1)), false));
        samples.push((e.agamma(&[e.xc(0), e.xc(1)]), false));
    }
    for (a, odd) in &samples {
        out.extend(q_minus_residuals(e, a, *odd, &zero));
    }
    out.extend(q_minus_residuals(e, &e.x, true, &Expr::int(-1)));
    Ok(out)
}

fn r_expr(e: &Env, u: &pinosp::Covector) -> Expr {
    &(&(&e.h - &e.one()) * &e.gamma(u)) - &(&e.x * &e.beta(u))
}

pub fn r_definition(e: &Env) -> Out {
    let mut out = Vec::new();
    for u in e.sample_covectors() {
        let rx = r_expr(e, &u);
        out.push(&e.q_minus(&e.gamma(&u)) - &rx);
        out.push(&Expr::el(&e.osp().r(&u)) - &rx);
    }
    Ok(out)
}

pub fn r_generalized(e: &Env) -> Out {
    let mut out = Vec::new();
    for u in e.sample_covectors() {
        let rx = r_expr(e, &u);
        out.push(&(&e.d * &rx) + &(&(&rx + &e.gamma(&u)) * &e.d));
    }
    Ok(out)
}
