//! Defining relations of the ambient superalgebra and its distinguished
//! elements.

use pinosp::osp::{super_form, tensor, SuperBasis};
use pinosp::special::{chirality as chirality_element, omega_kappa, psi};
use pinosp::{Covector, Element, Rational, Scalar};

use super::parity_sign;
use crate::env::Env;
use crate::expr::{antisym, Expr};
use crate::CaseError;

type Out = Result<Vec<Expr>, CaseError>;

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn group(e: &Env, g: usize) -> Expr {
    e.el(&Element::group(e.ctx(), g))
}

pub fn cherednik_relation(e: &Env) -> Out {
    let ctx = e.ctx();
    let d = e.dim();
    let mut out = Vec::new();
    for p in 0..d {
        for q in 0..d {
            let (y, x) = (e.el(&Element::y(ctx, p)), e.el(&Element::x(ctx, q)));
            let mut rhs = Expr::int(i64::from(p == q));
            for refl in ctx.group().reflections() {
                let c = refl.root[p] * refl.coroot[q];
                if c != r(0) {
                    rhs = &rhs
                        + &group(e, refl.element).scale(&ctx.kappa(refl.param).scale_rational(&c));
                }
            }
            out.push(&y.comm(&x) - &rhs);
            out.push(e.el(&Element::x(ctx, p)).comm(&x));
            out.push(y.comm(&e.el(&Element::y(ctx, q))));
        }
    }
    Ok(out)
}

pub fn crossed_product(e: &Env) -> Out {
    let ctx = e.ctx();
    let grp = ctx.group();
    let mut out = Vec::new();
    for g in 0..grp.order() {
        let (gl, gr) = (group(e, g), group(e, grp.inverse(g)));
        for u in e.sample_covectors() {
            let conj = |a: &Expr| &(&gl * a) * &gr;
            out.push(&conj(&e.cov(&u)) - &e.cov(&grp.act_covector(g, &u)));
            let v = ctx.space().beta(&u);
            out.push(&conj(&e.beta(&u)) - &e.el(&Element::vector(ctx, &grp.act_vector(g, &v))));
            out.push(&conj(&e.gamma(&u)) - &e.gamma(&u));
        }
    }
    Ok(out)
}

/// Sample covectors together with the isotropic Witt vectors when the basis
/// is orthonormal.
fn clifford_covectors(e: &Env) -> Vec<Covector> {
    let mut out = e.sample_covectors();
    if let Ok(w) = e.ctx().space().witt_basis(1) {
        out.extend(w.plus);
        out.extend(w.minus);
        out.extend(w.zero);
    }
    out
}

pub fn clifford_relation(e: &Env) -> Out {
    let cs = clifford_covectors(e);
    let mut out = Vec::new();
    for u in &cs {
        for v in &cs {
            let lhs = &(&e.gamma(u) * &e.gamma(v)) + &(&e.gamma(v) * &e.gamma(u));
            out.push(&lhs - &e.form_e(u, v).scale_rational(r(2)));
        }
    }
    Ok(out)
}

pub fn superalgebra_relation(e: &Env) -> Out {
    let ctx = e.ctx();
    let us = e.sample_covectors();
    let mut out = Vec::new();
    for u in &us {
        for v in us.iter().take(3) {
            let ps = Expr::el(&psi(ctx, u, v));
            for w in SuperBasis::ALL {
                for z in SuperBasis::ALL {
                    let lhs = Expr::el(&tensor(ctx, u, w)).sc(&Expr::el(&tensor(ctx, v, z)));
                    let b = super_form(w, z);
                    let omega = if w.is_odd() || z.is_odd() { r(0) } else { b };
                    let rhs = &e.form_e(u, v).scale_rational(b) + &ps.scale_rational(omega);
                    out.push(&lhs - &rhs);
                }
            }
        }
    }
    Ok(out)
}

pub fn dual_pairing(e: &Env) -> Out {
    let us = e.sample_covectors();
    let mut out = Vec::new();
    for u in &us {
        for v in &us {
            let c = e.beta(u).comm(&e.cov(v));
            out.push(&(&c - &e.form_e(u, v)) - &Expr::el(&psi(e.ctx(), u, v)));
            out.push(&c - &e.beta(v).comm(&e.cov(u)));
        }
    }
    Ok(out)
}

pub fn antisymmetrizer_expansion(e: &Env) -> Out {
    let mut out = Vec::new();
    for off in 0..3 {
        let t = e.generic_tuple(4, off);
        let (u, v, w, x) = (&t[0], &t[1], &t[2], &t[3]);
        let g = |a: &Covector| e.gamma(a);
        let b = |a: &Covector, c: &Covector| e.form(a, c);
        let bs = |a: &Covector, c: &Covector, ex: Expr| ex.scale(&b(a, c));
        let uv = &g(u) * &g(v);
        out.push(&e.agamma(&t[..2]) - &(&uv - &Expr::scalar(b(u, v))));
        let rhs3 = &(&(&(&uv * &g(w)) - &bs(u, v, g(w))) + &bs(u, w, g(v))) - &bs(v, w, g(u));
        out.push(&e.agamma(&t[..3]) - &rhs3);
        let mut rhs4 = &(&uv * &g(w)) * &g(x);
        rhs4 = &rhs4 - &bs(u, v, &g(w) * &g(x));
        rhs4 = &rhs4 + &bs(u, w, &g(v) * &g(x));
        rhs4 = &rhs4 - &bs(v, w, &g(u) * &g(x));
        rhs4 = &rhs4 - &bs(u, x, &g(v) * &g(w));
        rhs4 = &rhs4 + &bs(v, x, &g(u) * &g(w));
        rhs4 = &rhs4 - &bs(w, x, &g(u) * &g(v));
        let consts = &(&(&b(u, v) * &b(w, x)) - &(&b(u, w) * &b(v, x))) + &(&b(u, x) * &b(v, w));
        rhs4 = &rhs4 + &Expr::scalar(consts);
        out.push(&e.agamma(&t) - &rhs4);
    }
    Ok(out)
}

pub fn antisymmetrizer_recursion(e: &Env) -> Out {
    let mut out = Vec::new();
    for n in 2..=4 {
        for off in 0..2 {
            let t = e.generic_tuple(n, off);
            let mut rhs = Expr::zero();
            for j in 0..n {
                let mut rest = t.clone();
                rest.remove(j);
                rhs =
                    &rhs + &(&e.gamma(&t[j]) * &e.agamma(&rest)).scale_rational(r(parity_sign(j)));
            }
            out.push(&e.agamma(&t) - &rhs.scale_rational(Rational::new(1, n as i64)));
        }
    }
    Ok(out)
}

pub fn orthogonal_quantization(e: &Env) -> Out {
    let ob = e.orthogonal_basis();
    let mut out = Vec::new();
    for n in 1..=ob.len().min(4) {
        for s in crate::env::subsets(ob.len(), n).into_iter().take(3) {
            let t: Vec<Covector> = s.iter().map(|&j| ob[j].clone()).collect();
            out.push(&e.agamma(&t) - &e.gammas(&t));
        }
    }
    Ok(out)
}

pub fn so_adjoint(e: &Env) -> Out {
    let cs = e.sample_covectors();
    let mut out = Vec::new();
    for u in &cs {
        for v in cs.iter().take(3) {
            for w in cs.iter().take(3) {
                let lhs = (&e.gamma(u) * &e.gamma(v))
                    .scale_rational(Rational::new(1, 2))
                    .sc(&e.gamma(w));
                let rhs = &e.gamma(u).scale(&e.form(v, w)) - &e.gamma(v).scale(&e.form(u, w));
                out.push(&lhs - &rhs);
            }
        }
    }
    Ok(out)
}

pub fn chirality(e: &Env) -> Out {
    let g = Expr::el(&chirality_element(e.ctx())?);
    let sign = parity_sign(e.dim() - 1);
    let mut out = vec![&(&g * &g) - &e.one()];
    for u in clifford_covectors(e) {
        out.push(&(&g * &e.gamma(&u)) - &(&e.gamma(&u) * &g).scale_rational(r(sign)));
    }
    Ok(out)
}

pub fn pin_conjugation(e: &Env) -> Out {
    let ctx = e.ctx();
    let grp = ctx.group();
    let refl = e.reflections();
    let mut words: Vec<Vec<usize>> = refl.iter().map(|&s| vec![s]).collect();
    for &a in refl.iter().take(3) {
        for &b in refl.iter().take(3) {
            words.push(vec![a, b]);
        }
    }
    let mut out = Vec::new();
    for &s in &refl {
        let rh = e.rho(s)?;
        out.push(&(&rh * &rh) - &e.one());
    }
    for word in &words {
        let mut rw = e.one();
        let mut rinv = e.one();
        let mut g = 0;
        for &s in word {
            rw = &rw * &e.rho(s)?;
            rinv = &e.rho(s)? * &rinv;
            g = grp.mul(g, s);
        }
        let odd_word = word.len() % 2 == 1;
        let conj = |a: &Expr| &(&rw * a) * &rinv;
        let sign = |odd: bool| if odd && odd_word { r(-1) } else { r(1) };
        for u in e.sample_covectors().iter().take(3) {
            let gu = grp.act_covector(g, u);
            out.push(&conj(&e.cov(u)) - &e.cov(&gu));
            out.push(&conj(&e.beta(u)) - &e.beta(&gu));
            out.push(&conj(&e.gamma(u)) - &e.gamma(&gu).scale_rational(sign(true)));
        }
        for &h in refl.iter().take(3) {
            let hg = grp.mul(grp.mul(g, h), grp.inverse(g));
            out.push(&conj(&group(e, h)) - &group(e, hg));
        }
    }
    Ok(out)
}

pub fn o_frak_reflections(e: &Env) -> Out {
    let ctx = e.ctx();
    let mut out = Vec::new();
    for u in e.sample_covectors() {
        let mut rhs = Expr::zero();
        for refl in ctx.group().reflections() {
            let c = e.form(&refl.root_covector(), &u);
            let coef = &(&c * &e.sqrt_inv(refl.root_norm)?) * ctx.kappa(refl.param);
            rhs = &rhs + &e.rho(refl.element)?.scale(&coef);
        }
        out.push(&e.of(&u) - &rhs);
    }
    Ok(out)
}

pub fn o_frak_anticommutator(e: &Env) -> Out {
    let cs = e.sample_covectors();
    let mut out = Vec::new();
    for u in &cs {
        for v in &cs {
            let lhs = e.gamma(u).sc(&e.of(v));
            out.push(&(&lhs - &e.beta(u).comm(&e.cov(v))) + &e.form_e(u, v));
            out.push(&lhs - &e.gamma(v).sc(&e.of(u)));
        }
    }
    Ok(out)
}

fn o_frak_chain(e: &Env, n: usize) -> Out {
    let mut out = Vec::new();
    for t in e.sample_tuples(n, 2) {
        let chain = |k: usize| {
            antisym(&t, |w| {
                let mut acc = e.one();
                for (j, u) in w.iter().enumerate() {
                    acc = &acc * &if j == k { e.of(u) } else { e.gamma(u) };
                }
                acc
            })
        };
        let first = chain(0);
        for k in 1..n {
            out.push(&chain(k) - &first);
        }
    }
    Ok(out)
}

pub fn o_frak_chain_2(e: &Env) -> Out {
    o_frak_chain(e, 2)
}

pub fn o_frak_chain_3(e: &Env) -> Out {
    o_frak_chain(e, 3)
}

pub fn o_frak_chain_4(e: &Env) -> Out {
    o_frak_chain(e, 4)
}

pub fn group_center(e: &Env) -> Out {
    let om = Expr::el(&omega_kappa(e.ctx()));
    let mut out: Vec<Expr> = e
        .reflections()
        .into_iter()
        .map(|s| om.comm(&group(e, s)))
        .collect();
    for u in e.sample_covectors() {
        out.push(om.comm(&e.gamma(&u)));
    }
    out.push(om.comm(&Expr::scalar(Scalar::one())));
    Ok(out)
}
