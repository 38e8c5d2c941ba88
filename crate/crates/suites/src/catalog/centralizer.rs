//! Centralizer of sl(2), membership of the projected elements, agreement of
//! their constructions and their structural identities.

use pinosp::{Covector, Element, ExplicitForm, Rational};

use super::parity_sign;
use crate::env::Env;
use crate::expr::{antisym, Expr};
use crate::CaseError;

type Out = Result<Vec<Expr>, CaseError>;

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn without(us: &[Covector], skip: &[usize]) -> Vec<Covector> {
    us.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, u)| u.clone())
        .collect()
}

pub fn angular_momentum_forms(e: &Env) -> Out {
    let mut out = Vec::new();
    for t in e.sample_tuples(2, 3) {
        let (u, v) = (&t[0], &t[1]);
        let m = e.m(u, v);
        let ub = &e.cov(u) * &e.beta(v);
        let bu = &e.beta(u) * &e.cov(v);
        let vb = &e.cov(v) * &e.beta(u);
        let bv = &e.beta(v) * &e.cov(u);
        let sym = &(&(&ub - &bu) - &vb) + &bv;
        out.push(&m - &sym.scale_rational(Rational::new(1, 2)));
        out.push(&m - &(&bv - &bu));
        out.push(&m - &(&ub - &vb));
    }
    Ok(out)
}

pub fn sl2_generators(e: &Env) -> Out {
    let mut samples: Vec<Expr> = e
        .reflections()
        .iter()
        .map(|&s| e.el(&Element::group(e.ctx(), s)))
        .collect();
    for u in e.sample_covectors() {
        samples.push(e.gamma(&u));
    }
    for t in e.sample_tuples(2, 3) {
        samples.push(e.m(&t[0], &t[1]));
    }
    let mut out = Vec::new();
    for a in &samples {
        out.extend([e.h.sc(a), e.ep.sc(a), e.em.sc(a)]);
    }
    Ok(out)
}

pub fn angular_momentum_brackets(e: &Env) -> Out {
    let cs = e.sample_covectors();
    let mut out = Vec::new();
    let quads: Vec<[usize; 4]> = vec![
        [0, 1, 0, 1],
        [0, 1, 1, 0],
        [0, 1, 2, 3],
        [0, 2, 1, 3],
        [3, 4, 0, 1],
        [0, 4, 1, 3],
    ];
    for q in quads {
        let k = cs.len();
        let (u, v, x, y) = (&cs[q[0] % k], &cs[q[1] % k], &cs[q[2] % k], &cs[q[3] % k]);
        let lhs = e.m(u, v).sc(&e.m(x, y));
        let rhs = &(&(&(&e.m(v, x) * &e.bk(u, y)) - &(&e.m(u, x) * &e.bk(v, y)))
            - &(&e.m(v, y) * &e.bk(u, x)))
            + &(&e.m(u, y) * &e.bk(v, x));
        out.push(&lhs - &rhs);
    }
    Ok(out)
}

pub fn pairing_symmetries(e: &Env) -> Out {
    let cs = e.sample_covectors();
    let mut out = Vec::new();
    for a in &cs {
        for b in cs.iter().take(3) {
            for c in cs.iter().take(3) {
                let (xs, u, v) = (e.cov(a), e.beta(b), e.beta(c));
                out.push(&xs.comm(&u).comm(&v) - &xs.comm(&v).comm(&u));
                let (ys, w) = (e.cov(c), e.beta(b));
                out.push(&xs.comm(&w).comm(&ys) - &ys.comm(&w).comm(&xs));
            }
        }
    }
    Ok(out)
}

fn membership(e: &Env, n: usize) -> Out {
    let mut out = Vec::new();
    for t in e.sample_tuples(n, 3) {
        let o = e.o(&t);
        out.push(e.x.sc(&o));
        out.push(e.d.sc(&o));
    }
    Ok(out)
}

pub fn membership_1(e: &Env) -> Out {
    membership(e, 1)
}

pub fn membership_2(e: &Env) -> Out {
    membership(e, 2)
}

pub fn membership_3(e: &Env) -> Out {
    membership(e, 3)
}

pub fn membership_4(e: &Env) -> Out {
    membership(e, 4)
}

pub fn membership_isotropic(e: &Env) -> Out {
    let w = e
        .ctx()
        .space()
        .witt_basis(1)
        .map_err(|err| CaseError::Unsupported(err.to_string()))?;
    let (zp, zm) = (w.plus[0].clone(), w.minus[0].clone());
    let mut tuples = vec![
        vec![zp.clone()],
        vec![zm.clone()],
        vec![zp.clone(), zm.clone()],
    ];
    if e.dim() >= 3 {
        tuples.push(vec![zp, zm, e.xc(2)]);
    }
    let mut out = Vec::new();
    for t in tuples {
        let o = e.o(&t);
        out.push(e.x.sc(&o));
        out.push(e.d.sc(&o));
    }
    Ok(out)
}

pub fn skew_symmetry(e: &Env) -> Out {
    let c = e.cent();
    let el = |x: Element| Expr::el(&x);
    let (u, v, w) = (e.xc(0), e.xc(1), e.comb(&[1, -2]));
    let mut out = vec![
        &el(c.o_proj(&[u.clone(), v.clone()])) + &el(c.o_proj(&[v.clone(), u.clone()])),
        el(c.o_proj(&[u.clone(), u.clone()])),
        el(c.o_proj(&[w.clone(), w.clone()])),
    ];
    let lin = &u + &w.scale_rational(r(2));
    let lhs = el(c.o_proj(&[lin, v.clone()]));
    let rhs = &el(c.o_proj(&[u.clone(), v.clone()]))
        + &el(c.o_proj(&[w.clone(), v.clone()])).scale_rational(r(2));
    out.push(&lhs - &rhs);
    if e.dim() >= 3 {
        let x = e.xc(2);
        let base = el(c.o_proj(&[u.clone(), v.clone(), x.clone()]));
        out.push(&el(c.o_proj(&[v.clone(), x.clone(), u.clone()])) - &base);
        out.push(&el(c.o_proj(&[x.clone(), v.clone(), u.clone()])) + &base);
        out.push(el(c.o_proj(&[u.clone(), v.clone(), u])));
    }
    Ok(out)
}

/// The two expanded explicit forms of `O_{u_1 ⋯ u_n}`.
fn expanded_forms(e: &Env, us: &[Covector]) -> [Expr; 2] {
    let n = us.len();
    let ni = n as i64;
    let ag = |s: &[usize]| e.agamma(&without(us, s));
    let mut first = ag(&[]).scale_rational(Rational::new(ni - 1, 2));
    let mut second = ag(&[]).scale_rational(Rational::new(-(ni - 1) * (ni - 2), 4));
    for j in 0..n {
        let t = (&e.of(&us[j]) * &ag(&[j])).scale_rational(r(parity_sign(j)));
        first = &first + &t;
        second = &second - &t.scale_rational(r(ni - 2));
        for k in j + 1..n {
            let s = r(parity_sign(j + k + 1));
            first = &first + &(&e.m(&us[j], &us[k]) * &ag(&[j, k])).scale_rational(s);
            second =
                &second + &(&e.o(&[us[j].clone(), us[k].clone()]) * &ag(&[j, k])).scale_rational(s);
        }
    }
    [first, second]
}

fn routes(e: &Env, n: usize) -> Out {
    let c = e.cent();
    let mut out = Vec::new();
    for t in e.sample_tuples(n, 2) {
        let base = Expr::el(&c.o_proj(&t));
        out.push(&Expr::el(&c.o_proj_minus(&t)) - &base);
        out.push(&Expr::el(&c.o_explicit(&t, ExplicitForm::First)) - &base);
        out.push(&Expr::el(&c.o_explicit(&t, ExplicitForm::Second)) - &base);
        for f in expanded_forms(e, &t) {
            out.push(&f - &base);
        }
        if n == 1 {
            out.push(&e.of(&t[0]) - &base);
        }
    }
    Ok(out)
}

pub fn routes_1(e: &Env) -> Out {
    routes(e, 1)
}

pub fn routes_2(e: &Env) -> Out {
    routes(e, 2)
}

pub fn routes_3(e: &Env) -> Out {
    routes(e, 3)
}

pub fn routes_4(e: &Env) -> Out {
    routes(e, 4)
}

pub fn routes_two_index(e: &Env) -> Out {
    let c = e.cent();
    let mut out = Vec::new();
    for t in e.sample_tuples(2, 3) {
        let (u, v) = (&t[0], &t[1]);
        let base = e.o(&t);
        out.push(&Expr::el(&c.o_uv(u, v)) - &base);
        out.push(&Expr::el(&c.o_uv_alt(u, v)) - &base);
        let mixed = antisym(&t, |w| &e.of(&w[0]) * &e.gamma(&w[1]));
        let rhs = &(&e.agamma(&t).scale_rational(Rational::new(1, 2))
            + &mixed.scale_rational(r(2)))
            + &e.m(u, v);
        out.push(&rhs - &base);
        let (gu, gv) = (e.gamma(u), e.gamma(v));
        let half = Rational::new(1, 2);
        let first = &(&(&(&(&e.cov(u) * &e.beta(v)) - &(&e.beta(u) * &e.cov(v)))
            + &(&(&gu * &gv) + &e.form_e(u, v)).scale_rational(half))
            + &(&e.of(u) * &gv))
            + &(&gu * &e.of(v));
        let second = &(&(&(&(&e.cov(u) * &e.beta(v)) - &(&e.cov(v) * &e.beta(u)))
            + &(&(&gu * &gv) - &e.form_e(u, v)).scale_rational(half))
            + &(&e.of(u) * &gv))
            - &(&e.of(v) * &gu);
        out.push(&first - &base);
        out.push(&second - &base);
    }
    Ok(out)
}

pub fn routes_three_index(e: &Env) -> Out {
    let c = e.cent();
    let mut out = Vec::new();
    for t in e.sample_tuples(3, 3) {
        let (u, v, w) = (&t[0], &t[1], &t[2]);
        let base = e.o(&t);
        out.push(&Expr::el(&c.o_uvw(u, v, w)) - &base);
        let a2 = |p: &Covector, q: &Covector| e.agamma(&[p.clone(), q.clone()]);
        let mut rhs = e.agamma(&t);
        rhs = &rhs + &(&e.m(v, w) * &e.gamma(u));
        rhs = &rhs - &(&e.m(u, w) * &e.gamma(v));
        rhs = &rhs + &(&e.m(u, v) * &e.gamma(w));
        rhs = &rhs + &(&e.of(u) * &a2(v, w));
        rhs = &rhs - &(&e.of(v) * &a2(u, w));
        rhs = &rhs + &(&e.of(w) * &a2(u, v));
        out.push(&rhs - &base);
    }
    Ok(out)
}

pub fn group_action(e: &Env) -> Out {
    let grp = e.ctx().group();
    let refl = e.reflections();
    let mut words: Vec<Vec<usize>> = refl.iter().map(|&s| vec![s]).collect();
    if refl.len() >= 2 {
        words.push(vec![refl[0], refl[1]]);
    }
    let mut out = Vec::new();
    for word in &words {
        let mut rw = e.one();
        let mut g = 0;
        for &s in word {
            rw = &rw * &e.rho(s)?;
            g = grp.mul(g, s);
        }
        for n in 1..=e.dim().min(3) {
            for t in e.sample_tuples(n, 2) {
                let gt: Vec<Covector> = t.iter().map(|u| grp.act_covector(g, u)).collect();
                let s = r(parity_sign(word.len() * n));
                out.push(&(&rw * &e.o(&t)) - &(&e.o(&gt) * &rw).scale_rational(s));
            }
        }
    }
    Ok(out)
}

fn pair_chain(e: &Env, n: usize) -> Out {
    let mut out = Vec::new();
    for t in e.sample_tuples(n, 2) {
        let chain = |k: usize| {
            antisym(&t, |w| {
                let mut acc = e.one();
                let mut j = 0;
                while j < w.len() {
                    if j == k {
                        acc = &acc * &e.o(&w[j..j + 2]);
                        j += 2;
                    } else {
                        acc = &acc * &e.gamma(&w[j]);
                        j += 1;
                    }
                }
                acc
            })
        };
        let first = chain(0);
        for k in 1..n - 1 {
            out.push(&chain(k) - &first);
        }
    }
    Ok(out)
}

pub fn pair_chain_3(e: &Env) -> Out {
    pair_chain(e, 3)
}

pub fn pair_chain_4(e: &Env) -> Out {
    pair_chain(e, 4)
}

fn recursion(e: &Env, n: usize) -> Out {
    let ni = n as i64;
    let mut out = Vec::new();
    for t in e.sample_tuples(n, 2) {
        let o = e.o(&t);
        let a1 = antisym(&t, |w| &e.o(&w[..1]) * &e.o(&w[1..]));
        let a2 = antisym(&t, |w| &e.o(&w[..2]) * &e.o(&w[2..]));
        let rhs = &a1.scale_rational(r(-4 * (ni - 2))) + &a2.scale_rational(r(2 * (ni - 1)));
        out.push(&o.scale_rational(r(ni - 3)) - &rhs);
        let mut exp = Expr::zero();
        for j in 0..n {
            let t1 = &e.o(&t[j..j + 1]) * &e.o(&without(&t, &[j]));
            exp = &exp - &t1.scale_rational(r((ni - 2) * parity_sign(j)));
            for k in j + 1..n {
                let t2 = &e.o(&[t[j].clone(), t[k].clone()]) * &e.o(&without(&t, &[j, k]));
                exp = &exp + &t2.scale_rational(r(parity_sign(j + k + 1)));
            }
        }
        out.push(&o.scale_rational(Rational::new(ni * (ni - 3), 4)) - &exp);
    }
    Ok(out)
}

pub fn recursion_3(e: &Env) -> Out {
    recursion(e, 3)
}

pub fn recursion_4(e: &Env) -> Out {
    recursion(e, 4)
}

pub fn closed_form_4(e: &Env) -> Out {
    let mut out = Vec::new();
    for t in e.sample_tuples(4, 2) {
        let a22 = antisym(&t, |w| &e.o(&w[..2]) * &e.o(&w[2..]));
        let a31 = antisym(&t, |w| &e.o(&w[..3]) * &e.o(&w[3..]));
        out.push(&(&e.o(&t) - &a22.scale_rational(r(6))) + &a31.scale_rational(r(8)));
    }
    Ok(out)
}

pub fn closed_form_5(e: &Env) -> Out {
    let mut out = Vec::new();
    for t in e.sample_tuples(5, 1) {
        let a32 = antisym(&t, |w| &e.o(&w[..3]) * &e.o(&w[3..]));
        let a311 = antisym(&t, |w| &(&e.o(&w[..3]) * &e.o(&w[3..4])) * &e.o(&w[4..]));
        let a221 = antisym(&t, |w| &(&e.o(&w[..2]) * &e.o(&w[2..4])) * &e.o(&w[4..]));
        let rhs = &(&a32.scale_rational(r(4)) + &a311.scale_rational(r(48)))
            - &a221.scale_rational(r(36));
        out.push(&e.o(&t) - &rhs);
    }
    Ok(out)
}
