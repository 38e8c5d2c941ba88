//! Commutation relations between the centralizer generators, squares of
//! basis elements and the top-degree element.

use pinosp::{Covector, Rational, Scalar};

use super::parity_sign;
use crate::env::{subsets, Env};
use crate::expr::{antisym, Expr};
use crate::CaseError;

type Out = Result<Vec<Expr>, CaseError>;

fn half() -> Rational {
    Rational::new(1, 2)
}

/// `B(b, x)a − B(a, x)b`.
fn hat(e: &Env, a: &Covector, b: &Covector, x: &Covector) -> Covector {
    let sp = e.ctx().space();
    &a.scale(&sp.form(b, x)) - &b.scale(&sp.form(a, x))
}

fn o1(e: &Env, u: &Covector) -> Expr {
    e.o(std::slice::from_ref(u))
}

fn tuples(e: &Env, n: usize) -> Vec<Vec<Covector>> {
    let mut out = e.sample_tuples(n, 2);
    if out.is_empty() {
        out = (0..3).map(|off| e.generic_tuple(n, off)).collect();
    }
    out
}

fn single_vs_rest(e: &Env, n: usize) -> Out {
    let mut out = Vec::new();
    for t in tuples(e, n) {
        let left = antisym(&t, |w| &e.o(&w[..1]) * &e.o(&w[1..]));
        let right = antisym(&t, |w| &e.o(&w[..n - 1]) * &e.o(&w[n - 1..]));
        out.push(&left - &right);
        out.push(antisym(&t, |w| e.o(&w[..1]).sc(&e.o(&w[1..]))));
    }
    Ok(out)
}

pub fn single_vs_rest_2(e: &Env) -> Out {
    single_vs_rest(e, 2)
}

pub fn single_vs_rest_3(e: &Env) -> Out {
    single_vs_rest(e, 3)
}

pub fn single_vs_rest_4(e: &Env) -> Out {
    single_vs_rest(e, 4)
}

pub fn single_vs_rest_5(e: &Env) -> Out {
    single_vs_rest(e, 5)
}

fn pair_vs_rest(e: &Env, n: usize) -> Out {
    let mut out = Vec::new();
    for t in tuples(e, n) {
        let left = antisym(&t, |w| &e.o(&w[..2]) * &e.o(&w[2..]));
        let right = antisym(&t, |w| &e.o(&w[..n - 2]) * &e.o(&w[n - 2..]));
        out.push(&left - &right);
        out.push(antisym(&t, |w| e.o(&w[..2]).sc(&e.o(&w[2..]))));
    }
    Ok(out)
}

pub fn pair_vs_rest_3(e: &Env) -> Out {
    pair_vs_rest(e, 3)
}

pub fn pair_vs_rest_4(e: &Env) -> Out {
    pair_vs_rest(e, 4)
}

pub fn pair_vs_rest_5(e: &Env) -> Out {
    pair_vs_rest(e, 5)
}

fn generic(e: &Env, n: usize) -> Vec<Vec<Covector>> {
    let mut out: Vec<_> = (0..3).map(|off| e.generic_tuple(n, off)).collect();
    if e.dim() >= n {
        out.extend(e.sample_tuples(n, 1));
    }
    out
}

pub fn two_index_cyclic(e: &Env) -> Out {
    Ok(generic(e, 3)
        .iter()
        .map(|t| {
            let (u, v, w) = (&t[0], &t[1], &t[2]);
            let a = e.o(&[u.clone(), v.clone()]).sc(&o1(e, w));
            let b = e.o(&[u.clone(), w.clone()]).sc(&o1(e, v));
            let c = e.o(&[v.clone(), w.clone()]).sc(&o1(e, u));
            &(&a - &b) + &c
        })
        .collect())
}

pub fn three_index_cyclic(e: &Env) -> Out {
    Ok(generic(e, 4)
        .iter()
        .map(|t| {
            let term = |skip: usize| {
                let rest: Vec<Covector> = (0..4)
                    .filter(|&k| k != skip)
                    .map(|k| t[k].clone())
                    .collect();
                e.o(&rest).sc(&o1(e, &t[skip]))
            };
            &(&(&term(3) - &term(2)) + &term(1)) - &term(0)
        })
        .collect())
}

pub fn antisym_pair_product(e: &Env) -> Out {
    Ok(generic(e, 4)
        .iter()
        .map(|t| {
            let prod = antisym(t, |w| &e.o(&w[..2]) * &e.o(&w[2..]));
            let anti = antisym(t, |w| e.o(&w[..2]).ac(&e.o(&w[2..])));
            &prod - &anti.scale_rational(half())
        })
        .collect())
}

/// Tuples with overlapping and disjoint supports, taken from the sample
/// covectors.
fn bracket_tuples(e: &Env, n: usize) -> Vec<Vec<Covector>> {
    let mut out: Vec<_> = (0..4).map(|off| e.generic_tuple(n, off)).collect();
    if e.dim() >= n {
        out.push(e.xs(&(0..n).collect::<Vec<_>>()));
    }
    let mut swapped = e.generic_tuple(n, 0);
    if n >= 4 {
        swapped.swap(2, 1);
        swapped[3] = e.xc(0);
        out.push(swapped);
    }
    out
}

fn gg(e: &Env, a: &Covector, v: &Covector) -> Expr {
    o1(e, a).comm(&o1(e, v))
}

pub fn pair_pair_bracket(e: &Env) -> Out {
    let mut out = Vec::new();
    let mut ts = bracket_tuples(e, 4);
    ts.push(vec![e.xc(0), e.xc(1), e.xc(1), e.xc(0)]);
    for t in ts {
        let (a, b, u, v) = (&t[0], &t[1], &t[2], &t[3]);
        let o = |xs: &[&Covector]| e.o(&xs.iter().map(|&c| c.clone()).collect::<Vec<_>>());
        let lhs = o(&[a, b]).sc(&o(&[u, v]));
        let term = |p: &Covector, q: &Covector| &o(&[p, q]) + &gg(e, p, q);
        let mut first = term(a, v).scale(&e.form(b, u));
        first = &first - &term(b, v).scale(&e.form(a, u));
        first = &first - &term(a, u).scale(&e.form(b, v));
        first = &first + &term(b, u).scale(&e.form(a, v));
        let mut tail = o1(e, a).sc(&o(&[b, u, v]));
        tail = &tail - &o1(e, b).sc(&o(&[a, u, v]));
        tail = &tail + &o(&[a, b, u]).sc(&o1(e, v));
        tail = &tail - &o(&[a, b, v]).sc(&o1(e, u));
        first = &first + &tail.scale_rational(half());
        out.push(&lhs - &first);

        let (uh, vh) = (hat(e, a, b, u), hat(e, a, b, v));
        let mut second = &o(&[&uh, v]) + &o1(e, &uh).ac(&o1(e, v));
        second = &second + &o(&[a, b, u]).sc(&o1(e, v));
        second = &second + &o(&[u, &vh]);
        second = &second + &o1(e, u).ac(&o1(e, &vh));
        second = &second - &o(&[a, b, v]).sc(&o1(e, u));
        out.push(&lhs - &second);
    }
    Ok(out)
}

/// `O` of `rest` with the entry at `k` replaced by its hat.
fn hatted(e: &Env, a: &Covector, b: &Covector, rest: &[Covector], k: usize) -> Expr {
    let mut w = rest.to_vec();
    w[k] = hat(e, a, b, &rest[k]);
    e.o(&w)
}

fn without(rest: &[Covector], k: usize) -> Vec<Covector> {
    let mut w = rest.to_vec();
    w.remove(k);
    w
}

fn with_front(c: &Covector, rest: &[Covector]) -> Vec<Covector> {
    let mut w = vec![c.clone()];
    w.extend_from_slice(rest);
    w
}

pub fn pair_triple_bracket(e: &Env) -> Out {
    let mut out = Vec::new();
    for t in bracket_tuples(e, 5) {
        let (a, b, rest) = (&t[0], &t[1], &t[2..]);
        let lhs = e.o(&t[..2]).sc(&e.o(rest));
        let mut rhs = Expr::zero();
        for k in 0..3 {
            rhs = &rhs + &hatted(e, a, b, rest, k);
            let anti = o1(e, &hat(e, a, b, &rest[k])).ac(&e.o(&without(rest, k)));
            rhs = &rhs + &anti.scale_rational(Rational::from(parity_sign(k)));
        }
        rhs = &rhs + &o1(e, a).sc(&e.o(&with_front(b, rest)));
        rhs = &rhs - &o1(e, b).sc(&e.o(&with_front(a, rest)));
        out.push(&lhs - &rhs);
    }
    Ok(out)
}

pub fn pair_quadruple_bracket(e: &Env) -> Out {
    let mut out = Vec::new();
    for t in bracket_tuples(e, 6) {
        let (a, b, rest) = (&t[0], &t[1], &t[2..]);
        let lhs = e.o(&t[..2]).sc(&e.o(rest));
        let mut rhs = Expr::zero();
        for k in 0..4 {
            rhs = &rhs + &hatted(e, a, b, rest, k);
            rhs = &rhs + &o1(e, &hat(e, a, b, &rest[k])).ac(&e.o(&without(rest, k)));
        }
        rhs = &rhs + &o1(e, a).sc(&e.o(&with_front(b, rest)));
        rhs = &rhs - &o1(e, b).sc(&e.o(&with_front(a, rest)));
        out.push(&lhs - &rhs);
    }
    Ok(out)
}

pub fn triple_triple(e: &Env) -> Out {
    let ob = e.orthogonal_basis();
    if ob.len() < 6 {
        return Err(CaseError::Unsupported(
            "needs six orthogonal covectors".into(),
        ));
    }
    let two = Rational::from(2);
    let tuples = [
        [
            ob[0].clone(),
            ob[1].clone(),
            ob[2].clone(),
            &ob[0] + &ob[3],
            &ob[1] + &ob[4],
            &ob[2] + &ob[5],
        ],
        [
            ob[0].clone(),
            ob[1].clone(),
            ob[2].clone(),
            ob[3].clone(),
            ob[4].clone(),
            ob[5].clone(),
        ],
        [
            ob[0].clone(),
            ob[1].clone(),
            ob[2].clone(),
            &ob[0].scale_rational(two) + &ob[3],
            &ob[1] - &ob[4],
            &ob[2] + &ob[3],
        ],
    ];
    let mut out = Vec::new();
    for t in tuples {
        let [a, b, c, u, v, w] = &t;
        let o = |xs: &[&Covector]| e.o(&xs.iter().map(|&x| x.clone()).collect::<Vec<_>>());
        let (bau, bbv, bcw) = (e.form(a, u), e.form(b, v), e.form(c, w));
        let lhs = o(&[a, b, c]).sc(&o(&[u, v, w]));
        let mut rhs = (&o(&[b, c, v, w]) + &o(&[b, c]).ac(&o(&[v, w]))).scale(&bau);
        rhs = &rhs + &o1(e, a).sc(&o(&[b, c, u, v, w]));
        rhs = &rhs + &(&o(&[a, c, u, w]) + &o(&[a, c]).ac(&o(&[u, w]))).scale(&bbv);
        rhs = &rhs - &o1(e, b).sc(&o(&[a, c, u, v, w]));
        rhs = &rhs + &(&o(&[a, b, u, v]) + &o(&[a, b]).ac(&o(&[u, v]))).scale(&bcw);
        rhs = &rhs + &o1(e, c).sc(&o(&[a, b, u, v, w]));
        rhs = &rhs + &o1(e, a).sc(&o1(e, u)).scale(&(&bbv * &bcw));
        rhs = &rhs + &o1(e, b).sc(&o1(e, v)).scale(&(&bau * &bcw));
        rhs = &rhs + &o1(e, c).sc(&o1(e, w)).scale(&(&bau * &bbv));
        rhs = &rhs - &Expr::scalar((&(&bau * &bbv) * &bcw).scale_rational(&half()));
        out.push(&lhs - &rhs);
    }
    Ok(out)
}

/// `(−1)^{n(n−1)/2}((n−1)(n−2)/8 − (n−2)Σ_a O_a² − Σ_{a<b} O_ab²)` over the
/// basis indices in `s`.
fn square_rhs(e: &Env, s: &[usize]) -> Expr {
    let n = s.len() as i64;
    let mut acc = Expr::rational(Rational::new((n - 1) * (n - 2), 8));
    for &a in s {
        let oa = e.ob(&[a]);
        acc = &acc - &(&oa * &oa).scale_rational(Rational::from(n - 2));
    }
    for p in subsets(s.len(), 2) {
        let oab = e.ob(&[s[p[0]], s[p[1]]]);
        acc = &acc - &(&oab * &oab);
    }
    acc.scale_rational(Rational::from(parity_sign(
        (s.len() * (s.len() - 1) / 2) % 2,
    )))
}

fn square(e: &Env, n: usize) -> Out {
    Ok(subsets(e.dim(), n)
        .into_iter()
        .take(3)
        .map(|s| {
            let o = e.ob(&s);
            &(&o * &o) - &square_rhs(e, &s)
        })
        .collect())
}

pub fn square_1(e: &Env) -> Out {
    square(e, 1)
}

pub fn square_2(e: &Env) -> Out {
    square(e, 2)
}

pub fn square_3(e: &Env) -> Out {
    square(e, 3)
}

pub fn square_4(e: &Env) -> Out {
    square(e, 4)
}

fn top(e: &Env) -> Expr {
    Expr::el(&e.cent().o_top())
}

/// `(d−2)Σ_j O_j² + Σ_{j<k} O_jk²`.
fn omega(e: &Env) -> Expr {
    let d = e.dim();
    let mut acc = Expr::zero();
    for j in 0..d {
        let o = e.ob(&[j]);
        acc = &acc + &(&o * &o).scale_rational(Rational::from(d as i64 - 2));
    }
    for p in subsets(d, 2) {
        let o = e.ob(&p);
        acc = &acc + &(&o * &o);
    }
    acc
}

pub fn top_signs(e: &Env) -> Out {
    let t = top(e);
    let mut out = Vec::new();
    for n in 1..=3.min(e.dim()) {
        for u in e.sample_tuples(n, 3) {
            let o = e.o(&u);
            out.push(if n == 2 { t.sc(&o) } else { t.ac(&o) });
        }
    }
    Ok(out)
}

pub fn top_formula(e: &Env) -> Out {
    let d = e.dim();
    let gammas = e.gammas(&e.xs(&(0..d).collect::<Vec<_>>()));
    let factor = &(-&e.odd_commutator()) - &Expr::rational(half());
    Ok(vec![&top(e) - &(&factor * &gammas)])
}

pub fn top_square(e: &Env) -> Out {
    let d = e.dim() as i64;
    let t = top(e);
    let rhs = &Expr::rational(Rational::new((d - 1) * (d - 2), 8)) - &omega(e);
    let sign = parity_sign(((d * (d - 1) / 2) % 2) as usize);
    Ok(vec![&(&t * &t) - &rhs.scale_rational(Rational::from(sign))])
}

pub fn omega_central(e: &Env) -> Out {
    let om = omega(e);
    let mut out = vec![&om - &Expr::el(&e.cent().central_omega())];
    for n in 1..=3.min(e.dim()) {
        for s in subsets(e.dim(), n).into_iter().take(3) {
            out.push(om.comm(&e.ob(&s)));
        }
    }
    for s in e.reflections() {
        out.push(om.comm(&e.rho(s)?));
    }
    out.push(om.comm(&Expr::scalar(Scalar::one())));
    Ok(out)
}
