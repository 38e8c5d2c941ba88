//! The bilinear-form elements `(w ⊙ z)(B)` and their adjoint action.

use pinosp::osp::{pair_element, pair_element_vec, super_form, tensor, SuperBasis, SuperVector};
use pinosp::special::omega_kappa;
use pinosp::{Element, Rational};

use crate::env::Env;
use crate::expr::Expr;
use crate::CaseError;

type Out = Result<Vec<Expr>, CaseError>;

use SuperBasis::*;

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn pair(e: &Env, w: SuperBasis, z: SuperBasis) -> Expr {
    Expr::el(&pair_element(e.ctx(), w, z))
}

fn t(e: &Env, u: &pinosp::Covector, xi: SuperBasis) -> Expr {
    Expr::el(&tensor(e.ctx(), u, xi))
}

fn sign(w: SuperBasis, z: SuperBasis) -> Rational {
    if w.is_odd() && z.is_odd() {
        r(-1)
    } else {
        r(1)
    }
}

pub fn values(e: &Env) -> Out {
    let mut out = vec![
        &pair(e, XPlus, XMinus) - &e.h,
        &pair(e, XPlus, XPlus) - &e.ep.scale_rational(r(2)),
        &pair(e, XMinus, XMinus) + &e.em.scale_rational(r(2)),
        &pair(e, XPlus, Gamma) - &e.x,
        &pair(e, XMinus, Gamma) - &e.d,
        pair(e, Gamma, Gamma),
    ];
    for w in SuperBasis::ALL {
        for z in SuperBasis::ALL {
            out.push(&pair(e, w, z) - &pair(e, z, w).scale_rational(sign(w, z)));
        }
    }
    Ok(out)
}

pub fn normal_ordered(e: &Env) -> Out {
    let sp = e.ctx().space();
    let d = e.dim() as i64;
    let om = Expr::el(&omega_kappa(e.ctx()));
    let mut out = Vec::new();
    for w in SuperBasis::ALL {
        for z in SuperBasis::ALL {
            let mut rhs = Expr::zero();
            for p in 0..e.dim() {
                for q in 0..e.dim() {
                    let b = sp.gram_inv().get(p, q);
                    if b != r(0) {
                        rhs = &rhs + &(&t(e, &e.xc(p), w) * &t(e, &e.xc(q), z)).scale_rational(b);
                    }
                }
            }
            let bw = super_form(w, z);
            let omega = if w.is_odd() || z.is_odd() { r(0) } else { bw };
            rhs = &rhs - &Expr::rational(bw * Rational::new(d, 2));
            rhs = &rhs - &om.scale_rational(omega);
            out.push(&pair(e, w, z) - &rhs);
        }
    }
    Ok(out)
}

pub fn pin_invariance(e: &Env) -> Out {
    let mut out = Vec::new();
    for s in e.reflections() {
        let rh = e.rho(s)?;
        for w in SuperBasis::ALL {
            for z in SuperBasis::ALL {
                out.push(pair(e, w, z).sc(&rh));
            }
        }
    }
    Ok(out)
}

pub fn adjoint_even(e: &Env) -> Out {
    let mut out = Vec::new();
    for xi1 in [XPlus, XMinus] {
        for xi2 in [XPlus, XMinus] {
            for eta in SuperBasis::ALL {
                for u in e.sample_covectors() {
                    let lhs = pair(e, xi1, xi2).sc(&t(e, &u, eta));
                    let rhs = &t(e, &u, xi1).scale_rational(super_form(xi2, eta))
                        + &t(e, &u, xi2).scale_rational(super_form(xi1, eta));
                    out.push(&lhs - &rhs);
                }
            }
        }
    }
    Ok(out)
}

pub fn adjoint_odd(e: &Env) -> Out {
    let mut out = Vec::new();
    for xi1 in [XPlus, XMinus] {
        for eta in SuperBasis::ALL {
            for u in e.sample_covectors() {
                let lhs = pair(e, xi1, Gamma).sc(&t(e, &u, eta));
                let tail = &t(e, &u, Gamma) + &e.of(&u).scale_rational(r(2));
                let rhs = &t(e, &u, xi1).scale_rational(super_form(Gamma, eta))
                    + &tail.scale_rational(super_form(xi1, eta));
                out.push(&lhs - &rhs);
            }
        }
    }
    Ok(out)
}

pub fn sl2_on_vectors(e: &Env) -> Out {
    let mut out = Vec::new();
    for u in e.sample_covectors() {
        let (vp, vm) = (e.cov(&u), e.beta(&u));
        out.push(&pair(e, XMinus, XMinus).sc(&vp) - &vm.scale_rational(r(2)));
        out.push(&pair(e, XPlus, XPlus).sc(&vm) + &vp.scale_rational(r(2)));
        out.push(&pair(e, XPlus, XMinus).sc(&vp) - &vp);
        out.push(&pair(e, XPlus, XMinus).sc(&vm) + &vm);
    }
    Ok(out)
}

pub fn o_frak_adjoint(e: &Env) -> Out {
    let ctx = e.ctx();
    let mut out = Vec::new();
    for u in e.sample_covectors() {
        let half = Rational::new(1, 2);
        out.push(&e.of(&u) - &(&e.d.sc(&e.cov(&u)) - &e.gamma(&u)).scale_rational(half));
        let mut sum = Expr::zero();
        for p in 0..e.dim() {
            let yp = e.el(&Element::y(ctx, p));
            sum = &sum + &(&yp.comm(&e.cov(&u)) * &e.gamma(&e.xc(p)));
        }
        out.push(&e.of(&u) - &(&sum - &e.gamma(&u)).scale_rational(half));
    }
    Ok(out)
}

pub fn o_frak_trace(e: &Env) -> Out {
    let sp = e.ctx().space();
    let om = Expr::el(&omega_kappa(e.ctx()));
    let (mut left, mut right) = (Expr::zero(), Expr::zero());
    for p in 0..e.dim() {
        for q in 0..e.dim() {
            let b = sp.gram_inv().get(p, q);
            if b == r(0) {
                continue;
            }
            left = &left + &(&e.of(&e.xc(p)) * &e.gamma(&e.xc(q))).scale_rational(b);
            right = &right + &(&e.gamma(&e.xc(p)) * &e.of(&e.xc(q))).scale_rational(b);
        }
    }
    Ok(vec![&left - &om, &right - &om])
}

pub fn structure_constants(e: &Env) -> Out {
    let sv = SuperVector::basis;
    let pv = |a: &SuperVector, b: &SuperVector| Expr::el(&pair_element_vec(e.ctx(), a, b));
    let mut out = Vec::new();
    for z1 in SuperBasis::ALL {
        for z2 in SuperBasis::ALL {
            for z3 in SuperBasis::ALL {
                for z4 in SuperBasis::ALL {
                    let lhs = pair(e, z1, z2).sc(&pair(e, z3, z4));
                    let w1 = sv(z1)
                        .scaled(super_form(z2, z3))
                        .add(&sv(z2).scaled(sign(z2, z3) * super_form(z1, z3)));
                    let w2 = sv(z1)
                        .scaled(super_form(z2, z4))
                        .add(&sv(z2).scaled(sign(z2, z4) * super_form(z1, z4)));
                    let s = if (z1.is_odd() ^ z2.is_odd()) && z3.is_odd() {
                        r(-1)
                    } else {
                        r(1)
                    };
                    let rhs = &pv(&w1, &sv(z4)) + &pv(&sv(z3), &w2).scale_rational(s);
                    out.push(&lhs - &rhs);
                }
            }
        }
    }
    Ok(out)
}
