//! Products of basis elements `O_A` for distinct orthonormal indices.

use pinosp::Rational;

use crate::env::Env;
use crate::expr::Expr;
use crate::CaseError;

type Out = Result<Vec<Expr>, CaseError>;

/// One residual per index choice; `f` sees the chosen indices and a lookup
/// from index positions to `O_A`.
fn over(e: &Env, n: usize, f: impl Fn(&dyn Fn(&[usize]) -> Expr) -> Expr) -> Out {
    Ok(e.index_choices(n, 3)
        .into_iter()
        .map(|ix| f(&|pos: &[usize]| e.ob(&pos.iter().map(|&p| ix[p]).collect::<Vec<_>>())))
        .collect())
}

fn sq(a: &Expr) -> Expr {
    a * a
}

fn half() -> Rational {
    Rational::new(1, 2)
}

pub fn pair_pair_overlap(e: &Env) -> Out {
    let (i, j, k) = (0, 1, 2);
    over(e, 3, |o| {
        let rhs = &(&o(&[j, k]) + &o(&[j]).comm(&o(&[k]))) + &o(&[i, j, k]).sc(&o(&[i]));
        &o(&[i, j]).sc(&o(&[k, i])) - &rhs
    })
}

pub fn pair_pair_disjoint(e: &Env) -> Out {
    let (i, j, k, l) = (0, 1, 2, 3);
    let mut out = over(e, 4, |o| {
        let mut rhs = &o(&[i]).sc(&o(&[j, k, l])) - &o(&[j]).sc(&o(&[i, k, l]));
        rhs = &rhs - &o(&[i, j, l]).sc(&o(&[k]));
        rhs = &rhs + &o(&[i, j, k]).sc(&o(&[l]));
        &o(&[i, j]).sc(&o(&[k, l])) - &rhs.scale_rational(half())
    })?;
    out.extend(over(e, 4, |o| {
        let rhs = &o(&[i]).sc(&o(&[j, k, l])) - &o(&[j]).sc(&o(&[i, k, l]));
        &o(&[i, j]).sc(&o(&[k, l])) - &rhs
    })?);
    Ok(out)
}

pub fn pair_triple_disjoint(e: &Env) -> Out {
    let (j, k, l, m, n) = (0, 1, 2, 3, 4);
    over(e, 5, |o| {
        let rhs = &o(&[j]).sc(&o(&[k, l, m, n])) - &o(&[k]).sc(&o(&[j, l, m, n]));
        &o(&[j, k]).sc(&o(&[l, m, n])) - &rhs
    })
}

pub fn pair_triple_overlap_one(e: &Env) -> Out {
    let (j, k, l, m) = (0, 1, 2, 3);
    over(e, 4, |o| {
        let lhs = o(&[j, k]).sc(&o(&[j, l, m]));
        let rest = &(&o(&[k, l, m]) + &o(&[k]).ac(&o(&[l, m]))) + &o(&[j]).sc(&o(&[j, k, l, m]));
        &lhs + &rest
    })
}

pub fn pair_triple_overlap_two(e: &Env) -> Out {
    let (j, k, l) = (0, 1, 2);
    over(e, 3, |o| {
        let rest = &o(&[j]).ac(&o(&[j, l])) + &o(&[k]).ac(&o(&[k, l]));
        &o(&[j, k]).sc(&o(&[j, k, l])) + &rest
    })
}

/// `Σ_a O_a² + Σ_{a<b} O_ab²` over three positions.
fn triple_sum(o: &dyn Fn(&[usize]) -> Expr) -> Expr {
    let mut acc = Expr::zero();
    for a in 0..3 {
        acc = &acc + &sq(&o(&[a]));
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        acc = &acc + &sq(&o(&[a, b]));
    }
    acc
}

pub fn triple_square(e: &Env) -> Out {
    over(e, 3, |o| {
        let ijk = o(&[0, 1, 2]);
        let rhs = &triple_sum(o).scale_rational(Rational::from(2)) - &Expr::rational(half());
        &ijk.sc(&ijk) - &rhs
    })
}

pub fn triple_square_expanded(e: &Env) -> Out {
    over(e, 3, |o| {
        let rhs = &triple_sum(o) - &Expr::rational(Rational::new(1, 4));
        &sq(&o(&[0, 1, 2])) - &rhs
    })
}

pub fn triple_overlap_two(e: &Env) -> Out {
    let (i, j, k, l) = (0, 1, 2, 3);
    over(e, 4, |o| {
        let mut rhs = o(&[k]).sc(&o(&[l]));
        rhs = &rhs + &o(&[i, k]).ac(&o(&[i, l]));
        rhs = &rhs + &o(&[j, k]).ac(&o(&[j, l]));
        &o(&[i, j, k]).sc(&o(&[i, j, l])) - &rhs
    })
}

pub fn triple_overlap_one(e: &Env) -> Out {
    let (i, j, k, m, n) = (0, 1, 2, 3, 4);
    over(e, 5, |o| {
        let mut rhs = &o(&[j, k, m, n]) + &o(&[j, k]).ac(&o(&[m, n]));
        rhs = &rhs + &o(&[i]).sc(&o(&[i, j, k, m, n]));
        &o(&[i, j, k]).sc(&o(&[i, m, n])) - &rhs
    })
}

pub fn triple_disjoint(e: &Env) -> Out {
    let (i, j, k, l, m, n) = (0, 1, 2, 3, 4, 5);
    over(e, 6, |o| {
        let mut rhs = &o(&[i]).sc(&o(&[j, k, l, m, n])) - &o(&[j]).sc(&o(&[i, k, l, m, n]));
        rhs = &rhs + &o(&[k]).sc(&o(&[i, j, l, m, n]));
        &o(&[i, j, k]).sc(&o(&[l, m, n])) - &rhs
    })
}

pub fn pair_quadruple_overlap_two(e: &Env) -> Out {
    let (j, k, l, m) = (0, 1, 2, 3);
    over(e, 4, |o| {
        let rest = &o(&[j]).ac(&o(&[j, l, m])) + &o(&[k]).ac(&o(&[k, l, m]));
        &o(&[j, k]).sc(&o(&[j, k, l, m])) + &rest
    })
}

pub fn pair_quadruple_overlap_one(e: &Env) -> Out {
    let (j, k, l, m, n) = (0, 1, 2, 3, 4);
    over(e, 5, |o| {
        let mut rest = &o(&[k, l, m, n]) + &o(&[k]).ac(&o(&[l, m, n]));
        rest = &rest + &o(&[j]).sc(&o(&[j, k, l, m, n]));
        &o(&[j, k]).sc(&o(&[j, l, m, n])) + &rest
    })
}

pub fn pair_quadruple_disjoint(e: &Env) -> Out {
    let (i, j, k, l, m, n) = (0, 1, 2, 3, 4, 5);
    over(e, 6, |o| {
        let rhs = &o(&[i]).sc(&o(&[j, k, l, m, n])) - &o(&[j]).sc(&o(&[i, k, l, m, n]));
        &o(&[i, j]).sc(&o(&[k, l, m, n])) - &rhs
    })
}

pub fn triple_graded_overlap_two(e: &Env) -> Out {
    let (j, k, l, m) = (0, 1, 2, 3);
    over(e, 4, |o| {
        let mut rhs = -&o(&[l, m]);
        rhs = &rhs - &o(&[l]).ac(&o(&[m]));
        rhs = &rhs + &o(&[j, k]).ac(&o(&[j, k, l, m]));
        &o(&[j, k, l]).ac(&o(&[j, k, m])) - &rhs
    })
}

pub fn triple_graded_overlap_one(e: &Env) -> Out {
    let (j, k, l, m, n) = (0, 1, 2, 3, 4);
    over(e, 5, |o| {
        let mut rhs = -&o(&[j]).ac(&o(&[j, k, l, m, n]));
        rhs = &rhs - &o(&[j, k]).ac(&o(&[j, l, m, n]));
        rhs = &rhs + &o(&[j, l]).ac(&o(&[j, k, m, n]));
        &o(&[j, k, l]).ac(&o(&[j, m, n])) - &rhs
    })
}
