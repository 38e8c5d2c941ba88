//! Distinguished elements of `A_κ`: antisymmetrized Clifford products, the
//! Pin-twisted reflections `ρ(s̃)`, the chirality element, the
//! reflection-weighted elements `𝒪_u`, `Ω_κ`, angular momenta and `ψ_κ^B`.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::algebra::{Algebra, AlgebraError, Element};
use crate::geometry::Covector;
use crate::scalars::{int, BaseNumber, Rational, Scalar};

/// `𝒜(f_1 ⋯ f_n) = (1/n!) Σ_σ sgn(σ) f_{σ(1)} ⋯ f_{σ(n)}`.
pub fn antisymmetrize(ctx: &Arc<Algebra>, factors: &[Element]) -> Element {
    let n = factors.len();
    assert!(n < 16, "too many factors");
    let mut memo: Vec<Option<Element>> = vec![None; 1 << n];
    memo[0] = Some(Element::one(ctx));
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as i64;
        let mut acc = Element::zero(ctx);
        for (pos, j) in (0..n).filter(|j| mask & (1 << j) != 0).enumerate() {
            let rest = memo[mask & !(1 << j)]
                .as_ref()
                .expect("smaller subsets first");
            let term = &factors[j] * rest;
            if pos % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        memo[mask] = Some(acc.scale_rational(Rational::new(1, k)));
    }
    memo.pop().flatten().expect("full subset")
}

/// `𝒜(γ_{u_1 ⋯ u_n})`.
pub fn antisym_gamma(ctx: &Arc<Algebra>, us: &[Covector]) -> Element {
    let gs: Vec<Element> = us.iter().map(|u| Element::gamma(ctx, u)).collect();
    antisymmetrize(ctx, &gs)
}

/// A block of an antisymmetrized product: its size and a factor that is
/// skew-symmetric in its arguments.
pub type Block<'a> = (usize, &'a dyn Fn(&[Covector]) -> Element);

/// `𝒜(f_1(u_{1..k_1}) f_2(u_{k_1+1..}) ⋯)` for blocks `f_i` skew in their own
/// indices: `(Π k_i!/n!) Σ sgn · Π f_i(S_i)` over ordered set partitions with
/// each block read in ascending order.
pub fn antisym_blocks(ctx: &Arc<Algebra>, us: &[Covector], blocks: &[Block<'_>]) -> Element {
    let n = us.len();
    assert_eq!(
        blocks.iter().map(|b| b.0).sum::<usize>(),
        n,
        "block sizes must cover the indices"
    );
    let mut cache: FxHashMap<(usize, u32), Element> = FxHashMap::default();
    let mut total = Element::zero(ctx);
    let mut order = Vec::with_capacity(n);
    partitions(
        us,
        blocks,
        0,
        0,
        &mut order,
        &Element::one(ctx),
        &mut cache,
        &mut total,
    );
    let mut coef = Rational::from(1);
    for &(k, _) in blocks {
        coef *= factorial(k);
    }
    coef /= factorial(n);
    total.scale_rational(coef)
}

#[allow(clippy::too_many_arguments)]
fn partitions(
    us: &[Covector],
    blocks: &[Block<'_>],
    b: usize,
    used: u32,
    order: &mut Vec<usize>,
    prefix: &Element,
    cache: &mut FxHashMap<(usize, u32), Element>,
    total: &mut Element,
) {
    if b == blocks.len() {
        if permutation_sign(order) > 0 {
            *total += prefix;
        } else {
            *total -= prefix;
        }
        return;
    }
    let free: Vec<usize> = (0..us.len()).filter(|i| used & (1 << i) == 0).collect();
    let (k, f) = blocks[b];
    for_each_combination(&free, k, &mut |chosen: &[usize]| {
        let mask = chosen.iter().fold(0u32, |m, &i| m | (1 << i));
        let factor = cache
            .entry((b, mask))
            .or_insert_with(|| {
                let args: Vec<Covector> = chosen.iter().map(|&i| us[i].clone()).collect();
                f(&args)
            })
            .clone();
        if factor.is_zero() {
            return;
        }
        let next = prefix * &factor;
        if next.is_zero() {
            return;
        }
        let len = order.len();
        order.extend_from_slice(chosen);
        partitions(us, blocks, b + 1, used | mask, order, &next, cache, total);
        order.truncate(len);
    });
}

fn for_each_combination(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f);
}

pub(crate) fn permutation_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(int(1), |acc, k| acc * int(k))
}

/// `ρ(s̃) = s · γ_{α_s} / √B(α_s, α_s)` for the reflection with group index `s`.
pub fn rho(ctx: &Arc<Algebra>, s: usize) -> Result<Element, AlgebraError> {
    let r = ctx
        .group()
        .reflection(s)
        .ok_or(AlgebraError::NoSuchElement(s))?;
    let norm = if r.root_norm == int(1) {
        Scalar::one()
    } else if r.root_norm == int(2) {
        Scalar::from_base(BaseNumber::inv_sqrt2())
    } else {
        return Err(AlgebraError::RootLength(s, r.root_norm.to_string()));
    };
    let g = &Element::group(ctx, s) * &Element::gamma(ctx, &r.root_covector());
    Ok(g.scale(&norm))
}

/// `ρ` of a word `s̃_1 ⋯ s̃_k` of reflections.
pub fn rho_word(ctx: &Arc<Algebra>, word: &[usize]) -> Result<Element, AlgebraError> {
    let mut out = Element::one(ctx);
    for &s in word {
        out = &out * &rho(ctx, s)?;
    }
    Ok(out)
}

/// `Γ = i^{d(d−1)/2} e_1 ⋯ e_d`; needs an orthonormal basis.
pub fn chirality(ctx: &Arc<Algebra>) -> Result<Element, AlgebraError> {
    if !ctx.space().is_orthonormal() {
        return Err(AlgebraError::NotOrthonormal);
    }
    let d = ctx.dim();
    let mut out = Element::one(ctx);
    for p in 0..d {
        out = &out * &Element::e(ctx, p);
    }
    Ok(out.scale(&Scalar::i().pow((d * (d - 1) / 2) as u32)))
}

/// `𝒪_u = ½ Σ_s ⟨α_s∨, u⟩ κ(s) s γ_{α_s}`.
pub fn o_frak(ctx: &Arc<Algebra>, u: &Covector) -> Element {
    let mut out = Element::zero(ctx);
    let half = Rational::new(1, 2);
    for r in ctx.group().reflections() {
        let c = r.coroot_pairing_base(u);
        if c.is_zero() {
            continue;
        }
        let coef = ctx.kappa(r.param).scale_base(&c.scale(&half));
        let term = &Element::group(ctx, r.element) * &Element::gamma(ctx, &r.root_covector());
        out += &term.scale(&coef);
    }
    out
}

/// `Ω_κ = Σ_s κ(s) s`.
pub fn omega_kappa(ctx: &Arc<Algebra>) -> Element {
    Element::from_terms(
        ctx,
        ctx.group().reflections().iter().map(|r| {
            (
                crate::algebra::Monomial::group(r.element),
                ctx.kappa(r.param).clone(),
            )
        }),
    )
}

/// Dunkl angular momentum `M(u, v) = u β(v) − v β(u)`.
pub fn angular_momentum(ctx: &Arc<Algebra>, u: &Covector, v: &Covector) -> Element {
    let (xu, xv) = (Element::covector(ctx, u), Element::covector(ctx, v));
    &(&xu * &Element::beta(ctx, v)) - &(&xv * &Element::beta(ctx, u))
}

/// `ψ_κ^B(u, v) = 2 Σ_s B(α_s, u) B(v, α_s) / B(α_s, α_s) · κ(s) s`.
pub fn psi(ctx: &Arc<Algebra>, u: &Covector, v: &Covector) -> Element {
    let sp = ctx.space();
    let mut out = Element::zero(ctx);
    for r in ctx.group().reflections() {
        let a = r.root_covector();
        let c = (&sp.form(&a, u) * &sp.form(v, &a)).scale(&(int(2) / r.root_norm));
        if c.is_zero() {
            continue;
        }
        out += &Element::group(ctx, r.element).scale(&ctx.kappa(r.param).scale_base(&c));
    }
    out
}

/// `B_κ(u, v) = B(u, v) + ψ_κ^B(u, v)`.
pub fn b_kappa(ctx: &Arc<Algebra>, u: &Covector, v: &Covector) -> Element {
    &Element::scalar(ctx, Scalar::from_base(ctx.space().form(u, v))) + &psi(ctx, u, v)
}

/// `B(u, v)` as a scalar element.
pub fn form(ctx: &Arc<Algebra>, u: &Covector, v: &Covector) -> Element {
    Element::scalar(ctx, Scalar::from_base(ctx.space().form(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::ReflectionGroup;
    use crate::scalars::rat;

    fn ctx(spec: &str) -> Arc<Algebra> {
        Algebra::symbolic(ReflectionGroup::build(spec.parse().unwrap()).unwrap())
    }

    #[test]
    fn antisymmetrizer_examples() {
        let a = ctx("A1@2");
        let sp = a.space();
        let (x1, x2) = (sp.x(0), sp.x(1));
        assert!(antisym_gamma(&a, &[x1.clone(), x1.clone()]).is_zero());
        let e12 = &Element::e(&a, 0) * &Element::e(&a, 1);
        assert_eq!(antisym_gamma(&a, &[x1.clone(), x2.clone()]), e12);
        let v = &x1 + &x2;
        assert_eq!(antisym_gamma(&a, &[x1.clone(), v.clone()]), e12);
        let (gu, gv) = (Element::gamma(&a, &x1), Element::gamma(&a, &v));
        assert_eq!(
            antisym_gamma(&a, &[x1, v.clone()]),
            &(&gu * &gv) - &form(&a, &sp.x(0), &v)
        );
    }

    #[test]
    fn three_and_four_vector_expansions() {
        let a = ctx("A1@4");
        let sp = a.space();
        let u = &sp.x(0) + &sp.x(1);
        let v = &sp.x(1) - &sp.x(2);
        let w = &(&sp.x(0) + &sp.x(2)) + &sp.x(3);
        let x = &sp.x(3) + &sp.x(1);
        let g = |c: &Covector| Element::gamma(&a, c);
        let b = |p: &Covector, q: &Covector| form(&a, p, q);
        let auvw =
            &(&(&(&g(&u) * &g(&v)) * &g(&w)) - &(&b(&u, &v) * &g(&w))) + &(&b(&u, &w) * &g(&v));
        let auvw = &auvw - &(&b(&v, &w) * &g(&u));
        assert_eq!(antisym_gamma(&a, &[u.clone(), v.clone(), w.clone()]), auvw);
        // four vectors, with the constant term B(u,v)B(w,x) − B(u,w)B(v,x) + B(u,x)B(v,w)
        let gg = |p: &Covector, q: &Covector| &g(p) * &g(q);
        let mut exp = &gg(&u, &v) * &gg(&w, &x);
        for (s, (p, q), (r, t)) in [
            (-1, (&u, &v), (&w, &x)),
            (1, (&u, &w), (&v, &x)),
            (-1, (&v, &w), (&u, &x)),
            (-1, (&u, &x), (&v, &w)),
            (1, (&v, &x), (&u, &w)),
            (-1, (&w, &x), (&u, &v)),
        ] {
            exp += &(&b(p, q) * &gg(r, t)).scale_rational(int(s));
        }
        let c =
            &(&(&b(&u, &v) * &b(&w, &x)) - &(&b(&u, &w) * &b(&v, &x))) + &(&b(&u, &x) * &b(&v, &w));
        exp += &c;
        assert_eq!(antisym_gamma(&a, &[u, v, w, x]), exp);
    }

    #[test]
    fn block_antisymmetrizer_matches_direct() {
        let a = ctx("A2@3");
        let sp = a.space();
        let us = vec![sp.x(0), &sp.x(1) + &sp.x(0), &sp.x(2) - &sp.x(1)];
        let of = |c: &[Covector]| o_frak(&a, &c[0]);
        let ag = |c: &[Covector]| antisym_gamma(&a, c);
        let blocks = antisym_blocks(&a, &us, &[(1, &of), (2, &ag)]);

        // direct: antisymmetrize over index permutations of 𝒪_{u1} γ_{u2} γ_{u3}
        let mut direct = Element::zero(&a);
        for p in [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            let t = &(&o_frak(&a, &us[p[0]]) * &Element::gamma(&a, &us[p[1]]))
                * &Element::gamma(&a, &us[p[2]]);
            direct += &t.scale_rational(int(permutation_sign(&p)));
        }
        assert_eq!(blocks, direct.scale_rational(rat(1, 6)));
    }

    #[test]
    fn rho_and_chirality() {
        let a = ctx("A1@2");
        let r = rho(&a, 1).unwrap();
        let e = &Element::e(&a, 0) - &Element::e(&a, 1);
        assert_eq!(
            r,
            (&Element::group(&a, 1) * &e).scale(&Scalar::from_base(BaseNumber::inv_sqrt2()))
        );
        assert_eq!(&r * &r, Element::one(&a));
        let g = chirality(&a).unwrap();
        assert_eq!(
            g,
            (&Element::e(&a, 0) * &Element::e(&a, 1)).scale(&Scalar::i())
        );
        assert_eq!(&g * &g, Element::one(&a));
        for d in 2..=5 {
            let b = ctx(&format!("A1@{d}"));
            let g = chirality(&b).unwrap();
            assert_eq!(&g * &g, Element::one(&b));
            for p in 0..d {
                let e = Element::e(&b, p);
                let sign = if d % 2 == 0 { -1 } else { 1 };
                assert_eq!(&g * &e, (&e * &g).scale_rational(int(sign)));
            }
        }
    }

    #[test]
    fn o_frak_examples() {
        let a = ctx("A1@2");
        let sp = a.space();
        let o1 = o_frak(&a, &sp.x(0));
        let k = Scalar::kappa(0);
        let exp = (&Element::group(&a, 1) * &(&Element::e(&a, 0) - &Element::e(&a, 1)))
            .scale(&k.scale_rational(&rat(1, 2)));
        assert_eq!(o1, exp);
        assert!((&o1 + &o_frak(&a, &sp.x(1))).is_zero());
        let g = ReflectionGroup::build("B2@2".parse().unwrap()).unwrap();
        let zero = Algebra::new(
            g,
            crate::algebra::KappaMode::Numeric(vec![BaseNumber::zero(); 2]),
        )
        .unwrap();
        assert!(o_frak(&zero, &zero.space().x(0)).is_zero());
    }

    #[test]
    fn angular_momentum_examples() {
        let a = ctx("A1@2");
        let sp = a.space();
        let m = angular_momentum(&a, &sp.x(0), &sp.x(1));
        assert_eq!(
            m,
            &(&Element::x(&a, 0) * &Element::y(&a, 1)) - &(&Element::x(&a, 1) * &Element::y(&a, 0))
        );
        assert!(angular_momentum(&a, &sp.x(0), &sp.x(0)).is_zero());
        // M(u,v) = β(v)u − β(u)v
        let (u, v) = (sp.x(0), &sp.x(0) + &sp.x(1));
        let alt = &(&Element::beta(&a, &v) * &Element::covector(&a, &u))
            - &(&Element::beta(&a, &u) * &Element::covector(&a, &v));
        assert_eq!(angular_momentum(&a, &u, &v), alt);
    }
}
