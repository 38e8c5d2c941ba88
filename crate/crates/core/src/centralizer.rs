//! Generators of the supercentralizer of osp(1|2) in `A_κ`: the elements
//! `O_{u_1 ⋯ u_n}` by the projector definition and by explicit formulas,
//! and the central element `Ω`.

use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::algebra::{Algebra, Element};
use crate::geometry::Covector;
use crate::osp::{Osp, OspError};
use crate::scalars::{int, rat, Rational};
use crate::special::{angular_momentum, antisym_blocks, antisym_gamma, form, o_frak};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CentralizerError {
    #[error("an index subset must be nonempty")]
    EmptySubset,
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error(transparent)]
    Osp(#[from] OspError),
}

/// Which explicit expression to use for `O_{u_1 ⋯ u_n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExplicitForm {
    /// In terms of `𝒜(γ)`, `𝒪_u` and the angular momenta `M(u, v)`.
    First,
    /// In terms of `𝒜(γ)`, `𝒪_u` and the two-index elements `O_{uv}`.
    Second,
}

/// The supercentralizer generators for one algebra context, with a cache of
/// the projector-built elements.
#[derive(Debug)]
pub struct Centralizer {
    osp: Osp,
    cache: Mutex<FxHashMap<Vec<Covector>, Element>>,
}

impl Centralizer {
    pub fn new(ctx: &Arc<Algebra>) -> Result<Self, CentralizerError> {
        Ok(Self::from_osp(Osp::new(ctx)?))
    }

    pub fn from_osp(osp: Osp) -> Self {
        Centralizer {
            osp,
            cache: Mutex::new(FxHashMap::default()),
        }
    }

    pub fn osp(&self) -> &Osp {
        &self.osp
    }

    pub fn ctx(&self) -> &Arc<Algebra> {
        self.osp.ctx()
    }

    /// `M(u, v) = u β(v) − v β(u)`.
    pub fn m(&self, u: &Covector, v: &Covector) -> Element {
        angular_momentum(self.ctx(), u, v)
    }

    /// `O_{u_1 ⋯ u_n} = −P₊(𝒜(γ_{u_1 ⋯ u_n}))/2`, cached up to reordering of
    /// the indices.
    pub fn o(&self, us: &[Covector]) -> Element {
        let Some((key, odd)) = sorted_with_sign(us) else {
            return Element::zero(self.ctx());
        };
        let cached = self.cache.lock().expect("cache lock").get(&key).cloned();
        let e = match cached {
            Some(e) => e,
            None => {
                let e = self.o_proj(&key);
                self.cache
                    .lock()
                    .expect("cache lock")
                    .insert(key, e.clone());
                e
            }
        };
        if odd {
            -e
        } else {
            e
        }
    }

    /// `O_{u_1 ⋯ u_n} = −P₊(𝒜(γ_{u_1 ⋯ u_n}))/2`.
    pub fn o_proj(&self, us: &[Covector]) -> Element {
        let a = antisym_gamma(self.ctx(), us);
        self.osp.p_plus(&a).scale_rational(rat(-1, 2))
    }

    /// The same element built with `P₋` instead of `P₊`.
    pub fn o_proj_minus(&self, us: &[Covector]) -> Element {
        let a = antisym_gamma(self.ctx(), us);
        self.osp.p_minus(&a).scale_rational(rat(-1, 2))
    }

    /// `O_{u_1 ⋯ u_n}` from an explicit formula.
    ///
    /// First form: `(n−1)/2 𝒜(γ) + n 𝒜(𝒪_{u_1} γ_{u_2⋯u_n}) + n(n−1)/2 𝒜(M_{u_1u_2} γ_{u_3⋯u_n})`.
    /// Second form: `−(n−1)(n−2)/4 𝒜(γ) − n(n−2) 𝒜(𝒪_{u_1} γ_{u_2⋯u_n}) + n(n−1)/2 𝒜(O_{u_1u_2} γ_{u_3⋯u_n})`
    /// with `O_{uv}` taken from [`Centralizer::o_uv`].
    pub fn o_explicit(&self, us: &[Covector], form: ExplicitForm) -> Element {
        let ctx = self.ctx();
        let n = us.len() as i64;
        let ag = |c: &[Covector]| antisym_gamma(ctx, c);
        let of = |c: &[Covector]| o_frak(ctx, &c[0]);
        let mf = |c: &[Covector]| angular_momentum(ctx, &c[0], &c[1]);
        let ouv = |c: &[Covector]| self.o_uv(&c[0], &c[1]);
        let (c0, c1, c2) = match form {
            ExplicitForm::First => (rat(n - 1, 2), int(n), rat(n * (n - 1), 2)),
            ExplicitForm::Second => (
                rat(-(n - 1) * (n - 2), 4),
                int(-n * (n - 2)),
                rat(n * (n - 1), 2),
            ),
        };
        let mut out = ag(us).scale_rational(c0);
        if n >= 1 && c1 != int(0) {
            let t = antisym_blocks(ctx, us, &[(1, &of), (us.len() - 1, &ag)]);
            out += &t.scale_rational(c1);
        }
        if n >= 2 {
            let pair: &dyn Fn(&[Covector]) -> Element = match form {
                ExplicitForm::First => &mf,
                ExplicitForm::Second => &ouv,
            };
            let t = antisym_blocks(ctx, us, &[(2, pair), (us.len() - 2, &ag)]);
            out += &t.scale_rational(c2);
        }
        out
    }

    /// `O_{uv} = u β(v) − v β(u) + (γ_u γ_v − B(u, v))/2 + 𝒪_u γ_v − 𝒪_v γ_u`.
    pub fn o_uv(&self, u: &Covector, v: &Covector) -> Element {
        let ctx = self.ctx();
        let (gu, gv) = (Element::gamma(ctx, u), Element::gamma(ctx, v));
        let cl = (&(&gu * &gv) - &form(ctx, u, v)).scale_rational(rat(1, 2));
        let ou = &o_frak(ctx, u) * &gv;
        let ov = &o_frak(ctx, v) * &gu;
        &(&(&angular_momentum(ctx, u, v) + &cl) + &ou) - &ov
    }

    /// `O_{uv} = u β(v) − β(u) v + (γ_u γ_v + B(u, v))/2 + 𝒪_u γ_v + γ_u 𝒪_v`.
    pub fn o_uv_alt(&self, u: &Covector, v: &Covector) -> Element {
        let ctx = self.ctx();
        let (xu, xv) = (Element::covector(ctx, u), Element::covector(ctx, v));
        let (gu, gv) = (Element::gamma(ctx, u), Element::gamma(ctx, v));
        let mom = &(&xu * &Element::beta(ctx, v)) - &(&Element::beta(ctx, u) * &xv);
        let cl = (&(&gu * &gv) + &form(ctx, u, v)).scale_rational(rat(1, 2));
        &(&(&mom + &cl) + &(&o_frak(ctx, u) * &gv)) + &(&gu * &o_frak(ctx, v))
    }

    /// `O_{uvw} = 𝒜(γ_{uvw}) + M(v,w)γ_u − M(u,w)γ_v + M(u,v)γ_w
    /// + 𝒪_u 𝒜(γ_{vw}) − 𝒪_v 𝒜(γ_{uw}) + 𝒪_w 𝒜(γ_{uv})`.
    pub fn o_uvw(&self, u: &Covector, v: &Covector, w: &Covector) -> Element {
        let ctx = self.ctx();
        let g = |c: &Covector| Element::gamma(ctx, c);
        let a2 = |p: &Covector, q: &Covector| antisym_gamma(ctx, &[p.clone(), q.clone()]);
        let mut out = antisym_gamma(ctx, &[u.clone(), v.clone(), w.clone()]);
        out += &(&self.m(v, w) * &g(u));
        out -= &(&self.m(u, w) * &g(v));
        out += &(&self.m(u, v) * &g(w));
        out += &(&o_frak(ctx, u) * &a2(v, w));
        out -= &(&o_frak(ctx, v) * &a2(u, w));
        out += &(&o_frak(ctx, w) * &a2(u, v));
        out
    }

    /// Orthonormal basis covectors for zero-based indices.
    pub fn basis(&self, indices: &[usize]) -> Result<Vec<Covector>, CentralizerError> {
        let dim = self.ctx().dim();
        indices
            .iter()
            .map(|&i| {
                if i < dim {
                    Ok(self.ctx().space().x(i))
                } else {
                    Err(CentralizerError::IndexOutOfRange { index: i, dim })
                }
            })
            .collect()
    }

    /// `O_A` for a set of zero-based basis indices, listed in ascending order.
    pub fn o_subset(&self, indices: &[usize]) -> Result<Element, CentralizerError> {
        if indices.is_empty() {
            return Err(CentralizerError::EmptySubset);
        }
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != indices.len() {
            return Ok(Element::zero(self.ctx()));
        }
        Ok(self.o(&self.basis(&sorted)?))
    }

    /// `O_{1 ⋯ d}`.
    pub fn o_top(&self) -> Element {
        let all: Vec<usize> = (0..self.ctx().dim()).collect();
        self.o_subset(&all).expect("dimension is positive")
    }

    /// `Ω = (d − 2) Σ_j O_j² + Σ_{j<k} O_{jk}²`.
    pub fn central_omega(&self) -> Element {
        let d = self.ctx().dim();
        let mut singles = Element::zero(self.ctx());
        let mut pairs = Element::zero(self.ctx());
        for j in 0..d {
            let o = self.o_subset(&[j]).expect("index in range");
            singles += &(&o * &o);
            for k in j + 1..d {
                let o = self.o_subset(&[j, k]).expect("index in range");
                pairs += &(&o * &o);
            }
        }
        &singles.scale_rational(Rational::from(d as i64 - 2)) + &pairs
    }
}

/// Sorts the indices, returning the parity of the sorting permutation, or
/// `None` when an index repeats.
fn sorted_with_sign(us: &[Covector]) -> Option<(Vec<Covector>, bool)> {
    let mut v = us.to_vec();
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, odd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::ReflectionGroup;
    use crate::scalars::Scalar;

    fn cent(spec: &str) -> Centralizer {
        Centralizer::new(&Algebra::symbolic(
            ReflectionGroup::build(spec.parse().unwrap()).unwrap(),
        ))
        .unwrap()
    }

    #[test]
    fn one_index_is_o_frak() {
        let c = cent("A1@2");
        let a = c.ctx().clone();
        let x1 = a.space().x(0);
        let exp = (&Element::group(&a, 1) * &(&Element::e(&a, 0) - &Element::e(&a, 1)))
            .scale(&Scalar::kappa(0).scale_rational(&rat(1, 2)));
        assert_eq!(c.o(std::slice::from_ref(&x1)), exp);
        assert_eq!(
            c.o_explicit(std::slice::from_ref(&x1), ExplicitForm::First),
            exp
        );
        assert_eq!(c.o_explicit(&[x1], ExplicitForm::Second), exp);
    }

    #[test]
    fn two_index_example() {
        let c = cent("A1@2");
        let a = c.ctx().clone();
        let (x1, x2) = (a.space().x(0), a.space().x(1));
        let e12 = &Element::e(&a, 0) * &Element::e(&a, 1);
        let mut exp =
            &(&Element::x(&a, 0) * &Element::y(&a, 1)) - &(&Element::x(&a, 1) * &Element::y(&a, 0));
        exp += &e12.scale_rational(rat(1, 2));
        exp += &(&Element::group(&a, 1) * &e12).scale(&Scalar::kappa(0));
        let o = c.o(&[x1.clone(), x2.clone()]);
        assert_eq!(o, exp);
        assert_eq!(c.o_uv(&x1, &x2), exp);
        assert_eq!(c.o_uv_alt(&x1, &x2), exp);
        for f in [ExplicitForm::First, ExplicitForm::Second] {
            assert_eq!(c.o_explicit(&[x1.clone(), x2.clone()], f), exp);
        }
        assert!(c.o(&[x1.clone(), x1]).is_zero());
    }

    #[test]
    fn routes_agree_in_three_dimensions() {
        let c = cent("A2@3");
        let sp = c.ctx().space().clone();
        let tuples = vec![
            vec![sp.x(0), sp.x(1), sp.x(2)],
            vec![sp.x(0), sp.x(1), &sp.x(0) + &sp.x(2)],
            vec![sp.x(0), &sp.x(0) + &sp.x(1)],
        ];
        for us in tuples {
            let p = c.o(&us);
            assert_eq!(p, c.o_proj_minus(&us));
            assert_eq!(p, c.o_explicit(&us, ExplicitForm::First));
            assert_eq!(p, c.o_explicit(&us, ExplicitForm::Second));
            if us.len() == 3 {
                assert_eq!(p, c.o_uvw(&us[0], &us[1], &us[2]));
            }
            assert!(c.osp().x.supercommutator(&p).is_zero());
            assert!(c.osp().d.supercommutator(&p).is_zero());
        }
    }

    #[test]
    fn subsets_and_top() {
        let c = cent("A1@2");
        assert_eq!(c.o_subset(&[1, 0]).unwrap(), c.o_subset(&[0, 1]).unwrap());
        assert_eq!(c.o_top(), c.o_subset(&[0, 1]).unwrap());
        assert!(c.o_subset(&[0, 0]).unwrap().is_zero());
        assert_eq!(c.o_subset(&[]), Err(CentralizerError::EmptySubset));
        assert_eq!(
            c.o_subset(&[5]),
            Err(CentralizerError::IndexOutOfRange { index: 5, dim: 2 })
        );
        let sp = c.ctx().space().clone();
        let (u, v) = (sp.x(0), &sp.x(0) + &sp.x(1));
        assert_eq!(
            c.o(&[v.clone(), u.clone()]),
            c.o_proj(&[v.clone(), u.clone()])
        );
        assert_eq!(c.o(&[u, v.clone()]), -c.o(&[v.clone(), sp.x(0)]));
        assert!(c.o(&[v.clone(), v]).is_zero());
    }

    #[test]
    fn omega_is_central_in_a1() {
        let c = cent("A1@2");
        let om = c.central_omega();
        for t in [
            c.o_subset(&[0]).unwrap(),
            c.o_subset(&[1]).unwrap(),
            c.o_top(),
        ] {
            assert!(om.commutator(&t).is_zero());
        }
        let r = crate::special::rho(c.ctx(), 1).unwrap();
        assert!(om.commutator(&r).is_zero());
    }
}
