//! The osp(1|2) realization inside `A_κ`, its projectors and the
//! Casimir-type elements.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{Algebra, Element};
use crate::geometry::Covector;
use crate::scalars::{int, rat, BaseNumber, Rational, Scalar};
use crate::special::{factorial, omega_kappa};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OspError {
    #[error("osp(1|2) relation `{0}` does not hold")]
    Relation(String),
    #[error("element is not of weight zero: [H, a] ≠ 0")]
    NotWeightZero,
    #[error("ad E+ is not nilpotent on the element within {0} steps")]
    NilpotenceBound(usize),
}

/// Basis of the super space `ℂ^{2|1}`: two even vectors and one odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuperBasis {
    XPlus,
    XMinus,
    Gamma,
}

impl SuperBasis {
    pub const ALL: [SuperBasis; 3] = [SuperBasis::XPlus, SuperBasis::XMinus, SuperBasis::Gamma];

    pub fn is_odd(self) -> bool {
        self == SuperBasis::Gamma
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// The invariant even form on `ℂ^{2|1}`: `b(x⁻, x⁺) = 1 = −b(x⁺, x⁻)`,
/// `b(γ, γ) = 2`.
pub fn super_form(w: SuperBasis, z: SuperBasis) -> Rational {
    use SuperBasis::*;
    match (w, z) {
        (XMinus, XPlus) => int(1),
        (XPlus, XMinus) => int(-1),
        (Gamma, Gamma) => int(2),
        _ => int(0),
    }
}

/// A homogeneous-or-not vector of `ℂ^{2|1}` in the basis `(x⁺, x⁻, γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperVector(pub [Rational; 3]);

impl SuperVector {
    pub fn basis(b: SuperBasis) -> Self {
        let mut c = [int(0), int(0), int(0)];
        c[b.index()] = int(1);
        SuperVector(c)
    }

    pub fn zero() -> Self {
        SuperVector([int(0), int(0), int(0)])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == int(0))
    }

    pub fn components(&self) -> impl Iterator<Item = (SuperBasis, Rational)> + '_ {
        SuperBasis::ALL
            .into_iter()
            .map(|b| (b, self.0[b.index()]))
            .filter(|(_, c)| *c != int(0))
    }

    /// Parity if homogeneous and nonzero.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.components().map(|(b, _)| b.is_odd());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn scaled(&self, r: Rational) -> Self {
        SuperVector(self.0.map(|c| c * r))
    }

    pub fn add(&self, o: &Self) -> Self {
        SuperVector([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

/// `b` extended bilinearly.
pub fn super_form_vec(w: &SuperVector, z: &SuperVector) -> Rational {
    let mut acc = int(0);
    for (a, ca) in w.components() {
        for (b, cb) in z.components() {
            acc += ca * cb * super_form(a, b);
        }
    }
    acc
}

/// `u ⊗ ξ` as an element: `u ⊗ x⁺ = u`, `u ⊗ x⁻ = β(u)`, `u ⊗ γ = γ_u`.
pub fn tensor(ctx: &Arc<Algebra>, u: &Covector, xi: SuperBasis) -> Element {
    match xi {
        SuperBasis::XPlus => Element::covector(ctx, u),
        SuperBasis::XMinus => Element::beta(ctx, u),
        SuperBasis::Gamma => Element::gamma(ctx, u),
    }
}

/// `u ⊗ ξ` for a general vector `ξ` of `ℂ^{2|1}`.
pub fn tensor_vec(ctx: &Arc<Algebra>, u: &Covector, xi: &SuperVector) -> Element {
    let mut out = Element::zero(ctx);
    for (b, c) in xi.components() {
        out += &tensor(ctx, u, b).scale_rational(c);
    }
    out
}

/// `(w ⊙ z)(B) = ½ Σ_{p,q} B(v_p, v_q) ((v_p* ⊗ w)(v_q* ⊗ z) + (−1)^{|w||z|} (v_p* ⊗ z)(v_q* ⊗ w))`
/// for basis vectors.
pub fn pair_element(ctx: &Arc<Algebra>, w: SuperBasis, z: SuperBasis) -> Element {
    let sp = ctx.space();
    let d = ctx.dim();
    let sign = if w.is_odd() && z.is_odd() { -1 } else { 1 };
    let mut out = Element::zero(ctx);
    for p in 0..d {
        for q in 0..d {
            let b = sp.gram_inv().get(p, q);
            if b == int(0) {
                continue;
            }
            let (xp, xq) = (sp.x(p), sp.x(q));
            let t = &(&tensor(ctx, &xp, w) * &tensor(ctx, &xq, z))
                + &(&tensor(ctx, &xp, z) * &tensor(ctx, &xq, w)).scale_rational(int(sign));
            out += &t.scale_rational(b);
        }
    }
    out.scale_rational(rat(1, 2))
}

/// `(w ⊙ z)(B)` extended bilinearly to general vectors of `ℂ^{2|1}`.
pub fn pair_element_vec(ctx: &Arc<Algebra>, w: &SuperVector, z: &SuperVector) -> Element {
    let mut out = Element::zero(ctx);
    for (a, ca) in w.components() {
        for (b, cb) in z.components() {
            out += &pair_element(ctx, a, b).scale_rational(ca * cb);
        }
    }
    out
}

/// The osp(1|2) generators in `A_κ`.
#[derive(Clone, Debug)]
pub struct Osp {
    ctx: Arc<Algebra>,
    /// `X = √2 F⁺ = Σ_{p,q} x_p (G⁻¹)_{pq} e_q`.
    pub x: Element,
    /// `D = √2 F⁻ = Σ_p y_p e_p`.
    pub d: Element,
    /// `H = Σ_p x_p y_p + d/2 + Ω_κ`.
    pub h: Element,
    /// `E⁺ = X²/2`.
    pub e_plus: Element,
    /// `E⁻ = −D²/2`.
    pub e_minus: Element,
    pub omega_kappa: Element,
}

impl Osp {
    /// Build the generators and verify every defining relation.
    pub fn new(ctx: &Arc<Algebra>) -> Result<Self, OspError> {
        let osp = Self::unchecked(ctx);
        for (name, residuals) in osp.relation_residuals() {
            if residuals.iter().any(|r| !r.is_zero()) {
                return Err(OspError::Relation(name.to_string()));
            }
        }
        Ok(osp)
    }

    /// Build the generators without checking relations.
    pub fn unchecked(ctx: &Arc<Algebra>) -> Self {
        let sp = ctx.space();
        let dim = ctx.dim();
        let mut x = Element::zero(ctx);
        let mut d = Element::zero(ctx);
        let mut h = Element::rational(ctx, rat(dim as i64, 2));
        let mut e_plus = Element::zero(ctx);
        let mut e_minus = Element::zero(ctx);
        for p in 0..dim {
            let (xp, yp) = (Element::x(ctx, p), Element::y(ctx, p));
            d += &(&yp * &Element::e(ctx, p));
            h += &(&xp * &yp);
            for q in 0..dim {
                let gi = sp.gram_inv().get(p, q);
                if gi != int(0) {
                    x += &(&xp * &Element::e(ctx, q)).scale_rational(gi);
                    e_plus += &(&xp * &Element::x(ctx, q)).scale_rational(gi / int(2));
                }
                let g = sp.gram().get(p, q);
                if g != int(0) {
                    e_minus -= &(&yp * &Element::y(ctx, q)).scale_rational(g / int(2));
                }
            }
        }
        let omega_kappa = omega_kappa(ctx);
        h += &omega_kappa;
        Osp {
            ctx: ctx.clone(),
            x,
            d,
            h,
            e_plus,
            e_minus,
            omega_kappa,
        }
    }

    pub fn ctx(&self) -> &Arc<Algebra> {
        &self.ctx
    }

    /// `F⁺ = X/√2`.
    pub fn f_plus(&self) -> Element {
        self.x.scale(&Scalar::from_base(BaseNumber::inv_sqrt2()))
    }

    /// `F⁻ = D/√2`.
    pub fn f_minus(&self) -> Element {
        self.d.scale(&Scalar::from_base(BaseNumber::inv_sqrt2()))
    }

    /// The six families of defining relations, rationalized, as residuals
    /// `lhs − rhs`.
    pub fn relation_residuals(&self) -> Vec<(&'static str, Vec<Element>)> {
        let (x, d, h, ep, em) = (&self.x, &self.d, &self.h, &self.e_plus, &self.e_minus);
        let br = |a: &Element, b: &Element| a.supercommutator(b);
        vec![
            ("odd-odd-mixed", vec![&br(x, d) - &h.scale_rational(int(2))]),
            ("cartan-odd", vec![&br(h, x) - x, &br(h, d) + d]),
            (
                "odd-squares",
                vec![
                    &br(x, x) - &ep.scale_rational(int(4)),
                    &br(d, d) + &em.scale_rational(int(4)),
                ],
            ),
            ("even-raise-lower", vec![&br(ep, em) - h]),
            (
                "cartan-even",
                vec![
                    &br(h, ep) - &ep.scale_rational(int(2)),
                    &br(h, em) + &em.scale_rational(int(2)),
                ],
            ),
            ("odd-even", vec![&br(x, em) - d, &br(d, ep) - x]),
        ]
    }

    /// `P₊(a) = a − [F⁻, [F⁺, a]] = a − ½[D, [X, a]]`.
    pub fn p_plus(&self, a: &Element) -> Element {
        a - &self
            .d
            .supercommutator(&self.x.supercommutator(a))
            .scale_rational(rat(1, 2))
    }

    /// `P₋(a) = a + [F⁺, [F⁻, a]] = a + ½[X, [D, a]]`.
    pub fn p_minus(&self, a: &Element) -> Element {
        a + &self
            .x
            .supercommutator(&self.d.supercommutator(a))
            .scale_rational(rat(1, 2))
    }

    /// Extremal projector of sl(2) in adjoint form:
    /// `Σ_k (−1)^k (ad E⁻)^k (ad E⁺)^k a / (k!(k+1)!)`.
    pub fn p_alpha(&self, a: &Element) -> Result<Element, OspError> {
        self.p_alpha_bounded(a, 2 * a.degree() as usize + 4)
    }

    pub fn p_alpha_bounded(&self, a: &Element, bound: usize) -> Result<Element, OspError> {
        if !self.h.commutator(a).is_zero() {
            return Err(OspError::NotWeightZero);
        }
        let mut out = a.clone();
        let mut raised = a.clone();
        for k in 1..=bound + 1 {
            raised = self.e_plus.commutator(&raised);
            if raised.is_zero() {
                return Ok(out);
            }
            if k > bound {
                break;
            }
            let mut t = raised.clone();
            for _ in 0..k {
                t = self.e_minus.commutator(&t);
            }
            let c = int(if k % 2 == 0 { 1 } else { -1 }) / (factorial(k) * factorial(k + 1));
            out += &t.scale_rational(c);
        }
        Err(OspError::NilpotenceBound(bound))
    }

    /// `Q⁺(a) = (H + 1)a − F⁻[F⁺, a]`.
    pub fn q_plus(&self, a: &Element) -> Element {
        let h1 = &self.h + &Element::one(&self.ctx);
        &(&h1 * a) - &(&self.d * &self.x.supercommutator(a)).scale_rational(rat(1, 2))
    }

    /// `Q⁻(a) = (H − 1)a − F⁺[F⁻, a]`, the sign under which `Q⁻(a)` is a
    /// generalized symmetry of `F⁻` whenever `[E⁻, a] ∈ A F⁻`.
    pub fn q_minus(&self, a: &Element) -> Element {
        let h1 = &self.h - &Element::one(&self.ctx);
        &(&h1 * a) - &(&self.x * &self.d.supercommutator(a)).scale_rational(rat(1, 2))
    }

    /// `(H − 1)a + F⁺[F⁻, a]`, the mirror of [`Osp::q_plus`].
    pub fn q_minus_mirrored(&self, a: &Element) -> Element {
        let h1 = &self.h - &Element::one(&self.ctx);
        &(&h1 * a) + &(&self.x * &self.d.supercommutator(a)).scale_rational(rat(1, 2))
    }

    /// `R_u = Q⁻(γ_u) = (H − 1)γ_u − X β(u)`, using `[D, γ_u] = 2β(u)`.
    pub fn r(&self, u: &Covector) -> Element {
        let h1 = &self.h - &Element::one(&self.ctx);
        &(&h1 * &Element::gamma(&self.ctx, u)) - &(&self.x * &Element::beta(&self.ctx, u))
    }

    /// `D R_u + (R_u + γ_u) D`, zero when `R_u` is a generalized symmetry.
    pub fn symmetry_residual(&self, r: &Element, u: &Covector) -> Element {
        &(&self.d * r) + &(&(r + &Element::gamma(&self.ctx, u)) * &self.d)
    }

    /// `F⁺F⁻ − F⁻F⁺ = (XD − DX)/2`.
    fn odd_commutator(&self) -> Element {
        self.x.commutator(&self.d).scale_rational(rat(1, 2))
    }

    /// `Ω_osp = H² + 2(E⁺E⁻ + E⁻E⁺) − (F⁺F⁻ − F⁻F⁺)`.
    pub fn casimir(&self) -> Element {
        let ee = &(&self.e_plus * &self.e_minus) + &(&self.e_minus * &self.e_plus);
        &(&(&self.h * &self.h) + &ee.scale_rational(int(2))) - &self.odd_commutator()
    }

    /// `S = F⁺F⁻ − F⁻F⁺ + 1/2`.
    pub fn scasimir(&self) -> Element {
        &self.odd_commutator() + &Element::rational(&self.ctx, rat(1, 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::ReflectionGroup;
    use crate::special::o_frak;

    fn ctx(spec: &str) -> Arc<Algebra> {
        Algebra::symbolic(ReflectionGroup::build(spec.parse().unwrap()).unwrap())
    }

    #[test]
    fn relations_hold_in_small_groups() {
        for g in ["A1@2", "A2@3", "B2@2", "A1@3"] {
            Osp::new(&ctx(g)).unwrap();
        }
    }

    #[test]
    fn relations_hold_for_a_general_gram() {
        use crate::geometry::{QuadraticSpace, RatMatrix};
        let gram =
            RatMatrix::from_rows(&[vec![int(2), rat(1, 2)], vec![rat(1, 2), int(1)]]).unwrap();
        let sp = QuadraticSpace::with_gram(gram).unwrap();
        let g = ReflectionGroup::from_generators("trivial".into(), sp, &[], None, 10).unwrap();
        Osp::new(&Algebra::symbolic(g)).unwrap();
    }

    #[test]
    fn hamiltonian_example() {
        let a = ctx("A1@2");
        let osp = Osp::new(&a).unwrap();
        let xy = |p| &Element::x(&a, p) * &Element::y(&a, p);
        let exp = &(&(&xy(0) + &xy(1)) + &Element::one(&a))
            + &Element::group(&a, 1).scale(&Scalar::kappa(0));
        assert_eq!(osp.h, exp);
        assert_eq!(osp.casimir().parity(), Some(false));
    }

    #[test]
    fn pair_elements_realize_generators() {
        for g in ["A1@2", "B2@2"] {
            let a = ctx(g);
            let osp = Osp::new(&a).unwrap();
            use SuperBasis::*;
            assert_eq!(pair_element(&a, XPlus, XMinus), osp.h);
            assert_eq!(pair_element(&a, XMinus, XPlus), osp.h);
            assert_eq!(
                pair_element(&a, XPlus, XPlus),
                osp.e_plus.scale_rational(int(2))
            );
            assert_eq!(
                pair_element(&a, XMinus, XMinus),
                osp.e_minus.scale_rational(int(-2))
            );
            assert_eq!(pair_element(&a, XPlus, Gamma), osp.x);
            assert_eq!(pair_element(&a, XMinus, Gamma), osp.d);
            assert!(pair_element(&a, Gamma, Gamma).is_zero());
        }
    }

    #[test]
    fn projector_examples() {
        let a = ctx("A1@2");
        let osp = Osp::new(&a).unwrap();
        assert_eq!(osp.p_plus(&Element::one(&a)), Element::one(&a));
        let e1 = Element::e(&a, 0);
        let exp = (&Element::group(&a, 1) * &(&e1 - &Element::e(&a, 1)))
            .scale(&Scalar::kappa(0))
            .scale_rational(int(-1));
        assert_eq!(osp.p_plus(&e1), exp);
        assert_eq!(
            osp.p_plus(&e1),
            o_frak(&a, &a.space().x(0)).scale_rational(int(-2))
        );
        assert_eq!(osp.p_minus(&e1), osp.p_plus(&e1));
    }

    #[test]
    fn sl2_projector() {
        let a = ctx("A1@2");
        let osp = Osp::new(&a).unwrap();
        assert_eq!(osp.p_alpha(&Element::one(&a)).unwrap(), Element::one(&a));
        let sp = a.space();
        let m = crate::special::angular_momentum(&a, &sp.x(0), &sp.x(1));
        assert_eq!(osp.p_alpha(&m).unwrap(), m);
        let t =
            &(&Element::x(&a, 0) * &Element::y(&a, 0)) - &(&Element::x(&a, 1) * &Element::y(&a, 1));
        let p = osp.p_alpha(&t).unwrap();
        assert!(osp.e_plus.commutator(&p).is_zero());
        assert!(osp.e_minus.commutator(&p).is_zero());
        assert_eq!(
            osp.p_alpha(&Element::x(&a, 0)),
            Err(OspError::NotWeightZero)
        );
        let sq = &Element::x(&a, 0) * &Element::y(&a, 0);
        let sq = &sq * &sq;
        assert_eq!(
            osp.p_alpha_bounded(&sq, 0),
            Err(OspError::NilpotenceBound(0))
        );
    }

    #[test]
    fn generalized_symmetry() {
        for g in ["A1@2", "A2@3"] {
            let a = ctx(g);
            let osp = Osp::new(&a).unwrap();
            let sp = a.space();
            for u in [sp.x(0), sp.x(1), &sp.x(0) + &sp.x(1)] {
                let r = osp.r(&u);
                assert_eq!(r, osp.q_minus(&Element::gamma(&a, &u)));
                assert!(osp.symmetry_residual(&r, &u).is_zero());
                let alt = osp.q_minus_mirrored(&Element::gamma(&a, &u));
                assert!(!osp.symmetry_residual(&alt, &u).is_zero());
            }
        }
    }

    #[test]
    fn casimir_and_scasimir() {
        let a = ctx("A1@2");
        let osp = Osp::new(&a).unwrap();
        let (c, s) = (osp.casimir(), osp.scasimir());
        assert_eq!(&s * &s, &c + &Element::rational(&a, rat(1, 4)));
        assert!(c.commutator(&osp.x).is_zero());
        assert!(s.anticommutator(&osp.x).is_zero() || s.supercommutator(&osp.x).is_zero());
        assert_eq!(&s * &osp.x, (&osp.x * &s).scale_rational(int(-1)));
        assert_eq!(osp.p_plus(&s), (&s * &s).scale_rational(int(2)));
        assert_eq!(osp.q_plus(&Element::one(&a)), &osp.h + &Element::one(&a));
    }

    #[test]
    fn super_form_values() {
        use SuperBasis::*;
        assert_eq!(super_form(XMinus, XPlus), int(1));
        assert_eq!(
            super_form_vec(&SuperVector::basis(Gamma), &SuperVector::basis(Gamma)),
            int(2)
        );
        assert_eq!(
            SuperVector::basis(XPlus)
                .add(&SuperVector::basis(Gamma))
                .parity(),
            None
        );
    }
}
