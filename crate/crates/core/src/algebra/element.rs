use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::{Algebra, AlgebraError};
use crate::geometry::{Covector, Vector};
use crate::scalars::{BaseNumber, Rational, Scalar, ScalarError};

/// A finite linear combination of PBW words with [`Scalar`] coefficients.
///
/// Terms are kept sorted by word with no zero coefficients, so equality is
/// structural.
#[derive(Clone)]
pub struct Element {
    ctx: Arc<Algebra>,
    terms: Vec<(Monomial, Scalar)>,
}

impl Element {
    pub fn zero(ctx: &Arc<Algebra>) -> Self {
        Self {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &Arc<Algebra>) -> Self {
        Self::scalar(ctx, Scalar::one())
    }

    pub fn scalar(ctx: &Arc<Algebra>, s: Scalar) -> Self {
        Self::monomial(ctx, Monomial::ONE, s)
    }

    pub fn rational(ctx: &Arc<Algebra>, r: Rational) -> Self {
        Self::scalar(ctx, Scalar::from_rational(r))
    }

    pub fn monomial(ctx: &Arc<Algebra>, m: Monomial, s: Scalar) -> Self {
        let terms = if s.is_zero() {
            Vec::new()
        } else {
            vec![(m, s)]
        };
        Self {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Collect arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(
        ctx: &Arc<Algebra>,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut acc: FxHashMap<Monomial, Scalar> = FxHashMap::default();
        for (m, s) in terms {
            *acc.entry(m).or_insert_with(Scalar::zero) += s;
        }
        Self::from_map(ctx, acc)
    }

    fn from_map(ctx: &Arc<Algebra>, acc: FxHashMap<Monomial, Scalar>) -> Self {
        let mut terms: Vec<(Monomial, Scalar)> =
            acc.into_iter().filter(|(_, s)| !s.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        Self {
            ctx: ctx.clone(),
            terms,
        }
    }

    fn check_index(ctx: &Algebra, p: usize) -> Result<(), AlgebraError> {
        if p < ctx.dim() {
            Ok(())
        } else {
            Err(AlgebraError::IndexOutOfRange {
                index: p + 1,
                dim: ctx.dim(),
            })
        }
    }

    /// The coordinate covector `x_{p+1}`.
    pub fn try_x(ctx: &Arc<Algebra>, p: usize) -> Result<Self, AlgebraError> {
        Self::check_index(ctx, p)?;
        Ok(Self::monomial(ctx, Monomial::x_var(p), Scalar::one()))
    }

    /// The coordinate vector `y_{p+1}`.
    pub fn try_y(ctx: &Arc<Algebra>, p: usize) -> Result<Self, AlgebraError> {
        Self::check_index(ctx, p)?;
        Ok(Self::monomial(ctx, Monomial::y_var(p), Scalar::one()))
    }

    /// The Clifford generator `e_{p+1} = γ_{x_{p+1}}`.
    pub fn try_e(ctx: &Arc<Algebra>, p: usize) -> Result<Self, AlgebraError> {
        Self::check_index(ctx, p)?;
        Ok(Self::monomial(ctx, Monomial::clifford(p), Scalar::one()))
    }

    pub fn try_group(ctx: &Arc<Algebra>, g: usize) -> Result<Self, AlgebraError> {
        if g >= ctx.group().order() {
            return Err(AlgebraError::NoSuchElement(g));
        }
        Ok(Self::monomial(ctx, Monomial::group(g), Scalar::one()))
    }

    /// Zero-based `x_{p+1}`; panics when out of range.
    pub fn x(ctx: &Arc<Algebra>, p: usize) -> Self {
        Self::try_x(ctx, p).expect("x index")
    }

    pub fn y(ctx: &Arc<Algebra>, p: usize) -> Self {
        Self::try_y(ctx, p).expect("y index")
    }

    pub fn e(ctx: &Arc<Algebra>, p: usize) -> Self {
        Self::try_e(ctx, p).expect("e index")
    }

    pub fn group(ctx: &Arc<Algebra>, g: usize) -> Self {
        Self::try_group(ctx, g).expect("group element")
    }

    fn linear(ctx: &Arc<Algebra>, coords: &[BaseNumber], word: fn(usize) -> Monomial) -> Self {
        Self::from_terms(
            ctx,
            coords
                .iter()
                .enumerate()
                .map(|(p, c)| (word(p), Scalar::from_base(c.clone()))),
        )
    }

    /// A covector `u ∈ V*` as an element of degree one in `x`.
    pub fn covector(ctx: &Arc<Algebra>, u: &Covector) -> Self {
        Self::linear(ctx, u.coords(), Monomial::x_var)
    }

    /// A vector `v ∈ V` as an element of degree one in `y`.
    pub fn vector(ctx: &Arc<Algebra>, v: &Vector) -> Self {
        Self::linear(ctx, v.coords(), Monomial::y_var)
    }

    /// `β(u) ∈ V` as an element.
    pub fn beta(ctx: &Arc<Algebra>, u: &Covector) -> Self {
        Self::vector(ctx, &ctx.space().beta(u))
    }

    /// `γ_u = Σ u_p e_p`.
    pub fn gamma(ctx: &Arc<Algebra>, u: &Covector) -> Self {
        Self::linear(ctx, u.coords(), Monomial::clifford)
    }

    /// The word `m` rebuilt as an ordered product of generators.
    pub fn word_product(ctx: &Arc<Algebra>, m: &Monomial) -> Self {
        let mut out = Self::one(ctx);
        for (p, &k) in m.x.iter().enumerate() {
            for _ in 0..k {
                out = &out * &Self::x(ctx, p);
            }
        }
        for (p, &k) in m.y.iter().enumerate() {
            for _ in 0..k {
                out = &out * &Self::y(ctx, p);
            }
        }
        out = &out * &Self::group(ctx, m.g as usize);
        for p in 0..ctx.dim() {
            if m.e & (1 << p) != 0 {
                out = &out * &Self::e(ctx, p);
            }
        }
        out
    }

    pub fn ctx(&self) -> &Arc<Algebra> {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// Largest word in canonical order, used as a failure witness.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.last().map(|(m, s)| (m, s))
    }

    /// Maximal total degree in `x` and `y`.
    pub fn degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    fn filtered(&self, odd: bool) -> Self {
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.is_odd() == odd)
                .cloned()
                .collect(),
        }
    }

    pub fn even_part(&self) -> Self {
        self.filtered(false)
    }

    pub fn odd_part(&self) -> Self {
        self.filtered(true)
    }

    /// `Some(false)` for even, `Some(true)` for odd, `None` for mixed parity.
    /// Zero counts as even.
    pub fn parity(&self) -> Option<bool> {
        let odd = self.terms.iter().filter(|(m, _)| m.is_odd()).count();
        if odd == 0 {
            Some(false)
        } else if odd == self.terms.len() {
            Some(true)
        } else {
            None
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ctx);
        }
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c * s))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn scale_rational(&self, r: Rational) -> Self {
        self.scale(&Scalar::from_rational(r))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.ctx);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// The same element with every coefficient mapped through `f`, in context
    /// `target` (which must share the group).
    pub fn map_coefficients(
        &self,
        target: &Arc<Algebra>,
        mut f: impl FnMut(&Scalar) -> Result<Scalar, ScalarError>,
    ) -> Result<Self, ScalarError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((*m, f(c)?));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Specialize symbolic `κ` to the values of a numeric context.
    pub fn substitute_kappa(
        &self,
        target: &Arc<Algebra>,
        values: &[BaseNumber],
    ) -> Result<Self, ScalarError> {
        self.map_coefficients(target, |c| c.substitute_kappa(values))
    }

    /// Rebuild every word from its generators and recombine.
    pub fn renormalize(&self) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            out += &Self::word_product(&self.ctx, m).scale(c);
        }
        out
    }

    fn assert_same_ctx(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx),
            "elements from different algebra contexts cannot be combined"
        );
    }

    /// Plain commutator `ab − ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Supercommutator `[a, b] = ab − (−1)^{|a||b|} ba`, extended
    /// bilinearly over parity components.
    pub fn supercommutator(&self, other: &Self) -> Self {
        self.graded(other, -1)
    }

    /// `{a, b} = ab + (−1)^{|a||b|} ba`, extended bilinearly.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.graded(other, 1)
    }

    fn graded(&self, other: &Self, sign: i64) -> Self {
        let mut out = Self::zero(&self.ctx);
        let parts = |e: &Self| match e.parity() {
            Some(odd) => vec![(odd, e.clone())],
            None => vec![(false, e.even_part()), (true, e.odd_part())],
        };
        for (pa, a) in parts(self) {
            for (pb, b) in parts(other) {
                let s = if pa && pb { -sign } else { sign };
                out += &(&a * &b);
                let ba = &b * &a;
                if s > 0 {
                    out += &ba;
                } else {
                    out -= &ba;
                }
            }
        }
        out
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        self.assert_same_ctx(other);
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let neg = |s: &Scalar| if negate { -s } else { s.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, neg(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, s)| (*m, neg(s))));
        Self {
            ctx: self.ctx.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Self) -> Self {
        self.assert_same_ctx(other);
        let mut acc: FxHashMap<Monomial, Scalar> = FxHashMap::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                self.ctx.mul_monomials_into(m1, m2, &(c1 * c2), &mut acc);
            }
        }
        Self::from_map(&self.ctx, acc)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Element {}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let word = m.render(self.ctx.group());
            let (neg, text) = c.coefficient_text();
            let body = match (text, word.is_empty()) {
                (None, true) => "1".to_string(),
                (None, false) => word,
                (Some(t), true) => t,
                (Some(t), false) => format!("{t}*{word}"),
            };
            match (k, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        self.merge(o, false)
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        self.merge(o, true)
    }
}

impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, o: &Element) -> Element {
        self.product(o)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Element> for Element {
            type Output = Element;
            fn $f(self, o: Element) -> Element {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a Element> for Element {
            type Output = Element;
            fn $f(self, o: &Element) -> Element {
                (&self).$f(o)
            }
        }
        impl $tr<Element> for &Element {
            type Output = Element;
            fn $f(self, o: Element) -> Element {
                self.$f(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Mul<&Scalar> for &Element {
    type Output = Element;
    fn mul(self, s: &Scalar) -> Element {
        self.scale(s)
    }
}

impl Mul<Scalar> for Element {
    type Output = Element;
    fn mul(self, s: Scalar) -> Element {
        self.scale(&s)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, s)| (*m, -s)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, o: &Element) {
        *self = self.merge(o, false);
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, o: &Element) {
        *self = self.merge(o, true);
    }
}
