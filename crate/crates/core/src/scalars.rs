//! Exact coefficients: the commutative ring ℚ(i, √2)[κ₁, …, κ_r].
//!
//! A [`BaseNumber`] is `a + b·i + c·√2 + d·i√2` with rational components. A
//! [`Scalar`] is a sparse polynomial in the deformation parameters, one
//! indeterminate per conjugacy class of reflections, with `BaseNumber`
//! coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

pub type Rational = Ratio<i64>;

/// Maximum number of independent deformation parameters.
pub const MAX_CLASSES: usize = 8;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("missing value for deformation parameter k{0}")]
    MissingClass(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar {0} is not a constant")]
    NotConstant(String),
}

// Units are indexed by two bits: bit 0 is `i`, bit 1 is `√2`.
const UNIT_NAMES: [&str; 4] = ["", "i", "sqrt2", "i*sqrt2"];

#[inline]
fn unit_product(a: usize, b: usize) -> (i64, usize) {
    let mut c = 1;
    if a & b & 1 != 0 {
        c = -c;
    }
    if a & b & 2 != 0 {
        c *= 2;
    }
    (c, a ^ b)
}

/// An element of ℚ(i, √2), stored by its four rational components.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BaseNumber {
    c: [Rational; 4],
}

impl BaseNumber {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut c = [Rational::zero(); 4];
        c[0] = r;
        Self { c }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn new(re: Rational, im: Rational, sqrt2: Rational, i_sqrt2: Rational) -> Self {
        Self {
            c: [re, im, sqrt2, i_sqrt2],
        }
    }

    pub fn i() -> Self {
        Self::new(
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn sqrt2() -> Self {
        Self::new(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    pub fn components(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the number has no `i` or `√2` part.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.c[1..].iter().all(Zero::is_zero) {
            Some(self.c[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            c: [self.c[0] * r, self.c[1] * r, self.c[2] * r, self.c[3] * r],
        }
    }

    /// Galois conjugate `i ↦ −i`.
    pub fn conj_i(&self) -> Self {
        Self {
            c: [self.c[0], -self.c[1], self.c[2], -self.c[3]],
        }
    }

    /// Galois conjugate `√2 ↦ −√2`.
    pub fn conj_sqrt2(&self) -> Self {
        Self {
            c: [self.c[0], self.c[1], -self.c[2], -self.c[3]],
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // The product over all four Galois conjugates is rational.
        let a = self.conj_i();
        let b = self.conj_sqrt2();
        let c = a.conj_sqrt2();
        let rest = &(&a * &b) * &c;
        let norm = (self * &rest)
            .as_rational()
            .expect("field norm of Q(i, sqrt2) is rational");
        Ok(rest.scale(&(Rational::one() / norm)))
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        Self::sqrt2().scale(&rat(1, 2))
    }

    fn fmt_terms(&self) -> Vec<(bool, String)> {
        // (negative, text without sign) per nonzero component
        let mut out = Vec::new();
        for (u, r) in self.c.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            out.push((r.is_negative(), fmt_coeff_unit(&r.abs(), UNIT_NAMES[u])));
        }
        out
    }
}

fn fmt_coeff_unit(r: &Rational, unit: &str) -> String {
    if unit.is_empty() {
        r.to_string()
    } else if r.is_one() {
        unit.to_string()
    } else {
        format!("{r}*{unit}")
    }
}

impl fmt::Display for BaseNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.fmt_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        write_signed_terms(f, terms.into_iter())
    }
}

impl fmt::Debug for BaseNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn write_signed_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (bool, String)>,
) -> fmt::Result {
    for (k, (neg, text)) in terms.enumerate() {
        match (k, neg) {
            (0, false) => write!(f, "{text}")?,
            (0, true) => write!(f, "-{text}")?,
            (_, false) => write!(f, " + {text}")?,
            (_, true) => write!(f, " - {text}")?,
        }
    }
    Ok(())
}

impl<'a> Add<&'a BaseNumber> for &'a BaseNumber {
    type Output = BaseNumber;
    fn add(self, o: &BaseNumber) -> BaseNumber {
        BaseNumber {
            c: [
                self.c[0] + o.c[0],
                self.c[1] + o.c[1],
                self.c[2] + o.c[2],
                self.c[3] + o.c[3],
            ],
        }
    }
}

impl<'a> Sub<&'a BaseNumber> for &'a BaseNumber {
    type Output = BaseNumber;
    fn sub(self, o: &BaseNumber) -> BaseNumber {
        BaseNumber {
            c: [
                self.c[0] - o.c[0],
                self.c[1] - o.c[1],
                self.c[2] - o.c[2],
                self.c[3] - o.c[3],
            ],
        }
    }
}

impl<'a> Mul<&'a BaseNumber> for &'a BaseNumber {
    type Output = BaseNumber;
    fn mul(self, o: &BaseNumber) -> BaseNumber {
        let mut c = [Rational::zero(); 4];
        for (a, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (k, u) = unit_product(a, b);
                c[u] += x * y * int(k);
            }
        }
        BaseNumber { c }
    }
}

impl Neg for &BaseNumber {
    type Output = BaseNumber;
    fn neg(self) -> BaseNumber {
        BaseNumber {
            c: [-self.c[0], -self.c[1], -self.c[2], -self.c[3]],
        }
    }
}

impl AddAssign<&BaseNumber> for BaseNumber {
    fn add_assign(&mut self, o: &BaseNumber) {
        for k in 0..4 {
            if !o.c[k].is_zero() {
                self.c[k] += o.c[k];
            }
        }
    }
}

impl From<Rational> for BaseNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for BaseNumber {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

/// Exponent vector of a monomial in the deformation parameters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct KappaExp(pub [u8; MAX_CLASSES]);

impl KappaExp {
    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn add(&self, o: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a = a.checked_add(*b).expect("kappa exponent overflow");
        }
        KappaExp(e)
    }
}

type Terms = SmallVec<[(KappaExp, BaseNumber); 1]>;

/// A polynomial in the deformation parameters over ℚ(i, √2).
///
/// Terms are kept sorted by exponent with no zero coefficients, so structural
/// equality is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: Terms,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_base(BaseNumber::one())
    }

    pub fn from_base(b: BaseNumber) -> Self {
        let mut terms = Terms::new();
        if !b.is_zero() {
            terms.push((KappaExp::default(), b));
        }
        Self { terms }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_base(BaseNumber::from_rational(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn i() -> Self {
        Self::from_base(BaseNumber::i())
    }

    pub fn sqrt2() -> Self {
        Self::from_base(BaseNumber::sqrt2())
    }

    /// The indeterminate of class `class` (zero-based).
    pub fn kappa(class: usize) -> Self {
        assert!(
            class < MAX_CLASSES,
            "at most {MAX_CLASSES} deformation parameters"
        );
        let mut e = KappaExp::default();
        e.0[class] = 1;
        let mut terms = Terms::new();
        terms.push((e, BaseNumber::one()));
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_constant() && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&KappaExp, &BaseNumber)> {
        self.terms.iter().map(|(e, b)| (e, b))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree in the deformation parameters; zero for the zero scalar.
    pub fn kappa_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.degree())
            .max()
            .unwrap_or(0)
    }

    /// The value as a `BaseNumber` when no deformation parameter occurs.
    pub fn as_base(&self) -> Option<BaseNumber> {
        match self.terms.as_slice() {
            [] => Some(BaseNumber::zero()),
            [(e, b)] if e.is_constant() => Some(b.clone()),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_base().and_then(|b| b.as_rational())
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, b)| (*e, b.scale(r))).collect(),
        }
    }

    pub fn scale_base(&self, s: &BaseNumber) -> Self {
        let mut out = Terms::new();
        for (e, b) in &self.terms {
            let p = b * s;
            if !p.is_zero() {
                out.push((*e, p));
            }
        }
        Self { terms: out }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; only constants are invertible.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        match self.as_base() {
            Some(b) => Ok(Self::from_base(b.inv()?)),
            None => Err(ScalarError::NotConstant(self.to_string())),
        }
    }

    /// Evaluate the deformation parameters at the given values (one per class).
    pub fn substitute_kappa(&self, values: &[BaseNumber]) -> Result<Self, ScalarError> {
        let mut acc = BaseNumber::zero();
        for (e, b) in &self.terms {
            let mut t = b.clone();
            for (class, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let v = values
                    .get(class)
                    .ok_or(ScalarError::MissingClass(class + 1))?;
                for _ in 0..k {
                    t = &t * v;
                }
            }
            acc += &t;
        }
        Ok(Self::from_base(acc))
    }

    fn from_unsorted(mut raw: Vec<(KappaExp, BaseNumber)>) -> Self {
        raw.sort_by_key(|a| a.0);
        let mut terms = Terms::new();
        for (e, b) in raw {
            match terms.last_mut() {
                Some((le, lb)) if *le == e => *lb += &b,
                _ => terms.push((e, b)),
            }
        }
        terms.retain(|(_, b)| !b.is_zero());
        Self { terms }
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let mut terms = Terms::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let ord = match (self.terms.get(i), o.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (e, b) = &o.terms[j];
                    terms.push((*e, if negate { -b } else { b.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let b = &o.terms[j].1;
                    let s = if negate {
                        &self.terms[i].1 - b
                    } else {
                        &self.terms[i].1 + b
                    };
                    if !s.is_zero() {
                        terms.push((self.terms[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { terms }
    }

    fn flat_terms(&self) -> Vec<(bool, String)> {
        let mut out = Vec::new();
        for (e, b) in &self.terms {
            let mono = fmt_kappa(e);
            for (u, r) in b.components().iter().enumerate() {
                if r.is_zero() {
                    continue;
                }
                let mut factors: Vec<String> = Vec::new();
                if !UNIT_NAMES[u].is_empty() {
                    factors.push(UNIT_NAMES[u].to_string());
                }
                if !mono.is_empty() {
                    factors.push(mono.clone());
                }
                let text = if factors.is_empty() {
                    r.abs().to_string()
                } else if r.abs().is_one() {
                    factors.join("*")
                } else {
                    format!("{}*{}", r.abs(), factors.join("*"))
                };
                out.push((r.is_negative(), text));
            }
        }
        out
    }

    /// Number of printed summands; a scalar with more than one needs
    /// parentheses when used as a factor.
    pub fn summand_count(&self) -> usize {
        self.terms
            .iter()
            .map(|(_, b)| b.components().iter().filter(|r| !r.is_zero()).count())
            .sum()
    }

    /// Sign-stripped rendering for use as a coefficient: returns
    /// `(negative, text)` where `text` is `None` for a unit coefficient.
    pub fn coefficient_text(&self) -> (bool, Option<String>) {
        let flat = self.flat_terms();
        if flat.len() == 1 {
            let (neg, text) = flat.into_iter().next().unwrap();
            if text == "1" {
                (neg, None)
            } else {
                (neg, Some(text))
            }
        } else {
            (false, Some(format!("({self})")))
        }
    }
}

fn fmt_kappa(e: &KappaExp) -> String {
    let mut parts = Vec::new();
    for (c, &k) in e.0.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(format!("k{}", c + 1)),
            _ => parts.push(format!("k{}^{}", c + 1, k)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flat = self.flat_terms();
        if flat.is_empty() {
            return write!(f, "0");
        }
        write_signed_terms(f, flat.into_iter())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.merge(o, false)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.merge(o, true)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.terms.len() == 1 && o.terms.len() == 1 {
            let (e1, b1) = &self.terms[0];
            let (e2, b2) = &o.terms[0];
            let p = b1 * b2;
            let mut terms = Terms::new();
            if !p.is_zero() {
                terms.push((e1.add(e2), p));
            }
            return Scalar { terms };
        }
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (e1, b1) in &self.terms {
            for (e2, b2) in &o.terms {
                raw.push((e1.add(e2), b1 * b2));
            }
        }
        Scalar::from_unsorted(raw)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(e, b)| (*e, -b)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        // Fast path: same single exponent.
        if self.terms.len() == 1 && o.terms.len() == 1 && self.terms[0].0 == o.terms[0].0 {
            self.terms[0].1 += &o.terms[0].1;
            if self.terms[0].1.is_zero() {
                self.terms.clear();
            }
            return;
        }
        *self = self.merge(o, false);
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self += &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = self.merge(o, true);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BaseNumber> for Scalar {
    fn from(b: BaseNumber) -> Self {
        Scalar::from_base(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> Scalar {
        Scalar::kappa(0)
    }

    #[test]
    fn defining_relations() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
        assert_eq!(&Scalar::sqrt2() * &Scalar::sqrt2(), Scalar::from_int(2));
        let isq = &Scalar::i() * &Scalar::sqrt2();
        assert_eq!(&isq * &isq, Scalar::from_int(-2));
    }

    #[test]
    fn kappa_polynomial_identity() {
        let one = Scalar::one();
        let lhs = (k() + &one) * (k() - &one);
        assert_eq!(lhs, k() * k() - one);
        assert_eq!(lhs.kappa_degree(), 2);
    }

    #[test]
    fn substitution_examples() {
        let zero = BaseNumber::zero();
        let p = k() * k() + Scalar::one();
        assert_eq!(p.substitute_kappa(&[zero]).unwrap(), Scalar::one());
        let v = BaseNumber::from_rational(rat(3, 2));
        assert_eq!(k().substitute_kappa(&[v]).unwrap(), Scalar::rational(3, 2));
        let q = (Scalar::from_int(2) * k()) * Scalar::i();
        assert_eq!(
            q.substitute_kappa(&[BaseNumber::one()]).unwrap(),
            Scalar::from_int(2) * Scalar::i()
        );
        assert_eq!(
            Scalar::kappa(1).substitute_kappa(&[BaseNumber::one()]),
            Err(ScalarError::MissingClass(2))
        );
    }

    #[test]
    fn cancellation_leaves_empty_terms() {
        let a = k() + Scalar::i();
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z, Scalar::zero());
    }

    #[test]
    fn inverse_in_base_field() {
        let x = BaseNumber::new(rat(1, 2), int(3), int(-1), rat(2, 7));
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(BaseNumber::zero().inv(), Err(ScalarError::DivisionByZero));
        assert!((&BaseNumber::inv_sqrt2() * &BaseNumber::sqrt2()).is_one());
    }

    #[test]
    fn rendering() {
        assert_eq!(Scalar::rational(3, 2).to_string(), "3/2");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!(Scalar::sqrt2().to_string(), "sqrt2");
        let s = Scalar::one() + k();
        assert_eq!(s.to_string(), "1 + k1");
        let t = Scalar::rational(-1, 2) * k() * k() * Scalar::kappa(1);
        assert_eq!(t.to_string(), "-1/2*k1^2*k2");
        assert_eq!(Scalar::zero().to_string(), "0");
    }
}
