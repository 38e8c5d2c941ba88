//! Formal sums of products of normal-form elements.
//!
//! An identity is stated as an [`Expr`] whose factors are already reduced
//! elements. The engine evaluates it by multiplying in normal form, the
//! oracle by composing the factors' actions on a module vector, so the two
//! evaluations share no product code.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use pinosp::oracle::{OracleError, PolySpinor};
use pinosp::{Algebra, Element, Parallelism, Rational, Scalar};
use rustc_hash::FxHashMap;

/// A homogeneous factor, shared by pointer so equal products merge.
#[derive(Clone, Debug)]
pub struct Leaf {
    el: Arc<Element>,
    odd: bool,
}

impl Leaf {
    pub fn element(&self) -> &Element {
        &self.el
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.el) as usize
    }
}

/// `Σ c_i · f_{i,1} f_{i,2} ⋯` with homogeneous factors `f`.
#[derive(Clone, Debug, Default)]
pub struct Expr {
    terms: Vec<(Scalar, Vec<Leaf>)>,
}

fn parity(factors: &[Leaf]) -> bool {
    factors.iter().fold(false, |p, f| p ^ f.odd)
}

impl Expr {
    pub fn zero() -> Self {
        Expr { terms: Vec::new() }
    }

    pub fn scalar(s: Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Expr {
            terms: vec![(s, Vec::new())],
        }
    }

    pub fn rational(r: Rational) -> Self {
        Self::scalar(Scalar::from_rational(r))
    }

    pub fn int(n: i64) -> Self {
        Self::scalar(Scalar::from_int(n))
    }

    /// One factor per nonzero parity component of `e`.
    pub fn el(e: &Element) -> Self {
        let mut out = Self::zero();
        for (part, odd) in [(e.even_part(), false), (e.odd_part(), true)] {
            if !part.is_zero() {
                out.terms.push((
                    Scalar::one(),
                    vec![Leaf {
                        el: Arc::new(part),
                        odd,
                    }],
                ));
            }
        }
        out
    }

    pub fn leaf(l: &Leaf) -> Self {
        Expr {
            terms: vec![(Scalar::one(), vec![l.clone()])],
        }
    }

    /// The leaves of a homogeneous element, for reuse across expressions.
    pub fn leaves_of(e: &Element) -> Vec<Leaf> {
        Self::el(e).terms.into_iter().flat_map(|(_, f)| f).collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Scalar, Vec<Leaf>)] {
        &self.terms
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Expr {
            terms: self.terms.iter().map(|(c, f)| (c * s, f.clone())).collect(),
        }
    }

    pub fn scale_rational(&self, r: Rational) -> Self {
        self.scale(&Scalar::from_rational(r))
    }

    /// Split into even and odd parts.
    fn split(&self) -> [Expr; 2] {
        let mut out = [Expr::zero(), Expr::zero()];
        for t in &self.terms {
            out[parity(&t.1) as usize].terms.push(t.clone());
        }
        out
    }

    fn bracket(&self, o: &Self, anti: bool) -> Self {
        let mut out = Expr::zero();
        for (pa, a) in self.split().iter().enumerate() {
            for (pb, b) in o.split().iter().enumerate() {
                if a.is_empty() || b.is_empty() {
                    continue;
                }
                let both_odd = pa == 1 && pb == 1;
                let sign = if both_odd != anti { 1 } else { -1 };
                out += a * b;
                out += (b * a).scale_rational(Rational::from(sign));
            }
        }
        out
    }

    /// `ab − (−1)^{|a||b|} ba`.
    pub fn sc(&self, o: &Self) -> Self {
        self.bracket(o, false)
    }

    /// `ab + (−1)^{|a||b|} ba`.
    pub fn ac(&self, o: &Self) -> Self {
        self.bracket(o, true)
    }

    /// `ab − ba`.
    pub fn comm(&self, o: &Self) -> Self {
        &(self * o) - &(o * self)
    }

    /// Merge terms with identical factor sequences.
    pub fn simplify(&self) -> Self {
        let mut index: FxHashMap<Vec<usize>, usize> = FxHashMap::default();
        let mut terms: Vec<(Scalar, Vec<Leaf>)> = Vec::new();
        for (c, f) in &self.terms {
            let key: Vec<usize> = f.iter().map(Leaf::key).collect();
            match index.get(&key) {
                Some(&i) => terms[i].0 += c,
                None => {
                    index.insert(key, terms.len());
                    terms.push((c.clone(), f.clone()));
                }
            }
        }
        terms.retain(|(c, _)| !c.is_zero());
        Expr { terms }
    }

    /// Normal form of the expression.
    pub fn eval(&self, ctx: &Arc<Algebra>, par: Parallelism) -> Element {
        let simplified = self.simplify();
        let parts = par.map(&simplified.terms, |(c, f)| {
            let mut acc = Element::scalar(ctx, c.clone());
            for l in f {
                acc = &acc * l.element();
            }
            acc
        });
        let mut out = Element::zero(ctx);
        for p in &parts {
            out += p;
        }
        out
    }

    /// The module action, each product applied factor by factor from the
    /// right.
    pub fn act(&self, v: &PolySpinor) -> Result<PolySpinor, OracleError> {
        let mut out = PolySpinor::zero(v.ctx(), v.sector())?;
        for (c, f) in &self.simplify().terms {
            let mut w = v.clone();
            for l in f.iter().rev() {
                w = w.act(l.element())?;
                if w.is_zero() {
                    break;
                }
            }
            out = out.add(&w.scale(c))?;
        }
        Ok(out)
    }
}

impl<'a> Add<&'a Expr> for &'a Expr {
    type Output = Expr;

    fn add(self, o: &Expr) -> Expr {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        Expr { terms }
    }
}

impl AddAssign<Expr> for Expr {
    fn add_assign(&mut self, o: Expr) {
        self.terms.extend(o.terms);
    }
}

impl<'a> Sub<&'a Expr> for &'a Expr {
    type Output = Expr;

    fn sub(self, o: &Expr) -> Expr {
        self + &-o
    }
}

impl Neg for &Expr {
    type Output = Expr;

    fn neg(self) -> Expr {
        Expr {
            terms: self.terms.iter().map(|(c, f)| (-c, f.clone())).collect(),
        }
    }
}

impl<'a> Mul<&'a Expr> for &'a Expr {
    type Output = Expr;

    fn mul(self, o: &Expr) -> Expr {
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ca, fa) in &self.terms {
            for (cb, fb) in &o.terms {
                let mut f = fa.clone();
                f.extend(fb.iter().cloned());
                terms.push((ca * cb, f));
            }
        }
        Expr { terms }
    }
}

/// `𝒜(f(u_1, …, u_n)) = (1/n!) Σ_σ sgn(σ) f(u_{σ(1)}, …, u_{σ(n)})`.
pub fn antisym<T: Clone>(us: &[T], f: impl Fn(&[T]) -> Expr) -> Expr {
    let n = us.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Expr::zero();
    let mut count: i64 = 0;
    loop {
        let args: Vec<T> = perm.iter().map(|&i| us[i].clone()).collect();
        let term = f(&args);
        out += if inversions(&perm).is_multiple_of(2) {
            term
        } else {
            -&term
        };
        count += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out.simplify().scale_rational(Rational::new(1, count))
}

fn inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use pinosp::special::antisymmetrize;
    use pinosp::{GroupSpec, ReflectionGroup};

    fn ctx() -> Arc<Algebra> {
        Algebra::symbolic(ReflectionGroup::build("A1@2".parse::<GroupSpec>().unwrap()).unwrap())
    }

    #[test]
    fn brackets_match_engine() {
        let a = ctx();
        let (x, e, y) = (Element::x(&a, 0), Element::e(&a, 1), Element::y(&a, 0));
        let mixed = &x + &e;
        for (p, q) in [(&x, &y), (&e, &e), (&mixed, &y), (&mixed, &mixed)] {
            let (ep, eq) = (Expr::el(p), Expr::el(q));
            assert_eq!(
                ep.sc(&eq).eval(&a, Parallelism::Sequential),
                p.supercommutator(q)
            );
            assert_eq!(
                ep.ac(&eq).eval(&a, Parallelism::Sequential),
                p.anticommutator(q)
            );
            assert_eq!(ep.comm(&eq).eval(&a, Parallelism::Rayon), p.commutator(q));
        }
    }

    #[test]
    fn antisym_matches_core() {
        let a = ctx();
        let fs = [Element::e(&a, 0), Element::x(&a, 1), Element::y(&a, 0)];
        let leaves: Vec<Expr> = fs.iter().map(Expr::el).collect();
        let ours = antisym(&leaves, |w| &(&w[0] * &w[1]) * &w[2]).eval(&a, Parallelism::Sequential);
        assert_eq!(ours, antisymmetrize(&a, &fs));
    }

    #[test]
    fn simplify_merges_shared_leaves() {
        let a = ctx();
        let l = Expr::el(&Element::x(&a, 0));
        let e = &(&l * &l) - &(&l * &l).scale_rational(Rational::from(1));
        assert!(e.simplify().is_empty());
        let mut p = vec![0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 6);
    }
}
