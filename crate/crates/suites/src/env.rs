//! Per-configuration state shared by the identity builders: the algebra,
//! the osp(1|2) generators, the centralizer with its caches and index-tuple
//! generators.

use std::sync::{Arc, Mutex};

use pinosp::special::{angular_momentum, b_kappa, o_frak, rho};
use pinosp::{
    Algebra, AlgebraError, BaseNumber, Centralizer, Covector, Element, Osp, Parallelism, Rational,
    Scalar,
};
use rustc_hash::FxHashMap;

use crate::expr::Expr;
use crate::CaseError;

/// Everything a builder needs for one group configuration.
pub struct Env {
    cent: Centralizer,
    par: Parallelism,
    o_memo: Mutex<FxHashMap<Vec<Covector>, Expr>>,
    pub x: Expr,
    pub d: Expr,
    pub h: Expr,
    pub ep: Expr,
    pub em: Expr,
}

impl Env {
    pub fn new(ctx: &Arc<Algebra>, par: Parallelism) -> Result<Self, CaseError> {
        let cent = Centralizer::new(ctx)?;
        let o = cent.osp();
        let (x, d, h, ep, em) = (
            Expr::el(&o.x),
            Expr::el(&o.d),
            Expr::el(&o.h),
            Expr::el(&o.e_plus),
            Expr::el(&o.e_minus),
        );
        Ok(Env {
            cent,
            par,
            o_memo: Mutex::new(FxHashMap::default()),
            x,
            d,
            h,
            ep,
            em,
        })
    }

    pub fn ctx(&self) -> &Arc<Algebra> {
        self.cent.ctx()
    }

    pub fn osp(&self) -> &Osp {
        self.cent.osp()
    }

    pub fn cent(&self) -> &Centralizer {
        &self.cent
    }

    pub fn par(&self) -> Parallelism {
        self.par
    }

    pub fn dim(&self) -> usize {
        self.ctx().dim()
    }

    /// Normal form of an expression in this configuration.
    pub fn eval(&self, e: &Expr) -> Element {
        e.eval(self.ctx(), self.par)
    }

    /// Zero-based basis covector `x_{j+1}`.
    pub fn xc(&self, j: usize) -> Covector {
        self.ctx().space().x(j)
    }

    pub fn xs(&self, js: &[usize]) -> Vec<Covector> {
        js.iter().map(|&j| self.xc(j)).collect()
    }

    /// `Σ c_j x_j` from integer coefficients.
    pub fn comb(&self, cs: &[i64]) -> Covector {
        let mut u = Covector::zero(self.dim());
        for (j, &c) in cs.iter().enumerate().take(self.dim()) {
            if c != 0 {
                u = &u + &self.xc(j).scale_rational(Rational::from(c));
            }
        }
        u
    }

    pub fn form(&self, u: &Covector, v: &Covector) -> Scalar {
        Scalar::from_base(self.ctx().space().form(u, v))
    }

    pub fn form_e(&self, u: &Covector, v: &Covector) -> Expr {
        Expr::scalar(self.form(u, v))
    }

    pub fn el(&self, e: &Element) -> Expr {
        Expr::el(e)
    }

    pub fn one(&self) -> Expr {
        Expr::int(1)
    }

    pub fn gamma(&self, u: &Covector) -> Expr {
        Expr::el(&Element::gamma(self.ctx(), u))
    }

    pub fn cov(&self, u: &Covector) -> Expr {
        Expr::el(&Element::covector(self.ctx(), u))
    }

    pub fn beta(&self, u: &Covector) -> Expr {
        Expr::el(&Element::beta(self.ctx(), u))
    }

    /// `γ_{u_1} ⋯ γ_{u_n}`.
    pub fn gammas(&self, us: &[Covector]) -> Expr {
        us.iter().fold(self.one(), |acc, u| &acc * &self.gamma(u))
    }

    /// `𝒜(γ_{u_1 ⋯ u_n})`.
    pub fn agamma(&self, us: &[Covector]) -> Expr {
        Expr::el(&pinosp::special::antisym_gamma(self.ctx(), us))
    }

    /// `𝒪_u`.
    pub fn of(&self, u: &Covector) -> Expr {
        Expr::el(&o_frak(self.ctx(), u))
    }

    pub fn m(&self, u: &Covector, v: &Covector) -> Expr {
        Expr::el(&angular_momentum(self.ctx(), u, v))
    }

    pub fn bk(&self, u: &Covector, v: &Covector) -> Expr {
        Expr::el(&b_kappa(self.ctx(), u, v))
    }

    pub fn rho(&self, s: usize) -> Result<Expr, AlgebraError> {
        Ok(Expr::el(&rho(self.ctx(), s)?))
    }

    /// Group-element indices of the reflections.
    pub fn reflections(&self) -> Vec<usize> {
        self.ctx()
            .group()
            .reflections()
            .iter()
            .map(|r| r.element)
            .collect()
    }

    /// `P₊(a) = a − ½[D, [X, a]]`.
    pub fn p_plus(&self, a: &Expr) -> Expr {
        a - &self.d.sc(&self.x.sc(a)).scale_rational(Rational::new(1, 2))
    }

    /// `P₋(a) = a + ½[X, [D, a]]`.
    pub fn p_minus(&self, a: &Expr) -> Expr {
        a + &self.x.sc(&self.d.sc(a)).scale_rational(Rational::new(1, 2))
    }

    /// `Q⁻(a) = (H − 1)a − ½X[D, a]`.
    pub fn q_minus(&self, a: &Expr) -> Expr {
        &(&(&self.h - &self.one()) * a)
            - &(&self.x * &self.d.sc(a)).scale_rational(Rational::new(1, 2))
    }

    /// `(XD − DX)/2`.
    pub fn odd_commutator(&self) -> Expr {
        self.x.comm(&self.d).scale_rational(Rational::new(1, 2))
    }

    /// `H² + 2(E⁺E⁻ + E⁻E⁺) − (XD − DX)/2`.
    pub fn casimir(&self) -> Expr {
        let ee = &(&self.ep * &self.em) + &(&self.em * &self.ep);
        &(&(&self.h * &self.h) + &ee.scale_rational(Rational::from(2))) - &self.odd_commutator()
    }

    /// `(XD − DX)/2 + 1/2`.
    pub fn scasimir(&self) -> Expr {
        &self.odd_commutator() + &Expr::rational(Rational::new(1, 2))
    }

    /// A few covectors: up to three basis vectors and, from dimension two,
    /// `x_1 + x_2` and `x_1 − 2x_2`.
    pub fn sample_covectors(&self) -> Vec<Covector> {
        let mut out: Vec<Covector> = (0..self.dim().min(3)).map(|j| self.xc(j)).collect();
        if self.dim() >= 2 {
            out.push(self.comb(&[1, 1]));
            out.push(self.comb(&[1, -2]));
        }
        out
    }

    /// `n` covectors cycling through [`Env::sample_covectors`], linearly
    /// dependent once `n` exceeds the dimension.
    pub fn generic_tuple(&self, n: usize, offset: usize) -> Vec<Covector> {
        let s = self.sample_covectors();
        (0..n).map(|k| s[(k + offset) % s.len()].clone()).collect()
    }

    /// A `B`-orthogonal basis from the reference basis by Gram–Schmidt.
    pub fn orthogonal_basis(&self) -> Vec<Covector> {
        let mut out: Vec<(Covector, BaseNumber)> = Vec::new();
        for j in 0..self.dim() {
            let mut w = self.xc(j);
            for (p, norm) in &out {
                let c = &self.ctx().space().form(&w, p) * norm;
                w = &w - &p.scale(&c);
            }
            let n = self.ctx().space().form(&w, &w);
            if let Ok(inv) = n.inv() {
                out.push((w, inv));
            }
        }
        out.into_iter().map(|(w, _)| w).collect()
    }

    /// `O_{u_1 ⋯ u_n}` through the projector, shared across builders; the
    /// factor is stored once per index set up to order.
    pub fn o(&self, us: &[Covector]) -> Expr {
        let mut key = us.to_vec();
        let mut odd = false;
        for i in 1..key.len() {
            let mut j = i;
            while j > 0 && key[j - 1] > key[j] {
                key.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if key.windows(2).any(|w| w[0] == w[1]) {
            return Expr::zero();
        }
        let cached = self.o_memo.lock().expect("memo lock").get(&key).cloned();
        let e = match cached {
            Some(e) => e,
            None => {
                let e = Expr::el(&self.cent.o(&key));
                self.o_memo
                    .lock()
                    .expect("memo lock")
                    .entry(key)
                    .or_insert(e)
                    .clone()
            }
        };
        if odd {
            -&e
        } else {
            e
        }
    }

    /// `O_A` for zero-based basis indices in the given order.
    pub fn ob(&self, js: &[usize]) -> Expr {
        self.o(&self.xs(js))
    }

    /// All ascending `n`-subsets of the basis.
    pub fn basis_tuples(&self, n: usize) -> Vec<Vec<Covector>> {
        subsets(self.dim(), n)
            .into_iter()
            .map(|s| self.xs(&s))
            .collect()
    }

    /// Non-orthogonal tuples `(x_1, …, x_{n−1}, x_1 + x_n)` and
    /// `(x_1 + 2x_2, x_2 + 2x_3, …)`, cyclically in the basis.
    pub fn mixed_tuples(&self, n: usize) -> Vec<Vec<Covector>> {
        let d = self.dim();
        if n == 0 || n > d {
            return Vec::new();
        }
        let mut out = Vec::new();
        if n >= 2 {
            let mut t = self.xs(&(0..n - 1).collect::<Vec<_>>());
            t.push(&self.xc(0) + &self.xc(n - 1));
            out.push(t);
        }
        let skew: Vec<Covector> = (0..n)
            .map(|k| &self.xc(k) + &self.xc((k + 1) % d).scale_rational(Rational::from(2)))
            .collect();
        out.push(skew);
        out
    }

    /// A handful of tuples: the first `cap` basis tuples followed by the
    /// mixed ones.
    pub fn sample_tuples(&self, n: usize, cap: usize) -> Vec<Vec<Covector>> {
        let mut out: Vec<_> = self.basis_tuples(n).into_iter().take(cap).collect();
        out.extend(self.mixed_tuples(n));
        out
    }

    /// Ordered selections of `n` distinct zero-based indices, at most `cap`
    /// of them, spread over the whole range.
    pub fn index_choices(&self, n: usize, cap: usize) -> Vec<Vec<usize>> {
        let all = arrangements(self.dim(), n);
        if all.len() <= cap {
            return all;
        }
        let step = all.len() / cap;
        (0..cap)
            .map(|k| all[k * step].clone())
            .chain(std::iter::once(all[all.len() - 1].clone()))
            .collect()
    }

    pub fn sqrt_inv(&self, r: Rational) -> Result<Scalar, CaseError> {
        if r == Rational::from(1) {
            Ok(Scalar::one())
        } else if r == Rational::from(2) {
            Ok(Scalar::from_base(BaseNumber::inv_sqrt2()))
        } else {
            Err(CaseError::Unsupported(format!("square root of {r}")))
        }
    }
}

/// Ascending `n`-subsets of `0..d`.
pub fn subsets(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, d: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for j in start..d {
            cur.push(j);
            rec(j + 1, d, n, cur, out);
            cur.pop();
        }
    }
    rec(0, d, n, &mut cur, &mut out);
    out
}

/// Ordered selections of `n` distinct elements of `0..d`.
pub fn arrangements(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(d: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for j in 0..d {
            if !cur.contains(&j) {
                cur.push(j);
                rec(d, n, cur, out);
                cur.pop();
            }
        }
    }
    rec(d, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_helpers() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(arrangements(3, 2).len(), 6);
        assert!(arrangements(2, 3).is_empty());
    }
}
