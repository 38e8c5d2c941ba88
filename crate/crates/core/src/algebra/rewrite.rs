//! Normal-form rewriting for products of PBW words.
//!
//! Results of the elementary steps are memoized per algebra context.

use std::hash::Hash;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::clifford::{blade_product, orthonormal_sign, Blades};
use super::monomial::{add_exps, is_zero_exps, unit_exps, Exps, Monomial, ZERO_EXPS};
use super::Algebra;
use crate::scalars::{Rational, Scalar};

/// `Σ coeff · x^a` (or `y^a`) with rational coefficients.
pub(crate) type Poly = Vec<(Exps, Rational)>;
/// `Σ coeff · x^a y^b g`.
pub(crate) type HTerms = Vec<(Exps, Exps, u32, Scalar)>;
/// `Σ coeff · x^a y_q^h g` with `h ∈ {0, 1}`.
type LinearY = Vec<(Exps, bool, u32, Scalar)>;

type HKey = (Exps, Exps, u32, Exps, Exps, u32);

pub(crate) struct Memo<K, V> {
    map: RwLock<FxHashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Self {
            map: RwLock::new(FxHashMap::default()),
        }
    }

    fn get_or(&self, key: &K, f: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.read().expect("memo lock").get(key) {
            return v.clone();
        }
        let v = Arc::new(f());
        self.map
            .write()
            .expect("memo lock")
            .entry(key.clone())
            .or_insert(v)
            .clone()
    }

    pub(crate) fn len(&self) -> usize {
        self.map.read().expect("memo lock").len()
    }
}

pub(crate) struct Caches {
    gx: Memo<(u32, Exps), Poly>,
    gy: Memo<(u32, Exps), Poly>,
    y1x: Memo<(usize, Exps), LinearY>,
    yx: Memo<(Exps, Exps), HTerms>,
    h: Memo<HKey, HTerms>,
    blades: Memo<(u8, u8), Blades>,
}

impl Caches {
    pub(crate) fn new() -> Self {
        Self {
            gx: Memo::new(),
            gy: Memo::new(),
            y1x: Memo::new(),
            yx: Memo::new(),
            h: Memo::new(),
            blades: Memo::new(),
        }
    }

    pub(crate) fn entries(&self) -> usize {
        self.gx.len()
            + self.gy.len()
            + self.y1x.len()
            + self.yx.len()
            + self.h.len()
            + self.blades.len()
    }
}

fn first_nonzero(a: &Exps) -> Option<usize> {
    a.iter().position(|&k| k > 0)
}

fn last_nonzero(a: &Exps) -> Option<usize> {
    a.iter().rposition(|&k| k > 0)
}

fn collect<K: Eq + Hash + Ord + Clone, V>(
    map: FxHashMap<K, V>,
    zero: impl Fn(&V) -> bool,
) -> Vec<(K, V)> {
    let mut v: Vec<(K, V)> = map.into_iter().filter(|(_, c)| !zero(c)).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

impl Algebra {
    /// `g · x^c` (`dual = false`) or `g · y^c` (`dual = true`) as a polynomial.
    pub(crate) fn act_poly(&self, g: u32, c: &Exps, dual: bool) -> Arc<Poly> {
        let memo = if dual {
            &self.caches.gy
        } else {
            &self.caches.gx
        };
        memo.get_or(&(g, *c), || {
            if g == 0 {
                return vec![(*c, Rational::one())];
            }
            let Some(p) = first_nonzero(c) else {
                return vec![(ZERO_EXPS, Rational::one())];
            };
            let mut rest = *c;
            rest[p] -= 1;
            let tail = self.act_poly(g, &rest, dual);
            let m = if dual {
                self.group.dual_matrix(g as usize)
            } else {
                self.group.matrix(g as usize)
            };
            let mut acc: FxHashMap<Exps, Rational> = FxHashMap::default();
            for r in 0..self.dim() {
                let coef = m.get(r, p);
                if coef.is_zero() {
                    continue;
                }
                for (e, v) in tail.iter() {
                    *acc.entry(add_exps(e, &unit_exps(r)))
                        .or_insert_with(Rational::zero) += coef * v;
                }
            }
            collect(acc, |v| v.is_zero())
        })
    }

    /// `y_q · x^c` in normal form.
    fn y1x(&self, q: usize, c: &Exps) -> Arc<LinearY> {
        self.caches.y1x.get_or(&(q, *c), || {
            let Some(p) = first_nonzero(c) else {
                return vec![(ZERO_EXPS, true, 0, Scalar::one())];
            };
            let mut rest = *c;
            rest[p] -= 1;
            let mut acc: FxHashMap<(Exps, bool, u32), Scalar> = FxHashMap::default();
            // y_q x_p R = x_p (y_q R) + δ_qp R + Σ_s κ_s ⟨y_q, α_s⟩⟨α_s∨, x_p⟩ (s·R) s
            for (a, h, w, s) in self.y1x(q, &rest).iter() {
                *acc.entry((add_exps(a, &unit_exps(p)), *h, *w))
                    .or_insert_with(Scalar::zero) += s;
            }
            if q == p {
                *acc.entry((rest, false, 0)).or_insert_with(Scalar::zero) += Scalar::one();
            }
            for r in self.group.reflections() {
                let c = r.root[q] * r.coroot[p];
                let kappa = &self.kappa_scalars[r.param];
                if c.is_zero() || kappa.is_zero() {
                    continue;
                }
                let coef = kappa.scale_rational(&c);
                let g = r.element as u32;
                for (e, v) in self.act_poly(g, &rest, false).iter() {
                    *acc.entry((*e, false, g)).or_insert_with(Scalar::zero) +=
                        coef.scale_rational(v);
                }
            }
            collect(acc, |v| v.is_zero())
                .into_iter()
                .map(|((a, h, g), s)| (a, h, g, s))
                .collect()
        })
    }

    /// `y^b · x^c` in normal form.
    pub(crate) fn yx(&self, b: &Exps, c: &Exps) -> Arc<HTerms> {
        if is_zero_exps(b) || is_zero_exps(c) {
            return Arc::new(vec![(*c, *b, 0, Scalar::one())]);
        }
        self.caches.yx.get_or(&(*b, *c), || {
            let q = last_nonzero(b).expect("nonzero");
            let mut rest = *b;
            rest[q] -= 1;
            let mut acc: FxHashMap<(Exps, Exps, u32), Scalar> = FxHashMap::default();
            // y^b x^c = y^{b−e_q} (y_q x^c)
            for (a1, h, w1, c1) in self.y1x(q, c).iter() {
                for (a2, b2, w2, c2) in self.yx(&rest, a1).iter() {
                    let coef = c1 * c2;
                    let w = self.group.mul(*w2 as usize, *w1 as usize) as u32;
                    if *h {
                        for (f, r) in self.act_poly(*w2, &unit_exps(q), true).iter() {
                            *acc.entry((*a2, add_exps(b2, f), w))
                                .or_insert_with(Scalar::zero) += coef.scale_rational(r);
                        }
                    } else {
                        *acc.entry((*a2, *b2, w)).or_insert_with(Scalar::zero) += &coef;
                    }
                }
            }
            collect(acc, |v| v.is_zero())
                .into_iter()
                .map(|((a, b, g), s)| (a, b, g, s))
                .collect()
        })
    }

    /// `(x^a y^b g)(x^c y^f h)` in normal form.
    pub(crate) fn h_product(&self, l: (&Exps, &Exps, u32), r: (&Exps, &Exps, u32)) -> Arc<HTerms> {
        let (a, b, g) = l;
        let (c, f, h) = r;
        if g == 0 && (is_zero_exps(b) || is_zero_exps(c)) {
            let w = self.group.mul(0, h as usize) as u32;
            return Arc::new(vec![(add_exps(a, c), add_exps(b, f), w, Scalar::one())]);
        }
        let key = (*a, *b, g, *c, *f, h);
        self.caches.h.get_or(&key, || {
            let mut acc: FxHashMap<(Exps, Exps, u32), Scalar> = FxHashMap::default();
            // x^a y^b (g·x^c) (g·y^f) g h
            for (c1, r1) in self.act_poly(g, c, false).iter() {
                for (a2, b2, w, s2) in self.yx(b, c1).iter() {
                    let wg = self.group.mul(*w as usize, g as usize);
                    let wgh = self.group.mul(wg, h as usize) as u32;
                    let x = add_exps(a, a2);
                    for (f1, r3) in self.act_poly(wg as u32, f, true).iter() {
                        *acc.entry((x, add_exps(b2, f1), wgh))
                            .or_insert_with(Scalar::zero) += s2.scale_rational(&(r1 * r3));
                    }
                }
            }
            collect(acc, |v| v.is_zero())
                .into_iter()
                .map(|((a, b, g), s)| (a, b, g, s))
                .collect()
        })
    }

    pub(crate) fn blades(&self, a: u8, b: u8) -> Arc<Blades> {
        if self.orthonormal {
            return Arc::new(vec![(a ^ b, Rational::from(orthonormal_sign(a, b)))]);
        }
        self.caches
            .blades
            .get_or(&(a, b), || blade_product(self.space().gram(), a, b))
    }

    /// Product of two words, accumulated into `acc` with coefficient `coef`.
    pub(crate) fn mul_monomials_into(
        &self,
        m1: &Monomial,
        m2: &Monomial,
        coef: &Scalar,
        acc: &mut FxHashMap<Monomial, Scalar>,
    ) {
        let hs = self.h_product((&m1.x, &m1.y, m1.g), (&m2.x, &m2.y, m2.g));
        let bl = self.blades(m1.e, m2.e);
        for (x, y, g, s) in hs.iter() {
            let base = if s.is_one() { coef.clone() } else { coef * s };
            for (e, r) in bl.iter() {
                let m = Monomial {
                    x: *x,
                    y: *y,
                    g: *g,
                    e: *e,
                };
                let v = if r.is_one() {
                    base.clone()
                } else {
                    base.scale_rational(r)
                };
                *acc.entry(m).or_insert_with(Scalar::zero) += v;
            }
        }
    }
}
