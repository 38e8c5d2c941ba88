use std::fmt::Write;

use crate::geometry::MAX_DIM;
use crate::groups::ReflectionGroup;

/// Exponent vector of a commutative monomial in `x` or `y` coordinates.
pub type Exps = [u8; MAX_DIM];

pub const ZERO_EXPS: Exps = [0; MAX_DIM];

/// PBW basis word `x^a · y^b · g · e_A`.
///
/// Field order gives the canonical ordering of words.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub x: Exps,
    pub y: Exps,
    pub g: u32,
    /// Clifford blade `e_A`: bit `p` set iff `e_{p+1}` is a factor, in ascending order.
    pub e: u8,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        x: ZERO_EXPS,
        y: ZERO_EXPS,
        g: 0,
        e: 0,
    };

    pub fn x_var(p: usize) -> Self {
        let mut m = Self::ONE;
        m.x[p] = 1;
        m
    }

    pub fn y_var(p: usize) -> Self {
        let mut m = Self::ONE;
        m.y[p] = 1;
        m
    }

    pub fn group(g: usize) -> Self {
        Monomial {
            g: g as u32,
            ..Self::ONE
        }
    }

    pub fn clifford(p: usize) -> Self {
        Monomial {
            e: 1 << p,
            ..Self::ONE
        }
    }

    /// Clifford parity: `|A| mod 2`.
    pub fn is_odd(&self) -> bool {
        self.e.count_ones() % 2 == 1
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().map(|&k| k as u32).sum()
    }

    pub fn y_degree(&self) -> u32 {
        self.y.iter().map(|&k| k as u32).sum()
    }

    pub fn degree(&self) -> u32 {
        self.x_degree() + self.y_degree()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// Factors separated by `*`; empty for the unit word.
    pub fn render(&self, group: &ReflectionGroup) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut var = |letter: char, exps: &Exps| {
            for (p, &k) in exps.iter().enumerate() {
                match k {
                    0 => {}
                    1 => parts.push(format!("{letter}{}", p + 1)),
                    _ => parts.push(format!("{letter}{}^{k}", p + 1)),
                }
            }
        };
        var('x', &self.x);
        var('y', &self.y);
        if self.g != 0 {
            parts.push(group.element_name(self.g as usize));
        }
        for p in 0..MAX_DIM {
            if self.e & (1 << p) != 0 {
                parts.push(format!("e{}", p + 1));
            }
        }
        let mut out = String::new();
        for (k, part) in parts.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            let _ = write!(out, "{part}");
        }
        out
    }
}

pub(crate) fn add_exps(a: &Exps, b: &Exps) -> Exps {
    let mut out = *a;
    for (o, k) in out.iter_mut().zip(b) {
        *o = o.checked_add(*k).expect("exponent overflow");
    }
    out
}

pub(crate) fn unit_exps(p: usize) -> Exps {
    let mut e = ZERO_EXPS;
    e[p] = 1;
    e
}

pub(crate) fn is_zero_exps(a: &Exps) -> bool {
    a.iter().all(|&k| k == 0)
}
