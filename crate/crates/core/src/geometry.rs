//! The quadratic space `(V, B)`: coordinates, the involution `β` between `V`
//! and `V*`, and the Witt basis.
//!
//! Covectors are written in the basis `x_1, …, x_d` of `V*` and vectors in the
//! dual basis `y_1, …, y_d` of `V`, so `⟨y_j, x_k⟩ = δ_jk`. The Gram matrix is
//! the matrix of `B` on `V*`, i.e. `gram[j][k] = B(x_j, x_k)`; the form on `V`
//! then has matrix `gram⁻¹` in the `y` basis.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalars::{BaseNumber, Rational};

/// Largest supported ambient dimension (Clifford subsets are bitmasks and
/// monomial exponents are fixed-size arrays).
pub const MAX_DIM: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("dimension must be between 1 and {MAX_DIM}, got {0}")]
    BadDimension(usize),
    #[error("Gram matrix must be {0}x{0}")]
    BadShape(usize),
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix is singular")]
    Singular,
    #[error("the Witt basis is only defined for an orthonormal coordinate basis")]
    NotOrthonormal,
    #[error("coordinate vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Dense square matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![Rational::zero(); n * n];
        for k in 0..n {
            data[k * n + k] = Rational::one();
        }
        Self { n, data }
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Self {
            n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.n + c] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn transpose(&self) -> Self {
        let mut t = self.clone();
        for r in 0..self.n {
            for c in 0..self.n {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut out = Self {
            n,
            data: vec![Rational::zero(); n * n],
        };
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        out.data[r * n + c] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                    inv.data.swap(pivot * n + c, col * n + c);
                }
            }
            let p = a.get(col, col);
            for c in 0..n {
                a.data[col * n + c] /= p;
                inv.data[col * n + c] /= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col);
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let (ac, ic) = (a.get(col, c), inv.get(col, c));
                    a.data[r * n + c] -= f * ac;
                    inv.data[r * n + c] -= f * ic;
                }
            }
        }
        Some(inv)
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            for c in 0..n {
                a.data.swap(pivot * n + c, rank * n + c);
            }
            let p = a.get(rank, col);
            for r in 0..n {
                if r == rank {
                    continue;
                }
                let f = a.get(r, col) / p;
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = a.get(rank, c);
                    a.data[r * n + c] -= f * v;
                }
            }
            rank += 1;
        }
        rank
    }

    /// `M · v` for a coordinate column.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }
}

fn apply_base(m: &RatMatrix, v: &[BaseNumber]) -> Vec<BaseNumber> {
    (0..m.size())
        .map(|r| {
            let mut acc = BaseNumber::zero();
            for (c, x) in v.iter().enumerate() {
                let g = m.get(r, c);
                if !g.is_zero() && !x.is_zero() {
                    acc += &x.scale(&g);
                }
            }
            acc
        })
        .collect()
}

fn bilinear_with(m: &RatMatrix, u: &[BaseNumber], v: &[BaseNumber]) -> BaseNumber {
    let mv = apply_base(m, v);
    let mut acc = BaseNumber::zero();
    for (a, b) in u.iter().zip(mv.iter()) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * b);
        }
    }
    acc
}

macro_rules! coordinate_type {
    ($name:ident, $letter:literal) => {
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name {
            coords: Vec<BaseNumber>,
        }

        impl $name {
            pub fn new(coords: Vec<BaseNumber>) -> Self {
                Self { coords }
            }

            pub fn from_rationals(coords: &[Rational]) -> Self {
                Self {
                    coords: coords
                        .iter()
                        .map(|r| BaseNumber::from_rational(*r))
                        .collect(),
                }
            }

            pub fn zero(dim: usize) -> Self {
                Self {
                    coords: vec![BaseNumber::zero(); dim],
                }
            }

            /// The `j`-th basis element, zero-based.
            pub fn basis(dim: usize, j: usize) -> Self {
                let mut v = Self::zero(dim);
                v.coords[j] = BaseNumber::one();
                v
            }

            pub fn dim(&self) -> usize {
                self.coords.len()
            }

            pub fn coords(&self) -> &[BaseNumber] {
                &self.coords
            }

            pub fn coord(&self, j: usize) -> &BaseNumber {
                &self.coords[j]
            }

            pub fn is_zero(&self) -> bool {
                self.coords.iter().all(BaseNumber::is_zero)
            }

            pub fn scale(&self, s: &BaseNumber) -> Self {
                Self {
                    coords: self.coords.iter().map(|c| c * s).collect(),
                }
            }

            pub fn scale_rational(&self, r: Rational) -> Self {
                Self {
                    coords: self.coords.iter().map(|c| c.scale(&r)).collect(),
                }
            }
        }

        impl<'a> Add<&'a $name> for &'a $name {
            type Output = $name;
            fn add(self, o: &$name) -> $name {
                $name {
                    coords: self
                        .coords
                        .iter()
                        .zip(&o.coords)
                        .map(|(a, b)| a + b)
                        .collect(),
                }
            }
        }

        impl<'a> Sub<&'a $name> for &'a $name {
            type Output = $name;
            fn sub(self, o: &$name) -> $name {
                $name {
                    coords: self
                        .coords
                        .iter()
                        .zip(&o.coords)
                        .map(|(a, b)| a - b)
                        .collect(),
                }
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name {
                    coords: self.coords.iter().map(|a| -a).collect(),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut first = true;
                for (j, c) in self.coords.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let name = format!("{}{}", $letter, j + 1);
                    let s = crate::scalars::Scalar::from_base(c.clone());
                    let (neg, text) = s.coefficient_text();
                    let body = match text {
                        None => name,
                        Some(t) => format!("{t}*{name}"),
                    };
                    match (first, neg) {
                        (true, false) => write!(f, "{body}")?,
                        (true, true) => write!(f, "-{body}")?,
                        (false, false) => write!(f, " + {body}")?,
                        (false, true) => write!(f, " - {body}")?,
                    }
                    first = false;
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{self}")
            }
        }
    };
}

coordinate_type!(Covector, "x");
coordinate_type!(Vector, "y");

impl Covector {
    /// The natural pairing `⟨v, u⟩`.
    pub fn pair(&self, v: &Vector) -> BaseNumber {
        let mut acc = BaseNumber::zero();
        for (a, b) in self.coords.iter().zip(v.coords()) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }
}

/// `V` with a non-degenerate symmetric bilinear form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticSpace {
    dim: usize,
    gram: RatMatrix,
    gram_inv: RatMatrix,
}

impl QuadraticSpace {
    /// Orthonormal coordinates: `B(x_j, x_k) = δ_jk`.
    pub fn euclidean(dim: usize) -> Result<Self, GeometryError> {
        if dim == 0 || dim > MAX_DIM {
            return Err(GeometryError::BadDimension(dim));
        }
        Ok(Self {
            dim,
            gram: RatMatrix::identity(dim),
            gram_inv: RatMatrix::identity(dim),
        })
    }

    pub fn with_gram(gram: RatMatrix) -> Result<Self, GeometryError> {
        let dim = gram.size();
        if dim == 0 || dim > MAX_DIM {
            return Err(GeometryError::BadDimension(dim));
        }
        if gram.transpose() != gram {
            return Err(GeometryError::NotSymmetric);
        }
        let gram_inv = gram.inverse().ok_or(GeometryError::Singular)?;
        Ok(Self {
            dim,
            gram,
            gram_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn gram_inv(&self) -> &RatMatrix {
        &self.gram_inv
    }

    pub fn is_orthonormal(&self) -> bool {
        self.gram.is_identity()
    }

    /// `x_j` as a covector, zero-based.
    pub fn x(&self, j: usize) -> Covector {
        Covector::basis(self.dim, j)
    }

    /// `y_j` as a vector, zero-based.
    pub fn y(&self, j: usize) -> Vector {
        Vector::basis(self.dim, j)
    }

    fn check(&self, len: usize) -> Result<(), GeometryError> {
        if len != self.dim {
            Err(GeometryError::LengthMismatch {
                expected: self.dim,
                got: len,
            })
        } else {
            Ok(())
        }
    }

    /// `B(u, v)` on `V*`.
    pub fn form(&self, u: &Covector, v: &Covector) -> BaseNumber {
        bilinear_with(&self.gram, u.coords(), v.coords())
    }

    /// `B(v, w)` on `V`.
    pub fn form_vectors(&self, v: &Vector, w: &Vector) -> BaseNumber {
        bilinear_with(&self.gram_inv, v.coords(), w.coords())
    }

    pub fn try_form(&self, u: &Covector, v: &Covector) -> Result<BaseNumber, GeometryError> {
        self.check(u.dim())?;
        self.check(v.dim())?;
        Ok(self.form(u, v))
    }

    /// `β: V* → V`, characterized by `⟨β(u), v⟩ = B(u, v)`.
    pub fn beta(&self, u: &Covector) -> Vector {
        Vector::new(apply_base(&self.gram, u.coords()))
    }

    /// `β: V → V*`, the inverse of [`QuadraticSpace::beta`].
    pub fn beta_inv(&self, v: &Vector) -> Covector {
        Covector::new(apply_base(&self.gram_inv, v.coords()))
    }

    /// The Witt basis `z_j^± = (x_{2j−1} ± i·x_{2j})/2` with `z_0 = x_d` for
    /// odd `d`. `sector` is the sign distinguishing the two ungraded spinor
    /// modules in odd dimension and is carried along for the oracle.
    pub fn witt_basis(&self, sector: i8) -> Result<WittBasis, GeometryError> {
        if !self.is_orthonormal() {
            return Err(GeometryError::NotOrthonormal);
        }
        let half = BaseNumber::from_rational(Rational::new(1, 2));
        let ihalf = &BaseNumber::i() * &half;
        let rank = self.dim / 2;
        let mut plus = Vec::with_capacity(rank);
        let mut minus = Vec::with_capacity(rank);
        for j in 0..rank {
            let a = self.x(2 * j).scale(&half);
            let b = self.x(2 * j + 1).scale(&ihalf);
            plus.push(&a + &b);
            minus.push(&a - &b);
        }
        let zero = (self.dim % 2 == 1).then(|| self.x(self.dim - 1));
        Ok(WittBasis {
            plus,
            minus,
            zero,
            sector: if sector < 0 { -1 } else { 1 },
        })
    }
}

/// Maximal isotropic decomposition of `V*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittBasis {
    pub plus: Vec<Covector>,
    pub minus: Vec<Covector>,
    pub zero: Option<Covector>,
    pub sector: i8,
}

impl WittBasis {
    pub fn rank(&self) -> usize {
        self.plus.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    fn r(n: i64) -> BaseNumber {
        BaseNumber::from_int(n)
    }

    #[test]
    fn beta_on_orthonormal_basis() {
        let sp = QuadraticSpace::euclidean(3).unwrap();
        assert_eq!(sp.beta(&sp.x(0)), sp.y(0));
        let d = &sp.x(0) - &sp.x(1);
        assert_eq!(sp.beta(&d), &sp.y(0) - &sp.y(1));
        assert_eq!(sp.form(&d, &d), r(2));
        assert_eq!(sp.form(&sp.x(0), &sp.x(0)), r(1));
    }

    #[test]
    fn beta_is_involution_for_general_gram() {
        let g = RatMatrix::from_rows(&[
            vec![int(2), int(1), int(0)],
            vec![int(1), int(3), rat(1, 2)],
            vec![int(0), rat(1, 2), int(1)],
        ])
        .unwrap();
        let sp = QuadraticSpace::with_gram(g).unwrap();
        let u = Covector::from_rationals(&[int(1), rat(-2, 3), int(5)]);
        let v = Covector::from_rationals(&[int(0), int(1), int(-1)]);
        assert_eq!(sp.beta_inv(&sp.beta(&u)), u);
        assert_eq!(sp.beta(&u).coords().len(), 3);
        // ⟨β(u), v⟩ = B(u, v)
        assert_eq!(v.pair(&sp.beta(&u)), sp.form(&u, &v));
        // B on V* is induced from B on V through β.
        assert_eq!(sp.form_vectors(&sp.beta(&u), &sp.beta(&v)), sp.form(&u, &v));
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(
                    sp.x(k).pair(&sp.beta(&sp.x(j))),
                    sp.form(&sp.x(j), &sp.x(k))
                );
            }
        }
    }

    #[test]
    fn rejects_bad_gram() {
        let g = RatMatrix::from_rows(&[vec![int(1), int(2)], vec![int(0), int(1)]]).unwrap();
        assert_eq!(
            QuadraticSpace::with_gram(g),
            Err(GeometryError::NotSymmetric)
        );
        let g = RatMatrix::from_rows(&[vec![int(1), int(1)], vec![int(1), int(1)]]).unwrap();
        assert_eq!(QuadraticSpace::with_gram(g), Err(GeometryError::Singular));
        assert_eq!(
            QuadraticSpace::euclidean(0),
            Err(GeometryError::BadDimension(0))
        );
    }

    #[test]
    fn witt_invariants() {
        let half = BaseNumber::from_rational(rat(1, 2));
        for d in 2..=MAX_DIM {
            let sp = QuadraticSpace::euclidean(d).unwrap();
            let w = sp.witt_basis(1).unwrap();
            assert_eq!(w.rank(), d / 2);
            for j in 0..w.rank() {
                for k in 0..w.rank() {
                    let expect = if j == k {
                        half.clone()
                    } else {
                        BaseNumber::zero()
                    };
                    assert_eq!(sp.form(&w.plus[j], &w.minus[k]), expect);
                    assert!(sp.form(&w.plus[j], &w.plus[k]).is_zero());
                    assert!(sp.form(&w.minus[j], &w.minus[k]).is_zero());
                }
            }
            match &w.zero {
                Some(z) => {
                    assert_eq!(d % 2, 1);
                    assert_eq!(sp.form(z, z), r(1));
                }
                None => assert_eq!(d % 2, 0),
            }
        }
    }

    #[test]
    fn matrix_inverse_and_rank() {
        let m = RatMatrix::from_rows(&[vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap();
        assert_eq!(m.inverse().unwrap(), m);
        assert_eq!(m.mul(&m), RatMatrix::identity(2));
        let s = RatMatrix::from_rows(&[vec![int(1), int(2)], vec![int(2), int(4)]]).unwrap();
        assert_eq!(s.rank(), 1);
        assert!(s.inverse().is_none());
    }
}
