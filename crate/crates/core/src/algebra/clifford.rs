//! Products of Clifford blades `e_A · e_B` for a general Gram matrix.

use num_traits::{One, Zero};

use crate::geometry::RatMatrix;
use crate::scalars::Rational;

pub(crate) type Blades = Vec<(u8, Rational)>;

fn top(mask: u8) -> usize {
    7 - mask.leading_zeros() as usize
}

fn accumulate(out: &mut Blades, mask: u8, c: Rational) {
    if c.is_zero() {
        return;
    }
    match out.iter_mut().find(|(m, _)| *m == mask) {
        Some((_, v)) => *v += c,
        None => out.push((mask, c)),
    }
}

/// `e_A · e_q` as a combination of blades.
fn mul_gen(gram: &RatMatrix, a: u8, q: usize) -> Blades {
    let bit = 1u8 << q;
    if a == 0 || top(a) < q {
        return vec![(a | bit, Rational::one())];
    }
    let an = top(a);
    let prefix = a & !(1u8 << an);
    if an == q {
        return vec![(prefix, gram.get(q, q))];
    }
    // e_{A'} e_an e_q = 2B(x_an, x_q) e_{A'} − (e_{A'} e_q) e_an
    let mut out = Blades::new();
    accumulate(&mut out, prefix, gram.get(an, q) * Rational::from(2));
    for (m, c) in mul_gen(gram, prefix, q) {
        debug_assert!(m == 0 || top(m) < an);
        accumulate(&mut out, m | (1u8 << an), -c);
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// `e_A · e_B` for a general Gram matrix.
pub(crate) fn blade_product(gram: &RatMatrix, a: u8, b: u8) -> Blades {
    let mut cur: Blades = vec![(a, Rational::one())];
    for q in 0..8 {
        if b & (1 << q) == 0 {
            continue;
        }
        let mut next = Blades::new();
        for (m, c) in &cur {
            for (m2, c2) in mul_gen(gram, *m, q) {
                accumulate(&mut next, m2, c * c2);
            }
        }
        next.retain(|(_, c)| !c.is_zero());
        cur = next;
    }
    cur.sort_by_key(|(m, _)| *m);
    cur
}

/// Sign of `e_A · e_B` in an orthonormal basis, where the product is
/// `±e_{A △ B}`.
pub(crate) fn orthonormal_sign(a: u8, b: u8) -> i64 {
    let mut swaps = 0;
    for q in 0..8 {
        if b & (1 << q) != 0 {
            swaps += (a >> (q + 1)).count_ones();
        }
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}
