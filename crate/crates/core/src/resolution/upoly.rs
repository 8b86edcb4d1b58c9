//! Dense univariate polynomials over a [`Field`], stored low-to-high with no
//! trailing zeros (the zero polynomial is empty).

use num_traits::{One, Signed, Zero};

use super::field::{Field, Rationals};
use crate::polyring::Q;

pub fn trim<F: Field>(k: &F, mut p: Vec<F::Elem>) -> Vec<F::Elem> {
    while p.last().is_some_and(|c| k.is_zero(c)) {
        p.pop();
    }
    p
}

pub fn degree<E>(p: &[E]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn add<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let v = (0..n)
        .map(|i| k.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(k, v)
}

pub fn sub<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let v = (0..n)
        .map(|i| k.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(k, v)
}

pub fn mul<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] = k.add(&v[i + j], &k.mul(x, y));
        }
    }
    trim(k, v)
}

pub fn scale<F: Field>(k: &F, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
    trim(k, a.iter().map(|x| k.mul(x, c)).collect())
}

pub fn monic<F: Field>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        Some(lc) => scale(k, a, &k.inv(lc)),
        None => Vec::new(),
    }
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv_lc = k.inv(b.last().expect("nonzero"));
    let mut q = vec![k.zero(); r.len() - b.len() + 1];
    for top in (b.len() - 1..r.len()).rev() {
        let c = k.mul(&r[top], &inv_lc);
        if k.is_zero(&c) {
            continue;
        }
        let shift = top + 1 - b.len();
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = k.sub(&r[shift + j], &k.mul(&c, bj));
        }
        q[shift] = c;
    }
    r.truncate(b.len() - 1);
    (trim(k, q), trim(k, r))
}

pub fn rem<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    divrem(k, a, b).1
}

/// Monic greatest common divisor (empty when both inputs are zero).
pub fn gcd<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = rem(k, &x, &y);
        x = y;
        y = r;
    }
    monic(k, &x)
}

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b)` (not normalised).
pub fn ext_gcd<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> [Vec<F::Elem>; 3] {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![k.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![k.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(k, &r0, &r1);
        let s2 = sub(k, &s0, &mul(k, &q, &s1));
        let t2 = sub(k, &t0, &mul(k, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    [r0, s0, t0]
}

pub fn derivative<F: Field>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let v = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| k.mul(c, &k.from_int(i as i64)))
        .collect();
    trim(k, v)
}

pub fn eval<F: Field>(k: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    a.iter()
        .rev()
        .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
}

/// `a(t + c)`.
pub fn shift<F: Field>(k: &F, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
    let lin = trim(k, vec![c.clone(), k.one()]);
    let mut acc: Vec<F::Elem> = Vec::new();
    for coef in a.iter().rev() {
        acc = add(k, &mul(k, &acc, &lin), std::slice::from_ref(coef));
    }
    acc
}

pub fn is_squarefree<F: Field>(k: &F, a: &[F::Elem]) -> bool {
    gcd(k, a, &derivative(k, a)).len() <= 1
}

/// Squarefree part `a / gcd(a, a')`, monic.
pub fn squarefree_part<F: Field>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let g = gcd(k, a, &derivative(k, a));
    monic(k, &divrem(k, a, &g).0)
}

/// Newton interpolation through `(xs[i], ys[i])` over ℚ.
pub fn interpolate(xs: &[Q], ys: &[Q]) -> Vec<Q> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let k = Rationals;
    let mut out: Vec<Q> = Vec::new();
    for i in (0..n).rev() {
        let lin = vec![-xs[i].clone(), Q::one()];
        out = add(&k, &mul(&k, &out, &lin), std::slice::from_ref(&coef[i]));
    }
    out
}

/// Human-readable form of a rational polynomial in the variable `var`.
pub fn format(p: &[Q], var: &str) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if i == 0 {
            s.push_str(&a.to_string());
        } else if a.is_one() {
            s.push_str(&mono);
        } else {
            s.push_str(&format!("{a}*{mono}"));
        }
    }
    s
}
