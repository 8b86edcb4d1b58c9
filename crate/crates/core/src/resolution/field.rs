//! Exact fields used by the resolution: the rationals and simple algebraic
//! extensions `ℚ[a]/(m(a))`.

use std::fmt;

use num_traits::{One, Zero};

use super::upoly;
use crate::polyring::Q;

/// Arithmetic of a field whose elements carry no context of their own.
#[allow(clippy::wrong_self_convention)]
pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_q(&self, q: &Q) -> Self::Elem;

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_q(&Q::from_integer(n.into()))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Q;

    fn zero(&self) -> Q {
        Q::zero()
    }
    fn one(&self) -> Q {
        Q::one()
    }
    fn is_zero(&self, a: &Q) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Q, b: &Q) -> Q {
        a + b
    }
    fn sub(&self, a: &Q, b: &Q) -> Q {
        a - b
    }
    fn mul(&self, a: &Q, b: &Q) -> Q {
        a * b
    }
    fn neg(&self, a: &Q) -> Q {
        -a
    }
    fn inv(&self, a: &Q) -> Q {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_q(&self, q: &Q) -> Q {
        q.clone()
    }
}

/// `ℚ[a]/(m(a))` for a monic irreducible `m`. Elements are coefficient
/// vectors of length `deg m` in the power basis `1, a, …, a^(d-1)`.
///
/// The degree-one field `m(a) = a` is ℚ itself, with `a = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct NumberField {
    minpoly: Vec<Q>,
}

impl NumberField {
    pub fn rationals() -> Self {
        NumberField {
            minpoly: vec![Q::zero(), Q::one()],
        }
    }

    /// Field defined by a monic polynomial (low-to-high coefficients).
    /// Irreducibility is the caller's responsibility.
    pub fn new(minpoly: Vec<Q>) -> Self {
        let minpoly = upoly::monic(&Rationals, &minpoly);
        assert!(
            minpoly.len() >= 2,
            "minimal polynomial must have degree >= 1"
        );
        NumberField { minpoly }
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn minpoly(&self) -> &[Q] {
        &self.minpoly
    }

    /// The generator `a`.
    pub fn generator(&self) -> Vec<Q> {
        let mut g = vec![Q::zero(); self.degree()];
        if self.degree() == 1 {
            g[0] = -self.minpoly[0].clone();
        } else {
            g[1] = Q::one();
        }
        g
    }

    fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        let d = self.degree();
        for top in (d..v.len()).rev() {
            let c = std::mem::replace(&mut v[top], Q::zero());
            if c.is_zero() {
                continue;
            }
            for (k, mk) in self.minpoly[..d].iter().enumerate() {
                v[top - d + k] -= &c * mk;
            }
        }
        v.resize(d, Q::zero());
        v
    }

    /// Embeds a polynomial in the generator.
    pub fn from_poly(&self, p: &[Q]) -> Vec<Q> {
        self.reduce(p.to_vec())
    }

    /// Field norm down to ℚ, the determinant of multiplication by `a`.
    pub fn norm(&self, a: &[Q]) -> Q {
        let d = self.degree();
        let mut basis = vec![Q::zero(); d];
        let mut rows: Vec<Vec<Q>> = Vec::with_capacity(d);
        for j in 0..d {
            basis.iter_mut().for_each(|b| *b = Q::zero());
            basis[j] = Q::one();
            rows.push(self.mul(&a.to_vec(), &basis));
        }
        super::linalg::determinant(rows)
    }

    pub fn format_elem(&self, e: &[Q], symbol: &str) -> String {
        if self.is_rational() {
            return e[0].to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in e.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => symbol.to_string(),
                _ => format!("{symbol}^{k}"),
            };
            parts.push(match (k, c.is_one()) {
                (0, _) => format!("{c}"),
                (_, true) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            format!("({})", parts.join(" + ").replace("+ -", "- "))
        }
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", upoly::format(&self.minpoly, "a"))
    }
}

impl Field for NumberField {
    type Elem = Vec<Q>;

    fn zero(&self) -> Vec<Q> {
        vec![Q::zero(); self.degree()]
    }
    fn one(&self) -> Vec<Q> {
        let mut v = self.zero();
        v[0] = Q::one();
        v
    }
    fn is_zero(&self, a: &Vec<Q>) -> bool {
        a.iter().all(Zero::is_zero)
    }
    fn add(&self, a: &Vec<Q>, b: &Vec<Q>) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn sub(&self, a: &Vec<Q>, b: &Vec<Q>) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
    fn mul(&self, a: &Vec<Q>, b: &Vec<Q>) -> Vec<Q> {
        let d = self.degree();
        let mut v = vec![Q::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        self.reduce(v)
    }
    fn neg(&self, a: &Vec<Q>) -> Vec<Q> {
        a.iter().map(|x| -x).collect()
    }
    fn inv(&self, a: &Vec<Q>) -> Vec<Q> {
        assert!(!self.is_zero(a), "inverse of zero");
        // s·a + t·m = 1  =>  a^{-1} = s
        let [g, s, _] = upoly::ext_gcd(
            &Rationals,
            &upoly::trim(&Rationals, a.clone()),
            &self.minpoly,
        );
        assert_eq!(
            g.len(),
            1,
            "element not invertible: minimal polynomial is reducible"
        );
        let s = upoly::scale(&Rationals, &s, &g[0].recip());
        self.reduce(s)
    }
    fn from_q(&self, q: &Q) -> Vec<Q> {
        let mut v = self.zero();
        v[0] = q.clone();
        v
    }
}
