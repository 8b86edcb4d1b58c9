use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{ExpVec, MAX_VARS};
use super::order::MonomialOrder;
use super::Q;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;

/// Sparse polynomial with exact rational coefficients.
///
/// No stored coefficient is zero; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyQ {
    nvars: usize,
    terms: BTreeMap<ExpVec, Q>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl PolyQ {
    pub fn zero(nvars: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&nvars), "nvars must be in 1..=8");
        PolyQ {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::monomial(nvars, ExpVec::ONE, c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Self::monomial(nvars, ExpVec::var(i), Q::one())
    }

    pub fn monomial(nvars: usize, e: ExpVec, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        debug_assert!(e.0[nvars..].iter().all(|&v| v == 0));
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExpVec, Q)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExpVec) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&ExpVec::ONE)
    }

    /// In-place `self += c * x^e`.
    pub fn add_term(&mut self, e: ExpVec, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lowest total degree of a term; infinite for the zero polynomial.
    pub fn ord(&self) -> ExtNat {
        self.terms
            .keys()
            .map(|e| e.degree() as u64)
            .min()
            .map_or(ExtNat::Infinite, ExtNat::Finite)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExpVec::degree).max()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.get(var)).max()
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> PolyQ {
        PolyQ {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Lowest-degree homogeneous part (the tangent cone form).
    pub fn initial_form(&self) -> PolyQ {
        match self.ord() {
            ExtNat::Finite(d) => self.homogeneous_part(d as u32),
            ExtNat::Infinite => self.clone(),
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&ExpVec, &Q)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_exp(&self, order: &MonomialOrder) -> Option<ExpVec> {
        self.leading_term(order).map(|(e, _)| *e)
    }

    /// Terms sorted in descending order.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(ExpVec, Q)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn scale(&self, c: &Q) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero(self.nvars);
        }
        PolyQ {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// `c * x^e * self`.
    pub fn mul_term(&self, e: &ExpVec, c: &Q) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero(self.nvars);
        }
        PolyQ {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.mul(e), a * c)).collect(),
        }
    }

    /// Scales so that the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> PolyQ {
        match self.leading_term(order) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Exact ring operation with a variable-count check.
    pub fn arith(&self, other: &PolyQ, op: ArithOp) -> Result<PolyQ> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(match op {
            ArithOp::Add => self + other,
            ArithOp::Sub => self - other,
            ArithOp::Mul => self * other,
        })
    }

    pub fn pow(&self, k: u32) -> PolyQ {
        let mut acc = PolyQ::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> PolyQ {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = PolyQ::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(var);
            if k == 0 {
                continue;
            }
            let mut ne = *e;
            ne.0[var] -= 1;
            out.terms.insert(ne, c * Q::from_integer(k.into()));
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`. All images share one variable count.
    pub fn compose(&self, images: &[PolyQ]) -> PolyQ {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(self.nvars, PolyQ::nvars);
        // cache powers per variable
        let mut powers: Vec<Vec<PolyQ>> = images
            .iter()
            .map(|p| vec![PolyQ::one(target), p.clone()])
            .collect();
        let mut out = PolyQ::zero(target);
        for (e, c) in &self.terms {
            let mut t = PolyQ::constant(target, c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let k = e.get(i) as usize;
                while pw.len() <= k {
                    let next = &pw[pw.len() - 1] * &images[i];
                    pw.push(next);
                }
                if k > 0 {
                    t = &t * &pw[k];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Linear change of coordinates in two variables:
    /// `x ↦ m[0][0] x + m[0][1] y`, `y ↦ m[1][0] x + m[1][1] y`.
    pub fn substitute_linear(&self, m: &[[Q; 2]; 2]) -> Result<PolyQ> {
        if self.nvars != 2 {
            return Err(Error::Invalid(
                "linear substitution needs 2 variables".into(),
            ));
        }
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let image = |row: &[Q; 2]| {
            PolyQ::from_terms(
                2,
                [
                    (ExpVec::xy(1, 0), row[0].clone()),
                    (ExpVec::xy(0, 1), row[1].clone()),
                ],
            )
        };
        Ok(self.compose(&[image(&m[0]), image(&m[1])]))
    }

    /// Translation `x_i ↦ x_i + shift[i]`.
    pub fn translate(&self, shift: &[Q]) -> PolyQ {
        let images: Vec<PolyQ> = (0..self.nvars)
            .map(|i| {
                let mut p = PolyQ::var(self.nvars, i);
                p.add_term(ExpVec::ONE, shift.get(i).cloned().unwrap_or_else(Q::zero));
                p
            })
            .collect();
        self.compose(&images)
    }

    /// Value at a rational point.
    pub fn eval(&self, point: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, p) in point.iter().enumerate().take(self.nvars) {
                let k = e.get(i);
                if k > 0 {
                    t *= num_traits::pow(p.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn variable_name(nvars: usize, i: usize) -> String {
        if nvars <= 2 {
            ["x", "y"][i].to_string()
        } else {
            format!("x{}", i + 1)
        }
    }
}

fn binop(a: &PolyQ, b: &PolyQ, sign: bool) -> PolyQ {
    assert_eq!(a.nvars, b.nvars, "variable count mismatch");
    let mut out = a.clone();
    for (e, c) in &b.terms {
        out.add_term(*e, if sign { c.clone() } else { -c.clone() });
    }
    out
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        binop(self, rhs, true)
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        binop(self, rhs, false)
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = PolyQ::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: PolyQ) -> PolyQ {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: &PolyQ) -> PolyQ {
                (&self).$m(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, nvars: usize, e: &ExpVec) -> fmt::Result {
    let mut first = true;
    for i in 0..nvars {
        let k = e.get(i);
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&PolyQ::variable_name(nvars, i))?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

/// Canonical form: descending degrevlex, reduced fractions, `p/q*` coefficients.
impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self
            .sorted_terms(&MonomialOrder::degrevlex())
            .iter()
            .enumerate()
        {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if *e == ExpVec::ONE {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, self.nvars, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}
