//! Factorisation over a simple number field by the norm method, and
//! primitive elements for adjoining a root of an irreducible factor.

use num_traits::One;

use super::field::{Field, NumberField, Rationals};
use super::linalg::solve_columns;
use super::upoly;
use super::zfactor::factor_q;
use crate::polyring::Q;

/// A polynomial over a number field, coefficients low-to-high.
pub type NfPoly = Vec<Vec<Q>>;

fn shifts() -> impl Iterator<Item = i64> {
    (0..).map(|k: i64| if k % 2 == 1 { (k + 1) / 2 } else { -k / 2 })
}

/// `Norm_{K/ℚ}` of a polynomial in `K[t]`, recovered by interpolating the
/// norms of its values at integer points.
pub fn norm_poly(k: &NumberField, g: &[Vec<Q>]) -> Vec<Q> {
    let deg = (g.len() - 1) * k.degree();
    let xs: Vec<Q> = (0..=deg as i64)
        .map(|i| Q::from_integer(i.into()))
        .collect();
    let ys: Vec<Q> = xs
        .iter()
        .map(|x| k.norm(&upoly::eval(k, g, &k.from_q(x))))
        .collect();
    upoly::trim(&Rationals, upoly::interpolate(&xs, &ys))
}

fn sort_factors(k: &NumberField, fs: &mut [NfPoly]) {
    let key = |f: &NfPoly| {
        let parts: Vec<String> = f.iter().map(|c| k.format_elem(c, "a")).collect();
        (f.len(), parts.join(","))
    };
    fs.sort_by_key(key);
}

/// Distinct monic irreducible factors of `g` over `k`.
pub fn factor_over(k: &NumberField, g: &[Vec<Q>]) -> Vec<NfPoly> {
    let g = upoly::trim(k, g.to_vec());
    assert!(!g.is_empty(), "cannot factor the zero polynomial");
    if g.len() == 1 {
        return Vec::new();
    }
    if k.is_rational() {
        let q: Vec<Q> = g.iter().map(|c| c[0].clone()).collect();
        return factor_q(&q)
            .into_iter()
            .map(|f| f.into_iter().map(|c| vec![c]).collect())
            .collect();
    }
    let g = upoly::squarefree_part(k, &g);
    if g.len() == 2 {
        return vec![g];
    }
    let alpha = k.generator();
    for s in shifts() {
        let sa = k.mul(&k.from_int(s), &alpha);
        let gs = upoly::shift(k, &g, &k.neg(&sa));
        let n = norm_poly(k, &gs);
        if !upoly::is_squarefree(&Rationals, &n) {
            continue;
        }
        let rational_factors = factor_q(&n);
        if rational_factors.len() == 1 {
            return vec![g];
        }
        let mut out: Vec<NfPoly> = rational_factors
            .iter()
            .map(|ni| {
                let lifted: NfPoly = ni.iter().map(|c| k.from_q(c)).collect();
                let h = upoly::gcd(k, &gs, &lifted);
                upoly::monic(k, &upoly::shift(k, &h, &sa))
            })
            .filter(|h| h.len() > 1)
            .collect();
        sort_factors(k, &mut out);
        return out;
    }
    unreachable!("some shift gives a squarefree norm")
}

/// `k(u)` for a root `u` of an irreducible `phi ∈ k[t]`, written as a simple
/// extension `ℚ(b)` together with the images of the old generator and of `u`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub field: NumberField,
    /// Image of the generator of `k`.
    pub old_generator: Vec<Q>,
    /// Image of the adjoined root.
    pub root: Vec<Q>,
}

impl Extension {
    /// Maps an element of the base field into the extension.
    pub fn embed(&self, base: &NumberField, e: &[Q]) -> Vec<Q> {
        let l = &self.field;
        if base.is_rational() {
            return l.from_q(&e[0]);
        }
        let mut acc = l.zero();
        let mut pw = l.one();
        for c in e {
            acc = l.add(&acc, &l.mul(&l.from_q(c), &pw));
            pw = l.mul(&pw, &self.old_generator);
        }
        acc
    }
}

/// Adjoins a root of the monic irreducible `phi` (degree ≥ 2) to `k`.
pub fn adjoin_root(k: &NumberField, phi: &[Vec<Q>]) -> Extension {
    let phi = upoly::monic(k, phi);
    let j = phi.len() - 1;
    assert!(j >= 2, "adjoining a root of a linear factor");
    if k.is_rational() {
        let field = NumberField::new(phi.iter().map(|c| c[0].clone()).collect());
        let root = field.generator();
        let old_generator = field.from_q(&k.generator()[0]);
        return Extension {
            field,
            old_generator,
            root,
        };
    }
    let d = k.degree();
    let n = d * j;
    // elements of k[u]/(phi) as j coefficients in k
    let lmul = |a: &NfPoly, b: &NfPoly| -> NfPoly {
        let r = upoly::rem(k, &upoly::mul(k, a, b), &phi);
        let mut r = r;
        r.resize(j, k.zero());
        r
    };
    let flat = |e: &NfPoly| -> Vec<Q> { e.iter().flat_map(|c| c.iter().cloned()).collect() };
    let alpha = k.generator();
    let mut alpha_l: NfPoly = vec![k.zero(); j];
    alpha_l[0] = alpha.clone();
    for s in shifts() {
        let mut beta: NfPoly = vec![k.zero(); j];
        beta[0] = k.mul(&k.from_int(s), &alpha);
        beta[1] = k.one();
        let mut powers: Vec<NfPoly> = Vec::with_capacity(n + 1);
        let mut one: NfPoly = vec![k.zero(); j];
        one[0] = k.one();
        powers.push(one);
        for i in 1..=n {
            powers.push(lmul(&powers[i - 1], &beta));
        }
        let cols: Vec<Vec<Q>> = powers[..n].iter().map(&flat).collect();
        let Some(sol) = solve_columns(&cols, &[flat(&powers[n]), flat(&alpha_l)]) else {
            continue;
        };
        let mut minpoly: Vec<Q> = sol[0].iter().map(|c| -c.clone()).collect();
        minpoly.push(Q::one());
        let field = NumberField::new(minpoly);
        let old_generator = sol[1].clone();
        let shift = field.mul(&field.from_int(s), &old_generator);
        let root = field.sub(&field.generator(), &shift);
        return Extension {
            field,
            old_generator,
            root,
        };
    }
    unreachable!("some shift gives a primitive element")
}
