//! Greatest common divisor of two bivariate polynomials, used to spot shared
//! components before running a standard basis computation.

use num_traits::Zero;

use crate::polyring::{ExpVec, PolyQ, Q};
use crate::resolution::field::Rationals;
use crate::resolution::upoly;

/// Coefficients in `y`, each a dense polynomial in `x`.
type YPoly = Vec<Vec<Q>>;

fn to_y(f: &PolyQ) -> YPoly {
    let mut out: YPoly = vec![];
    for (e, c) in f.terms() {
        let (i, j) = (e.get(0) as usize, e.get(1) as usize);
        if out.len() <= j {
            out.resize(j + 1, vec![]);
        }
        if out[j].len() <= i {
            out[j].resize(i + 1, Q::zero());
        }
        out[j][i] = c.clone();
    }
    out
}

fn from_y(p: &YPoly) -> PolyQ {
    PolyQ::from_terms(
        2,
        p.iter().enumerate().flat_map(|(j, cx)| {
            cx.iter()
                .enumerate()
                .map(move |(i, c)| (ExpVec::xy(i as u32, j as u32), c.clone()))
        }),
    )
}

fn content(p: &YPoly) -> Vec<Q> {
    p.iter().fold(vec![], |g, c| upoly::gcd(&Rationals, &g, c))
}

fn divide_by(p: &YPoly, c: &[Q]) -> YPoly {
    p.iter()
        .map(|a| upoly::divrem(&Rationals, a, c).0)
        .collect()
}

fn primitive(p: &YPoly) -> YPoly {
    divide_by(p, &content(p))
}

/// Pseudo-remainder of `a` by `b` in `Q[x][y]`.
fn prem(a: &YPoly, b: &YPoly) -> YPoly {
    let k = Rationals;
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.clone();
    while r.len() >= b.len() {
        let lr = r.pop().expect("nonempty");
        let shift = r.len() + 1 - b.len();
        for c in r.iter_mut() {
            *c = upoly::mul(&k, c, lb);
        }
        for (j, bj) in b[..b.len() - 1].iter().enumerate() {
            r[shift + j] = upoly::sub(&k, &r[shift + j], &upoly::mul(&k, &lr, bj));
        }
        while r.last().is_some_and(|c| c.is_empty()) {
            r.pop();
        }
    }
    r
}

/// `gcd(f, g)` in `Q[x, y]` up to a rational factor; zero only when both are.
pub(crate) fn bivariate_gcd(f: &PolyQ, g: &PolyQ) -> PolyQ {
    let (a, b) = (to_y(f), to_y(g));
    if a.is_empty() {
        return g.clone();
    }
    if b.is_empty() {
        return f.clone();
    }
    let c = upoly::gcd(&Rationals, &content(&a), &content(&b));
    let (mut a, mut b) = (primitive(&a), primitive(&b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while b.len() > 1 {
        let r = prem(&a, &b);
        a = b;
        b = if r.is_empty() { vec![] } else { primitive(&r) };
        if b.is_empty() {
            break;
        }
    }
    let pp = if b.is_empty() {
        a
    } else {
        vec![vec![Q::from_integer(1.into())]]
    };
    from_y(&pp.iter().map(|cy| upoly::mul(&Rationals, cy, &c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn p(s: &str) -> PolyQ {
        parse(s, 2).unwrap()
    }

    fn same_up_to_scalar(a: &PolyQ, b: &PolyQ) -> bool {
        let (ea, ca) = a.terms().next().unwrap();
        let cb = b.coeff(ea);
        !cb.is_zero() && a.scale(&(cb / ca)) == *b
    }

    #[test]
    fn shared_factors() {
        let cases = [
            ("(x - y^2)*(x + y)", "(x - y^2)*(x^3 + 2*y)", "x - y^2"),
            ("x^2*(y + 1)", "x*y^3", "x"),
            ("x^2 - y^3", "y", "1"),
            ("(1 + x)*(y^2 - x^3)", "(1 + x)*y", "1 + x"),
            (
                "(x*y + 1)^2*(y - x)",
                "(x*y + 1)*(y - x)^2",
                "(x*y + 1)*(y - x)",
            ),
        ];
        for (f, g, want) in cases {
            let got = bivariate_gcd(&p(f), &p(g));
            assert!(same_up_to_scalar(&got, &p(want)), "{f}, {g}: {got}");
        }
    }
}
