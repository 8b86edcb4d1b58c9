//! Factorisation of univariate rational polynomials into irreducibles:
//! Cantor–Zassenhaus modulo a small prime, multifactor Hensel lifting and
//! exhaustive recombination of the lifted factors.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Rationals;
use super::upoly;
use crate::polyring::Q;

type FpPoly = Vec<u64>;
type ZPoly = Vec<BigInt>;

fn fp_trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn fp_inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    fp_pow(a, p - 2, p)
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0) % p) % p)
            .collect(),
    )
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + x * y) % p;
        }
    }
    fp_trim(v)
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    assert!(!b.is_empty());
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), fp_trim(r));
    }
    let inv = fp_inv(*b.last().expect("nonzero"), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    for top in (b.len() - 1..r.len()).rev() {
        let c = r[top] * inv % p;
        if c == 0 {
            continue;
        }
        let s = top + 1 - b.len();
        for (j, bj) in b.iter().enumerate() {
            r[s + j] = (r[s + j] + p - c * bj % p) % p;
        }
        q[s] = c;
    }
    r.truncate(b.len() - 1);
    (fp_trim(q), fp_trim(r))
}

fn fp_monic(a: &[u64], p: u64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => {
            let inv = fp_inv(lc, p);
            a.iter().map(|c| c * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let (mut x, mut y) = (fp_trim(a.to_vec()), fp_trim(b.to_vec()));
    while !y.is_empty() {
        let r = fp_divrem(&x, &y, p).1;
        x = y;
        y = r;
    }
    fp_monic(&x, p)
}

/// `(s, t)` with `s·a + t·b = 1` for coprime `a`, `b`.
fn fp_bezout(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (FpPoly, FpPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    assert_eq!(r0.len(), 1, "factors are not coprime modulo p");
    let inv = fp_inv(r0[0], p);
    (
        s0.iter().map(|c| c * inv % p).collect(),
        t0.iter().map(|c| c * inv % p).collect(),
    )
}

fn fp_powmod(base: &[u64], exp: &BigUint, m: &[u64], p: u64) -> FpPoly {
    let mut acc: FpPoly = vec![1];
    let b = fp_divrem(base, m, p).1;
    for i in (0..exp.bits()).rev() {
        acc = fp_divrem(&fp_mul(&acc, &acc, p), m, p).1;
        if exp.bit(i) {
            acc = fp_divrem(&fp_mul(&acc, &b, p), m, p).1;
        }
    }
    acc
}

fn fp_derivative(a: &[u64], p: u64) -> FpPoly {
    fp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

/// Distinct-degree factorisation of a monic squarefree polynomial.
fn distinct_degree(f: &[u64], p: u64) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x: FpPoly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 1;
    let pb = BigUint::from(p);
    while f.len() > 2 * d {
        h = fp_powmod(&h, &pb, &f, p);
        let g = fp_gcd(&fp_sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            f = fp_divrem(&f, &g, p).0;
            h = fp_divrem(&h, &f, p).1;
            out.push((g, d));
        }
        d += 1;
    }
    if f.len() > 1 {
        let deg = f.len() - 1;
        out.push((f, deg));
    }
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus) for odd `p`.
fn equal_degree(g: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = g.len() - 1;
    if n == d {
        return vec![g.to_vec()];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: FpPoly = fp_trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &e, g, p), &[1], p);
        let h = fp_gcd(&b, g, p);
        if h.len() > 1 && h.len() < g.len() {
            let rest = fp_monic(&fp_divrem(g, &h, p).0, p);
            let mut out = equal_degree(&h, d, p, rng);
            out.extend(equal_degree(&rest, d, p, rng));
            return out;
        }
    }
}

fn factor_mod_p(f: &[u64], p: u64) -> Vec<FpPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let f = fp_monic(f, p);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(&f, p) {
        out.extend(equal_degree(&g, d, p, &mut rng));
    }
    out
}

fn mod_u64(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits")
}

fn to_fp(f: &[BigInt], p: u64) -> FpPoly {
    fp_trim(f.iter().map(|c| mod_u64(c, p)).collect())
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

fn z_mod(a: &[BigInt], m: &BigInt) -> ZPoly {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

fn lift_fp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f ≡ g·h (mod p)` with `g` monic to a factorisation modulo `m = p^k`.
fn hensel_two(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32, m: &BigInt) -> (ZPoly, ZPoly) {
    let (_, t) = fp_bezout(g, h, p);
    let lc = f.last().expect("nonzero").clone();
    let mut big_g = lift_fp(g);
    let mut big_h = lift_fp(h);
    *big_h.last_mut().expect("nonzero") = lc;
    let mut q = BigInt::from(p);
    for _ in 1..k {
        let prod = z_mul(&big_g, &big_h);
        let n = f.len().max(prod.len());
        let zero = BigInt::zero();
        let e: Vec<BigInt> = (0..n)
            .map(|i| {
                let d = f.get(i).unwrap_or(&zero) - prod.get(i).unwrap_or(&zero);
                debug_assert!(d.is_multiple_of(&q));
                d / &q
            })
            .collect();
        let e = to_fp(&e, p);
        let tau = fp_divrem(&fp_mul(&t, &e, p), g, p).1;
        let (sigma, r) = fp_divrem(&fp_sub(&e, &fp_mul(&tau, h, p), p), g, p);
        debug_assert!(r.is_empty());
        for (i, c) in tau.iter().enumerate() {
            big_g[i] += &q * c;
        }
        for (i, c) in sigma.iter().enumerate() {
            big_h[i] += &q * c;
        }
        q *= p;
    }
    let lc_h = big_h.last().expect("nonzero").clone();
    let mut hm = z_mod(&big_h, m);
    *hm.last_mut().expect("nonzero") = lc_h;
    (z_mod(&big_g, m), hm)
}

/// Lifts the monic modular factors of `f` to monic factors modulo `m = p^k`.
fn hensel_all(f: &[BigInt], factors: &[FpPoly], p: u64, k: u32, m: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let lc = f.last().expect("nonzero");
        let inv = lc.extended_gcd(m).x.mod_floor(m);
        return vec![z_mod(&f.iter().map(|c| c * &inv).collect::<Vec<_>>(), m)];
    }
    let (a, b) = factors.split_at(factors.len() / 2);
    let ga = a.iter().fold(vec![1u64], |acc, g| fp_mul(&acc, g, p));
    let lc = mod_u64(f.last().expect("nonzero"), p);
    let hb = b.iter().fold(vec![lc], |acc, g| fp_mul(&acc, g, p));
    let (big_g, big_h) = hensel_two(f, &ga, &hb, p, k, m);
    let mut out = hensel_all(&big_g, a, p, k, m);
    out.extend(hensel_all(&big_h, b, p, k, m));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    a.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(a: &[BigInt]) -> ZPoly {
    let c = content(a);
    let sign = if a.last().is_some_and(|l| l.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    a.iter().map(|x| x / &c * &sign).collect()
}

fn to_q(a: &[BigInt]) -> Vec<Q> {
    a.iter().map(|c| Q::from_integer(c.clone())).collect()
}

/// Exact quotient `a / b` over ℤ, if `b` divides `a`.
fn z_divide(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let (q, r) = upoly::divrem(&Rationals, &to_q(a), &to_q(b));
    if !r.is_empty() || q.iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.iter().map(|c| c.to_integer()).collect())
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|n| {
        (3..)
            .step_by(2)
            .take_while(|d| d * d <= *n)
            .all(|d| n % d != 0)
    })
}

/// Irreducible factors over ℤ of a primitive squarefree polynomial of degree ≥ 1.
fn zassenhaus(f: &[BigInt]) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().expect("nonzero").clone();
    // pick the prime with the fewest modular factors among a few candidates
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if mod_u64(&lc, p) == 0 {
            continue;
        }
        let fp = to_fp(f, p);
        if fp_gcd(&fp, &fp_derivative(&fp, p), p).len() != 1 {
            continue;
        }
        let facs = factor_mod_p(&fp, p);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried == 5 {
            break;
        }
    }
    let (p, modular) = best.expect("some prime keeps the polynomial squarefree");
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    // coefficient bound for lc·(any factor): |lc| · 2^n · ||f||_1
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = lc.abs() * (BigInt::one() << n) * norm1;
    let mut k = 1u32;
    let mut m = BigInt::from(p);
    while m <= &bound * 2 {
        m *= p;
        k += 1;
    }
    let lifted = hensel_all(f, &modular, p, k, &m);

    let mut remaining: Vec<ZPoly> = lifted;
    let mut cur = f.to_vec();
    let mut out = Vec::new();
    let mut s = 1;
    'sizes: while 2 * s <= remaining.len() {
        let idx: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idx, s) {
            let lc_cur = cur.last().expect("nonzero").clone();
            let prod = combo.iter().fold(vec![lc_cur], |acc, &i| {
                z_mod(&z_mul(&acc, &remaining[i]), &m)
            });
            let cand = primitive(&symmetric(&prod, &m));
            if let Some(q) = z_divide(&cur, &cand) {
                out.push(cand);
                cur = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, g)| g)
                    .collect();
                continue 'sizes;
            }
        }
        s += 1;
    }
    if cur.len() > 1 {
        out.push(primitive(&cur));
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Distinct monic irreducible factors over ℚ of a nonzero polynomial
/// (low-to-high coefficients), sorted by degree and then coefficients.
pub fn factor_q(f: &[Q]) -> Vec<Vec<Q>> {
    let k = Rationals;
    let f = upoly::trim(&k, f.to_vec());
    assert!(!f.is_empty(), "cannot factor the zero polynomial");
    if f.len() == 1 {
        return Vec::new();
    }
    let sf = upoly::squarefree_part(&k, &f);
    let den = sf.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: ZPoly = sf
        .iter()
        .map(|c| (c * Q::from_integer(den.clone())).to_integer())
        .collect();
    let mut out: Vec<Vec<Q>> = zassenhaus(&primitive(&ints))
        .iter()
        .map(|g| upoly::monic(&k, &to_q(g)))
        .collect();
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| upoly::format(a, "t").cmp(&upoly::format(b, "t")))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::qi;

    fn qp(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| qi(x)).collect()
    }

    fn prod(fs: &[Vec<Q>]) -> Vec<Q> {
        fs.iter()
            .fold(qp(&[1]), |acc, g| upoly::mul(&Rationals, &acc, g))
    }

    #[test]
    fn irreducible_everywhere_split_mod_p() {
        // t^4 + 1 and t^4 - 10 t^2 + 1 are irreducible over Q but split mod every prime
        assert_eq!(factor_q(&qp(&[1, 0, 0, 0, 1])).len(), 1);
        assert_eq!(factor_q(&qp(&[1, 0, -10, 0, 1])).len(), 1);
    }

    #[test]
    fn products_of_quadratics() {
        let f = upoly::mul(&Rationals, &qp(&[-2, 0, 1]), &qp(&[-3, 0, 1]));
        assert_eq!(factor_q(&f), vec![qp(&[-2, 0, 1]), qp(&[-3, 0, 1])]);
    }

    #[test]
    fn cyclotomic_split() {
        let f = qp(&[-1, 0, 0, 0, 0, 0, 1]);
        let fs = factor_q(&f);
        assert_eq!(fs.len(), 4);
        assert_eq!(prod(&fs), f);
    }

    #[test]
    fn non_monic_and_repeated() {
        // (2t - 3)^2 (t + 5)
        let a = qp(&[-3, 2]);
        let f = upoly::mul(&Rationals, &upoly::mul(&Rationals, &a, &a), &qp(&[5, 1]));
        let fs = factor_q(&f);
        assert_eq!(
            fs,
            vec![qp(&[5, 1]), vec![Q::new((-3).into(), 2.into()), qi(1)]]
        );
    }

    #[test]
    fn larger_degree_mix() {
        // (t^3 - 2)(t^2 + t + 7)(t - 11)(t^4 + 1)
        let parts = [
            qp(&[-2, 0, 0, 1]),
            qp(&[7, 1, 1]),
            qp(&[-11, 1]),
            qp(&[1, 0, 0, 0, 1]),
        ];
        let f = prod(&parts);
        let fs = factor_q(&f);
        assert_eq!(fs.len(), 4);
        assert_eq!(prod(&fs), f);
        assert_eq!(
            fs.iter().map(|g| g.len() - 1).collect::<Vec<_>>(),
            vec![1, 2, 3, 4]
        );
    }

    #[test]
    fn constants_have_no_factors() {
        assert!(factor_q(&qp(&[5])).is_empty());
    }
}
