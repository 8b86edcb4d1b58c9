use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{euclid_multiplicities, rational_catalan};
use crate::error::{Error, Result};
use crate::polyring::{PolyQ, Q};
use crate::resolution::{germ_invariants, CurveRecord, GermInvariants};

/// χ of the compactified Jacobian: zero in positive genus, otherwise the
/// product of the local contributions.
pub fn chi_jacobian(g: u64, locals: &[BigUint]) -> BigUint {
    if g > 0 {
        BigUint::zero()
    } else {
        locals.iter().product()
    }
}

fn sigma(n: u64) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
}

/// Coefficients of `∏ (1 - q^n)^(-24)` up to `q^gmax`.
pub fn yz_series(gmax: usize) -> Result<Vec<BigUint>> {
    let mut prod = vec![BigUint::zero(); gmax + 1];
    prod[0] = BigUint::one();
    for n in 1..=gmax {
        for _ in 0..24 {
            for i in n..=gmax {
                let prev = prod[i - n].clone();
                prod[i] += prev;
            }
        }
    }
    // exp of 24 Σ σ(m)/m q^m via m e_m = Σ_j 24 σ(j) e_{m-j}
    let mut e: Vec<Q> = vec![Q::one()];
    for m in 1..=gmax {
        let s: Q = (1..=m)
            .map(|j| Q::from_integer(BigInt::from(24 * sigma(j as u64))) * &e[m - j])
            .sum();
        e.push(s / Q::from_integer(BigInt::from(m)));
    }
    for (i, (a, b)) in prod.iter().zip(&e).enumerate() {
        if !b.is_integer() || b.to_integer() != BigInt::from(a.clone()) {
            return Err(Error::Inconsistent(format!(
                "series methods disagree at q^{i}: {a} vs {b}"
            )));
        }
    }
    Ok(prod)
}

/// Singularity types with a known local Jacobian contribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LocalSingularity {
    Node,
    /// Unibranch point with semigroup `⟨p,q⟩`, `p < q`.
    Monomial {
        p: u64,
        q: u64,
    },
}

impl LocalSingularity {
    pub fn monomial(p: u64, q: u64) -> Result<Self> {
        rational_catalan(p, q)?;
        Ok(LocalSingularity::Monomial {
            p: p.min(q),
            q: p.max(q),
        })
    }

    pub fn local_chi(&self) -> BigUint {
        match *self {
            LocalSingularity::Node => BigUint::one(),
            LocalSingularity::Monomial { p, q } => rational_catalan(p, q).expect("validated pair"),
        }
    }

    pub fn local_delta(&self) -> u64 {
        match *self {
            LocalSingularity::Node => 1,
            LocalSingularity::Monomial { p, q } => (p - 1) * (q - 1) / 2,
        }
    }

    pub fn invariants(&self) -> GermInvariants {
        match *self {
            LocalSingularity::Node => GermInvariants::node(),
            LocalSingularity::Monomial { p, q } => {
                let mut g = GermInvariants::from_delta(p, self.local_delta(), 1);
                g.multiplicity_sequence = Some(
                    euclid_multiplicities(p, q)
                        .iter()
                        .map(|&m| m as u32)
                        .collect(),
                );
                g
            }
        }
    }
}

impl fmt::Display for LocalSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalSingularity::Node => write!(f, "node"),
            LocalSingularity::Monomial { p, q } => write!(f, "<{p},{q}>"),
        }
    }
}

impl FromStr for LocalSingularity {
    type Err = Error;

    /// Accepts `node` or `<p,q>`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("node") {
            return Ok(LocalSingularity::Node);
        }
        let inner = t
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| {
                Error::Invalid(format!("unknown singularity '{t}', expected node or <p,q>"))
            })?;
        let nums: Vec<u64> = inner
            .split(',')
            .map(|x| x.trim().parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Invalid(format!("bad semigroup '{t}': {e}")))?;
        match nums.as_slice() {
            [p, q] => Self::monomial(*p, *q),
            _ => Err(Error::Invalid(format!("bad semigroup '{t}'"))),
        }
    }
}

/// Identifies a germ as a node or a `⟨p,q⟩` point from its resolution data.
pub fn classify_germ(f: &PolyQ) -> Result<LocalSingularity> {
    let inv = germ_invariants(f)?;
    let unsupported =
        || Error::Unsupported(format!("no local contribution known for the germ {f}"));
    if (inv.ord, inv.delta, inv.branches) == (2, 1, 2) {
        return Ok(LocalSingularity::Node);
    }
    if inv.branches != 1 || inv.ord < 2 || (2 * inv.delta) % (inv.ord - 1) != 0 {
        return Err(unsupported());
    }
    let p = inv.ord;
    let q = 2 * inv.delta / (p - 1) + 1;
    if q <= p || p.gcd(&q) != 1 {
        return Err(unsupported());
    }
    let expected: Vec<u32> = euclid_multiplicities(p, q)
        .iter()
        .map(|&m| m as u32)
        .collect();
    if inv.multiplicity_sequence.as_deref() != Some(expected.as_slice()) {
        return Err(unsupported());
    }
    Ok(LocalSingularity::Monomial { p, q })
}

/// A plane curve together with the types of its singular points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerCurve {
    pub record: CurveRecord,
    pub locals: Vec<LocalSingularity>,
}

impl LedgerCurve {
    pub fn new(degree: u64, locals: Vec<LocalSingularity>) -> Result<Self> {
        let record = CurveRecord::plane(
            degree,
            locals.iter().map(LocalSingularity::invariants).collect(),
        )?;
        Ok(LedgerCurve { record, locals })
    }

    pub fn chi(&self) -> BigUint {
        let locals: Vec<BigUint> = self
            .locals
            .iter()
            .map(LocalSingularity::local_chi)
            .collect();
        chi_jacobian(self.record.geometric_genus, &locals)
    }
}

/// Sum of Jacobian Euler characteristics over rational curves.
pub fn gw_local_sum(curves: &[LedgerCurve]) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for (i, c) in curves.iter().enumerate() {
        if c.record.geometric_genus != 0 {
            return Err(Error::Invalid(format!(
                "curve {i} has geometric genus {}, only rational curves contribute",
                c.record.geometric_genus
            )));
        }
        total += c.chi();
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_jacobian(1, &big(&[2, 5])), BigUint::zero());
        assert_eq!(chi_jacobian(0, &big(&[2])), BigUint::from(2u8));
        assert_eq!(chi_jacobian(0, &big(&[1, 1, 1])), BigUint::one());
        assert_eq!(chi_jacobian(0, &[]), BigUint::one());
    }

    #[test]
    fn series() {
        assert_eq!(yz_series(0).unwrap(), big(&[1]));
        assert_eq!(yz_series(4).unwrap(), big(&[1, 24, 324, 3200, 25650]));
        let s = yz_series(20).unwrap();
        assert_eq!(s.len(), 21);
    }

    #[test]
    fn ledger_sums() {
        let nodal = LedgerCurve::new(3, vec![LocalSingularity::Node]).unwrap();
        let cusp = LedgerCurve::new(3, vec!["<2,3>".parse().unwrap()]).unwrap();
        assert_eq!(
            gw_local_sum(std::slice::from_ref(&nodal)).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            gw_local_sum(&vec![nodal.clone(); 24]).unwrap(),
            yz_series(1).unwrap()[1]
        );
        assert_eq!(gw_local_sum(&[cusp, nodal]).unwrap(), BigUint::from(3u8));
        let smooth = LedgerCurve::new(3, vec![]).unwrap();
        assert!(matches!(gw_local_sum(&[smooth]), Err(Error::Invalid(_))));
        assert!(LedgerCurve::new(3, vec![LocalSingularity::Node; 2]).is_err());
    }

    #[test]
    fn parse_local_types() {
        assert_eq!(
            "node".parse::<LocalSingularity>().unwrap(),
            LocalSingularity::Node
        );
        assert_eq!(
            "<5,3>".parse::<LocalSingularity>().unwrap(),
            LocalSingularity::Monomial { p: 3, q: 5 }
        );
        assert!("<2,4>".parse::<LocalSingularity>().is_err());
        assert!("tacnode".parse::<LocalSingularity>().is_err());
    }

    #[test]
    fn classification() {
        let c = |s: &str| classify_germ(&parse(s, 2).unwrap());
        assert_eq!(c("x*y").unwrap(), LocalSingularity::Node);
        assert_eq!(c("y^2 - 2*x^2").unwrap(), LocalSingularity::Node);
        assert_eq!(
            c("x^2 - y^3").unwrap(),
            LocalSingularity::Monomial { p: 2, q: 3 }
        );
        assert_eq!(
            c("y^3 - x^5 + x^2*y^2").unwrap(),
            LocalSingularity::Monomial { p: 3, q: 5 }
        );
        assert_eq!(
            c("x^2 - y^5").unwrap(),
            LocalSingularity::Monomial { p: 2, q: 5 }
        );
        assert!(matches!(c("x^2 - y^4"), Err(Error::Unsupported(_))));
        assert!(matches!(
            c("(x^2 - y^3)*(x + y)"),
            Err(Error::Unsupported(_))
        ));
    }
}
