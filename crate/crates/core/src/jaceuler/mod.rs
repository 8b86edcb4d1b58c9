//! Euler characteristics of compactified Jacobians of rational curves with
//! unibranch `x^p = y^q` points, counted three ways, and their aggregation
//! into the K3 curve-counting series.

mod ledger;

pub use ledger::{
    chi_jacobian, classify_germ, gw_local_sum, yz_series, LedgerCurve, LocalSingularity,
};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn check_pair(p: u64, q: u64) -> Result<()> {
    if p < 2 || q < 2 {
        return Err(Error::Invalid(format!(
            "semigroup generators must be at least 2, got ({p},{q})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::Unsupported(format!(
            "({p},{q}) is not a coprime pair"
        )));
    }
    Ok(())
}

/// The numerical semigroup generated by two coprime integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneSemigroup {
    pub p: u64,
    pub q: u64,
    pub gaps: Vec<u64>,
    pub conductor: u64,
}

impl PlaneSemigroup {
    pub fn contains(&self, n: u64) -> bool {
        n >= self.conductor || self.gaps.binary_search(&n).is_err()
    }

    /// Number of gaps, the δ of the monomial curve.
    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }
}

pub fn semigroup(p: u64, q: u64) -> Result<PlaneSemigroup> {
    check_pair(p, q)?;
    let conductor = (p - 1) * (q - 1);
    let mut member = vec![false; conductor as usize + 1];
    member[0] = true;
    for n in 1..=conductor as usize {
        member[n] = (n >= p as usize && member[n - p as usize])
            || (n >= q as usize && member[n - q as usize]);
    }
    let gaps: Vec<u64> = (1..conductor).filter(|&n| !member[n as usize]).collect();
    assert!(member[conductor as usize]);
    assert_eq!(gaps.len() as u64, conductor / 2, "gap count of <{p},{q}>");
    Ok(PlaneSemigroup {
        p,
        q,
        gaps,
        conductor,
    })
}

/// A 0-normalised semimodule over `⟨p,q⟩`, stored through its finite complement.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GammaSemimodule {
    pub complement: Vec<u64>,
}

impl GammaSemimodule {
    pub fn is_valid(&self, s: &PlaneSemigroup) -> bool {
        let inside = |n: u64| self.complement.binary_search(&n).is_ok();
        !inside(0)
            && self.complement.iter().all(|&n| {
                [s.p, s.q]
                    .iter()
                    .all(|&g| n < g || (n > g && inside(n - g)))
            })
    }
}

/// All semimodules, in lexicographic order of their complements.
pub fn enumerate_semimodules(p: u64, q: u64) -> Result<Vec<GammaSemimodule>> {
    let s = semigroup(p, q)?;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend(&s, 0, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

// A gap n can join the complement only if n - p and n - q (when ≥ 0) already
// belong to it; both are smaller, so deciding gaps in increasing order works.
fn extend(s: &PlaneSemigroup, idx: usize, chosen: &mut Vec<u64>, out: &mut Vec<GammaSemimodule>) {
    if idx == s.gaps.len() {
        out.push(GammaSemimodule {
            complement: chosen.clone(),
        });
        return;
    }
    let n = s.gaps[idx];
    extend(s, idx + 1, chosen, out);
    let allowed = [s.p, s.q]
        .iter()
        .all(|&g| n < g || (n > g && chosen.binary_search(&(n - g)).is_ok()));
    if allowed {
        chosen.push(n);
        extend(s, idx + 1, chosen, out);
        chosen.pop();
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn rational_catalan(p: u64, q: u64) -> Result<BigUint> {
    check_pair(p, q)?;
    let (num, den) = binomial(p + q, p).div_rem(&BigUint::from(p + q));
    if !num.is_zero() && den.is_zero() {
        Ok(num)
    } else {
        Err(Error::Inconsistent(format!(
            "C({},{p}) is not divisible by {}",
            p + q,
            p + q
        )))
    }
}

/// Unit-step paths from `(0,0)` to `(q,p)` whose points all satisfy `q·y ≤ p·x`.
pub fn count_lattice_paths(p: u64, q: u64) -> Result<BigUint> {
    check_pair(p, q)?;
    let (w, h) = (q as usize, p as usize);
    let mut ways = vec![vec![BigUint::zero(); h + 1]; w + 1];
    ways[0][0] = BigUint::one();
    for x in 0..=w {
        for y in 0..=h {
            if (x, y) == (0, 0) || q * y as u64 > p * x as u64 {
                continue;
            }
            let mut v = BigUint::zero();
            if x > 0 {
                v += &ways[x - 1][y];
            }
            if y > 0 {
                v += &ways[x][y - 1];
            }
            ways[x][y] = v;
        }
    }
    Ok(ways[w][h].clone())
}

/// Multiplicities of the infinitely near points of `x^p = y^q`.
pub fn euclid_multiplicities(p: u64, q: u64) -> Vec<u64> {
    let (mut a, mut b) = (p.min(q), p.max(q));
    let mut out = Vec::new();
    while a >= 2 {
        out.push(a);
        let r = b - a;
        (a, b) = (a.min(r), a.max(r));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiReport {
    pub p: u64,
    pub q: u64,
    pub count_semimodules: u64,
    pub count_paths: BigUint,
    pub rational_catalan: BigUint,
    pub agree: bool,
}

pub fn chi_report(p: u64, q: u64) -> Result<ChiReport> {
    let count_semimodules = enumerate_semimodules(p, q)?.len() as u64;
    let count_paths = count_lattice_paths(p, q)?;
    let catalan = rational_catalan(p, q)?;
    let agree = BigUint::from(count_semimodules) == count_paths && count_paths == catalan;
    Ok(ChiReport {
        p,
        q,
        count_semimodules,
        count_paths,
        rational_catalan: catalan,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semigroup_examples() {
        let s = semigroup(2, 3).unwrap();
        assert_eq!((s.gaps.clone(), s.conductor), (vec![1], 2));
        let s = semigroup(3, 5).unwrap();
        assert_eq!((s.gaps.clone(), s.conductor), (vec![1, 2, 4, 7], 8));
        assert!(s.contains(0) && s.contains(6) && !s.contains(7) && s.contains(8));
        assert_eq!(semigroup(2, 5).unwrap().gaps, vec![1, 3]);
        assert!(matches!(semigroup(2, 4), Err(Error::Unsupported(_))));
        assert!(matches!(semigroup(1, 4), Err(Error::Invalid(_))));
    }

    #[test]
    fn semimodule_counts() {
        let all = enumerate_semimodules(2, 3).unwrap();
        assert_eq!(
            all,
            vec![
                GammaSemimodule { complement: vec![] },
                GammaSemimodule {
                    complement: vec![1]
                }
            ]
        );
        assert_eq!(enumerate_semimodules(3, 4).unwrap().len(), 5);
        assert_eq!(enumerate_semimodules(4, 5).unwrap().len(), 14);
        let s = semigroup(3, 4).unwrap();
        assert!(enumerate_semimodules(3, 4)
            .unwrap()
            .iter()
            .all(|m| m.is_valid(&s)));
        assert!(!GammaSemimodule {
            complement: vec![5]
        }
        .is_valid(&s));
    }

    #[test]
    fn catalan_and_paths() {
        for (p, q, c) in [(2, 3, 2u32), (3, 5, 7), (4, 5, 14), (2, 5, 3), (3, 4, 5)] {
            assert_eq!(rational_catalan(p, q).unwrap(), BigUint::from(c));
            assert_eq!(count_lattice_paths(p, q).unwrap(), BigUint::from(c));
        }
    }

    #[test]
    fn three_routes_agree() {
        for p in 2..=11u64 {
            for q in 2..=13 - p {
                if p.gcd(&q) == 1 {
                    let r = chi_report(p, q).unwrap();
                    assert!(r.agree, "{r:?}");
                    assert_eq!(
                        r,
                        ChiReport {
                            p,
                            q,
                            ..chi_report(q, p).unwrap()
                        }
                    );
                }
            }
        }
    }

    #[test]
    fn euclid_sequences() {
        assert_eq!(euclid_multiplicities(2, 3), vec![2]);
        assert_eq!(euclid_multiplicities(3, 5), vec![3, 2]);
        assert_eq!(euclid_multiplicities(2, 5), vec![2, 2]);
        assert_eq!(euclid_multiplicities(5, 3), vec![3, 2]);
    }
}
