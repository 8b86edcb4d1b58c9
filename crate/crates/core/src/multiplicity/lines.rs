use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::intersection_multiplicity;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::polyring::{ExpVec, PolyQ, Q};

/// A line through the origin with direction `(a, b)`, i.e. `{b·x − a·y = 0}`.
///
/// Stored as a primitive integer vector whose first nonzero entry is positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LineGerm {
    a: BigInt,
    b: BigInt,
}

impl LineGerm {
    pub fn new(a: Q, b: Q) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Invalid("line direction must be nonzero".into()));
        }
        let den = a.denom().lcm(b.denom());
        let mut ia = a.numer() * (&den / a.denom());
        let mut ib = b.numer() * (&den / b.denom());
        let g = ia.gcd(&ib);
        ia /= &g;
        ib /= &g;
        if ia.is_negative() || (ia.is_zero() && ib.is_negative()) {
            ia = -ia;
            ib = -ib;
        }
        Ok(LineGerm { a: ia, b: ib })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(Q::from_integer(a.into()), Q::from_integer(b.into()))
    }

    pub fn direction(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }

    pub fn height(&self) -> BigInt {
        self.a.abs().max(self.b.abs())
    }

    /// Defining equation `b·x − a·y`.
    pub fn equation(&self) -> PolyQ {
        PolyQ::from_terms(
            2,
            [
                (ExpVec::xy(1, 0), Q::from_integer(self.b.clone())),
                (ExpVec::xy(0, 1), Q::from_integer(-self.a.clone())),
            ],
        )
    }
}

impl fmt::Display for LineGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eq = self.equation();
        let flip = eq
            .leading_term(&crate::polyring::MonomialOrder::degrevlex())
            .is_some_and(|(_, c)| c.is_negative());
        write!(f, "{} = 0", if flip { -eq } else { eq })
    }
}

impl fmt::Debug for LineGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LineGerm({}, {})", self.a, self.b)
    }
}

/// All primitive integer directions of height at most `h`.
///
/// Ordered by height, then with the horizontal direction first, so `y = 0`
/// precedes `x = 0`.
pub fn line_sample(h: u32) -> Vec<LineGerm> {
    let h = h as i64;
    let mut out: Vec<(i64, i64)> = Vec::new();
    for a in 0..=h {
        for b in -h..=h {
            if (a == 0 && b <= 0) || a.gcd(&b) != 1 {
                continue;
            }
            out.push((a, b));
        }
    }
    out.sort_by_key(|&(a, b)| (a.abs().max(b.abs()), b.abs(), b < 0, a));
    out.into_iter()
        .map(|(a, b)| LineGerm::from_ints(a, b).expect("nonzero"))
        .collect()
}

/// Result of slicing a germ by every line of a sample.
#[derive(Clone, Debug)]
pub struct LineMinimum {
    pub value: u64,
    pub witness: LineGerm,
    /// Every sampled line with its intersection number (infinite for components).
    pub evaluated: Vec<(LineGerm, ExtNat)>,
}

/// Minimum of `i(0, f · L)` over lines `L` through the origin.
///
/// The sample is every direction of height `≤ ord(f) + 2` plus `extras`. Lines
/// that are components of `f` are skipped. The minimum must equal `ord(f)`.
pub fn min_line_multiplicity(f: &PolyQ, extras: &[LineGerm]) -> Result<LineMinimum> {
    if f.nvars() != 2 {
        return Err(Error::Invalid("line slicing needs a plane germ".into()));
    }
    let ord = match f.ord() {
        ExtNat::Finite(d) if d >= 1 => d,
        _ => {
            return Err(Error::Invalid(format!(
                "`{f}` must be nonzero and vanish at the origin"
            )))
        }
    };
    let mut lines = line_sample(ord as u32 + 2);
    for e in extras {
        if !lines.contains(e) {
            lines.push(e.clone());
        }
    }
    let mut evaluated = Vec::with_capacity(lines.len());
    let mut best: Option<(u64, LineGerm)> = None;
    for line in lines {
        let i = intersection_multiplicity(f, &line.equation())?;
        if let ExtNat::Finite(v) = i {
            if best.as_ref().is_none_or(|(b, _)| v < *b) {
                best = Some((v, line.clone()));
            }
        }
        evaluated.push((line, i));
    }
    let (value, witness) = best.ok_or_else(|| {
        Error::Inconsistent("every sampled line is a component of the germ".into())
    })?;
    if value != ord {
        return Err(Error::Inconsistent(format!(
            "minimum over lines {value} differs from ord {ord} for `{f}`"
        )));
    }
    Ok(LineMinimum {
        value,
        witness,
        evaluated,
    })
}
