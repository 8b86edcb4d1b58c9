//! δ-invariant, branch count and genus bookkeeping for plane curve germs.

pub mod field;
pub mod linalg;
pub mod nffactor;
pub mod tree;
pub mod upoly;
pub mod zfactor;

pub use tree::{
    blowup_tree, blowup_tree_with, BlowupNode, ExceptionalAxis, FieldGerm, ResolutionConfig,
};

use crate::error::{Error, Result};
use crate::localalg::{milnor_with, tjurina_with};
use crate::polyring::PolyQ;

pub fn delta(f: &PolyQ) -> Result<u64> {
    Ok(blowup_tree(f)?.delta())
}

pub fn branches(f: &PolyQ) -> Result<u64> {
    Ok(blowup_tree(f)?.branches())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermInvariants {
    pub ord: u64,
    pub mu: u64,
    pub tau: u64,
    pub delta: u64,
    pub branches: u64,
    /// Multiplicities ≥ 2 of infinitely near points, for unibranch germs.
    pub multiplicity_sequence: Option<Vec<u32>>,
}

impl GermInvariants {
    /// A germ with prescribed `delta` and `branches` whose remaining fields
    /// are filled in from the Milnor relation.
    pub fn from_delta(ord: u64, delta: u64, branches: u64) -> Self {
        let mu = 2 * delta + 1 - branches;
        GermInvariants {
            ord,
            mu,
            tau: mu,
            delta,
            branches,
            multiplicity_sequence: None,
        }
    }

    pub fn node() -> Self {
        Self::from_delta(2, 1, 2)
    }
}

pub fn germ_invariants(f: &PolyQ) -> Result<GermInvariants> {
    germ_invariants_with(f, ResolutionConfig::default())
}

pub fn germ_invariants_with(f: &PolyQ, cfg: ResolutionConfig) -> Result<GermInvariants> {
    let t = blowup_tree_with(f, cfg)?;
    let mu = milnor_with(f, cfg.limits)?
        .finite()
        .expect("reduced germ has finite Milnor number");
    let tau = tjurina_with(f, cfg.limits)?
        .finite()
        .expect("tau is at most mu");
    let (delta, branches) = (t.delta(), t.branches());
    if mu + branches != 2 * delta + 1 {
        return Err(Error::Inconsistent(format!(
            "Milnor relation fails for {f}: mu = {mu}, delta = {delta}, r = {branches}"
        )));
    }
    Ok(GermInvariants {
        ord: t.mult as u64,
        mu,
        tau,
        delta,
        branches,
        multiplicity_sequence: t.multiplicity_sequence(),
    })
}

pub fn arithmetic_genus(d: u64) -> u64 {
    (d.max(1) - 1) * (d.max(2) - 2) / 2
}

pub fn geometric_genus(d: u64, deltas: &[u64]) -> Result<u64> {
    if d == 0 {
        return Err(Error::Invalid("plane degree must be at least 1".into()));
    }
    let ga = arithmetic_genus(d);
    let total: u64 = deltas.iter().sum();
    ga.checked_sub(total).ok_or_else(|| {
        Error::Inconsistent(format!(
            "total delta {total} exceeds arithmetic genus {ga} of a degree {d} curve"
        ))
    })
}

/// A reduced irreducible plane curve described by its degree and singular points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRecord {
    pub degree: u64,
    pub singularities: Vec<GermInvariants>,
    pub arithmetic_genus: u64,
    pub geometric_genus: u64,
}

impl CurveRecord {
    pub fn plane(degree: u64, singularities: Vec<GermInvariants>) -> Result<Self> {
        let deltas: Vec<u64> = singularities.iter().map(|s| s.delta).collect();
        let g = geometric_genus(degree, &deltas)?;
        Ok(CurveRecord {
            degree,
            singularities,
            arithmetic_genus: arithmetic_genus(degree),
            geometric_genus: g,
        })
    }

    pub fn total_delta(&self) -> u64 {
        self.singularities.iter().map(|s| s.delta).sum()
    }
}
