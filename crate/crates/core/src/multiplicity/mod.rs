//! Multiplicities of points on plane curve germs, computed three ways:
//! from the Hilbert–Samuel function, as a minimum over slicing lines, and
//! by counting nearby transverse intersections numerically.

mod common;
mod dynamic;
mod hilbert;
mod lines;

pub use dynamic::{dynamic_multiplicity, DynamicParams, DynamicReport};
pub use hilbert::{
    hilbert_samuel_sequence, hs_multiplicity, hs_multiplicity_with, HSRecord, HsConfig,
};
pub use lines::{line_sample, min_line_multiplicity, LineGerm, LineMinimum};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::localalg::{colength_with, Limits, LocalIdeal};
use crate::polyring::PolyQ;

/// Local intersection number at the origin of `{f = 0}` and `{g = 0}`.
///
/// Plane curve germs meeting in an isolated point have a Cohen–Macaulay
/// intersection ring, so the intersection number is the colength of `⟨f, g⟩`.
/// Shared components give infinity.
pub fn intersection_multiplicity(f: &PolyQ, g: &PolyQ) -> Result<ExtNat> {
    intersection_multiplicity_with(f, g, Limits::default())
}

pub fn intersection_multiplicity_with(f: &PolyQ, g: &PolyQ, limits: Limits) -> Result<ExtNat> {
    for h in [f, g] {
        match h.ord() {
            ExtNat::Finite(d) if d >= 1 => {}
            _ => {
                return Err(Error::Invalid(format!(
                    "`{h}` must be nonzero and vanish at the origin"
                )))
            }
        }
    }
    if f.nvars() == 2 && g.nvars() == 2 && common::bivariate_gcd(f, g).constant_term().is_zero() {
        return Ok(ExtNat::Infinite);
    }
    colength_with(&LocalIdeal::new(vec![f.clone(), g.clone()])?, limits)
}
