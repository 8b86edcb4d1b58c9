//! Computational toolkit for integral plane-curve singularities.
//!
//! The crate is organised bottom-up:
//!
//! * [`polyring`] exact sparse polynomials over the rationals,
//! * [`localalg`] standard bases in the local ring at the origin and colengths,
//! * [`multiplicity`] Hilbert–Samuel multiplicities, intersection numbers,
//!   line slicing and the numerical (dynamic) multiplicity count,
//! * [`resolution`] blowup trees, δ-invariants, branch counts and genus bookkeeping,
//! * [`jaceuler`] Euler characteristics of compactified Jacobians for
//!   `x^p = y^q` singularities and the K3 rational-curve generating series.

pub mod error;
pub mod extnat;
pub mod jaceuler;
pub mod localalg;
pub mod multiplicity;
pub mod polyring;
pub mod resolution;

pub use error::{Error, Result};
pub use extnat::ExtNat;
pub use polyring::{ExpVec, MonomialOrder, OrderKind, PolyQ, Q};
