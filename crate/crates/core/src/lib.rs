//! Exact combinatorics of fibre surfaces of positive braids.
//!
//! A positive braid word determines a ribbon graph (one disk per strand, one
//! band per crossing) whose thickening is the fibre surface of the closed
//! braid. The monodromy of the fibration is a product of right-handed Dehn
//! twists along the rectangle curves of the brick diagram. This crate
//! models that data exactly:
//!
//! * [`braid`]: positive braid words, closure permutation, rewriting moves
//!   and the square-prefix normal form used for trefoil deplumbing.
//! * [`surface`]: the ribbon graph, rectangle basis, intersection form and
//!   homological monodromy.
//! * [`curve`]: closed curves as reduced cyclic edge words, geometric
//!   intersection numbers and Dehn twists.
//! * [`plumbing`]: chain certificates for iterated Hopf plumbing summands,
//!   trefoil decompositions and torus braid reports.
//! * [`laurent`], [`alexander`], [`hironaka`]: exact Laurent polynomials,
//!   Alexander polynomials and the coefficient-matching plumbing bound.
//!
//! Everything is integer or rational arithmetic; the crate is `no_std` and
//! only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod alexander;
pub mod braid;
pub mod curve;
mod error;
pub mod hironaka;
pub mod laurent;
pub mod linalg;
pub mod plumbing;
pub mod surface;

pub use braid::{BraidInvariants, BraidWord, Direction, Normalization, RewriteMove};
pub use curve::{Handedness, Monodromy, NormalCurve, TwistFactor};
pub use error::{Error, Result};
pub use hironaka::{FeasibilityRow, HironakaBound, HironakaSolution};
pub use laurent::LaurentPolynomial;
pub use plumbing::{ChainCertificate, TorusReport, TrefoilDecomposition, TrefoilStep, Verdict};
pub use surface::{FatGraphSurface, Rectangle};
