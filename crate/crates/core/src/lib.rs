//! Homology of constrained motion spaces of planar robotic arms.
//!
//! An arm with edge lengths `(l_1, ..., l_k)` sweeps a k-torus of angle
//! configurations; constraining its endpoint to a horizontal line or to an
//! embedded curve cuts out a subspace whose integral homology this crate
//! computes three independent ways:
//!
//! * [`line::betti_line`]: exact subset counting against the critical
//!   values `r_J = sum_{i in J} l_i - sum_{i not in J} l_i`;
//! * [`curve::betti_curve`]: transverse crossing counts of the constraint
//!   curve against the circles of critical radius `|r_J|`;
//! * [`oracle`]: a brute-force cubical complex on a discretized torus,
//!   reduced by integer Smith normal form.
//!
//! The first two are the fast paths; the oracle exists to check them.

pub mod arm;
pub mod betti;
pub mod curve;
pub mod error;
pub mod line;
pub mod oracle;
pub mod rational;

pub use arm::{spectrum, CollinearConfig, CriticalSpectrum, Linkage, SubsetMask};
pub use betti::{euler_characteristic, BettiVector, TorsionSummand};
pub use error::{Error, ErrorClass, Result};
pub use rational::{format_rational, parse_rational, Rational};
