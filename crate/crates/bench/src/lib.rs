//! Shared fixtures for the pipeline benchmarks.

use linkhom_core::curve::PlanarCurve;
use linkhom_core::rational::{rational_from_u64, Rational};
use linkhom_core::Linkage;

pub fn uniform_arm(k: usize) -> Linkage {
    Linkage::new(vec![rational_from_u64(1, k as u64); k]).unwrap()
}

pub fn lopsided_arm() -> Linkage {
    Linkage::new(vec![
        rational_from_u64(1, 2),
        rational_from_u64(1, 3),
        rational_from_u64(1, 6),
    ])
    .unwrap()
}

pub fn zero() -> Rational {
    Rational::from_integer(0.into())
}

/// Polyline entering the disk, dipping across the inner critical circle of
/// the equilateral 3-arm twice.
pub fn double_dip() -> PlanarCurve {
    PlanarCurve::new(vec![
        [1.0, 0.0],
        [0.15, 0.0],
        [0.6, 0.3],
        [0.1, 0.25],
        [0.0, 1.0],
    ])
    .unwrap()
}
