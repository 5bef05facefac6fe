//! Planar robotic arms and their spectrum of collinear configurations.
//!
//! An arm is a chain of `k` rigid edges hinged at the origin. The endpoint
//! height `s2(theta) = sum_i l_i sin(theta_i)` has exactly the vertical
//! collinear configurations as critical points: one per subset `J` of edges
//! pointing up, with critical value `r_J = sum_{i in J} l_i - sum_{i not in J} l_i`.
//! Everything downstream (rank formulas, chord tangency tests, the grid
//! oracle's thickening width) is driven by this spectrum, so it is computed
//! exactly.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rational_to_f64, Rational};

/// Default cap on subset enumeration (`2^k` configurations are materialized).
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// Ordered positive edge lengths of a robotic arm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linkage {
    lengths: Vec<Rational>,
}

impl Linkage {
    pub fn new(lengths: Vec<Rational>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::InvalidLinkage("no edges".into()));
        }
        if let Some(i) = lengths.iter().position(|l| !l.is_positive()) {
            return Err(Error::InvalidLinkage(format!(
                "edge {} has non-positive length",
                i + 1
            )));
        }
        Ok(Linkage { lengths })
    }

    pub fn k(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[Rational] {
        &self.lengths
    }

    pub fn lengths_f64(&self) -> Vec<f64> {
        self.lengths.iter().map(rational_to_f64).collect()
    }

    pub fn total(&self) -> Rational {
        self.lengths.iter().sum()
    }

    /// Rescales so the lengths sum to 1 and sorts them in non-increasing
    /// order; neither operation changes the motion space. Returns the scale
    /// factor `alpha` so callers can rescale heights and curve coordinates
    /// by the same amount.
    pub fn normalize(&self) -> (Linkage, Rational) {
        let alpha = self.total().recip();
        let mut lengths: Vec<Rational> =
            self.lengths.iter().map(|l| l * &alpha).collect();
        lengths.sort_by(|a, b| b.cmp(a));
        (Linkage { lengths }, alpha)
    }

    pub fn is_normalized(&self) -> bool {
        use num_traits::One;
        self.total().is_one()
    }

    /// Endpoint of the arm at the given edge angles (radians). Float-only
    /// helper for the grid oracle and diagnostics.
    pub fn end_position(&self, angles: &[f64]) -> Result<(f64, f64)> {
        if angles.len() != self.k() {
            return Err(Error::AngleCountMismatch {
                expected: self.k(),
                got: angles.len(),
            });
        }
        let mut x = 0.0;
        let mut y = 0.0;
        for (l, theta) in self.lengths_f64().iter().zip(angles) {
            x += l * theta.cos();
            y += l * theta.sin();
        }
        Ok((x, y))
    }
}

/// A subset of the edge index set `{1, ..., k}` packed into the low `k` bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn complement(self, k: usize) -> SubsetMask {
        SubsetMask(!self.0 & ((1u32 << k) - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }
}

/// One vertical collinear configuration: edges in `mask` point up, the rest
/// point down. `r` is its endpoint height, `index` its Morse index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollinearConfig {
    pub mask: SubsetMask,
    pub r: Rational,
    pub index: usize,
}

/// A deduplicated critical radius with the subsets attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusClass {
    pub radius: Rational,
    pub masks: Vec<SubsetMask>,
}

/// All `2^k` collinear configurations of an arm, plus the deduplicated
/// critical radii `|r_J|` and the sorted distinct critical values.
#[derive(Debug, Clone)]
pub struct CriticalSpectrum {
    k: usize,
    configs: Vec<CollinearConfig>,
    radii: Vec<RadiusClass>,
    values: Vec<Rational>,
}

impl CriticalSpectrum {
    pub fn k(&self) -> usize {
        self.k
    }

    /// All configurations, ordered by mask value.
    pub fn configs(&self) -> &[CollinearConfig] {
        &self.configs
    }

    /// Distinct radii `|r_J|`, ascending, each with its attaining masks.
    pub fn radii(&self) -> &[RadiusClass] {
        &self.radii
    }

    /// Distinct critical values of the height function, ascending.
    pub fn critical_values(&self) -> &[Rational] {
        &self.values
    }

    pub fn has_zero_radius(&self) -> bool {
        self.radii.first().is_some_and(|c| c.radius.is_zero())
    }

    /// A height is regular when it differs from every critical value.
    pub fn is_regular_height(&self, h: &Rational) -> bool {
        self.values.binary_search(h).is_err()
    }

    /// Half the exact distance from `h` to the nearest *other* critical
    /// value. This is the canonical thickening half-width: the interval
    /// `[h - delta, h + delta]` then contains no critical value except
    /// possibly `h` itself.
    pub fn half_gap(&self, h: &Rational) -> Option<Rational> {
        self.values
            .iter()
            .filter(|v| *v != h)
            .map(|v| (v - h).abs())
            .min()
            .map(|d| d / Rational::from_integer(2.into()))
    }
}

/// Enumerates all `2^k` subsets and their exact critical values.
pub fn spectrum(link: &Linkage, cap: usize) -> Result<CriticalSpectrum> {
    let k = link.k();
    if k > cap.min(31) {
        return Err(Error::EnumerationTooLarge { k, cap: cap.min(31) });
    }
    let lengths = link.lengths();
    let doubled: Vec<Rational> = lengths.iter().map(|l| l + l).collect();

    // r over masks via shared prefixes: flipping edge i up adds 2 l_i.
    let mut configs: Vec<CollinearConfig> = Vec::with_capacity(1 << k);
    configs.push(CollinearConfig {
        mask: SubsetMask(0),
        r: -link.total(),
        index: 0,
    });
    for mask in 1u32..1 << k {
        let low = mask.trailing_zeros() as usize;
        let parent = &configs[(mask & (mask - 1)) as usize];
        let r = &parent.r + &doubled[low];
        configs.push(CollinearConfig {
            mask: SubsetMask(mask),
            r,
            index: mask.count_ones() as usize,
        });
    }

    let mut by_radius: std::collections::BTreeMap<Rational, Vec<SubsetMask>> =
        std::collections::BTreeMap::new();
    let mut values: std::collections::BTreeSet<Rational> = Default::default();
    for c in &configs {
        by_radius.entry(c.r.abs()).or_default().push(c.mask);
        values.insert(c.r.clone());
    }
    let radii = by_radius
        .into_iter()
        .map(|(radius, mut masks)| {
            masks.sort();
            RadiusClass { radius, masks }
        })
        .collect();

    Ok(CriticalSpectrum {
        k,
        configs,
        radii,
        values: values.into_iter().collect(),
    })
}
