//! Homology ranks of the motion space constrained to a horizontal line.
//!
//! For the line `y = h` (heights in normalized units, total edge length 1)
//! the j-th Betti number is `a_j + b_{j+1}`, where
//!
//! * `a_j` counts subsets `J` with `|J| = j` and `r_J <= -|h|`,
//! * `b_j` counts subsets `J` with `|J| = j` and `r_J > |h|`.
//!
//! A second, independently counted route goes through the families
//! `U_j = { J : r_J <= h }` and `V_j = { J : r_J <= -h }` of sublevel /
//! supralevel generators: `a_j = |U_j ∩ V_j|` and `b_j = C(k,j) - |U_j ∪ V_j|`.
//! The two routes are asserted equal on exhaustive sweeps; see the
//! integration tests.

use num_traits::Signed;

use crate::arm::{spectrum, CriticalSpectrum, Linkage, SubsetMask, DEFAULT_ENUMERATION_CAP};
use crate::betti::{euler_characteristic, BettiVector};
use crate::error::Result;
use crate::rational::{binomial, Rational};

/// Per-degree subset counts below `-|h|` (`a`) and above `|h|` (`b`),
/// indexed 0..=k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbCounts {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
}

impl AbCounts {
    /// Ranks of the constrained motion space: `betti[j] = a[j] + b[j+1]`,
    /// one entry per degree 0..k-1.
    pub fn betti(&self) -> BettiVector {
        let k = self.a.len() - 1;
        let ranks = (0..k).map(|j| self.a[j] + self.b[j + 1]).collect();
        BettiVector::free(ranks)
    }
}

/// Exact threshold counting. Comparisons are rational, so critical heights
/// (where `h` equals some `r_J`) are decided without any tolerance.
pub fn count_ab(spec: &CriticalSpectrum, h: &Rational) -> AbCounts {
    let k = spec.k();
    let habs = h.abs();
    let neg_habs = -habs.clone();
    let mut a = vec![0u64; k + 1];
    let mut b = vec![0u64; k + 1];
    for c in spec.configs() {
        if c.r <= neg_habs {
            a[c.index] += 1;
        } else if c.r > habs {
            b[c.index] += 1;
        }
    }
    AbCounts { a, b }
}

/// Per-degree generator families for the two-sided level-set route.
///
/// Convention (frozen after sweeping it against [`count_ab`] for all k <= 4
/// length vectors with small denominators): `u[j]` holds the subsets with
/// `r_J <= h`, `v[j]` those with `r_J <= -h`. Both thresholds are closed;
/// collapsing the thickening onto the level set cannot cross another
/// critical value, so the closed comparison is the right boundary
/// assignment even at critical `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UvFamilies {
    pub u: Vec<Vec<SubsetMask>>,
    pub v: Vec<Vec<SubsetMask>>,
}

pub fn uv_families(spec: &CriticalSpectrum, h: &Rational) -> UvFamilies {
    let k = spec.k();
    let neg_h = -h.clone();
    let mut u = vec![Vec::new(); k + 1];
    let mut v = vec![Vec::new(); k + 1];
    for c in spec.configs() {
        if c.r <= *h {
            u[c.index].push(c.mask);
        }
        if c.r <= neg_h {
            v[c.index].push(c.mask);
        }
    }
    UvFamilies { u, v }
}

/// Recovers the (a, b) counts from the generator families:
/// `a_j = |U_j ∩ V_j|`, `b_j = C(k,j) - |U_j ∪ V_j|`.
pub fn ab_from_uv(families: &UvFamilies) -> AbCounts {
    let k = families.u.len() - 1;
    let mut a = vec![0u64; k + 1];
    let mut b = vec![0u64; k + 1];
    for j in 0..=k {
        let us: std::collections::BTreeSet<SubsetMask> =
            families.u[j].iter().copied().collect();
        let vs: std::collections::BTreeSet<SubsetMask> =
            families.v[j].iter().copied().collect();
        a[j] = us.intersection(&vs).count() as u64;
        b[j] = binomial(k, j) - us.union(&vs).count() as u64;
    }
    AbCounts { a, b }
}

/// Everything the line computation produces, for reporting.
#[derive(Debug, Clone)]
pub struct LineAnalysis {
    pub normalized: Linkage,
    pub alpha: Rational,
    /// Height in normalized units (`alpha * h`).
    pub h: Rational,
    pub counts: AbCounts,
    pub betti: BettiVector,
    pub euler: i64,
    pub regular: bool,
}

/// Full line pipeline: normalize, rescale `h`, enumerate, count.
pub fn line_analysis(link: &Linkage, h: &Rational, cap: usize) -> Result<LineAnalysis> {
    let (normalized, alpha) = link.normalize();
    let h = h * &alpha;
    let spec = spectrum(&normalized, cap)?;
    let counts = count_ab(&spec, &h);
    let betti = counts.betti();
    let euler = euler_characteristic(&betti);
    let regular = spec.is_regular_height(&h);
    Ok(LineAnalysis { normalized, alpha, h, counts, betti, euler, regular })
}

/// Betti vector of the motion space constrained to the line `y = h`.
pub fn betti_line(link: &Linkage, h: &Rational) -> Result<BettiVector> {
    Ok(line_analysis(link, h, DEFAULT_ENUMERATION_CAP)?.betti)
}
