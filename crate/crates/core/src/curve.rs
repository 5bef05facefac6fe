//! Homology ranks for an endpoint constrained to an embedded curve.
//!
//! The constraint curve must start and end at full extension (on the unit
//! circle, in normalized units), stay inside the reachable disk, and cross
//! every circle of critical radius `|r_J|` transversely. Each circle then
//! contributes a multiplier `mu = crossings / 2` to every subset attaining
//! that radius, and the ranks follow the same `a_j + b_{j+1}` pattern as
//! the line case with counts replaced by multiplier sums.
//!
//! Curves are polylines. Transversality is decided per segment from the
//! quadratic for the segment-circle intersection: a near-zero normalized
//! discriminant or a root at a polyline vertex is rejected with an error
//! that tells the caller to refine, instead of guessing.

use num_traits::{Signed, Zero};

use crate::arm::{spectrum, CriticalSpectrum, Linkage};
use crate::betti::BettiVector;
use crate::error::{Error, Result};
use crate::line::{count_ab, AbCounts};
use crate::rational::{rational_to_f64, Rational};

/// Geometric tolerances, all configurable from the CLI.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Endpoint distance from the unit circle.
    pub end: f64,
    /// Vertex coincidence / origin clearance.
    pub geo: f64,
    /// Normalized discriminant below which an intersection counts as
    /// tangential.
    pub tan: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { end: 1e-6, geo: 1e-9, tan: 1e-7 }
    }
}

/// An ordered open polyline approximating the constraint curve.
#[derive(Debug, Clone)]
pub struct PlanarCurve {
    points: Vec<[f64; 2]>,
}

impl PlanarCurve {
    pub fn new(points: Vec<[f64; 2]>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidCurve("need at least 2 points".into()));
        }
        if points.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidCurve("non-finite coordinate".into()));
        }
        for (i, pair) in points.windows(2).enumerate() {
            if pair[0] == pair[1] {
                return Err(Error::InvalidCurve(format!(
                    "points {i} and {} coincide",
                    i + 1
                )));
            }
        }
        Ok(PlanarCurve { points })
    }

    pub fn points(&self) -> &[[f64; 2]] {
        &self.points
    }

    pub fn scaled(&self, factor: f64) -> PlanarCurve {
        PlanarCurve {
            points: self.points.iter().map(|p| [p[0] * factor, p[1] * factor]).collect(),
        }
    }

    pub fn reversed(&self) -> PlanarCurve {
        let mut points = self.points.clone();
        points.reverse();
        PlanarCurve { points }
    }
}

/// A curve that passed [`validate_curve`], in normalized units. Interior
/// vertices closer to the unit circle than the endpoint tolerance are kept
/// but flagged.
#[derive(Debug, Clone)]
pub struct ValidatedCurve {
    points: Vec<[f64; 2]>,
    pub flagged: Vec<usize>,
}

impl ValidatedCurve {
    pub fn points(&self) -> &[[f64; 2]] {
        &self.points
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingDirection {
    Inward,
    Outward,
}

/// One transverse intersection of the polyline with a circle.
#[derive(Debug, Clone)]
pub struct Crossing {
    pub segment: usize,
    /// Position along the segment, in [0, 1); exactly 1 only for the
    /// endpoint contact on the final segment.
    pub t: f64,
    pub radius: f64,
    pub direction: CrossingDirection,
}

fn dot(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

fn sub(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn norm(a: [f64; 2]) -> f64 {
    dot(a, a).sqrt()
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn on_segment(a: [f64; 2], b: [f64; 2], p: [f64; 2], eps: f64) -> bool {
    orient(a, b, p).abs() <= eps
        && p[0] >= a[0].min(b[0]) - eps
        && p[0] <= a[0].max(b[0]) + eps
        && p[1] >= a[1].min(b[1]) - eps
        && p[1] <= a[1].max(b[1]) + eps
}

fn segments_intersect(
    p1: [f64; 2],
    p2: [f64; 2],
    p3: [f64; 2],
    p4: [f64; 2],
    eps: f64,
) -> bool {
    let d1 = orient(p3, p4, p1);
    let d2 = orient(p3, p4, p2);
    let d3 = orient(p1, p2, p3);
    let d4 = orient(p1, p2, p4);
    if ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps))
        && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps))
    {
        return true;
    }
    on_segment(p3, p4, p1, eps)
        || on_segment(p3, p4, p2, eps)
        || on_segment(p1, p2, p3, eps)
        || on_segment(p1, p2, p4, eps)
}

fn dist_origin_segment(a: [f64; 2], b: [f64; 2]) -> f64 {
    let d = sub(b, a);
    let len2 = dot(d, d);
    let t = (-dot(a, d) / len2).clamp(0.0, 1.0);
    norm([a[0] + t * d[0], a[1] + t * d[1]])
}

/// Checks the curve against the hypotheses of the crossing-count formula:
/// endpoints at full extension, interior inside the reachable disk, no
/// self-intersection, and clearance from the origin when some subset has
/// critical radius zero.
pub fn validate_curve(
    curve: &PlanarCurve,
    spec: &CriticalSpectrum,
    tol: &Tolerances,
) -> Result<ValidatedCurve> {
    let pts = curve.points();
    let last = pts.len() - 1;
    for (index, p) in [(0, pts[0]), (last, pts[last])] {
        let r = norm(p);
        if (r - 1.0).abs() > tol.end {
            return Err(Error::EndpointOffCircle { index, norm: r });
        }
    }
    let mut flagged = Vec::new();
    for (i, p) in pts.iter().enumerate().take(last).skip(1) {
        let r = norm(*p);
        if r >= 1.0 {
            return Err(Error::CurveExitsDisk { index: i, norm: r });
        }
        if r > 1.0 - tol.end {
            flagged.push(i);
        }
    }

    let m = last; // segment count
    for i in 0..m {
        // adjacent segments share a vertex; reject only a turn-back overlap
        let u = sub(pts[i + 1], pts[i]);
        if i + 1 < m {
            let v = sub(pts[i + 2], pts[i + 1]);
            let collinear =
                (u[0] * v[1] - u[1] * v[0]).abs() <= tol.geo * norm(u).max(norm(v));
            if collinear && dot(u, v) < 0.0 {
                return Err(Error::SelfIntersection(i, i + 1));
            }
        }
        for j in i + 2..m {
            if segments_intersect(pts[i], pts[i + 1], pts[j], pts[j + 1], tol.geo) {
                return Err(Error::SelfIntersection(i, j));
            }
        }
    }

    if spec.has_zero_radius() {
        for pair in pts.windows(2) {
            if dist_origin_segment(pair[0], pair[1]) <= tol.geo {
                return Err(Error::CurveThroughOrigin);
            }
        }
    }

    Ok(ValidatedCurve { points: pts.to_vec(), flagged })
}

/// All transverse intersections of the polyline with the circle of the
/// given radius, ordered along the curve. Endpoints lying on the circle
/// count as one crossing each; tangencies and crossings at polyline
/// vertices are errors.
pub fn circle_crossings(
    points: &[[f64; 2]],
    radius: f64,
    tol: &Tolerances,
) -> Result<Vec<Crossing>> {
    assert!(radius > 0.0, "radius must be positive");
    let last = points.len() - 1;
    let m = last;
    let norms: Vec<f64> = points.iter().map(|p| norm(*p)).collect();
    let mut crossings: Vec<Crossing> = Vec::new();

    // Endpoint contacts. Transversality at a contact is the same normalized
    // discriminant test as below, specialized to c = 0.
    let start_contact = (norms[0] - radius).abs() <= tol.end;
    if start_contact {
        let d = sub(points[1], points[0]);
        let along = dot(points[0], d);
        if along * along / (dot(d, d) * radius * radius) < tol.tan {
            return Err(Error::TangentialIntersection { segment: 0, radius });
        }
        let direction =
            if along < 0.0 { CrossingDirection::Inward } else { CrossingDirection::Outward };
        crossings.push(Crossing { segment: 0, t: 0.0, radius, direction });
    }
    let end_contact = (norms[last] - radius).abs() <= tol.end;
    if end_contact {
        let d = sub(points[last], points[last - 1]);
        let along = dot(points[last], d);
        if along * along / (dot(d, d) * radius * radius) < tol.tan {
            return Err(Error::TangentialIntersection { segment: m - 1, radius });
        }
        let direction =
            if along > 0.0 { CrossingDirection::Outward } else { CrossingDirection::Inward };
        crossings.push(Crossing { segment: m - 1, t: 1.0, radius, direction });
    }

    for (i, &r) in norms.iter().enumerate().take(last).skip(1) {
        if (r - radius).abs() < tol.geo {
            return Err(Error::CrossingAtVertex { vertex: i, radius });
        }
    }

    for i in 0..m {
        let p = points[i];
        let d = sub(points[i + 1], p);
        let a = dot(d, d);
        let b = 2.0 * dot(p, d);
        let c = norms[i] * norms[i] - radius * radius;
        let disc = b * b - 4.0 * a * c;
        let disc_hat = disc / (4.0 * a * radius * radius);
        let t_star = -b / (2.0 * a);
        if disc_hat.abs() < tol.tan {
            // Flag a graze only if the closest approach can fall on this
            // segment; the window is widened by the root half-separation
            // scale so a root cannot slip past the test.
            let w = (tol.tan * radius * radius / a).sqrt();
            if t_star >= -w && t_star <= 1.0 + w {
                return Err(Error::TangentialIntersection { segment: i, radius });
            }
            continue;
        }
        if disc <= 0.0 {
            continue;
        }
        let sq = disc.sqrt();
        // root of larger magnitude first, companion via Vieta
        let q = -0.5 * (b + b.signum() * sq);
        let (t1, t2) = if b == 0.0 {
            (-sq / (2.0 * a), sq / (2.0 * a))
        } else {
            (q / a, c / q)
        };
        let seg_len = a.sqrt();
        let vertex_zone = tol.geo / seg_len;
        for t in [t1, t2] {
            let at_start = t.abs() <= vertex_zone;
            let at_end = (t - 1.0).abs() <= vertex_zone;
            if at_start || at_end {
                let vertex = if at_start { i } else { i + 1 };
                let counted = (vertex == 0 && start_contact)
                    || (vertex == last && end_contact);
                if counted {
                    continue;
                }
                return Err(Error::CrossingAtVertex { vertex, radius });
            }
            if t <= 0.0 || t >= 1.0 {
                continue;
            }
            let deriv = b + 2.0 * a * t;
            let direction = if deriv < 0.0 {
                CrossingDirection::Inward
            } else {
                CrossingDirection::Outward
            };
            crossings.push(Crossing { segment: i, t, radius, direction });
        }
    }

    crossings.sort_by(|x, y| {
        (x.segment, x.t)
            .partial_cmp(&(y.segment, y.t))
            .expect("finite crossing parameters")
    });
    Ok(crossings)
}

/// Multiplier per deduplicated critical radius, aligned with
/// `spec.radii()`: half the crossing count, and 0 for radius zero (a point
/// cannot be crossed transversely).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierTable {
    pub entries: Vec<(Rational, u64)>,
}

impl MultiplierTable {
    pub fn mu(&self, radius: &Rational) -> u64 {
        self.entries
            .binary_search_by(|(r, _)| r.cmp(radius))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }
}

pub fn multipliers(
    curve: &ValidatedCurve,
    spec: &CriticalSpectrum,
    tol: &Tolerances,
) -> Result<MultiplierTable> {
    let mut entries = Vec::with_capacity(spec.radii().len());
    for class in spec.radii() {
        if class.radius.is_zero() {
            entries.push((class.radius.clone(), 0));
            continue;
        }
        let crossings =
            circle_crossings(curve.points(), rational_to_f64(&class.radius), tol)?;
        if crossings.len() % 2 != 0 {
            return Err(Error::OddCrossingCount {
                radius: crate::rational::format_rational(&class.radius),
                count: crossings.len(),
            });
        }
        entries.push((class.radius.clone(), crossings.len() as u64 / 2));
    }
    Ok(MultiplierTable { entries })
}

/// Multiplier sums graded by subset size: `a_j` over short subsets
/// (`r_J < 0`), `b_j` over long ones (`r_J > 0`). Subsets with `r_J = 0`
/// contribute to neither.
pub fn curve_counts(spec: &CriticalSpectrum, table: &MultiplierTable) -> AbCounts {
    let k = spec.k();
    let mut a = vec![0u64; k + 1];
    let mut b = vec![0u64; k + 1];
    for c in spec.configs() {
        if c.r.is_zero() {
            continue;
        }
        let mu = table.mu(&c.r.abs());
        if c.r.is_negative() {
            a[c.index] += mu;
        } else {
            b[c.index] += mu;
        }
    }
    AbCounts { a, b }
}

/// Everything the curve computation produces, for reporting.
#[derive(Debug, Clone)]
pub struct CurveAnalysis {
    pub normalized: Linkage,
    pub alpha: Rational,
    pub counts: AbCounts,
    pub multipliers: MultiplierTable,
    pub betti: BettiVector,
    pub euler: i64,
    pub flagged: Vec<usize>,
}

/// Full curve pipeline. Curve coordinates are in the same units as the
/// edge lengths; both are rescaled by the normalization factor before any
/// geometry runs.
pub fn betti_curve_analysis(
    link: &Linkage,
    curve: &PlanarCurve,
    tol: &Tolerances,
    cap: usize,
) -> Result<CurveAnalysis> {
    let (normalized, alpha) = link.normalize();
    let scaled = curve.scaled(rational_to_f64(&alpha));
    let spec = spectrum(&normalized, cap)?;
    let validated = validate_curve(&scaled, &spec, tol)?;
    let table = multipliers(&validated, &spec, tol)?;
    let counts = curve_counts(&spec, &table);
    let betti = counts.betti();
    let euler = crate::betti::euler_characteristic(&betti);
    Ok(CurveAnalysis {
        normalized,
        alpha,
        counts,
        multipliers: table,
        betti,
        euler,
        flagged: validated.flagged,
    })
}

/// Betti vector of the motion space constrained to the curve.
pub fn betti_curve(link: &Linkage, curve: &PlanarCurve) -> Result<BettiVector> {
    Ok(betti_curve_analysis(
        link,
        curve,
        &Tolerances::default(),
        crate::arm::DEFAULT_ENUMERATION_CAP,
    )?
    .betti)
}

/// Outcome of checking the two formulas against each other on a horizontal
/// chord.
#[derive(Debug, Clone)]
pub struct ConsistencyReport {
    /// Height in normalized units.
    pub h: Rational,
    pub line_betti: BettiVector,
    pub curve_betti: BettiVector,
    pub agree: bool,
}

/// Runs the curve formula on the chord `y = h` (endpoints on the unit
/// circle) and compares with the line formula. Requires `|h| < 1` and `h`
/// regular; if some critical radius equals `|h|` the chord is tangent to
/// that circle and the comparison is not applicable.
pub fn line_curve_consistency(
    link: &Linkage,
    h: &Rational,
    tol: &Tolerances,
    cap: usize,
) -> Result<ConsistencyReport> {
    let (normalized, alpha) = link.normalize();
    let h = h * &alpha;
    let spec = spectrum(&normalized, cap)?;
    let habs = h.abs();
    if habs >= Rational::from_integer(1.into()) {
        return Err(Error::InvalidCurve(
            "chord comparison requires |h| < total length".into(),
        ));
    }
    if spec.radii().iter().any(|c| c.radius == habs) {
        return Err(Error::ChordTangent {
            h: crate::rational::format_rational(&habs),
        });
    }
    let hf = rational_to_f64(&h);
    let x0 = (1.0 - hf * hf).sqrt();
    let chord = PlanarCurve::new(vec![[-x0, hf], [x0, hf]])?;
    let validated = validate_curve(&chord, &spec, tol)?;
    let table = multipliers(&validated, &spec, tol)?;
    let curve_betti = curve_counts(&spec, &table).betti();
    let line_betti = count_ab(&spec, &h).betti();
    let agree = curve_betti == line_betti;
    Ok(ConsistencyReport { h, line_betti, curve_betti, agree })
}
