//! Randomized geometric invariants of the crossing-count machinery, checked
//! on generated polylines with strictly monotone polar angle (hence simple
//! by construction).

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use linkhom_core::arm::{spectrum, CriticalSpectrum, Linkage, DEFAULT_ENUMERATION_CAP};
use linkhom_core::curve::{
    circle_crossings, curve_counts, multipliers, validate_curve, CrossingDirection,
    PlanarCurve, Tolerances,
};
use linkhom_core::rational::{rational_from_u64, rational_to_f64};

struct Generated {
    curve: PlanarCurve,
    spec: CriticalSpectrum,
    k: usize,
}

/// Random arm (k = 2 or 3, small rational lengths) and a random polar
/// zigzag from the unit circle back to the unit circle. Vertex radii keep
/// clear of the critical radii so vertex-on-circle rejections stay rare;
/// tangential rejections are handled by the caller retrying.
fn generate(rng: &mut ChaCha8Rng) -> Generated {
    let k = *[2usize, 3].choose(rng).unwrap();
    let lengths: Vec<_> = (0..k)
        .map(|_| rational_from_u64(rng.random_range(1..=5), rng.random_range(1..=5)))
        .collect();
    let link = Linkage::new(lengths).unwrap();
    let (normalized, _) = link.normalize();
    let spec = spectrum(&normalized, DEFAULT_ENUMERATION_CAP).unwrap();
    let radii: Vec<f64> = spec
        .radii()
        .iter()
        .map(|c| rational_to_f64(&c.radius))
        .collect();

    let interior = rng.random_range(3..=8);
    let start = rng.random_range(0.0..std::f64::consts::TAU);
    let sweep = rng.random_range(0.8..4.0);
    let mut points = Vec::with_capacity(interior + 2);
    for i in 0..interior + 2 {
        let frac = i as f64 / (interior + 1) as f64;
        let phi = start + frac * sweep;
        let r = if i == 0 || i == interior + 1 {
            1.0
        } else {
            loop {
                let candidate = rng.random_range(0.05..0.95);
                if radii.iter().all(|&rho| (candidate - rho).abs() > 5e-3) {
                    break candidate;
                }
            }
        };
        points.push([r * phi.cos(), r * phi.sin()]);
    }
    Generated { curve: PlanarCurve::new(points).unwrap(), spec, k }
}

#[test]
fn crossing_invariants_on_random_polylines() {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x11CE);
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    while accepted < 100 {
        attempts += 1;
        assert!(attempts < 1000, "generator rejects too often");
        let g = generate(&mut rng);
        let Ok(valid) = validate_curve(&g.curve, &g.spec, &tol) else {
            continue;
        };
        let Ok(table) = multipliers(&valid, &g.spec, &tol) else {
            continue; // tangential or vertex contact: regenerate
        };

        // parity and alternation per critical radius
        for class in g.spec.radii() {
            if class.radius == rational_from_u64(0, 1) {
                continue;
            }
            let rho = rational_to_f64(&class.radius);
            let crossings = circle_crossings(valid.points(), rho, &tol).unwrap();
            assert_eq!(crossings.len() % 2, 0, "odd crossing count at {rho}");
            for (i, c) in crossings.iter().enumerate() {
                let expected = if i % 2 == 0 {
                    CrossingDirection::Inward
                } else {
                    CrossingDirection::Outward
                };
                assert_eq!(c.direction, expected, "no alternation at {rho}");
            }
        }

        // complement symmetry of the multiplier sums: a_j = b_{k-j}
        let counts = curve_counts(&g.spec, &table);
        for j in 0..=g.k {
            assert_eq!(counts.a[j], counts.b[g.k - j], "complement symmetry");
        }

        // reversal invariance
        let reversed = validate_curve(&g.curve.reversed(), &g.spec, &tol).unwrap();
        assert_eq!(multipliers(&reversed, &g.spec, &tol).unwrap(), table);

        // refinement invariance: split a segment whose midpoint stays clear
        // of every critical circle
        let pts = valid.points();
        let radii: Vec<f64> = g
            .spec
            .radii()
            .iter()
            .map(|c| rational_to_f64(&c.radius))
            .collect();
        let split = (0..pts.len() - 1).find(|&i| {
            let mid = [
                0.5 * (pts[i][0] + pts[i + 1][0]),
                0.5 * (pts[i][1] + pts[i + 1][1]),
            ];
            let r = (mid[0] * mid[0] + mid[1] * mid[1]).sqrt();
            radii.iter().all(|&rho| (r - rho).abs() > 1e-4)
        });
        if let Some(i) = split {
            let mut refined = pts.to_vec();
            refined.insert(
                i + 1,
                [
                    0.5 * (pts[i][0] + pts[i + 1][0]),
                    0.5 * (pts[i][1] + pts[i + 1][1]),
                ],
            );
            let refined = PlanarCurve::new(refined).unwrap();
            let refined_valid = validate_curve(&refined, &g.spec, &tol).unwrap();
            assert_eq!(
                multipliers(&refined_valid, &g.spec, &tol).unwrap(),
                table,
                "refinement changed multipliers"
            );
        }

        accepted += 1;
    }
    println!("curve invariants held on {accepted} polylines ({attempts} attempts)");
}

#[test]
fn chord_consistency_across_regular_heights() {
    use linkhom_core::curve::line_curve_consistency;
    use linkhom_core::rational::Rational;
    use num_traits::{One, Signed};

    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0DE);
    let mut compared = 0usize;
    while compared < 40 {
        let k = *[2usize, 3, 4].choose(&mut rng).unwrap();
        let lengths: Vec<_> = (0..k)
            .map(|_| rational_from_u64(rng.random_range(1..=5), rng.random_range(1..=5)))
            .collect();
        let link = Linkage::new(lengths).unwrap();
        let (normalized, _) = link.normalize();
        let spec = spectrum(&normalized, DEFAULT_ENUMERATION_CAP).unwrap();
        // midpoint between two adjacent critical values: regular by
        // construction, and strictly inside (-1, 1)
        let values = spec.critical_values();
        let i = rng.random_range(0..values.len() - 1);
        let h = (&values[i] + &values[i + 1]) / Rational::from_integer(2.into());
        if h.abs() >= Rational::one() {
            continue;
        }
        let report = line_curve_consistency(&link, &h, &tol, DEFAULT_ENUMERATION_CAP)
            .expect("regular non-tangent chord");
        assert!(report.agree, "chord and line formulas disagree at h = {h}");
        compared += 1;
    }
}
