//! Serializable reports. Rationals are always strings in canonical `p/q`
//! form, never floats; field order is fixed by the struct declarations so
//! identical inputs produce byte-identical JSON.

use serde::{Deserialize, Serialize};

use linkhom_core::{format_rational, BettiVector, Rational};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LineReport {
    pub k: usize,
    /// Height in normalized units (input h times the normalization factor).
    pub h: String,
    pub normalized_lengths: Vec<String>,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub betti: Vec<u64>,
    pub euler: i64,
    pub regular: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MultiplierReport {
    pub radius: String,
    pub mu: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CurveReport {
    pub k: usize,
    pub normalized_lengths: Vec<String>,
    pub multipliers: Vec<MultiplierReport>,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub betti: Vec<u64>,
    pub euler: i64,
    /// Interior vertices lying within the endpoint tolerance of the unit
    /// circle: kept, but worth a look.
    pub flagged_vertices: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ConfigReport {
    pub mask: u32,
    /// 1-based edge indices pointing up in this configuration.
    pub subset: Vec<usize>,
    pub r: String,
    pub index: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RadiusReport {
    pub radius: String,
    pub masks: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RadiiReport {
    pub k: usize,
    pub alpha: String,
    pub normalized_lengths: Vec<String>,
    pub configs: Vec<ConfigReport>,
    pub radii: Vec<RadiusReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TorsionReport {
    pub degree: usize,
    pub factors: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SampleReport {
    pub angles: Vec<f64>,
    pub s2: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OracleReport {
    pub n: u32,
    /// Thickening half-width in normalized units.
    pub delta: String,
    pub cells_per_dim: Vec<usize>,
    pub betti: Vec<u64>,
    pub torsion: Vec<TorsionReport>,
    /// True when the doubled-resolution run reproduces the same homology.
    pub stable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<SampleReport>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CaseReport {
    pub name: String,
    pub input: String,
    pub betti_formula: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti_oracle: Option<Vec<u64>>,
    /// True iff the computed vectors match element-wise with no torsion
    /// (or, for rejection cases, the expected rejection happened).
    pub agreement: bool,
    pub notes: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerifySummary {
    pub total: usize,
    pub passed: usize,
    pub inconclusive: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerifyReport {
    pub cases: Vec<CaseReport>,
    pub summary: VerifySummary,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ErrorBody {
    pub code: String,
    pub class: String,
    pub message: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Line(LineReport),
    Curve(CurveReport),
    Radii(RadiiReport),
    Oracle(OracleReport),
    Verify(VerifyReport),
}

pub fn rational_string(r: &Rational) -> String {
    format_rational(r)
}

pub fn torsion_reports(bv: &BettiVector) -> Vec<TorsionReport> {
    bv.torsion
        .iter()
        .map(|t| TorsionReport {
            degree: t.degree,
            factors: t.factors.iter().map(|f| f.to_string()).collect(),
        })
        .collect()
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut text = match self {
            Report::Line(r) => serde_json::to_string_pretty(r),
            Report::Curve(r) => serde_json::to_string_pretty(r),
            Report::Radii(r) => serde_json::to_string_pretty(r),
            Report::Oracle(r) => serde_json::to_string_pretty(r),
            Report::Verify(r) => serde_json::to_string_pretty(r),
        }
        .expect("report serialization");
        text.push('\n');
        text
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut row = |key: &str, value: String| {
            out.push_str(&format!("{key:<22}{value}\n"));
        };
        fn join<T: std::fmt::Display>(v: &[T]) -> String {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        }
        match self {
            Report::Line(r) => {
                row("k", r.k.to_string());
                row("h (normalized)", r.h.clone());
                row("lengths", r.normalized_lengths.join(" "));
                row("a", join(&r.a));
                row("b", join(&r.b));
                row("betti", join(&r.betti));
                row("euler", r.euler.to_string());
                row("regular", r.regular.to_string());
            }
            Report::Curve(r) => {
                row("k", r.k.to_string());
                row("lengths", r.normalized_lengths.join(" "));
                for m in &r.multipliers {
                    row(&format!("mu[{}]", m.radius), m.mu.to_string());
                }
                row("a", join(&r.a));
                row("b", join(&r.b));
                row("betti", join(&r.betti));
                row("euler", r.euler.to_string());
                if !r.flagged_vertices.is_empty() {
                    row("flagged vertices", join(&r.flagged_vertices));
                }
            }
            Report::Radii(r) => {
                row("k", r.k.to_string());
                row("alpha", r.alpha.clone());
                row("lengths", r.normalized_lengths.join(" "));
                for class in &r.radii {
                    row(
                        &format!("radius {}", class.radius),
                        format!("{} subsets", class.masks.len()),
                    );
                }
            }
            Report::Oracle(r) => {
                row("n", r.n.to_string());
                row("delta", r.delta.clone());
                row("cells per dim", join(&r.cells_per_dim));
                row("betti", join(&r.betti));
                row(
                    "torsion",
                    if r.torsion.is_empty() { "none".into() } else { format!("{:?}", r.torsion) },
                );
                row("stable", r.stable.to_string());
            }
            Report::Verify(r) => {
                for case in &r.cases {
                    let status = if case.agreement {
                        "ok"
                    } else if case.notes.starts_with("inconclusive") {
                        "inc"
                    } else {
                        "FAIL"
                    };
                    out.push_str(&format!(
                        "{status:<6}{:<44}{}\n",
                        case.name,
                        case.notes
                    ));
                }
                out.push_str(&format!(
                    "total {} passed {} inconclusive {} failed {}\n",
                    r.summary.total, r.summary.passed, r.summary.inconclusive, r.summary.failed
                ));
            }
        }
        out
    }
}
