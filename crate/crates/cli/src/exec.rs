//! Command execution: parse inputs, call into the core library, assemble
//! reports.

use std::path::Path;

use serde::Deserialize;

use linkhom_core::arm::{spectrum, Linkage};
use linkhom_core::curve::{betti_curve_analysis, PlanarCurve, Tolerances};
use linkhom_core::line::line_analysis;
use linkhom_core::oracle::{band_samples, run_stabilized, GridSpec, DEFAULT_CELL_BUDGET};
use linkhom_core::{parse_rational, Error, ErrorClass};

use crate::report::{
    rational_string, torsion_reports, ConfigReport, CurveReport, LineReport, MultiplierReport,
    OracleReport, RadiiReport, RadiusReport, SampleReport,
};

#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub tol: Tolerances,
    pub cap: usize,
    pub budget: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            tol: Tolerances::default(),
            cap: linkhom_core::arm::DEFAULT_ENUMERATION_CAP,
            budget: DEFAULT_CELL_BUDGET,
        }
    }
}

/// Oracle cell cap: the environment variable overrides the default.
pub fn cell_budget_from_env() -> usize {
    std::env::var("LINKHOM_CELL_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_CELL_BUDGET)
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    BadCurveFile(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn code(&self) -> String {
        match self {
            CliError::Core(e) => e.code().to_string(),
            CliError::Io(_) => "io".into(),
            CliError::BadCurveFile(_) => "bad-curve-file".into(),
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            CliError::Core(e) => e.class(),
            CliError::Io(_) | CliError::BadCurveFile(_) => ErrorClass::Input,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io(m) => m.clone(),
            CliError::BadCurveFile(m) => format!("cannot read curve file: {m}"),
        }
    }
}

/// Lengths come either comma-separated (`1/3,1/3,1/3`) or as a JSON array
/// of strings (`["1/3","1/3","1/3"]`).
pub fn parse_lengths(arg: &str) -> Result<Linkage, Error> {
    let trimmed = arg.trim();
    let parts: Vec<String> = if trimmed.starts_with('[') {
        serde_json::from_str(trimmed)
            .map_err(|_| Error::InvalidLinkage(format!("cannot parse `{trimmed}` as a JSON array of rational strings")))?
    } else {
        trimmed.split(',').map(str::to_string).collect()
    };
    let lengths = parts
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()?;
    Linkage::new(lengths)
}

pub fn run_line(lengths: &str, h: &str, settings: &Settings) -> Result<LineReport, Error> {
    let link = parse_lengths(lengths)?;
    let h = parse_rational(h)?;
    let analysis = line_analysis(&link, &h, settings.cap)?;
    Ok(LineReport {
        k: analysis.normalized.k(),
        h: rational_string(&analysis.h),
        normalized_lengths: analysis
            .normalized
            .lengths()
            .iter()
            .map(rational_string)
            .collect(),
        a: analysis.counts.a,
        b: analysis.counts.b,
        betti: analysis.betti.ranks,
        euler: analysis.euler,
        regular: analysis.regular,
    })
}

#[derive(Deserialize)]
struct CurveFile {
    points: Vec<[f64; 2]>,
}

pub fn load_curve(path: &Path) -> Result<PlanarCurve, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let file: CurveFile =
        serde_json::from_str(&text).map_err(|e| CliError::BadCurveFile(e.to_string()))?;
    PlanarCurve::new(file.points).map_err(CliError::Core)
}

pub fn run_curve(
    lengths: &str,
    path: &Path,
    settings: &Settings,
) -> Result<CurveReport, CliError> {
    let link = parse_lengths(lengths)?;
    let curve = load_curve(path)?;
    let analysis = betti_curve_analysis(&link, &curve, &settings.tol, settings.cap)?;
    Ok(CurveReport {
        k: analysis.normalized.k(),
        normalized_lengths: analysis
            .normalized
            .lengths()
            .iter()
            .map(rational_string)
            .collect(),
        multipliers: analysis
            .multipliers
            .entries
            .iter()
            .map(|(radius, mu)| MultiplierReport { radius: rational_string(radius), mu: *mu })
            .collect(),
        a: analysis.counts.a,
        b: analysis.counts.b,
        betti: analysis.betti.ranks,
        euler: analysis.euler,
        flagged_vertices: analysis.flagged,
    })
}

pub fn run_radii(lengths: &str, settings: &Settings) -> Result<RadiiReport, Error> {
    let link = parse_lengths(lengths)?;
    let (normalized, alpha) = link.normalize();
    let spec = spectrum(&normalized, settings.cap)?;
    Ok(RadiiReport {
        k: spec.k(),
        alpha: rational_string(&alpha),
        normalized_lengths: normalized.lengths().iter().map(rational_string).collect(),
        configs: spec
            .configs()
            .iter()
            .map(|c| ConfigReport {
                mask: c.mask.0,
                subset: (0..spec.k()).filter(|&i| c.mask.contains(i)).map(|i| i + 1).collect(),
                r: rational_string(&c.r),
                index: c.index,
            })
            .collect(),
        radii: spec
            .radii()
            .iter()
            .map(|class| RadiusReport {
                radius: rational_string(&class.radius),
                masks: class.masks.iter().map(|m| m.0).collect(),
            })
            .collect(),
    })
}

pub fn run_oracle(
    lengths: &str,
    h: &str,
    grid_n: u32,
    delta: Option<&str>,
    dump_samples: bool,
    settings: &Settings,
) -> Result<OracleReport, Error> {
    let link = parse_lengths(lengths)?;
    let h = parse_rational(h)?;
    let delta = delta.map(parse_rational).transpose()?;
    let run = run_stabilized(&link, &h, grid_n, settings.budget, delta.as_ref(), settings.cap)?;

    let samples = if dump_samples {
        let (normalized, alpha) = link.normalize();
        let grid = GridSpec::new(
            normalized.k(),
            grid_n,
            &h * &alpha,
            run.coarse.delta.clone(),
        )?;
        let raw = band_samples(&normalized, &grid, settings.budget)?;
        Some(
            raw.into_iter()
                .map(|s| SampleReport { angles: s.angles, s2: s.s2 })
                .collect(),
        )
    } else {
        None
    };

    Ok(OracleReport {
        n: run.coarse.n,
        delta: rational_string(&run.coarse.delta),
        cells_per_dim: run.coarse.cells_per_dim.clone(),
        betti: run.coarse.betti.ranks.clone(),
        torsion: torsion_reports(&run.coarse.betti),
        stable: run.stable,
        samples,
    })
}

