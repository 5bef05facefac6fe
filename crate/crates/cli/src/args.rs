use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Homology of planar robotic arms constrained to a line or a curve.
#[derive(Debug, Parser)]
#[command(name = "linkhom", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Endpoint distance tolerance from the unit circle.
    #[arg(long = "tol-end", global = true, default_value_t = 1e-6)]
    pub tol_end: f64,

    /// Vertex-coincidence and origin-clearance tolerance.
    #[arg(long = "tol-geo", global = true, default_value_t = 1e-9)]
    pub tol_geo: f64,

    /// Normalized-discriminant tolerance below which an intersection is
    /// tangential.
    #[arg(long = "tol-tan", global = true, default_value_t = 1e-7)]
    pub tol_tan: f64,

    /// Cap on the number of edges for subset enumeration (2^k states).
    #[arg(long = "max-k", global = true, default_value_t = 24)]
    pub max_k: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Critical radii and collinear configurations of an arm.
    Radii {
        /// Edge lengths as rationals: `1/3,1/3,1/3`, `0.5,0.5`, or a JSON
        /// array of strings.
        #[arg(long)]
        lengths: String,
    },
    /// Homology ranks for the endpoint constrained to the line y = h.
    Line {
        #[arg(long)]
        lengths: String,
        /// Height of the line, as a rational in the same units as the lengths.
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    /// Homology ranks for the endpoint constrained to a polyline curve.
    Curve {
        #[arg(long)]
        lengths: String,
        /// JSON curve file: {"points": [[x, y], ...]}.
        #[arg(long)]
        curve: PathBuf,
    },
    /// Brute-force cubical homology of the thickened level set.
    Oracle {
        #[arg(long)]
        lengths: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        /// Grid subdivisions per angular factor (the stability check reruns
        /// at twice this).
        #[arg(long = "grid-n", default_value_t = 16)]
        grid_n: u32,
        /// Override the thickening half-width (rational, same units as the
        /// lengths). Default: half the gap to the nearest other critical
        /// value.
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        /// Include the centers of the sampled band cubes in the report.
        #[arg(long = "dump-samples")]
        dump_samples: bool,
    },
    /// Cross-verification suite: worked examples, exhaustive counting
    /// sweeps, and randomized formula-vs-oracle comparisons.
    Verify {
        #[arg(long = "grid-n", default_value_t = 16)]
        grid_n: u32,
        /// Number of randomized formula-vs-oracle instances.
        #[arg(long = "sweep-cases", default_value_t = 50)]
        sweep_cases: usize,
        #[arg(long, default_value_t = 0x1517)]
        seed: u64,
        /// Shrink every sweep for a fast smoke run.
        #[arg(long)]
        quick: bool,
    },
}
