use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "lpp-cones", version, about = "Cones of longest paths in last passage percolation on finite posets")]
pub struct Cli {
    /// Worker threads for simulation and per-path analyses (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Print a human-readable table instead of JSON on stdout.
    #[arg(long, global = true)]
    pub table: bool,

    #[command(flatten)]
    pub guards: GuardArgs,

    #[command(subcommand)]
    pub command: Command,
}

/// Overrides for the enumeration size guards; unset fields fall back to
/// the LPP_CONES_MAX_* environment variables, then to built-in defaults.
#[derive(Debug, Clone, Args, Serialize)]
pub struct GuardArgs {
    #[arg(long, global = true)]
    pub max_vertices: Option<usize>,
    #[arg(long, global = true)]
    pub max_extension_vertices: Option<usize>,
    #[arg(long, global = true)]
    pub max_ideals: Option<usize>,
    #[arg(long, global = true)]
    pub max_items: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PosetArgs {
    /// grid:MxN, young:a,b,c, or a JSON file {"labels": [...], "covers": [[a, b], ...]}.
    #[arg(long)]
    pub poset: String,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Mc,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct LawArgs {
    /// exp, uniform, or custom:<sampler> with sampler abs-normal or gamma:<shape>.
    #[arg(long, default_value = "exp")]
    pub law: String,
    /// Exponential rates: "unit", a comma-separated list of rationals, or @file.json.
    #[arg(long, default_value = "unit")]
    pub rates: String,
    #[arg(long, default_value_t = 100_000)]
    pub reps: u64,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "subcommand", rename_all = "lowercase")]
pub enum Command {
    /// List the maximal chains.
    Paths {
        #[command(flatten)]
        #[serde(flatten)]
        poset: PosetArgs,
    },
    /// List the nonempty antichains.
    Antichains {
        #[command(flatten)]
        #[serde(flatten)]
        poset: PosetArgs,
    },
    /// Count and list the linear extensions.
    Extensions {
        #[command(flatten)]
        #[serde(flatten)]
        poset: PosetArgs,
    },
    /// Extreme rays, facets and two-dimensional faces of path cones.
    Cone {
        #[command(flatten)]
        #[serde(flatten)]
        poset: PosetArgs,
        /// all, a path index, or a JSON array of vertex indices or labels.
        #[arg(long, default_value = "all")]
        path: String,
    },
    /// Simplicial cells, one per linear extension.
    Simplices {
        #[command(flatten)]
        #[serde(flatten)]
        poset: PosetArgs,
        /// Group cells by their Schützenberger path.
        #[arg(long)]
        group_by_path: bool,
    },
    /// Probability that each path is the longest.
    Pathprob {
        #[command(flatten)]
        #[serde(flatten)]
        poset: PosetArgs,
        #[command(flatten)]
        #[serde(flatten)]
        law: LawArgs,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Longest-path length and transversal deviation statistics on a grid.
    Simulate {
        #[command(flatten)]
        #[serde(flatten)]
        poset: PosetArgs,
        #[command(flatten)]
        #[serde(flatten)]
        law: LawArgs,
        /// Write the deviation histogram as CSV.
        #[arg(long)]
        #[serde(skip)]
        histogram_csv: Option<PathBuf>,
        /// Write one CSV row per replicate.
        #[arg(long)]
        #[serde(skip)]
        records_csv: Option<PathBuf>,
    },
    /// Check structural results against the exact oracle.
    Verify {
        #[command(flatten)]
        #[serde(flatten)]
        poset: PosetArgs,
        /// all, rays, facets, faces, determinants, probability or tail.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random cone points per path for the ray completeness check.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    pub fn poset_args(&self) -> &PosetArgs {
        match self {
            Command::Paths { poset }
            | Command::Antichains { poset }
            | Command::Extensions { poset }
            | Command::Cone { poset, .. }
            | Command::Simplices { poset, .. }
            | Command::Pathprob { poset, .. }
            | Command::Simulate { poset, .. }
            | Command::Verify { poset, .. } => poset,
        }
    }
}
