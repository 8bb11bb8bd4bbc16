use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use framedyn::{Mode, Sign};

#[derive(Parser, Debug)]
#[command(name = "framedyn", version, about = "Signed-particle dynamics on simplicial complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect a complex: f-vector, walls, curvature, dual graph.
    Complex(ComplexArgs),
    /// Evolve a configuration and log its orbit.
    Evolve(EvolveArgs),
    /// Orbit periods over a family of initial configurations.
    Census(CensusArgs),
    /// Compare an orbit with a locally perturbed copy.
    Probe(ProbeArgs),
    /// Follow eddie tracers through a background.
    Trace(TraceArgs),
    /// Fill the space with particles and classify the induced motion.
    Occupancy(OccupancyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    CrossPolytope,
    Cycle,
    Path,
    Simplex,
    Octahedron,
    Icosahedron,
    Torus7,
}

#[derive(Args, Debug, Default)]
pub struct SourceArgs {
    /// Facet file: one facet per line.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["edges", "generator"])]
    pub facets: Option<PathBuf>,
    /// Edge list, turned into its clique complex with --whitney.
    #[arg(long, value_name = "FILE", requires = "whitney", conflicts_with = "generator")]
    pub edges: Option<PathBuf>,
    #[arg(long, requires = "edges")]
    pub whitney: bool,
    #[arg(long, value_enum)]
    pub generator: Option<Generator>,
    /// Dimension for cross-polytope (and simplex).
    #[arg(long)]
    pub dim: Option<usize>,
    /// Size for cycle, path and simplex.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    DsSphere,
    DsManifold,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Rotation,
    Fermion,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Rotation => Mode::Rotation,
            ModeArg::Fermion => Mode::Fermion,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Positive,
    Negative,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Positive => Sign::Positive,
            SignArg::Negative => Sign::Negative,
        }
    }
}

#[derive(Args, Debug)]
pub struct ComplexArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum)]
    pub check: Vec<Check>,
    /// text, json or dot (dual graph).
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Writes report.json, dual.dot and facets.txt here.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EvolveArgs {
    /// Declarative scenario file; replaces the source and config flags.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["facets", "edges", "generator", "config"])]
    pub scenario: Option<PathBuf>,
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Log exactly this many steps instead of one full orbit.
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub cap: Option<usize>,
    /// Also write a per-step facet occupancy table.
    #[arg(long)]
    pub occupancy: bool,
    /// Writes orbit.jsonl (and occupancy.csv) here instead of stdout.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    PinnedPairs,
    Singles,
    Random,
    Explicit,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Positive particles per random configuration.
    #[arg(long, default_value_t = 1)]
    pub positive: usize,
    /// Negative particles per random configuration.
    #[arg(long, default_value_t = 1)]
    pub negative: usize,
    /// JSON array of configurations for the explicit family.
    #[arg(long, value_name = "FILE")]
    pub configs: Option<PathBuf>,
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 10_000)]
    pub cap: usize,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long, value_enum, default_value = "rotation")]
    pub mode: ModeArg,
    /// Re-check this fraction of periods with the frame-level dynamics.
    #[arg(long, value_name = "FRACTION")]
    pub verify: Option<f64>,
    /// csv (table) or json (summary) on stdout when --out is absent.
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Writes census.csv and census-summary.json here.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PerturbArg {
    Identity,
    Add,
    Remove,
    Rotate,
}

#[derive(Args, Debug)]
pub struct ProbeArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Starting configuration; empty if absent.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Origin facet, as comma-separated vertices.
    #[arg(long, value_name = "V,V,...")]
    pub origin: String,
    #[arg(long, value_enum, default_value = "identity")]
    pub perturb: PerturbArg,
    #[arg(long, value_enum, default_value = "positive")]
    pub sign: SignArg,
    /// Frame to add, remove or rotate, as comma-separated vertices.
    #[arg(long, value_name = "V,V,...")]
    pub frame: Option<String>,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub by: i64,
    /// Defaults to the dual-graph diameter.
    #[arg(long)]
    pub steps: Option<usize>,
    /// Writes probe.json here instead of stdout.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TraceArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Follow one eddie from this frame through the --config background.
    #[arg(long, value_name = "V,V,...")]
    pub from: Option<String>,
    #[arg(long, value_name = "FILE", requires = "from")]
    pub config: Option<PathBuf>,
    /// Steps for a single tracer.
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    #[arg(long, default_value_t = 0.1)]
    pub density: f64,
    #[arg(long, default_value_t = 100)]
    pub horizon: usize,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Writes transitivity.json or tracer.jsonl here instead of stdout.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OccupancyArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, default_value_t = 1)]
    pub copies: usize,
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    #[arg(long, default_value_t = 10_000)]
    pub cap: usize,
}
