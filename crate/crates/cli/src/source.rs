//! Complex sources, configuration files and scenario files.

use std::fs;
use std::path::{Path, PathBuf};

use framedyn::{generators, io, Bundle, Configuration, Frame, Mode, SimplicialComplex};
use serde::Deserialize;

use crate::args::{Generator, SourceArgs};
use crate::error::{CliError, CliResult};

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
    }
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    serde_json::from_str(&read(path)?).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })
}

pub fn generate(g: Generator, dim: Option<usize>, n: Option<usize>) -> CliResult<SimplicialComplex> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("generator {g:?} needs --{flag}")))
    };
    Ok(match g {
        Generator::CrossPolytope => generators::cross_polytope(need(dim, "dim")?)?,
        Generator::Cycle => generators::cycle(need(n, "n")?)?,
        Generator::Path => generators::path(need(n, "n")?)?,
        Generator::Simplex => generators::simplex(need(n.or(dim), "n")?)?,
        Generator::Octahedron => generators::octahedron(),
        Generator::Icosahedron => generators::icosahedron(),
        Generator::Torus7 => generators::torus7(),
    })
}

impl SourceArgs {
    pub fn load(&self) -> CliResult<SimplicialComplex> {
        match (&self.facets, &self.edges, self.generator) {
            (Some(path), None, None) => Ok(io::parse_facets(&read(path)?)?),
            (None, Some(path), None) => Ok(SimplicialComplex::whitney(io::parse_edges(&read(path)?)?)?),
            (None, None, Some(g)) => generate(g, self.dim, self.n),
            _ => Err(CliError::Usage(
                "give exactly one of --facets, --edges with --whitney, or --generator".into(),
            )),
        }
    }
}

/// Comma- or space-separated vertex list.
pub fn parse_vertices(text: &str) -> CliResult<Vec<u32>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("`{t}` in `{text}` is not a vertex")))
        })
        .collect()
}

pub fn parse_frame(text: &str) -> CliResult<Frame> {
    Ok(Frame::new(parse_vertices(text)?))
}

/// Where a scenario's complex comes from. Exactly one source must be set.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub generator: Option<String>,
    pub dim: Option<usize>,
    pub n: Option<usize>,
    pub facets: Option<PathBuf>,
    pub edges: Option<PathBuf>,
    #[serde(default)]
    pub whitney: bool,
    /// Facets written inline.
    pub facet_list: Option<Vec<Vec<u32>>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Outputs {
    pub orbit: Option<PathBuf>,
    pub occupancy: Option<PathBuf>,
}

/// A declarative run: complex, initial configuration, mode and outputs.
/// Relative paths are resolved against the scenario file's directory.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub complex: ComplexSpec,
    pub configuration: Option<Configuration>,
    /// Configuration JSON file, instead of an inline configuration.
    pub config: Option<PathBuf>,
    #[serde(default)]
    pub mode: Mode,
    pub steps: Option<usize>,
    pub cap: Option<usize>,
    #[serde(default)]
    pub outputs: Outputs,
}

/// A validated scenario.
pub struct Scenario {
    pub bundle: Bundle,
    pub configuration: Configuration,
    pub mode: Mode,
    pub steps: Option<usize>,
    pub cap: usize,
    pub orbit_out: Option<PathBuf>,
    pub occupancy_out: Option<PathBuf>,
}

pub const DEFAULT_CAP: usize = 10_000;

fn generator_named(name: &str) -> Option<Generator> {
    use clap::ValueEnum;
    Generator::from_str(name, true).ok()
}

impl ScenarioFile {
    /// Checks everything and reports every problem found, not just the first.
    pub fn validate(self, base: &Path) -> CliResult<Scenario> {
        let resolve = |p: &Path| base.join(p);
        let mut problems = Vec::new();

        let c = &self.complex;
        let sources = [
            c.generator.is_some(),
            c.facets.is_some(),
            c.edges.is_some(),
            c.facet_list.is_some(),
        ];
        let complex = match sources.iter().filter(|&&s| s).count() {
            1 => {
                let built: CliResult<SimplicialComplex> = if let Some(name) = &c.generator {
                    match generator_named(name) {
                        Some(g) => generate(g, c.dim, c.n),
                        None => Err(CliError::Usage(format!("unknown generator `{name}`"))),
                    }
                } else if let Some(p) = &c.facets {
                    read(&resolve(p)).and_then(|t| Ok(io::parse_facets(&t)?))
                } else if let Some(p) = &c.edges {
                    if !c.whitney {
                        problems.push("complex.edges needs \"whitney\": true".to_string());
                    }
                    read(&resolve(p)).and_then(|t| Ok(SimplicialComplex::whitney(io::parse_edges(&t)?)?))
                } else {
                    SimplicialComplex::closure_of(c.facet_list.clone().unwrap_or_default()).map_err(Into::into)
                };
                built.map_err(|e| problems.push(format!("complex: {e}"))).ok()
            }
            0 => {
                problems.push("complex: no source (generator, facets, edges or facet_list)".into());
                None
            }
            _ => {
                problems.push("complex: more than one source given".into());
                None
            }
        };
        let bundle = complex.and_then(|c| Bundle::new(&c).map_err(|e| problems.push(format!("complex: {e}"))).ok());

        let configuration = match (self.configuration, &self.config) {
            (Some(cfg), None) => Some(cfg),
            (None, Some(p)) => read_json(&resolve(p)).map_err(|e| problems.push(format!("config: {e}"))).ok(),
            (None, None) => {
                problems.push("no configuration or config given".into());
                None
            }
            (Some(_), Some(_)) => {
                problems.push("both configuration and config given".into());
                None
            }
        };
        if let (Some(b), Some(cfg)) = (&bundle, &configuration) {
            for (sign, p) in cfg.particles() {
                if b.id(p).is_err() {
                    problems.push(format!("configuration: {sign:?} particle at {p} is not a frame of the complex"));
                }
            }
        }
        if self.cap == Some(0) {
            problems.push("cap must be at least 1".into());
        }

        match (bundle, configuration) {
            (Some(bundle), Some(configuration)) if problems.is_empty() => Ok(Scenario {
                bundle,
                configuration,
                mode: self.mode,
                steps: self.steps,
                cap: self.cap.unwrap_or(DEFAULT_CAP),
                orbit_out: self.outputs.orbit.map(|p| resolve(&p)),
                occupancy_out: self.outputs.occupancy.map(|p| resolve(&p)),
            }),
            _ => Err(CliError::Scenario(problems)),
        }
    }
}

pub fn load_scenario(path: &Path) -> CliResult<Scenario> {
    let file: ScenarioFile = read_json(path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    file.validate(base)
}
