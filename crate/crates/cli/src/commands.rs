use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use framedyn::analysis::{
    causality_probe, census, occupancy_readings, transitivity_experiment, verify_periods, CensusSpec, Family,
    Perturbation, TransitivitySpec,
};
use framedyn::curvature::curvature_report;
use framedyn::ds::{is_ds_manifold, is_ds_sphere};
use framedyn::dual::DualGraph;
use framedyn::eddie::tracer_orbit;
use framedyn::engine::Evolver;
use framedyn::orbit::orbit_in;
use framedyn::{io, Bundle, Configuration, Simplex, SimplicialComplex};
use serde::Serialize;
use serde_json::json;

use crate::args::*;
use crate::error::{CliError, CliResult};
use crate::source::{load_scenario, parse_frame, parse_vertices, read_json, write, Scenario, DEFAULT_CAP};

/// How a successful run ended; maps onto the process exit code.
#[derive(Debug, PartialEq, Eq)]
pub enum Status {
    Done,
    Truncated,
    ProbeViolation,
}

/// Writes `contents` to `dir/name`, or to stdout without a directory.
fn emit(dir: Option<&Path>, name: &str, contents: &str) -> CliResult<()> {
    match dir {
        Some(d) => {
            let path = d.join(name);
            write(&path, contents)?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{contents}"),
    }
    Ok(())
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct Checks {
    #[serde(skip_serializing_if = "Option::is_none")]
    ds_sphere: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ds_manifold: Option<bool>,
}

pub fn complex(args: &ComplexArgs) -> CliResult<Status> {
    let c = args.source.load()?;
    let summary = c.summary()?;
    let walls = c.classify_walls();
    let curvature = curvature_report(&c);
    let dual = DualGraph::new(&c);
    let checks = Checks {
        ds_sphere: args.check.contains(&Check::DsSphere).then(|| is_ds_sphere(&c).is_sphere),
        ds_manifold: args.check.contains(&Check::DsManifold).then(|| is_ds_manifold(&c)),
    };
    let report = json!({
        "dimension": c.dim(),
        "summary": summary,
        "walls": walls,
        "checks": checks,
        "curvature": curvature,
        "dual_graph": dual.report(),
    });

    if let Some(dir) = &args.out {
        emit(Some(dir), "report.json", &pretty(&report))?;
        emit(Some(dir), "dual.dot", &dual.to_dot())?;
        emit(Some(dir), "facets.txt", &io::write_facets(&c))?;
        return Ok(Status::Done);
    }
    let text = match args.format {
        Format::Json => pretty(&report),
        Format::Dot => dual.to_dot(),
        Format::Csv => {
            let mut out = String::from("vertex,curvature\n");
            for k in &curvature.vertices {
                let _ = writeln!(out, "{},{}", k.vertex, k.curvature);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let f: Vec<String> = summary.f_vector.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "dimension: {}", c.dim());
            let _ = writeln!(out, "f-vector: ({})", f.join(", "));
            let _ = writeln!(out, "f-polynomial: {}", summary.f_polynomial);
            let _ = writeln!(out, "euler characteristic: {}", summary.euler_characteristic);
            let _ = writeln!(
                out,
                "walls: {} interior, {} boundary, {} in three or more facets",
                walls.interior.len(),
                walls.boundary.len(),
                walls.violations.len()
            );
            let list = |ws: &[Simplex]| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
            if !walls.boundary.is_empty() {
                let _ = writeln!(out, "boundary walls: {}", list(&walls.boundary));
            }
            if !walls.violations.is_empty() {
                let _ = writeln!(out, "violating walls: {}", list(&walls.violations));
            }
            let _ = writeln!(out, "pure: {}", walls.pure);
            let _ = writeln!(out, "admissible: {}", walls.admissible);
            if let Some(v) = checks.ds_sphere {
                let _ = writeln!(out, "ds-sphere: {v}");
            }
            if let Some(v) = checks.ds_manifold {
                let _ = writeln!(out, "ds-manifold: {v}");
            }
            let _ = writeln!(out, "curvature (total {}):", curvature.total);
            for k in &curvature.vertices {
                let _ = writeln!(out, "  {:>4}  {}", k.vertex, k.curvature);
            }
            let d = dual.report();
            let degree = d.regular_degree.map_or("irregular".to_string(), |k| format!("regular of degree {k}"));
            let _ = writeln!(
                out,
                "dual graph: {} nodes, {} edges, {degree}, triangle-free {}",
                d.nodes, d.edges, d.triangle_free
            );
            out
        }
    };
    print!("{text}");
    Ok(Status::Done)
}

fn read_config(path: Option<&PathBuf>) -> CliResult<Configuration> {
    path.map_or(Ok(Configuration::empty()), |p| read_json(p))
}

fn jsonl_line(t: usize, key: &str, value: &impl Serialize) -> String {
    let v = serde_json::to_string(value).expect("serializes");
    format!("{{\"t\":{t},\"{key}\":{v}}}\n")
}

fn occupancy_csv(bundle: &Bundle, states: &[Configuration]) -> CliResult<String> {
    let mut out = String::from("t,facet,positive,negative\n");
    for (t, cfg) in states.iter().enumerate() {
        let s = bundle.encode(cfg)?;
        let mut counts = vec![(0usize, 0usize); bundle.facets().len()];
        for &p in &s.positive {
            counts[bundle.facet_of(p)].0 += 1;
        }
        for &p in &s.negative {
            counts[bundle.facet_of(p)].1 += 1;
        }
        for (f, (k, l)) in bundle.facets().iter().zip(counts) {
            let label: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{t},{},{k},{l}", label.join(" "));
        }
    }
    Ok(out)
}

pub fn evolve(args: &EvolveArgs) -> CliResult<Status> {
    let mut sc = match &args.scenario {
        Some(path) => load_scenario(path)?,
        None => {
            let c = args.source.load()?;
            let bundle = Bundle::new(&c)?;
            let configuration = read_config(args.config.as_ref())?;
            bundle.encode(&configuration)?;
            Scenario {
                bundle,
                configuration,
                mode: Default::default(),
                steps: None,
                cap: DEFAULT_CAP,
                orbit_out: None,
                occupancy_out: None,
            }
        }
    };
    if let Some(m) = args.mode {
        sc.mode = m.into();
    }
    if args.steps.is_some() {
        sc.steps = args.steps;
    }
    if let Some(cap) = args.cap {
        sc.cap = cap;
    }
    if let Some(dir) = &args.out {
        sc.orbit_out = Some(dir.join("orbit.jsonl"));
        if args.occupancy {
            sc.occupancy_out = Some(dir.join("occupancy.csv"));
        }
    } else if args.occupancy && sc.occupancy_out.is_none() {
        return Err(CliError::Usage("--occupancy needs --out".into()));
    }

    let b = &sc.bundle;
    let record = orbit_in(b, &sc.configuration, sc.cap, sc.mode)?;
    let states: Vec<Configuration> = match sc.steps {
        Some(n) => {
            let mut ev = Evolver::new(b);
            let mut cur = b.encode(&sc.configuration)?;
            let mut out = vec![sc.configuration.clone()];
            for _ in 0..n {
                cur = ev.step_in_mode(&cur, sc.mode);
                out.push(b.decode(&cur));
            }
            out
        }
        None => {
            let mut out = record.states.clone();
            if record.period.is_some() {
                out.push(sc.configuration.clone());
            }
            out
        }
    };
    let log: String = states.iter().enumerate().map(|(t, s)| jsonl_line(t, "state", s)).collect();
    match &sc.orbit_out {
        Some(p) => {
            write(p, &log)?;
            eprintln!("wrote {}", p.display());
        }
        None => print!("{log}"),
    }
    if let Some(p) = &sc.occupancy_out {
        write(p, &occupancy_csv(b, &states)?)?;
        eprintln!("wrote {}", p.display());
    }
    let verdict = match record.period {
        Some(p) => format!("period {p}"),
        None => format!("no return within {} steps", sc.cap),
    };
    if sc.orbit_out.is_some() {
        println!("{verdict}");
    } else {
        eprintln!("{verdict}");
    }
    Ok(if record.truncated { Status::Truncated } else { Status::Done })
}

pub fn census_cmd(args: &CensusArgs) -> CliResult<Status> {
    let c = args.source.load()?;
    let bundle = Bundle::new(&c)?;
    let family = match args.family {
        FamilyArg::PinnedPairs => Family::PinnedPairs,
        FamilyArg::Singles => Family::Singles,
        FamilyArg::Random => Family::Random {
            positive: args.positive,
            negative: args.negative,
        },
        FamilyArg::Explicit => {
            let path = args
                .configs
                .as_ref()
                .ok_or_else(|| CliError::Usage("explicit family needs --configs".into()))?;
            Family::Explicit {
                configurations: read_json(path)?,
            }
        }
    };
    let sampled = args.sample.is_some() || args.family == FamilyArg::Random;
    if sampled && args.seed.is_none() {
        return Err(CliError::Usage("sampled census needs --seed".into()));
    }
    let mut spec = CensusSpec::new(family);
    spec.sample = args.sample;
    spec.seed = args.seed.unwrap_or(0);
    spec.cap = args.cap;
    spec.mode = args.mode.into();

    let table = census(&bundle, &spec, args.workers)?;
    if let Some(fraction) = args.verify {
        let n = verify_periods(&bundle, &spec, &table, fraction, spec.seed)?;
        eprintln!("re-verified {n} periods");
    }
    let s = &table.summary;
    let line = format!(
        "processed {}, truncated {}, max period {}",
        s.processed,
        s.truncated,
        s.max_period.map_or("-".to_string(), |p| p.to_string())
    );
    match &args.out {
        Some(dir) => {
            emit(Some(dir), "census.csv", &table.to_csv())?;
            emit(Some(dir), "census-summary.json", &(table.summary_json() + "\n"))?;
            println!("{line}");
        }
        None => {
            match args.format {
                Format::Json => println!("{}", table.summary_json()),
                _ => print!("{}", table.to_csv()),
            }
            eprintln!("{line}");
        }
    }
    Ok(if s.truncated > 0 { Status::Truncated } else { Status::Done })
}

pub fn probe(args: &ProbeArgs) -> CliResult<Status> {
    let c = args.source.load()?;
    let bundle = Bundle::new(&c)?;
    let cfg = read_config(args.config.as_ref())?;
    let origin = Simplex::new(parse_vertices(&args.origin)?)?;
    let index = bundle
        .facets()
        .iter()
        .position(|f| *f == origin)
        .ok_or_else(|| CliError::Usage(format!("{origin} is not a facet")))?;
    let frame = || {
        args.frame
            .as_deref()
            .ok_or_else(|| CliError::Usage("this perturbation needs --frame".into()))
            .and_then(parse_frame)
    };
    let sign = args.sign.into();
    let perturbation = match args.perturb {
        PerturbArg::Identity => Perturbation::Identity,
        PerturbArg::Add => Perturbation::Add { sign, frame: frame()? },
        PerturbArg::Remove => Perturbation::Remove { sign, frame: frame()? },
        PerturbArg::Rotate => Perturbation::Rotate {
            sign,
            frame: frame()?,
            by: args.by,
        },
    };
    let steps = args.steps.unwrap_or_else(|| bundle.dual_graph().diameter());
    match causality_probe(&bundle, &cfg, index, &perturbation, steps) {
        Ok(report) => {
            emit(args.out.as_deref(), "probe.json", &pretty(&report))?;
            Ok(Status::Done)
        }
        Err(e @ framedyn::Error::LightCone(_)) => {
            eprintln!("error: {e}");
            Ok(Status::ProbeViolation)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn trace(args: &TraceArgs) -> CliResult<Status> {
    let c = args.source.load()?;
    let bundle = Bundle::new(&c)?;
    if let Some(from) = &args.from {
        let background = read_config(args.config.as_ref())?;
        let path = tracer_orbit(&bundle, &background, &parse_frame(from)?, args.steps)?;
        let log: String = path.iter().enumerate().map(|(t, p)| jsonl_line(t, "frame", p)).collect();
        emit(args.out.as_deref(), "tracer.jsonl", &log)?;
        return Ok(Status::Done);
    }
    let spec = TransitivitySpec {
        density: args.density,
        horizon: args.horizon,
        trials: args.trials,
        seed: args.seed,
    };
    let report = transitivity_experiment(&bundle, &spec, args.workers)?;
    emit(args.out.as_deref(), "transitivity.json", &pretty(&report))?;
    eprintln!(
        "reached {:.4} of frame pairs within {} steps, {:.4} within {}",
        report.hit_fraction, spec.horizon, report.log_hit_fraction, report.log_horizon
    );
    Ok(Status::Done)
}

pub fn occupancy(args: &OccupancyArgs) -> CliResult<Status> {
    let c: SimplicialComplex = args.source.load()?;
    let bundle = Bundle::new(&c)?;
    let readings = occupancy_readings(&bundle, args.copies, args.steps, args.cap)?;
    print!("{}", pretty(&readings));
    Ok(Status::Done)
}
