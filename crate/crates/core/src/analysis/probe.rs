use serde::Serialize;

use crate::bundle::{Bundle, Frame};
use crate::complex::Simplex;
use crate::config::{Configuration, Sign};
use crate::engine::{Evolver, State};
use crate::error::{Error, Result};

/// A change to the particles over the probed facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Perturbation {
    Identity,
    Add { sign: Sign, frame: Frame },
    Remove { sign: Sign, frame: Frame },
    Rotate { sign: Sign, frame: Frame, by: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub origin: Simplex,
    pub steps: usize,
    pub perturbation: Perturbation,
    /// Dual-graph distance from the origin, per facet in canonical order.
    pub distances: Vec<Option<usize>>,
    /// First time the particle content of each facet differs.
    pub first_difference: Vec<Option<usize>>,
    /// Facets whose content differs, per time step `0..=steps`.
    pub cone: Vec<Vec<usize>>,
}

fn apply(bundle: &Bundle, cfg: &Configuration, origin: usize, p: &Perturbation) -> Result<Configuration> {
    let over_origin = |frame: &Frame| -> Result<()> {
        let id = bundle.id(frame)?;
        if bundle.facet_of(id) == origin {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "perturbed frame {frame} is not over facet {}",
                bundle.facets()[origin]
            )))
        }
    };
    let mut particles: Vec<(Sign, Frame)> = cfg.particles().map(|(s, f)| (s, f.clone())).collect();
    let mut take = |sign: Sign, frame: &Frame| -> Result<()> {
        let i = particles
            .iter()
            .position(|(s, f)| *s == sign && f == frame)
            .ok_or_else(|| Error::InvalidArgument(format!("no particle at {frame} to perturb")))?;
        particles.remove(i);
        Ok(())
    };
    match p {
        Perturbation::Identity => {}
        Perturbation::Add { sign, frame } => {
            over_origin(frame)?;
            particles.push((*sign, frame.clone()));
        }
        Perturbation::Remove { sign, frame } => {
            over_origin(frame)?;
            take(*sign, frame)?;
        }
        Perturbation::Rotate { sign, frame, by } => {
            over_origin(frame)?;
            take(*sign, frame)?;
            particles.push((*sign, frame.rotate_left(*by)));
        }
    }
    Ok(Configuration::from_particles(particles))
}

/// Per-facet sorted particle lists.
fn contents(bundle: &Bundle, s: &State) -> Vec<Vec<(Sign, u32)>> {
    let mut out = vec![Vec::new(); bundle.facets().len()];
    for (sign, p) in s.particles() {
        out[bundle.facet_of(p)].push((sign, p.index() as u32));
    }
    for v in &mut out {
        v.sort_unstable();
    }
    out
}

/// Evolves `cfg` and its perturbation side by side and records where they
/// differ. Fails with [`Error::LightCone`] if a facet differs before the
/// time equal to its distance from the origin.
pub fn causality_probe(
    bundle: &Bundle,
    cfg: &Configuration,
    origin: usize,
    perturbation: &Perturbation,
    steps: usize,
) -> Result<ProbeReport> {
    if origin >= bundle.facets().len() {
        return Err(Error::InvalidArgument(format!("no facet with index {origin}")));
    }
    let distances = bundle.dual_graph().distances_from(origin);
    let mut left = bundle.encode(cfg)?;
    let mut right = bundle.encode(&apply(bundle, cfg, origin, perturbation)?)?;
    let mut ev = Evolver::new(bundle);
    let mut first_difference = vec![None; distances.len()];
    let mut cone = Vec::with_capacity(steps + 1);
    for t in 0..=steps {
        if t > 0 {
            left = ev.step(&left);
            right = ev.step(&right);
        }
        let (a, b) = (contents(bundle, &left), contents(bundle, &right));
        let differing: Vec<usize> = (0..a.len()).filter(|&f| a[f] != b[f]).collect();
        for &f in &differing {
            let reach = distances[f].unwrap_or(usize::MAX);
            if t < reach {
                return Err(Error::LightCone(format!(
                    "facet {} at distance {:?} from {} differs at t = {t}; start {cfg}, perturbation {perturbation:?}",
                    bundle.facets()[f],
                    distances[f],
                    bundle.facets()[origin],
                )));
            }
            first_difference[f].get_or_insert(t);
        }
        cone.push(differing);
    }
    Ok(ProbeReport {
        origin: bundle.facets()[origin].clone(),
        steps,
        perturbation: perturbation.clone(),
        distances,
        first_difference,
        cone,
    })
}
