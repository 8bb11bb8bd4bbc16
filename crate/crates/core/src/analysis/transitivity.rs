use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{keyed_rng, thread_pool};
use crate::bundle::{Bundle, FrameId};
use crate::eddie::tracer_paths;
use crate::engine::State;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransitivitySpec {
    /// Probability that a frame carries a background particle.
    pub density: f64,
    pub horizon: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Quantiles {
    pub count: usize,
    pub min: f64,
    pub p25: f64,
    pub median: f64,
    pub p75: f64,
    pub max: f64,
}

impl Quantiles {
    /// Nearest-rank quantiles; `None` for an empty sample.
    pub fn of(mut xs: Vec<f64>) -> Option<Self> {
        if xs.is_empty() {
            return None;
        }
        xs.sort_by(f64::total_cmp);
        let at = |q: f64| xs[((q * (xs.len() - 1) as f64).round()) as usize];
        Some(Quantiles {
            count: xs.len(),
            min: xs[0],
            p25: at(0.25),
            median: at(0.5),
            p75: at(0.75),
            max: xs[xs.len() - 1],
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialSummary {
    pub trial: usize,
    pub particles: usize,
    /// Fraction of `(start, target)` pairs reached within the horizon.
    pub hit_fraction: f64,
    pub log_hit_fraction: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransitivityReport {
    pub spec: TransitivitySpec,
    pub frames: usize,
    /// `ceil(ln |P|)`.
    pub log_horizon: usize,
    /// Over all trials: pair reached in at least one trial.
    pub hit_fraction: f64,
    pub log_hit_fraction: f64,
    pub trials: Vec<TrialSummary>,
    /// Earliest hit over all trials, `first_hit[start][target]`.
    pub first_hit: Vec<Vec<Option<usize>>>,
    pub hit_time_quantiles: Option<Quantiles>,
    /// First hit time over dual-graph distance of the two positions, for
    /// pairs on different facets.
    pub speed_ratio_quantiles: Option<Quantiles>,
}

/// Background of trial `trial`: each frame independently carries one
/// particle with probability `density`, of either sign with equal odds.
pub fn background(bundle: &Bundle, density: f64, seed: u64, trial: u64) -> State {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut rng = keyed_rng(seed, trial);
    for id in bundle.ids() {
        rng.set_word_pos(id.index() as u128 * 4);
        let occupied = rng.random::<f64>() < density;
        let positive = rng.random::<bool>();
        if occupied {
            if positive { pos.push(id) } else { neg.push(id) }
        }
    }
    State::new(pos, neg)
}

fn first_hits(paths: &[Vec<FrameId>], frames: usize) -> Vec<Vec<Option<usize>>> {
    paths
        .iter()
        .map(|path| {
            let mut hit = vec![None; frames];
            for (t, p) in path.iter().enumerate() {
                hit[p.index()].get_or_insert(t);
            }
            hit
        })
        .collect()
}

fn fraction(hits: &[Vec<Option<usize>>], within: usize) -> f64 {
    let total: usize = hits.iter().map(|row| row.len()).sum();
    let hit = hits
        .iter()
        .flatten()
        .filter(|h| h.is_some_and(|t| t <= within))
        .count();
    hit as f64 / total as f64
}

/// Runs eddie tracers from every frame through random backgrounds and
/// records which frames each one reaches. Observational only.
pub fn transitivity_experiment(bundle: &Bundle, spec: &TransitivitySpec, workers: usize) -> Result<TransitivityReport> {
    if !(0.0..=1.0).contains(&spec.density) {
        return Err(Error::InvalidArgument(format!(
            "density {} outside [0, 1]",
            spec.density
        )));
    }
    let n = bundle.len();
    let log_horizon = (n as f64).ln().ceil() as usize;
    let pool = thread_pool(workers)?;
    let per_trial: Vec<(TrialSummary, Vec<Vec<Option<usize>>>)> = pool.install(|| {
        (0..spec.trials)
            .into_par_iter()
            .map(|trial| {
                let bg = background(bundle, spec.density, spec.seed, trial as u64);
                let hits = first_hits(&tracer_paths(bundle, &bg, spec.horizon), n);
                let summary = TrialSummary {
                    trial,
                    particles: bg.len(),
                    hit_fraction: fraction(&hits, spec.horizon),
                    log_hit_fraction: fraction(&hits, log_horizon.min(spec.horizon)),
                };
                (summary, hits)
            })
            .collect()
    });

    let mut first_hit = vec![vec![None::<usize>; n]; n];
    for (_, hits) in &per_trial {
        for (row, trial_row) in first_hit.iter_mut().zip(hits) {
            for (best, &h) in row.iter_mut().zip(trial_row) {
                *best = match (*best, h) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
            }
        }
    }

    let dual = bundle.dual_graph();
    let facet_distances: Vec<Vec<Option<usize>>> =
        (0..bundle.facets().len()).map(|f| dual.distances_from(f)).collect();
    let mut times = Vec::new();
    let mut ratios = Vec::new();
    for (s, row) in first_hit.iter().enumerate() {
        let fs = bundle.facet_of(FrameId::from_index(s));
        for (t, h) in row.iter().enumerate() {
            let Some(h) = *h else { continue };
            times.push(h as f64);
            let ft = bundle.facet_of(FrameId::from_index(t));
            if let Some(d) = facet_distances[fs][ft].filter(|&d| d > 0) {
                ratios.push(h as f64 / d as f64);
            }
        }
    }

    Ok(TransitivityReport {
        spec: spec.clone(),
        frames: n,
        log_horizon,
        hit_fraction: if spec.trials == 0 { 0.0 } else { fraction(&first_hit, spec.horizon) },
        log_hit_fraction: if spec.trials == 0 { 0.0 } else { fraction(&first_hit, log_horizon.min(spec.horizon)) },
        trials: per_trial.into_iter().map(|(s, _)| s).collect(),
        first_hit,
        hit_time_quantiles: Quantiles::of(times),
        speed_ratio_quantiles: Quantiles::of(ratios),
    })
}
