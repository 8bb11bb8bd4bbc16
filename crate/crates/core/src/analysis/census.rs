use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::{Duration, Instant};

use rand::seq::index;
use rayon::prelude::*;
use serde::Serialize;

use super::{keyed_rng, random_state, thread_pool};
use crate::bundle::{Bundle, FrameId};
use crate::config::Configuration;
use crate::dynamics::{self, Mode};
use crate::engine::{Evolver, State};
use crate::error::{Error, Result};
use crate::orbit::orbit_period;

/// Which initial configurations a census walks over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Family {
    /// `{+P[0], +a} ∪ {-b}` for every pair `(a, b)` of frames, `a` major.
    PinnedPairs,
    /// Every frame as a single positive particle.
    Singles,
    /// Uniform random frames; needs a sample size.
    Random { positive: usize, negative: usize },
    Explicit {
        #[serde(skip)]
        configurations: Vec<Configuration>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusSpec {
    pub family: Family,
    pub sample: Option<usize>,
    pub seed: u64,
    pub cap: usize,
    pub mode: Mode,
}

impl CensusSpec {
    pub fn new(family: Family) -> Self {
        CensusSpec {
            family,
            sample: None,
            seed: 0,
            cap: 10_000,
            mode: Mode::Rotation,
        }
    }

    fn family_size(&self, bundle: &Bundle) -> Option<usize> {
        match &self.family {
            Family::PinnedPairs => Some(bundle.len() * bundle.len()),
            Family::Singles => Some(bundle.len()),
            Family::Random { .. } => None,
            Family::Explicit { configurations } => Some(configurations.len()),
        }
    }

    /// Configuration ids to process, ascending.
    pub fn member_ids(&self, bundle: &Bundle) -> Result<Vec<u64>> {
        match (self.family_size(bundle), self.sample) {
            (None, None) => Err(Error::InvalidArgument(
                "random family needs a sample size".into(),
            )),
            (None, Some(n)) => Ok((0..n as u64).collect()),
            (Some(size), None) => Ok((0..size as u64).collect()),
            (Some(size), Some(n)) if n > size => Err(Error::InvalidArgument(format!(
                "sample {n} exceeds family size {size}"
            ))),
            (Some(size), Some(n)) => {
                let mut ids: Vec<u64> = index::sample(&mut keyed_rng(self.seed, u64::MAX), size, n)
                    .into_iter()
                    .map(|i| i as u64)
                    .collect();
                ids.sort_unstable();
                Ok(ids)
            }
        }
    }

    pub fn member(&self, bundle: &Bundle, id: u64) -> Result<State> {
        let frame = |i: u64| FrameId::from_index(i as usize);
        match &self.family {
            Family::PinnedPairs => {
                let n = bundle.len() as u64;
                Ok(State::new(vec![frame(0), frame(id / n)], vec![frame(id % n)]))
            }
            Family::Singles => Ok(State::new(vec![frame(id)], vec![])),
            Family::Random { positive, negative } => Ok(random_state(
                bundle,
                *positive,
                *negative,
                &mut keyed_rng(self.seed, id),
            )),
            Family::Explicit { configurations } => bundle.encode(&configurations[id as usize]),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub config_id: u64,
    pub period: Option<usize>,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub family: Family,
    pub sample: Option<usize>,
    pub seed: u64,
    pub cap: usize,
    pub mode: Mode,
    pub frames: usize,
    pub processed: usize,
    pub truncated: usize,
    pub histogram: BTreeMap<usize, usize>,
    /// Over non-truncated orbits only.
    pub max_period: Option<usize>,
    pub exemplar_id: Option<u64>,
    pub exemplar: Option<Configuration>,
}

#[derive(Clone, Debug)]
pub struct CensusTable {
    pub entries: Vec<CensusEntry>,
    pub summary: CensusSummary,
    pub workers: usize,
    pub elapsed: Duration,
}

impl CensusTable {
    /// `config_id,period,truncated`; the period is blank when truncated.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("config_id,period,truncated\n");
        for e in &self.entries {
            let period = e.period.map(|p| p.to_string()).unwrap_or_default();
            let _ = writeln!(out, "{},{},{}", e.config_id, period, e.truncated);
        }
        out
    }

    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(&self.summary).expect("summary serializes")
    }
}

pub fn census(bundle: &Bundle, spec: &CensusSpec, workers: usize) -> Result<CensusTable> {
    if spec.cap == 0 {
        return Err(Error::InvalidArgument("cap must be at least 1".into()));
    }
    let started = Instant::now();
    let ids = spec.member_ids(bundle)?;
    let pool = thread_pool(workers)?;
    let entries: Vec<CensusEntry> = pool.install(|| {
        ids.par_iter()
            .map_init(
                || Evolver::new(bundle),
                |ev, &id| -> Result<CensusEntry> {
                    let start = spec.member(bundle, id)?;
                    let outcome = orbit_period(ev, &start, spec.cap, spec.mode)?;
                    Ok(CensusEntry {
                        config_id: id,
                        period: outcome.period,
                        truncated: outcome.period.is_none(),
                    })
                },
            )
            .collect::<Result<Vec<_>>>()
    })?;

    let mut histogram = BTreeMap::new();
    let mut best: Option<(usize, u64)> = None;
    for e in &entries {
        if let Some(p) = e.period {
            *histogram.entry(p).or_insert(0) += 1;
            if best.is_none_or(|(m, _)| p > m) {
                best = Some((p, e.config_id));
            }
        }
    }
    let exemplar = best
        .map(|(_, id)| spec.member(bundle, id).map(|s| bundle.decode(&s)))
        .transpose()?;
    let summary = CensusSummary {
        family: spec.family.clone(),
        sample: spec.sample,
        seed: spec.seed,
        cap: spec.cap,
        mode: spec.mode,
        frames: bundle.len(),
        processed: entries.len(),
        truncated: entries.iter().filter(|e| e.truncated).count(),
        histogram,
        max_period: best.map(|(p, _)| p),
        exemplar_id: best.map(|(_, id)| id),
        exemplar,
    };
    Ok(CensusTable {
        entries,
        summary,
        workers,
        elapsed: started.elapsed(),
    })
}

/// Re-checks a seeded fraction of reported periods with the frame-level
/// dynamics: `T^p(x) = x` and no earlier return. Returns how many were checked.
pub fn verify_periods(bundle: &Bundle, spec: &CensusSpec, table: &CensusTable, fraction: f64, seed: u64) -> Result<usize> {
    let finished: Vec<&CensusEntry> = table.entries.iter().filter(|e| !e.truncated).collect();
    if finished.is_empty() {
        return Ok(0);
    }
    let n = ((finished.len() as f64 * fraction).ceil() as usize).clamp(1, finished.len());
    let picks = index::sample(&mut keyed_rng(seed, 0), finished.len(), n);
    let c = bundle.complex();
    for i in picks {
        let e = finished[i];
        let period = e.period.expect("finished entry");
        let start = bundle.decode(&spec.member(bundle, e.config_id)?);
        let mut cur = start.clone();
        for t in 1..=period {
            cur = dynamics::step_in_mode(c, &cur, spec.mode)?;
            if cur == start && t < period {
                return Err(Error::Consistency(format!(
                    "config {} returns after {t} steps, census reported {period}",
                    e.config_id
                )));
            }
        }
        if cur != start {
            return Err(Error::Consistency(format!(
                "config {} does not return after its reported period {period}",
                e.config_id
            )));
        }
    }
    Ok(n)
}
