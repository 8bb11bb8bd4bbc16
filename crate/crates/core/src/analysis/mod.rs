//! Experiment harness: orbit censuses, light-cone probes, tracer transitivity
//! and occupancy experiments.
//!
//! Work is split over independent initial configurations or trials and merged
//! by index, so results do not depend on the number of workers. Randomness is
//! drawn from ChaCha streams keyed by `(seed, index)`.

mod census;
mod occupancy;
mod probe;
mod transitivity;

pub use census::{census, verify_periods, CensusEntry, CensusSpec, CensusSummary, CensusTable, Family};
pub use occupancy::{occupancy_readings, MapKind, OccupancyReading, Reading};
pub use probe::{causality_probe, Perturbation, ProbeReport};
pub use transitivity::{transitivity_experiment, Quantiles, TransitivityReport, TransitivitySpec, TrialSummary};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bundle::{Bundle, FrameId};
use crate::engine::State;
use crate::error::{Error, Result};

/// Generator for item `index` of a run seeded with `seed`.
pub fn keyed_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform random state with the given particle counts.
pub fn random_state<R: Rng>(bundle: &Bundle, positive: usize, negative: usize, rng: &mut R) -> State {
    let mut draw = |n: usize| -> Vec<FrameId> {
        (0..n)
            .map(|_| FrameId::from_index(rng.random_range(0..bundle.len())))
            .collect()
    };
    let pos = draw(positive);
    let neg = draw(negative);
    State::new(pos, neg)
}

pub(crate) fn thread_pool(workers: usize) -> Result<rayon::ThreadPool> {
    if workers == 0 {
        return Err(Error::InvalidArgument("workers must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))
}
