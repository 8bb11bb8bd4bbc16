//! Eddies: `q + 1` same-sign particles on one frame.
//!
//! An eddie adds `±(q+1)` to the count difference of its facet, which is a
//! full turn of the fiber, so nothing else feels it. Its own copies always
//! rotate together. That makes it a passive tracer of the background flow.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bundle::{Bundle, Frame, FrameId};
use crate::config::{Configuration, Sign};
use crate::engine::{Evolver, State};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovedGroup {
    pub sign: Sign,
    pub frame: Frame,
    pub copies: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EddieReduction {
    pub reduced: Configuration,
    /// Whole eddies dropped, one entry per (sign, frame).
    pub eddies: Vec<RemovedGroup>,
}

/// Drops whole eddies; with `rewrite`, also trades `q` same-sign particles
/// on a frame for one particle of the opposite sign.
///
/// Rewriting can create a new eddie next to existing opposite-sign particles,
/// so both passes repeat until nothing changes. For `q = 1` a rewrite would
/// only swap signs and is skipped.
pub fn reduce_eddies(cfg: &Configuration, q: usize, rewrite: bool) -> EddieReduction {
    let full = q + 1;
    let mut current = cfg.clone();
    let mut removed: BTreeMap<(Sign, Frame), usize> = BTreeMap::new();
    loop {
        let mut counts: BTreeMap<(Sign, &Frame), usize> = BTreeMap::new();
        for (s, p) in current.particles() {
            *counts.entry((s, p)).or_default() += 1;
        }
        let mut changed = false;
        let mut kept = Vec::new();
        for ((sign, frame), n) in counts {
            let whole = n / full * full;
            if whole > 0 {
                *removed.entry((sign, frame.clone())).or_default() += whole;
                changed = true;
            }
            let rest = n - whole;
            if rewrite && q > 1 && rest == q {
                kept.push((sign.flip(), frame.clone()));
                changed = true;
            } else {
                kept.extend(std::iter::repeat_n((sign, frame.clone()), rest));
            }
        }
        current = Configuration::from_particles(kept);
        if !changed {
            break;
        }
    }
    EddieReduction {
        reduced: current,
        eddies: removed
            .into_iter()
            .map(|((sign, frame), copies)| RemovedGroup {
                sign,
                frame,
                copies,
            })
            .collect(),
    }
}

/// Follows an eddie started at `start` through `steps` steps of `background`.
///
/// Runs the background with and without the eddie and checks at every step
/// that the two agree away from the eddie's `q + 1` copies.
pub fn tracer_orbit(
    bundle: &Bundle,
    background: &Configuration,
    start: &Frame,
    steps: usize,
) -> Result<Vec<Frame>> {
    let copies = bundle.q() + 1;
    let mut alone = bundle.encode(background)?;
    let mut eddie = bundle.id(start)?;
    let mut joint = alone.clone().with(Sign::Positive, eddie, copies);
    let mut ev = Evolver::new(bundle);
    let mut path = vec![start.clone()];
    for t in 1..=steps {
        alone = ev.step(&alone);
        joint = ev.step(&joint);
        eddie = locate(&joint, &alone, copies).ok_or_else(|| {
            Error::Consistency(format!(
                "eddie from {start} split or disturbed the background at step {t}"
            ))
        })?;
        path.push(bundle.frame(eddie).clone());
    }
    Ok(path)
}

/// The frame where `joint` holds exactly `copies` extra positives over `alone`.
fn locate(joint: &State, alone: &State, copies: usize) -> Option<FrameId> {
    if joint.negative != alone.negative || joint.positive.len() != alone.positive.len() + copies {
        return None;
    }
    let mut extra = Vec::with_capacity(copies);
    let (mut i, mut j) = (0, 0);
    while i < joint.positive.len() {
        if j < alone.positive.len() && joint.positive[i] == alone.positive[j] {
            j += 1;
        } else {
            extra.push(joint.positive[i]);
        }
        i += 1;
    }
    (j == alone.positive.len() && extra.iter().all(|&e| e == extra[0])).then(|| extra[0])
}

/// Tracer paths from every frame at once, using the per-step frame map.
pub fn tracer_paths(bundle: &Bundle, background: &State, steps: usize) -> Vec<Vec<FrameId>> {
    let mut ev = Evolver::new(bundle);
    let mut cur: Vec<FrameId> = bundle.ids().collect();
    let mut paths: Vec<Vec<FrameId>> = cur.iter().map(|&p| vec![p]).collect();
    let mut state = background.clone();
    for _ in 0..steps {
        let (next, moves) = ev.step_with_tracer_map(&state);
        for (p, path) in cur.iter_mut().zip(&mut paths) {
            *p = moves[p.index()];
            path.push(*p);
        }
        state = next;
    }
    paths
}
