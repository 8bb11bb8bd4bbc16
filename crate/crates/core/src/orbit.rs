//! Orbits up to the first repeated state.

use std::collections::HashMap;

use serde::Serialize;

use crate::bundle::Bundle;
use crate::complex::SimplicialComplex;
use crate::config::Configuration;
use crate::dynamics::Mode;
use crate::engine::{Evolver, State};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    /// From the initial state up to the last state before the repeat.
    pub states: Vec<Configuration>,
    /// Index of the earlier occurrence of the repeated state. Always 0, as the
    /// evolution is invertible.
    pub preperiod: usize,
    /// `None` when the cap was hit first.
    pub period: Option<usize>,
    pub truncated: bool,
}

/// Period and preperiod of an indexed orbit, without keeping the states.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitOutcome {
    pub period: Option<usize>,
    pub preperiod: usize,
}

fn run(
    ev: &mut Evolver<'_>,
    start: &State,
    cap: usize,
    mode: Mode,
    mut visit: impl FnMut(&State),
) -> Result<OrbitOutcome> {
    let mut seen: HashMap<State, usize> = HashMap::new();
    seen.insert(start.clone(), 0);
    visit(start);
    let mut cur = start.clone();
    for t in 1..=cap {
        cur = ev.step_in_mode(&cur, mode);
        if let Some(&first) = seen.get(&cur) {
            if first != 0 {
                return Err(Error::Consistency(format!(
                    "orbit re-entered at step {first} after {t} steps; evolution is not invertible"
                )));
            }
            return Ok(OrbitOutcome {
                period: Some(t - first),
                preperiod: first,
            });
        }
        if t < cap {
            seen.insert(cur.clone(), t);
            visit(&cur);
        }
    }
    Ok(OrbitOutcome {
        period: None,
        preperiod: 0,
    })
}

/// Iterates until the initial state returns or `cap` steps have been taken.
pub fn orbit_period(ev: &mut Evolver<'_>, start: &State, cap: usize, mode: Mode) -> Result<OrbitOutcome> {
    run(ev, start, cap, mode, |_| {})
}

/// Periods only, comparing against the start state.
///
/// Valid because orbits are purely periodic; [`orbit_period`] checks that.
pub fn return_time(ev: &mut Evolver<'_>, start: &State, cap: usize, mode: Mode) -> Option<usize> {
    let mut cur = start.clone();
    for t in 1..=cap {
        cur = ev.step_in_mode(&cur, mode);
        if &cur == start {
            return Some(t);
        }
    }
    None
}

pub fn orbit_in(bundle: &Bundle, cfg: &Configuration, cap: usize, mode: Mode) -> Result<OrbitRecord> {
    if cap == 0 {
        return Err(Error::InvalidArgument("cap must be at least 1".into()));
    }
    let start = bundle.encode(cfg)?;
    let mut ev = Evolver::new(bundle);
    let mut states = Vec::new();
    let outcome = run(&mut ev, &start, cap, mode, |s| states.push(bundle.decode(s)))?;
    Ok(OrbitRecord {
        states,
        preperiod: outcome.preperiod,
        period: outcome.period,
        truncated: outcome.period.is_none(),
    })
}

pub fn orbit(c: &SimplicialComplex, cfg: &Configuration, cap: usize) -> Result<OrbitRecord> {
    orbit_in(&Bundle::new(c)?, cfg, cap, Mode::Rotation)
}
