//! The evolution `T = B∘A` on configurations, computed directly from frames.
//!
//! * `A` sends every particle `(s, p)` to `(-s, partner(p))`.
//! * `B` sends `(s, p)` to `(-s, rotate_left(p, k - l))`, where `k` and `l`
//!   count the positive and negative particles over the facet of `p`. Counts
//!   are taken once, from the input configuration.
//!
//! Both maps are involutions, so `T^-1 = A∘B`. The fermionic variant replaces
//! `B` by `C`, which reverses every frame sitting over a facet that holds an
//! odd number of particles, and evolves by `A∘C`.
//!
//! These functions work on frame values and the complex alone. [`crate::engine`]
//! runs the same maps on bundle indices and is what orbits and censuses use.

use std::collections::BTreeMap;

use crate::bundle::{partner, Frame};
use crate::complex::{Simplex, SimplicialComplex};
use crate::config::{Configuration, Sign};
use crate::error::Result;

/// Which fiber interaction drives the evolution.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Cyclic rotation by `k - l`: `T = B∘A`.
    #[default]
    Rotation,
    /// Parity-triggered reversal: `T = A∘C`.
    Fermion,
}

pub fn involution_a(c: &SimplicialComplex, cfg: &Configuration) -> Result<Configuration> {
    let particles = cfg
        .particles()
        .map(|(s, p)| Ok((s.flip(), partner(c, p)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Configuration::from_particles(particles))
}

pub fn involution_b(cfg: &Configuration) -> Configuration {
    let counts = cfg.position_counts();
    Configuration::from_particles(cfg.particles().map(|(s, p)| {
        let (k, l) = counts[&p.position()];
        (s.flip(), p.rotate_left(k as i64 - l as i64))
    }))
}

pub fn step(c: &SimplicialComplex, cfg: &Configuration) -> Result<Configuration> {
    Ok(involution_b(&involution_a(c, cfg)?))
}

pub fn step_inverse(c: &SimplicialComplex, cfg: &Configuration) -> Result<Configuration> {
    involution_a(c, &involution_b(cfg))
}

/// Reverses frames over facets holding an odd number of particles.
pub fn fermion_reflection(cfg: &Configuration) -> Configuration {
    let mut totals: BTreeMap<Simplex, usize> = BTreeMap::new();
    for (_, p) in cfg.particles() {
        *totals.entry(p.position()).or_default() += 1;
    }
    Configuration::from_particles(cfg.particles().map(|(s, p)| {
        if totals[&p.position()] % 2 == 1 {
            (s, p.reversed())
        } else {
            (s, p.clone())
        }
    }))
}

pub fn fermion_step(c: &SimplicialComplex, cfg: &Configuration) -> Result<Configuration> {
    involution_a(c, &fermion_reflection(cfg))
}

pub fn fermion_step_inverse(c: &SimplicialComplex, cfg: &Configuration) -> Result<Configuration> {
    Ok(fermion_reflection(&involution_a(c, cfg)?))
}

pub fn step_in_mode(c: &SimplicialComplex, cfg: &Configuration, mode: Mode) -> Result<Configuration> {
    match mode {
        Mode::Rotation => step(c, cfg),
        Mode::Fermion => fermion_step(c, cfg),
    }
}

/// A single particle, for examples and tests.
pub fn single(sign: Sign, frame: impl Into<Frame>) -> Configuration {
    Configuration::from_particles([(sign, frame.into())])
}
