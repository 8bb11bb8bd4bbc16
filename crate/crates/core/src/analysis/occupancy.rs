//! Space filled uniformly with particles, under two readings of "every point":
//! every frame of the bundle, or every facet.

use serde::Serialize;

use crate::bundle::{Bundle, FrameId};
use crate::engine::{Evolver, State};
use crate::error::Result;
use crate::orbit::orbit_period;
use crate::dynamics::Mode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// `copies` positive particles on every frame.
    PerFrame,
    /// `copies` positive particles on the first frame of every facet.
    PerFacet,
}

/// How the eddie map of one step compares to the one-particle maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    /// Same as a lone positive particle: cross, then turn by -1.
    Geodesic,
    /// Same as a lone negative particle: cross, then turn by +1.
    ReverseGeodesic,
    /// Cross without turning.
    Bounce,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OccupancyReading {
    pub reading: Reading,
    pub copies: usize,
    pub particles: usize,
    /// `gcd(copies, q + 1)`.
    pub gcd: usize,
    pub period: Option<usize>,
    pub tracer_maps: Vec<MapKind>,
    /// Whether every step equals moving each particle alone on its geodesic.
    pub independent_geodesics: bool,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn classify(bundle: &Bundle, moves: &[FrameId]) -> MapKind {
    let fits = |turn: i64| {
        bundle
            .ids()
            .all(|p| moves[p.index()] == bundle.rotate_left(bundle.partner(p), turn))
    };
    if fits(-1) {
        MapKind::Geodesic
    } else if fits(1) {
        MapKind::ReverseGeodesic
    } else if fits(0) {
        MapKind::Bounce
    } else {
        MapKind::Other
    }
}

fn lone_particles_step(bundle: &Bundle, s: &State) -> State {
    let go = |ids: &[FrameId], turn: i64| {
        ids.iter()
            .map(|&p| bundle.rotate_left(bundle.partner(p), turn))
            .collect()
    };
    State::new(go(&s.positive, -1), go(&s.negative, 1))
}

pub fn occupancy_readings(bundle: &Bundle, copies: usize, steps: usize, cap: usize) -> Result<Vec<OccupancyReading>> {
    let mut out = Vec::new();
    for reading in [Reading::PerFrame, Reading::PerFacet] {
        let frames: Vec<FrameId> = match reading {
            Reading::PerFrame => bundle.ids().collect(),
            Reading::PerFacet => (0..bundle.facets().len())
                .map(|f| bundle.fiber(f).next().expect("non-empty fiber"))
                .collect(),
        };
        let start = State::new(
            frames.iter().flat_map(|&p| std::iter::repeat_n(p, copies)).collect(),
            Vec::new(),
        );
        let mut ev = Evolver::new(bundle);
        let period = orbit_period(&mut ev, &start, cap, Mode::Rotation)?.period;
        let mut tracer_maps = Vec::with_capacity(steps);
        let mut independent_geodesics = true;
        let mut cur = start.clone();
        for _ in 0..steps {
            let (next, moves) = ev.step_with_tracer_map(&cur);
            tracer_maps.push(classify(bundle, &moves));
            independent_geodesics &= next == lone_particles_step(bundle, &cur);
            cur = next;
        }
        out.push(OccupancyReading {
            reading,
            copies,
            particles: start.len(),
            gcd: gcd(copies, bundle.q() + 1),
            period,
            tracer_maps,
            independent_geodesics,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn full_frame_occupancy_is_fixed_and_bounces() {
        let b = Bundle::new(&octahedron()).unwrap();
        let r = occupancy_readings(&b, 1, 4, 100).unwrap();
        let per_frame = &r[0];
        assert_eq!(per_frame.reading, Reading::PerFrame);
        assert_eq!(per_frame.period, Some(1));
        assert!(per_frame.tracer_maps.iter().all(|&k| k == MapKind::Bounce));
    }

    #[test]
    fn empty_space_map_is_bounce() {
        let b = Bundle::new(&octahedron()).unwrap();
        let r = occupancy_readings(&b, 0, 2, 10).unwrap();
        assert!(r.iter().all(|x| x.tracer_maps == vec![MapKind::Bounce; 2]));
        assert!(r.iter().all(|x| x.independent_geodesics));
    }
}
