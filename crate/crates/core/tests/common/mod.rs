#![allow(dead_code)]

use framedyn::analysis::random_state;
use framedyn::engine::State;
use framedyn::{generators, Bundle, Configuration, Frame, FrameId, Sign, SimplicialComplex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The four spaces the dynamics suites run on.
pub fn dynamics_corpus() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("path 1-2-3-4", generators::path(4).unwrap()),
        ("C_5", generators::cycle(5).unwrap()),
        ("octahedron", generators::octahedron()),
        ("cross-polytope dim 3", generators::cross_polytope(3).unwrap()),
    ]
}

pub fn topology_corpus() -> Vec<(&'static str, SimplicialComplex)> {
    let mut out = vec![
        ("C_4", generators::cycle(4).unwrap()),
        ("C_5", generators::cycle(5).unwrap()),
        ("path 4", generators::path(4).unwrap()),
        ("octahedron", generators::octahedron()),
        ("icosahedron", generators::icosahedron()),
        ("torus7", generators::torus7()),
        ("cross-polytope dim 3", generators::cross_polytope(3).unwrap()),
        ("tetrahedron", generators::simplex(3).unwrap()),
        ("single vertex", SimplicialComplex::closure_of([[1]]).unwrap()),
    ];
    out.push((
        "mixed",
        SimplicialComplex::closure_of(vec![vec![1, 2, 3], vec![3, 4], vec![5]]).unwrap(),
    ));
    out
}

/// Random configuration, sometimes stacking particles on a few frames so
/// that collisions and eddies actually occur.
pub fn random_configuration<R: Rng>(bundle: &Bundle, rng: &mut R) -> Configuration {
    let pos = rng.random_range(0..6);
    let neg = rng.random_range(0..6);
    if rng.random_bool(0.5) {
        bundle.decode(&random_state(bundle, pos, neg, rng))
    } else {
        let hot: Vec<usize> = (0..3).map(|_| rng.random_range(0..bundle.len())).collect();
        let mut pick = |n: usize| -> Vec<Frame> {
            (0..n)
                .map(|_| bundle.frames()[hot[rng.random_range(0..hot.len())]].clone())
                .collect()
        };
        let p = pick(pos);
        let n = pick(neg);
        Configuration::new(p, n)
    }
}

pub fn random_frame<R: Rng>(bundle: &Bundle, rng: &mut R) -> FrameId {
    bundle.ids().nth(rng.random_range(0..bundle.len())).unwrap()
}

/// `joint` minus `background` as `(sign, frame, copies)`, if it is a single
/// stack of identical particles.
pub fn single_stack(joint: &State, background: &State) -> Option<(Sign, FrameId, usize)> {
    let diff = |a: &[FrameId], b: &[FrameId]| -> Option<Vec<FrameId>> {
        let mut rest = a.to_vec();
        for x in b {
            let i = rest.iter().position(|y| y == x)?;
            rest.remove(i);
        }
        Some(rest)
    };
    let pos = diff(&joint.positive, &background.positive)?;
    let neg = diff(&joint.negative, &background.negative)?;
    let (sign, extra) = match (pos.is_empty(), neg.is_empty()) {
        (false, true) => (Sign::Positive, pos),
        (true, false) => (Sign::Negative, neg),
        _ => return None,
    };
    extra
        .iter()
        .all(|&e| e == extra[0])
        .then(|| (sign, extra[0], extra.len()))
}
