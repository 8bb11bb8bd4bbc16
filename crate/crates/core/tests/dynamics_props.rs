mod common;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use framedyn::analysis::{causality_probe, census, CensusSpec, Family, Perturbation};
use framedyn::bundle::partner;
use framedyn::dynamics::{self, Mode};
use framedyn::engine::Evolver;
use framedyn::orbit::orbit_in;
use framedyn::{Bundle, Configuration, Frame, Sign, Simplex};
use proptest::prelude::*;
use rand::Rng;

fn corpus() -> &'static [(&'static str, Bundle)] {
    static CORPUS: OnceLock<Vec<(&'static str, Bundle)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        common::dynamics_corpus()
            .into_iter()
            .map(|(name, c)| (name, Bundle::new(&c).unwrap()))
            .collect()
    })
}

fn case() -> impl Strategy<Value = (usize, u64)> {
    (0..corpus().len(), any::<u64>())
}

fn setup(which: usize, seed: u64) -> (&'static Bundle, Configuration) {
    let b = &corpus()[which].1;
    let cfg = common::random_configuration(b, &mut common::rng(seed));
    (b, cfg)
}

/// `B` with the counts rescanned per particle.
fn naive_b(cfg: &Configuration) -> Configuration {
    let all: Vec<(Sign, &Frame)> = cfg.particles().collect();
    let out = all.iter().map(|&(s, p)| {
        let here = |sign| {
            all.iter()
                .filter(|(t, f)| *t == sign && f.position() == p.position())
                .count() as i64
        };
        (s.flip(), p.rotate_left(here(Sign::Positive) - here(Sign::Negative)))
    });
    Configuration::from_particles(out.collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn involutions_and_inverses((which, seed) in case()) {
        let (b, cfg) = setup(which, seed);
        let c = b.complex();
        let a = dynamics::involution_a(c, &cfg).unwrap();
        prop_assert_eq!(&dynamics::involution_a(c, &a).unwrap(), &cfg);
        prop_assert_eq!(&dynamics::involution_b(&dynamics::involution_b(&cfg)), &cfg);
        for mode in [Mode::Rotation, Mode::Fermion] {
            let next = dynamics::step_in_mode(c, &cfg, mode).unwrap();
            let back = match mode {
                Mode::Rotation => dynamics::step_inverse(c, &next).unwrap(),
                Mode::Fermion => dynamics::fermion_step_inverse(c, &next).unwrap(),
            };
            prop_assert_eq!(&back, &cfg);
        }
    }

    #[test]
    fn b_matches_per_particle_recount((which, seed) in case()) {
        let (_, cfg) = setup(which, seed);
        prop_assert_eq!(dynamics::involution_b(&cfg), naive_b(&cfg));
    }

    #[test]
    fn engine_agrees_with_frame_level((which, seed) in case()) {
        let (b, cfg) = setup(which, seed);
        let c = b.complex();
        let mut ev = Evolver::new(b);
        let s = b.encode(&cfg).unwrap();
        prop_assert_eq!(b.decode(&s), cfg.clone());
        prop_assert_eq!(b.decode(&ev.involution_a(&s)), dynamics::involution_a(c, &cfg).unwrap());
        prop_assert_eq!(b.decode(&ev.involution_b(&s)), dynamics::involution_b(&cfg));
        prop_assert_eq!(b.decode(&ev.fermion_reflection(&s)), dynamics::fermion_reflection(&cfg));
        let mut x = s.clone();
        let mut y = cfg.clone();
        for _ in 0..10 {
            x = ev.step(&x);
            y = dynamics::step(c, &y).unwrap();
            prop_assert_eq!(b.decode(&x), y.clone());
        }
    }

    #[test]
    fn full_step_keeps_signs_and_moves_one_facet((which, seed) in case()) {
        let b = &corpus()[which].1;
        let mut rng = common::rng(seed);
        let p = b.frame(common::random_frame(b, &mut rng)).clone();
        let sign = if rng.random_bool(0.5) { Sign::Positive } else { Sign::Negative };
        let next = dynamics::step(b.complex(), &dynamics::single(sign, p.clone())).unwrap();
        let (s, q) = next.particles().next().unwrap();
        prop_assert_eq!(s, sign);
        // a lone particle crosses its wall, then turns against its sign
        let turn = if sign == Sign::Positive { -1 } else { 1 };
        let crossed = partner(b.complex(), &p).unwrap();
        prop_assert_eq!(q, &crossed.rotate_left(turn));
        let moved = p.position().intersection_len(&q.position());
        prop_assert!(moved + 1 >= p.len());
    }

    #[test]
    fn step_is_injective((which, seed) in case(), other in any::<u64>()) {
        let (b, x) = setup(which, seed);
        let y = common::random_configuration(b, &mut common::rng(other));
        let c = b.complex();
        prop_assert_eq!(
            x == y,
            dynamics::step(c, &x).unwrap() == dynamics::step(c, &y).unwrap()
        );
    }

    #[test]
    fn per_frame_balanced_configurations_have_period_dividing_two((which, seed) in case()) {
        let b = &corpus()[which].1;
        let mut rng = common::rng(seed);
        let m = b.q() + 1;
        let mut cfg = Configuration::empty();
        for _ in 0..rng.random_range(1..=4) {
            let p = b.frame(common::random_frame(b, &mut rng)).clone();
            let sign = if rng.random_bool(0.5) { Sign::Positive } else { Sign::Negative };
            cfg = cfg.with(sign, p, m * rng.random_range(1..=2));
        }
        let c = b.complex();
        let twice = dynamics::step(c, &dynamics::step(c, &cfg).unwrap()).unwrap();
        prop_assert_eq!(twice, cfg);
    }

    #[test]
    fn orbit_period_is_first_return((which, seed) in case()) {
        let (b, cfg) = setup(which, seed);
        let record = orbit_in(b, &cfg, 5_000, Mode::Rotation).unwrap();
        prop_assert_eq!(record.preperiod, 0);
        if let Some(p) = record.period {
            prop_assert_eq!(record.states.len(), p);
            let mut cur = cfg.clone();
            for t in 1..=p {
                cur = dynamics::step(b.complex(), &cur).unwrap();
                prop_assert_eq!(cur == cfg, t == p);
            }
        }
    }

    #[test]
    fn perturbations_respect_the_light_cone((which, seed) in case()) {
        let (b, cfg) = setup(which, seed);
        let mut rng = common::rng(seed ^ 0x5eed);
        let origin = rng.random_range(0..b.facets().len());
        let fiber: Vec<_> = b.fiber(origin).collect();
        let frame = b.frame(fiber[rng.random_range(0..fiber.len())]).clone();
        let report = causality_probe(
            b,
            &cfg,
            origin,
            &Perturbation::Add { sign: Sign::Negative, frame },
            b.dual_graph().diameter() + 1,
        )
        .unwrap();
        for (d, first) in report.distances.iter().zip(&report.first_difference) {
            if let Some(t) = first {
                prop_assert!(*t >= d.unwrap());
            }
        }
        prop_assert_eq!(report.first_difference[origin], Some(0));
    }
}

#[test]
fn census_is_worker_independent() {
    let b = &corpus()[2].1;
    let mut spec = CensusSpec::new(Family::Random { positive: 2, negative: 2 });
    spec.sample = Some(300);
    spec.seed = 5;
    spec.cap = 2_000;
    let tables: Vec<_> = [1, 2, 5].iter().map(|&w| census(b, &spec, w).unwrap()).collect();
    for t in &tables[1..] {
        assert_eq!(t.to_csv(), tables[0].to_csv());
        assert_eq!(t.summary_json(), tables[0].summary_json());
    }
    let total: usize = tables[0].summary.histogram.values().sum();
    assert_eq!(total + tables[0].summary.truncated, 300);
}

#[test]
fn per_facet_counts_alone_do_not_force_period_two() {
    // Balanced mod 2 over {2,3} at time 0, yet the particles separate.
    let path = framedyn::generators::path(5).unwrap();
    let x = Configuration::new(vec![Frame::from([2, 3]), Frame::from([3, 2])], vec![]);
    let counts: BTreeMap<Simplex, (usize, usize)> = x.position_counts();
    assert_eq!(counts.values().collect::<Vec<_>>(), vec![&(2, 0)]);
    let once = dynamics::step(&path, &x).unwrap();
    assert_eq!(once, Configuration::new(vec![Frame::from([3, 4]), Frame::from([2, 1])], vec![]));
    let twice = dynamics::step(&path, &once).unwrap();
    assert_eq!(twice, Configuration::new(vec![Frame::from([4, 5]), Frame::from([1, 2])], vec![]));
}
