//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

mod common;

use std::time::{Duration, Instant};

use framedyn::analysis::{causality_probe, census, verify_periods, CensusSpec, Family, Perturbation};
use framedyn::curvature::{curvature_report, Rational};
use framedyn::ds::{is_ds_manifold, is_ds_sphere};
use framedyn::dynamics::{self, single};
use framedyn::engine::{Evolver, State};
use framedyn::{generators, orbit, Bundle, Configuration, Frame, JoinMode, Sign, SimplicialComplex};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn within(started: Instant, limit: Duration) -> Result<Duration, String> {
    let took = started.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

fn bundles() -> Vec<(&'static str, Bundle)> {
    common::dynamics_corpus()
        .into_iter()
        .map(|(name, c)| (name, Bundle::new(&c).unwrap()))
        .collect()
}

fn involutions() -> Outcome {
    let started = Instant::now();
    let mut rng = common::rng(1);
    let mut checked = 0;
    for (name, b) in bundles() {
        let c = b.complex();
        let mut ev = Evolver::new(&b);
        for _ in 0..250 {
            let cfg = common::random_configuration(&b, &mut rng);
            let a = dynamics::involution_a(c, &cfg).map_err(|e| e.to_string())?;
            ensure(dynamics::involution_a(c, &a).unwrap() == cfg, || format!("A² ≠ id on {name} at {cfg}"))?;
            let bb = dynamics::involution_b(&cfg);
            ensure(dynamics::involution_b(&bb) == cfg, || format!("B² ≠ id on {name} at {cfg}"))?;
            let s = b.encode(&cfg).unwrap();
            let sa = ev.involution_a(&s);
            let sb = ev.involution_b(&s);
            ensure(ev.involution_a(&sa) == s && ev.involution_b(&sb) == s, || {
                format!("indexed involution fails on {name} at {cfg}")
            })?;
            checked += 1;
        }
    }
    let took = within(started, Duration::from_secs(10))?;
    Ok(format!("{checked} configurations, {took:.2?}"))
}

fn reversibility() -> Outcome {
    let mut rng = common::rng(2);
    let mut checked = 0;
    for (name, b) in bundles() {
        let c = b.complex();
        for _ in 0..250 {
            let cfg = common::random_configuration(&b, &mut rng);
            let t = dynamics::step(c, &cfg).unwrap();
            ensure(dynamics::step_inverse(c, &t).unwrap() == cfg, || format!("T⁻¹T ≠ id on {name} at {cfg}"))?;
            let u = dynamics::step_inverse(c, &cfg).unwrap();
            ensure(dynamics::step(c, &u).unwrap() == cfg, || format!("TT⁻¹ ≠ id on {name} at {cfg}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} configurations"))
}

fn conservation() -> Outcome {
    let mut rng = common::rng(3);
    let corpus = bundles();
    for trial in 0..200 {
        let (name, b) = &corpus[trial % corpus.len()];
        let cfg = common::random_configuration(b, &mut rng);
        let mut ev = Evolver::new(b);
        let mut s = b.encode(&cfg).unwrap();
        let (count, degree) = (s.len(), s.positive.len() as i64 - s.negative.len() as i64);
        for t in 1..=100 {
            s = ev.step(&s);
            let d = s.positive.len() as i64 - s.negative.len() as i64;
            ensure(s.len() == count && d == degree, || {
                format!("{name}: {cfg} has count {} degree {d} at t = {t}", s.len())
            })?;
        }
    }
    Ok("200 orbits × 100 steps".into())
}

fn bundle_arithmetic() -> Outcome {
    let mut inputs: Vec<(String, SimplicialComplex)> = vec![
        ("octahedron".into(), generators::octahedron()),
        ("icosahedron".into(), generators::icosahedron()),
        ("torus7".into(), generators::torus7()),
    ];
    for d in 1..=3 {
        inputs.push((format!("cross-polytope {d}"), generators::cross_polytope(d).unwrap()));
    }
    for n in [3, 4, 5, 8] {
        inputs.push((format!("cycle {n}"), generators::cycle(n).unwrap()));
    }
    for n in [2, 4, 5] {
        inputs.push((format!("path {n}"), generators::path(n).unwrap()));
    }
    for n in 1..=4 {
        inputs.push((format!("simplex {n}"), generators::simplex(n).unwrap()));
    }
    for (name, c) in &inputs {
        let b = Bundle::new(c).map_err(|e| format!("{name}: {e}"))?;
        let q = c.dim() as usize;
        let expected = c.f_vector()[q] as usize * (1..=q + 1).product::<usize>();
        ensure(b.len() == expected, || format!("{name}: |P| = {}, expected {expected}", b.len()))?;
    }
    let oct = Bundle::new(&generators::octahedron()).unwrap().len();
    ensure(oct == 48, || format!("octahedron |P| = {oct}"))?;
    Ok(format!("{} generators, octahedron |P| = {oct}", inputs.len()))
}

fn blinker() -> Outcome {
    let cfg = Configuration::new(vec![Frame::from([1, 2, 3])], vec![Frame::from([1, 3, 2])]);
    let record = orbit::orbit(&generators::octahedron(), &cfg, 100).map_err(|e| e.to_string())?;
    ensure(record.period == Some(2), || format!("period {:?}", record.period))?;
    Ok("period 2".into())
}

fn q1_examples() -> Outcome {
    let path5 = generators::path(5).unwrap();
    let start = Configuration::new(vec![Frame::from([2, 3]), Frame::from([4, 3])], vec![]);
    let expected = Configuration::new(vec![Frame::from([3, 4]), Frame::from([3, 2])], vec![]);
    let got = dynamics::step(&path5, &start).unwrap();
    ensure(got == expected, || format!("pass-through gave {got}"))?;

    let path4 = generators::path(4).unwrap();
    let mut cur = Configuration::new(vec![Frame::from([1, 2]), Frame::from([3, 2])], vec![]);
    let mut trace = String::new();
    for t in 0..=3 {
        let state = serde_json::to_string(&cur).unwrap();
        trace.push_str(&format!("{{\"t\":{t},\"state\":{state}}}\n"));
        cur = dynamics::step(&path4, &cur).unwrap();
    }
    let golden = include_str!("golden/q1_bounce.jsonl");
    ensure(trace == golden, || format!("bounce trace differs from oracle:\n{trace}"))?;
    Ok("pass-through exact, bounce trace matches oracle".into())
}

fn eddie_invisibility() -> Outcome {
    let mut rng = common::rng(7);
    let corpus = bundles();
    for trial in 0..100 {
        let (name, b) = &corpus[trial % corpus.len()];
        let copies = b.q() + 1;
        let cfg = common::random_configuration(b, &mut rng);
        let frame = common::random_frame(b, &mut rng);
        let sign = if rng.random_bool(0.5) { Sign::Positive } else { Sign::Negative };
        let mut ev = Evolver::new(b);
        let mut alone = b.encode(&cfg).unwrap();
        let mut joint = alone.clone().with(sign, frame, copies);
        for t in 1..=50 {
            alone = ev.step(&alone);
            joint = ev.step(&joint);
            let stack = common::single_stack(&joint, &alone);
            ensure(stack.is_some_and(|(_, _, n)| n == copies), || {
                format!("{name}: eddie at {} disturbed {cfg} at t = {t}", b.frame(frame))
            })?;
        }
    }
    Ok("100 trials × 50 steps".into())
}

/// Random configuration with `k ≡ l (mod q+1)` over every facet.
fn facet_balanced<R: Rng>(b: &Bundle, rng: &mut R) -> Configuration {
    let m = b.q() + 1;
    let mut particles = Vec::new();
    for _ in 0..rng.random_range(1..=3) {
        let facet = rng.random_range(0..b.facets().len());
        let fiber: Vec<_> = b.fiber(facet).collect();
        let k = rng.random_range(0..=3);
        let l = k % m + m * rng.random_range(0..=1);
        for (sign, n) in [(Sign::Positive, k), (Sign::Negative, l)] {
            for _ in 0..n {
                let p = fiber[rng.random_range(0..fiber.len())];
                particles.push((sign, b.frame(p).clone()));
            }
        }
    }
    Configuration::from_particles(particles)
}

fn balanced(cfg: &Configuration, m: usize) -> bool {
    cfg.position_counts().values().all(|&(k, l)| k % m == l % m)
}

fn balanced_rigidity() -> Outcome {
    let mut rng = common::rng(8);
    let corpus = bundles();
    let mut failures = Vec::new();
    let mut trials = 0;
    while trials < 50 {
        let (name, b) = &corpus[trials % corpus.len()];
        let cfg = facet_balanced(b, &mut rng);
        if !balanced(&cfg, b.q() + 1) {
            continue;
        }
        trials += 1;
        let c = b.complex();
        let twice = dynamics::step(c, &dynamics::step(c, &cfg).unwrap()).unwrap();
        if twice != cfg {
            failures.push(format!("{name}: {cfg} → {twice}"));
        }
    }
    ensure(failures.is_empty(), || {
        format!("{} of 50 violate T² = id, first {}", failures.len(), failures[0])
    })?;
    Ok("50 configurations".into())
}

fn light_cone() -> Outcome {
    let started = Instant::now();
    let b = Bundle::new(&generators::cross_polytope(3).unwrap()).unwrap();
    let steps = b.dual_graph().diameter() + 2;
    let mut rng = common::rng(9);
    let mut reached = 0;
    for _ in 0..50 {
        let cfg = common::random_configuration(&b, &mut rng);
        let origin = rng.random_range(0..b.facets().len());
        let fiber: Vec<_> = b.fiber(origin).collect();
        let frame = b.frame(fiber[rng.random_range(0..fiber.len())]).clone();
        let sign = if rng.random_bool(0.5) { Sign::Positive } else { Sign::Negative };
        let perturbation = match rng.random_range(0..3) {
            0 => Perturbation::Add { sign, frame: frame.clone() },
            1 => Perturbation::Rotate { sign, frame: frame.clone(), by: 1 },
            _ => Perturbation::Remove { sign, frame: frame.clone() },
        };
        // rotating or removing needs the particle to be there
        let cfg = match &perturbation {
            Perturbation::Add { .. } => cfg,
            _ => cfg.with(sign, frame, 1),
        };
        let report = causality_probe(&b, &cfg, origin, &perturbation, steps).map_err(|e| e.to_string())?;
        for (f, (d, first)) in report.distances.iter().zip(&report.first_difference).enumerate() {
            if let Some(first) = first {
                let d = d.ok_or_else(|| format!("facet {f} unreachable but influenced"))?;
                ensure(*first >= d, || format!("facet {f} influenced at {first} < distance {d}"))?;
                reached += 1;
            }
        }
    }
    let took = within(started, Duration::from_secs(30))?;
    Ok(format!("50 probes, {reached} influenced facets, {took:.2?}"))
}

fn topology() -> Outcome {
    let oct = generators::octahedron();
    let s = oct.summary().map_err(|e| e.to_string())?;
    ensure(s.euler_characteristic == 2 && 1 - s.f_polynomial.eval(-1) == 2, || {
        format!("χ(octahedron) = {}", s.euler_characteristic)
    })?;
    for (name, c) in [
        ("C_4", generators::cycle(4).unwrap()),
        ("octahedron", oct.clone()),
        ("icosahedron", generators::icosahedron()),
    ] {
        let r = curvature_report(&c);
        let chi = Rational::from_integer(c.euler_characteristic());
        ensure(r.total == chi, || format!("{name}: ΣK = {}", r.total))?;
        let mut sum = framedyn::FPolynomial::zero();
        for v in c.vertices() {
            let sphere = c.unit_sphere(&framedyn::Simplex::new([v]).unwrap()).unwrap();
            sum = &sum + &sphere.f_polynomial();
        }
        ensure(sum == c.f_polynomial().derivative(), || format!("{name}: f' ≠ Σ f_S(v)"))?;
    }
    let mut simplices = 0;
    for (name, c) in common::topology_corpus() {
        for x in c.simplices() {
            let d = c.sphere_decomposition(x).unwrap();
            let j = d.sub_sphere.join(&d.link, JoinMode::Strict).map_err(|e| e.to_string())?;
            ensure(j == d.unit_sphere, || format!("{name}: S({x}) ≠ sub-sphere ⊕ link"))?;
            simplices += 1;
        }
    }
    let mut rng = common::rng(10);
    let mut small = || {
        let facets: Vec<Vec<u32>> = (0..rng.random_range(1..4))
            .map(|_| {
                let mut f: Vec<u32> = (0..6).filter(|_| rng.random_bool(0.4)).collect();
                if f.is_empty() {
                    f.push(rng.random_range(0..6));
                }
                f
            })
            .collect();
        SimplicialComplex::closure_of(facets).unwrap()
    };
    for _ in 0..100 {
        let (a, b) = (small(), small());
        let j = a.join(&b, JoinMode::Relabel).map_err(|e| e.to_string())?;
        ensure(j.f_polynomial() == &a.f_polynomial() * &b.f_polynomial(), || {
            format!("f of join ≠ product for {a:?} and {b:?}")
        })?;
    }
    Ok(format!("{simplices} sphere splits, 100 joins"))
}

fn ds_recognition() -> Outcome {
    ensure(is_ds_manifold(&generators::octahedron()), || "octahedron rejected".into())?;
    ensure(is_ds_manifold(&generators::cycle(5).unwrap()), || "C_5 rejected".into())?;
    ensure(!is_ds_manifold(&generators::path(4).unwrap()), || "path accepted".into())?;
    let v = is_ds_sphere(&SimplicialComplex::empty());
    ensure(v.is_sphere && v.dim == -1, || format!("empty complex gave {v:?}"))?;
    Ok("octahedron, C_5 manifolds; path not; empty is the (-1)-sphere".into())
}

fn census_determinism() -> Outcome {
    let started = Instant::now();
    let b = Bundle::new(&generators::cross_polytope(3).unwrap()).unwrap();
    let mut spec = CensusSpec::new(Family::PinnedPairs);
    spec.sample = Some(10_000);
    spec.seed = 12;
    spec.cap = 10_000;
    let one = census(&b, &spec, 1).map_err(|e| e.to_string())?;
    let eight = census(&b, &spec, 8).map_err(|e| e.to_string())?;
    ensure(one.to_csv() == eight.to_csv(), || "CSV differs between 1 and 8 workers".into())?;
    ensure(one.summary_json() == eight.summary_json(), || "summary differs between 1 and 8 workers".into())?;
    let checked = verify_periods(&b, &spec, &one, 0.01, 12).map_err(|e| e.to_string())?;
    let took = within(started, Duration::from_secs(300))?;
    Ok(format!(
        "{} configurations, {} truncated, max period {:?}, {checked} re-verified, {took:.2?}",
        one.summary.processed, one.summary.truncated, one.summary.max_period
    ))
}

fn fermion_pauli() -> Outcome {
    let mut rng = common::rng(13);
    let corpus = bundles();
    for trial in 0..50 {
        let (name, b) = &corpus[trial % corpus.len()];
        let cfg = common::random_configuration(b, &mut rng);
        let frame = common::random_frame(b, &mut rng);
        let sign = if rng.random_bool(0.5) { Sign::Positive } else { Sign::Negative };
        let mut ev = Evolver::new(b);
        let mut alone = b.encode(&cfg).unwrap();
        let mut joint: State = alone.clone().with(sign, frame, 2);
        for t in 1..=50 {
            alone = ev.fermion_step(&alone);
            joint = ev.fermion_step(&joint);
            ensure(common::single_stack(&joint, &alone).is_some_and(|(_, _, n)| n == 2), || {
                format!("{name}: fermion pair at {} split or disturbed {cfg} at t = {t}", b.frame(frame))
            })?;
        }
    }
    // the pair alone keeps to one frame and sign alternates each step
    let path3 = generators::path(3).unwrap();
    let pair = single(Sign::Positive, [1, 2]).with(Sign::Positive, Frame::from([1, 2]), 1);
    let next = dynamics::fermion_step(&path3, &pair).unwrap();
    ensure(next.negative().len() == 2 && next.negative()[0] == next.negative()[1], || {
        format!("pair became {next}")
    })?;
    Ok("50 trials × 50 steps".into())
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("involutions A² = B² = id", involutions),
        ("reversibility", reversibility),
        ("conservation of count and degree", conservation),
        ("bundle size f_q (q+1)!", bundle_arithmetic),
        ("octahedron blinker period", blinker),
        ("q = 1 micro-examples", q1_examples),
        ("eddie invisibility", eddie_invisibility),
        ("balanced rigidity", balanced_rigidity),
        ("light cone", light_cone),
        ("topology suite", topology),
        ("DS recognition", ds_recognition),
        ("census determinism and soundness", census_determinism),
        ("fermion exclusion", fermion_pauli),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
