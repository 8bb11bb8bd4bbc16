//! Index-based evolution on a [`Bundle`].
//!
//! A [`State`] is a configuration encoded as two sorted lists of frame ids.
//! [`Evolver`] applies the involutions through the bundle's lookup tables and
//! keeps a per-facet scratch buffer, so a step costs a few passes over the
//! particles and no hashing.

use crate::bundle::{Bundle, FrameId};
use crate::config::{Configuration, Sign};
use crate::dynamics::Mode;
use crate::error::Result;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State {
    pub positive: Vec<FrameId>,
    pub negative: Vec<FrameId>,
}

impl State {
    pub fn new(mut positive: Vec<FrameId>, mut negative: Vec<FrameId>) -> Self {
        positive.sort_unstable();
        negative.sort_unstable();
        State { positive, negative }
    }

    pub fn len(&self) -> usize {
        self.positive.len() + self.negative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn particles(&self) -> impl Iterator<Item = (Sign, FrameId)> + '_ {
        self.positive
            .iter()
            .map(|&p| (Sign::Positive, p))
            .chain(self.negative.iter().map(|&p| (Sign::Negative, p)))
    }

    pub fn with(mut self, sign: Sign, frame: FrameId, copies: usize) -> Self {
        let list = match sign {
            Sign::Positive => &mut self.positive,
            Sign::Negative => &mut self.negative,
        };
        list.extend(std::iter::repeat_n(frame, copies));
        list.sort_unstable();
        self
    }

    /// Removes `copies` particles of `sign` at `frame`; `None` if too few.
    pub fn without(mut self, sign: Sign, frame: FrameId, copies: usize) -> Option<Self> {
        let list = match sign {
            Sign::Positive => &mut self.positive,
            Sign::Negative => &mut self.negative,
        };
        for _ in 0..copies {
            let i = list.binary_search(&frame).ok()?;
            list.remove(i);
        }
        Some(self)
    }
}

impl Bundle {
    pub fn encode(&self, cfg: &Configuration) -> Result<State> {
        let ids = |frames: &[crate::bundle::Frame]| {
            frames.iter().map(|p| self.id(p)).collect::<Result<Vec<_>>>()
        };
        Ok(State::new(ids(cfg.positive())?, ids(cfg.negative())?))
    }

    pub fn decode(&self, state: &State) -> Configuration {
        let frames = |ids: &[FrameId]| ids.iter().map(|&i| self.frame(i).clone()).collect();
        Configuration::new(frames(&state.positive), frames(&state.negative))
    }
}

/// Steps states over one bundle.
pub struct Evolver<'b> {
    bundle: &'b Bundle,
    delta: Vec<i64>,
    touched: Vec<usize>,
}

impl<'b> Evolver<'b> {
    pub fn new(bundle: &'b Bundle) -> Self {
        Evolver {
            bundle,
            delta: vec![0; bundle.facets().len()],
            touched: Vec::new(),
        }
    }

    pub fn bundle(&self) -> &'b Bundle {
        self.bundle
    }

    pub fn involution_a(&self, s: &State) -> State {
        let cross = |ids: &[FrameId]| ids.iter().map(|&p| self.bundle.partner(p)).collect();
        State::new(cross(&s.negative), cross(&s.positive))
    }

    /// Loads `k - l` per facet into the scratch buffer.
    fn load_counts(&mut self, s: &State) {
        for &f in &self.touched {
            self.delta[f] = 0;
        }
        self.touched.clear();
        for (sign, p) in s.particles() {
            let f = self.bundle.facet_of(p);
            if self.delta[f] == 0 {
                self.touched.push(f);
            }
            self.delta[f] += if sign == Sign::Positive { 1 } else { -1 };
        }
    }

    /// `k - l` at each facet touched by the last loaded state.
    pub fn rotation_at(&self, facet: usize) -> i64 {
        self.delta[facet]
    }

    pub fn involution_b(&mut self, s: &State) -> State {
        self.load_counts(s);
        let b = self.bundle;
        let turn = |ids: &[FrameId], delta: &[i64]| {
            ids.iter()
                .map(|&p| b.rotate_left(p, delta[b.facet_of(p)]))
                .collect()
        };
        State::new(turn(&s.negative, &self.delta), turn(&s.positive, &self.delta))
    }

    pub fn fermion_reflection(&mut self, s: &State) -> State {
        let b = self.bundle;
        let mut parity = vec![false; b.facets().len()];
        for (_, p) in s.particles() {
            parity[b.facet_of(p)] ^= true;
        }
        let flip = |ids: &[FrameId]| {
            ids.iter()
                .map(|&p| if parity[b.facet_of(p)] { b.reversed(p) } else { p })
                .collect()
        };
        State::new(flip(&s.positive), flip(&s.negative))
    }

    pub fn step(&mut self, s: &State) -> State {
        let a = self.involution_a(s);
        self.involution_b(&a)
    }

    pub fn step_inverse(&mut self, s: &State) -> State {
        let b = self.involution_b(s);
        self.involution_a(&b)
    }

    pub fn fermion_step(&mut self, s: &State) -> State {
        let c = self.fermion_reflection(s);
        self.involution_a(&c)
    }

    pub fn fermion_step_inverse(&mut self, s: &State) -> State {
        let a = self.involution_a(s);
        self.fermion_reflection(&a)
    }

    pub fn step_in_mode(&mut self, s: &State, mode: Mode) -> State {
        match mode {
            Mode::Rotation => self.step(s),
            Mode::Fermion => self.fermion_step(s),
        }
    }

    /// One step of the background together with the induced map on frames:
    /// `moves[p]` is where an eddie sitting at `p` ends up.
    pub fn step_with_tracer_map(&mut self, s: &State) -> (State, Vec<FrameId>) {
        let a = self.involution_a(s);
        let next = self.involution_b(&a);
        let b = self.bundle;
        let moves = b
            .ids()
            .map(|p| {
                let q = b.partner(p);
                let f = b.facet_of(q);
                b.rotate_left(q, self.delta[f])
            })
            .collect();
        (next, moves)
    }
}
