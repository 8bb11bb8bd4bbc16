//! Frames and the frame bundle over the facets of a complex.
//!
//! A frame is a facet with a total order on its vertices; its first entry is
//! the base vertex and the rest is the wall opposite to it. The bundle holds
//! every frame of every facet, `f_q * (q+1)!` in total, together with lookup
//! tables for the partner map, fiber rotations and reversal.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::dual::DualGraph;
use crate::error::{Error, Result};

/// An ordered facet. Serializes as a JSON array, order significant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Frame(Vec<Vertex>);

impl Frame {
    pub fn new(vertices: impl Into<Vec<Vertex>>) -> Self {
        Frame(vertices.into())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn base(&self) -> Vertex {
        self.0[0]
    }

    /// The underlying facet. Panics on repeated vertices.
    pub fn position(&self) -> Simplex {
        Simplex::new(self.0.iter().copied()).expect("frame vertices are distinct")
    }

    /// The frame without its base vertex, as a set.
    pub fn wall(&self) -> Option<Simplex> {
        Simplex::new(self.0[1..].iter().copied()).ok()
    }

    /// `result[i] = self[(i + m) mod len]`.
    pub fn rotate_left(&self, m: i64) -> Frame {
        let n = self.0.len();
        if n == 0 {
            return self.clone();
        }
        let mut v = self.0.clone();
        v.rotate_left(m.rem_euclid(n as i64) as usize);
        Frame(v)
    }

    pub fn reversed(&self) -> Frame {
        Frame(self.0.iter().rev().copied().collect())
    }

    fn with_base(&self, base: Vertex) -> Frame {
        let mut v = self.0.clone();
        v[0] = base;
        Frame(v)
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl<const N: usize> From<[Vertex; N]> for Frame {
    fn from(v: [Vertex; N]) -> Self {
        Frame(v.to_vec())
    }
}

fn check_frame(facets: &[Simplex], q: usize, p: &Frame) -> Result<()> {
    let ok = p.len() == q + 1
        && Simplex::new(p.vertices().iter().copied())
            .map(|s| facets.binary_search(&s).is_ok())
            .unwrap_or(false);
    if ok {
        Ok(())
    } else {
        Err(Error::UnknownFrame(p.vertices().to_vec()))
    }
}

/// Crosses the wall opposite the base vertex, straight from the complex.
///
/// At a boundary wall the frame is returned unchanged.
pub fn partner(c: &SimplicialComplex, p: &Frame) -> Result<Frame> {
    let q = c.dim();
    if q < 1 {
        return Err(Error::UnknownFrame(p.vertices().to_vec()));
    }
    let facets = c.facets();
    check_frame(&facets, q as usize, p)?;
    let wall = p.wall().expect("checked frame has a non-empty wall");
    let containing: Vec<&Simplex> = facets.iter().filter(|f| wall.is_subset_of(f)).collect();
    match containing.as_slice() {
        [_] => Ok(p.clone()),
        [a, b] => {
            let other = if a.contains_vertex(p.base()) { b } else { a };
            let apex = other.minus(&wall).expect("facet is larger than its wall");
            Ok(p.with_base(apex.vertices()[0]))
        }
        many => Err(Error::WallViolation {
            wall,
            count: many.len(),
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrameId(u32);

impl FrameId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        FrameId(i as u32)
    }
}

/// All frames of an admissible complex, indexed.
///
/// Facets are in canonical order and the frames of each facet follow in
/// lexicographic order of their permutations.
#[derive(Clone, Debug)]
pub struct Bundle {
    complex: SimplicialComplex,
    q: usize,
    facets: Vec<Simplex>,
    frames: Vec<Frame>,
    index: HashMap<Frame, FrameId>,
    facet_of: Vec<u32>,
    partner: Vec<FrameId>,
    rotations: Vec<FrameId>,
    reversed: Vec<FrameId>,
    boundary: Vec<bool>,
    dual: DualGraph,
}

impl Bundle {
    pub fn new(c: &SimplicialComplex) -> Result<Self> {
        let walls = c.classify_walls();
        if !walls.admissible {
            let why = if c.dim() < 1 {
                "dimension must be at least 1".to_string()
            } else if !walls.pure {
                "complex is not pure".to_string()
            } else {
                format!("walls in 3+ facets: {}", walls.violations.iter().join(" "))
            };
            return Err(Error::Inadmissible(why));
        }
        let q = c.dim() as usize;
        let facets = c.facets();
        let mut frames = Vec::new();
        let mut facet_of = Vec::new();
        for (i, f) in facets.iter().enumerate() {
            for perm in f.vertices().iter().copied().permutations(q + 1) {
                frames.push(Frame(perm));
                facet_of.push(i as u32);
            }
        }
        let index: HashMap<Frame, FrameId> = frames
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), FrameId::from_index(i)))
            .collect();

        let mut by_wall: HashMap<Simplex, Vec<usize>> = HashMap::new();
        for (i, f) in facets.iter().enumerate() {
            for v in f.vertices() {
                let wall = f.minus(&Simplex::from_sorted(vec![*v])).expect("q >= 1");
                by_wall.entry(wall).or_default().push(i);
            }
        }

        let lookup = |p: &Frame| index[p];
        let mut partner = Vec::with_capacity(frames.len());
        let mut boundary = Vec::with_capacity(frames.len());
        for (i, p) in frames.iter().enumerate() {
            let wall = p.wall().expect("q >= 1");
            let sharing = &by_wall[&wall];
            if sharing.len() == 1 {
                partner.push(FrameId::from_index(i));
                boundary.push(true);
            } else {
                let own = facet_of[i] as usize;
                let other = *sharing.iter().find(|&&g| g != own).expect("two facets");
                let apex = facets[other].minus(&wall).expect("apex").vertices()[0];
                partner.push(lookup(&p.with_base(apex)));
                boundary.push(false);
            }
        }
        let rotations = frames
            .iter()
            .flat_map(|p| (0..=q as i64).map(move |m| p.rotate_left(m)))
            .map(|p| lookup(&p))
            .collect();
        let reversed = frames.iter().map(|p| lookup(&p.reversed())).collect();

        Ok(Bundle {
            complex: c.clone(),
            q,
            dual: DualGraph::new(c),
            facets,
            frames,
            index,
            facet_of,
            partner,
            rotations,
            reversed,
            boundary,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Dimension of the facets.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn frames(&self) -> &[Frame] {
        &self.frames
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn dual_graph(&self) -> &DualGraph {
        &self.dual
    }

    pub fn frame(&self, id: FrameId) -> &Frame {
        &self.frames[id.index()]
    }

    pub fn id(&self, p: &Frame) -> Result<FrameId> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| Error::UnknownFrame(p.vertices().to_vec()))
    }

    /// Index of the facet under a frame.
    pub fn facet_of(&self, id: FrameId) -> usize {
        self.facet_of[id.index()] as usize
    }

    pub fn partner(&self, id: FrameId) -> FrameId {
        self.partner[id.index()]
    }

    pub fn is_boundary(&self, id: FrameId) -> bool {
        self.boundary[id.index()]
    }

    pub fn rotate_left(&self, id: FrameId, m: i64) -> FrameId {
        let n = self.q + 1;
        self.rotations[id.index() * n + m.rem_euclid(n as i64) as usize]
    }

    pub fn reversed(&self, id: FrameId) -> FrameId {
        self.reversed[id.index()]
    }

    /// Frames over one facet.
    pub fn fiber(&self, facet: usize) -> impl Iterator<Item = FrameId> + '_ {
        let size = self.len() / self.facets.len();
        (facet * size..(facet + 1) * size).map(FrameId::from_index)
    }

    /// Frame ids in canonical order.
    pub fn ids(&self) -> impl Iterator<Item = FrameId> {
        (0..self.frames.len()).map(FrameId::from_index)
    }
}
