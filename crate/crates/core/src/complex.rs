//! Finite abstract simplicial complexes.
//!
//! A complex is stored as the full set of its simplices; facets, stars and
//! spheres are derived on demand. Every simplex keeps its vertices sorted, so
//! set equality of complexes is plain structural equality.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::FPolynomial;

pub type Vertex = u32;

/// A non-empty set of vertices, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(Error::EmptyFacet(0));
        }
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex {
                index: 0,
                vertex: w[0],
            });
        }
        Ok(Simplex(v))
    }

    /// Caller guarantees the input is sorted, duplicate-free and non-empty.
    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
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

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// Vertices of `self` not in `other`, or `None` when nothing is left.
    pub fn minus(&self, other: &Simplex) -> Option<Simplex> {
        let v: Vec<Vertex> = self
            .0
            .iter()
            .copied()
            .filter(|v| !other.contains_vertex(*v))
            .collect();
        (!v.is_empty()).then_some(Simplex(v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v: Vec<Vertex> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub fn intersection_len(&self, other: &Simplex) -> usize {
        self.0.iter().filter(|v| other.contains_vertex(**v)).count()
    }

    /// All non-empty subsets, including the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        assert!(n < 32, "simplex too large to enumerate faces");
        (1u32..(1 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// How [`SimplicialComplex::join`] treats overlapping vertex labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinMode {
    /// Reject complexes that share a vertex label.
    Strict,
    /// Shift the second complex past the largest label of the first.
    Relabel,
}

/// The star, spheres and link of one simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereDecomposition {
    /// Simplices containing `x`, including `x`. Not a complex.
    pub star: Vec<Simplex>,
    pub closed_star: SimplicialComplex,
    pub unit_sphere: SimplicialComplex,
    /// Proper non-empty faces of `x`.
    pub sub_sphere: SimplicialComplex,
    /// `y \ x` for every `y` strictly containing `x`.
    pub link: SimplicialComplex,
}

/// Walls classified by the number of facets that contain them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallReport {
    pub interior: Vec<Simplex>,
    pub boundary: Vec<Simplex>,
    /// Walls in three or more facets.
    pub violations: Vec<Simplex>,
    pub pure: bool,
    pub admissible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombinatorialSummary {
    pub f_vector: Vec<u64>,
    pub f_polynomial: FPolynomial,
    pub euler_characteristic: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplicialComplex {
    simplices: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Smallest complex containing every listed vertex set.
    pub fn closure_of<F, I>(facets: F) -> Result<Self>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let mut simplices = BTreeSet::new();
        for (index, facet) in facets.into_iter().enumerate() {
            let s = Simplex::new(facet).map_err(|e| match e {
                Error::EmptyFacet(_) => Error::EmptyFacet(index),
                Error::RepeatedVertex { vertex, .. } => Error::RepeatedVertex { index, vertex },
                other => other,
            })?;
            if simplices.contains(&s) {
                continue;
            }
            simplices.extend(s.faces());
        }
        Ok(SimplicialComplex { simplices })
    }

    /// Clique (Whitney) complex of a simple undirected graph.
    pub fn whitney<E>(edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if !adjacency.entry(a).or_default().insert(b) {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            adjacency.entry(b).or_default().insert(a);
        }
        let mut cliques = Vec::new();
        let candidates: BTreeSet<Vertex> = adjacency.keys().copied().collect();
        bron_kerbosch(
            &adjacency,
            &mut Vec::new(),
            candidates,
            BTreeSet::new(),
            &mut cliques,
        );
        Self::closure_of(cliques)
    }

    pub(crate) fn from_simplices(simplices: BTreeSet<Simplex>) -> Self {
        SimplicialComplex { simplices }
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn contains(&self, x: &Simplex) -> bool {
        self.simplices.contains(x)
    }

    /// Maximal dimension; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.simplices
            .iter()
            .map(|s| s.dim() as isize)
            .max()
            .unwrap_or(-1)
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.simplices
            .iter()
            .filter(|s| s.len() == 1)
            .map(|s| s.0[0])
            .collect()
    }

    /// Simplices of dimension `k`, in canonical order.
    pub fn simplices_of_dim(&self, k: usize) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().filter(move |s| s.dim() == k)
    }

    /// Maximal simplices (not contained in any other simplex).
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        self.simplices
            .iter()
            .filter(|s| {
                !self
                    .simplices
                    .iter()
                    .any(|t| t.len() == s.len() + 1 && s.is_subset_of(t))
            })
            .cloned()
            .collect()
    }

    /// The `q`-simplices, where `q` is the dimension.
    pub fn facets(&self) -> Vec<Simplex> {
        match self.dim() {
            -1 => Vec::new(),
            q => self.simplices_of_dim(q as usize).cloned().collect(),
        }
    }

    pub fn is_pure(&self) -> bool {
        let q = self.dim();
        self.maximal_simplices()
            .iter()
            .all(|s| s.dim() as isize == q)
    }

    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; (self.dim() + 1) as usize];
        for s in &self.simplices {
            f[s.dim()] += 1;
        }
        f
    }

    pub fn f_polynomial(&self) -> FPolynomial {
        FPolynomial::from_f_vector(&self.f_vector())
    }

    /// Alternating count of simplices by dimension.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if s.dim() % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    pub fn summary(&self) -> Result<CombinatorialSummary> {
        let f_vector = self.f_vector();
        let f_polynomial = FPolynomial::from_f_vector(&f_vector);
        let chi = self.euler_characteristic();
        let chi_poly = 1 - f_polynomial.eval(-1);
        if chi != chi_poly {
            return Err(Error::Consistency(format!(
                "euler characteristic {chi} differs from 1 - f(-1) = {chi_poly}"
            )));
        }
        Ok(CombinatorialSummary {
            f_vector,
            f_polynomial,
            euler_characteristic: chi,
        })
    }

    /// Simplices containing `x`, including `x` itself.
    pub fn star(&self, x: &Simplex) -> Vec<Simplex> {
        self.simplices
            .iter()
            .filter(|y| x.is_subset_of(y))
            .cloned()
            .collect()
    }

    pub fn sphere_decomposition(&self, x: &Simplex) -> Result<SphereDecomposition> {
        if !self.contains(x) {
            return Err(Error::NotInComplex(x.clone()));
        }
        let star = self.star(x);
        let mut closed = BTreeSet::new();
        for y in &star {
            if !closed.contains(y) {
                closed.extend(y.faces());
            }
        }
        let unit: BTreeSet<Simplex> = closed
            .iter()
            .filter(|y| !x.is_subset_of(y))
            .cloned()
            .collect();
        let sub: BTreeSet<Simplex> = x.faces().filter(|y| y != x).collect();
        let link: BTreeSet<Simplex> = star.iter().filter_map(|y| y.minus(x)).collect();
        Ok(SphereDecomposition {
            star,
            closed_star: SimplicialComplex::from_simplices(closed),
            unit_sphere: SimplicialComplex::from_simplices(unit),
            sub_sphere: SimplicialComplex::from_simplices(sub),
            link: SimplicialComplex::from_simplices(link),
        })
    }

    /// `S(x)`: closure of the star minus the star.
    pub fn unit_sphere(&self, x: &Simplex) -> Result<SimplicialComplex> {
        if !self.contains(x) {
            return Err(Error::NotInComplex(x.clone()));
        }
        let mut unit = BTreeSet::new();
        for y in self.simplices.iter().filter(|y| x.is_subset_of(y)) {
            unit.extend(y.faces().filter(|z| !x.is_subset_of(z)));
        }
        Ok(SimplicialComplex::from_simplices(unit))
    }

    /// Applies a vertex relabeling. The map must be injective on the vertices.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Self {
        let simplices = self
            .simplices
            .iter()
            .map(|s| {
                let mut v: Vec<Vertex> = s.0.iter().map(|&x| map(x)).collect();
                v.sort_unstable();
                Simplex(v)
            })
            .collect();
        SimplicialComplex { simplices }
    }

    /// `A ⊕ B = A ∪ B ∪ {a ∪ b}`; the f-polynomial product rule is checked.
    pub fn join(&self, other: &SimplicialComplex, mode: JoinMode) -> Result<Self> {
        let shifted;
        let other = match mode {
            JoinMode::Relabel => {
                let offset = self.vertices().last().map_or(0, |&m| m + 1);
                let base = other.vertices().first().copied().unwrap_or(0);
                shifted = other.relabel(|v| v - base + offset);
                &shifted
            }
            JoinMode::Strict => {
                let mine: HashSet<Vertex> = self.vertices().into_iter().collect();
                if let Some(v) = other.vertices().into_iter().find(|v| mine.contains(v)) {
                    return Err(Error::OverlappingVertices(v));
                }
                other
            }
        };
        let mut simplices = self.simplices.clone();
        simplices.extend(other.simplices.iter().cloned());
        for a in &self.simplices {
            for b in &other.simplices {
                simplices.insert(a.union(b));
            }
        }
        let joined = SimplicialComplex { simplices };
        let expected = &self.f_polynomial() * &other.f_polynomial();
        if joined.f_polynomial() != expected {
            return Err(Error::Consistency(format!(
                "join f-polynomial {} differs from product {}",
                joined.f_polynomial(),
                expected
            )));
        }
        Ok(joined)
    }

    pub fn classify_walls(&self) -> WallReport {
        let q = self.dim();
        let pure = self.is_pure();
        let mut interior = Vec::new();
        let mut boundary = Vec::new();
        let mut violations = Vec::new();
        if q >= 1 {
            let mut counts: BTreeMap<&Simplex, usize> = self
                .simplices_of_dim(q as usize - 1)
                .map(|w| (w, 0))
                .collect();
            for facet in self.simplices_of_dim(q as usize) {
                for (w, c) in counts.iter_mut() {
                    if w.is_subset_of(facet) {
                        *c += 1;
                    }
                }
            }
            for (w, c) in counts {
                match c {
                    // only reachable in impure complexes
                    0 => {}
                    1 => boundary.push(w.clone()),
                    2 => interior.push(w.clone()),
                    _ => violations.push(w.clone()),
                }
            }
        }
        let admissible = q >= 1 && pure && violations.is_empty();
        WallReport {
            interior,
            boundary,
            violations,
            pure,
            admissible,
        }
    }

    /// Relabels vertices to `0..n` preserving their order.
    pub fn compacted(&self) -> Self {
        let index: BTreeMap<Vertex, Vertex> = self
            .vertices()
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, i as Vertex))
            .collect();
        self.relabel(|v| index[&v])
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.simplices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

fn bron_kerbosch(
    adjacency: &BTreeMap<Vertex, BTreeSet<Vertex>>,
    clique: &mut Vec<Vertex>,
    mut candidates: BTreeSet<Vertex>,
    mut excluded: BTreeSet<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() && !clique.is_empty() {
            out.push(clique.clone());
        }
        return;
    }
    while let Some(&v) = candidates.iter().next() {
        let neighbours = &adjacency[&v];
        clique.push(v);
        bron_kerbosch(
            adjacency,
            clique,
            candidates.intersection(neighbours).copied().collect(),
            excluded.intersection(neighbours).copied().collect(),
            out,
        );
        clique.pop();
        candidates.remove(&v);
        excluded.insert(v);
    }
}
