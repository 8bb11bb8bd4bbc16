//! Named test spaces.

use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Boundary of the `(dim+1)`-dimensional cross-polytope, the join of
/// `dim + 1` zero-spheres.
///
/// Vertices are `1..=2(dim+1)`; the antipodal pairs are `{i, i + dim + 1}`,
/// so for `dim = 2` the octahedron has facets `{1,2,3}` and `{2,3,4}`.
pub fn cross_polytope(dim: usize) -> Result<SimplicialComplex> {
    if dim == 0 {
        return Err(Error::InvalidArgument(
            "cross-polytope needs dim >= 1".into(),
        ));
    }
    let k = dim as Vertex + 1;
    let facets = (0u32..1 << k).map(|mask| {
        (1..=k)
            .map(move |i| if mask & (1 << (i - 1)) == 0 { i } else { i + k })
            .collect::<Vec<_>>()
    });
    SimplicialComplex::closure_of(facets)
}

/// The octahedron, `cross_polytope(2)`.
pub fn octahedron() -> SimplicialComplex {
    cross_polytope(2).expect("dim 2 is valid")
}

/// Cycle graph on vertices `1..=n`, as a one-dimensional complex.
pub fn cycle(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycle needs n >= 3".into()));
    }
    let n = n as Vertex;
    SimplicialComplex::closure_of((1..=n).map(|i| [i, i % n + 1]))
}

/// Path graph on vertices `1..=n`.
pub fn path(n: usize) -> Result<SimplicialComplex> {
    if n < 2 {
        return Err(Error::InvalidArgument("path needs n >= 2".into()));
    }
    SimplicialComplex::closure_of((1..n as Vertex).map(|i| [i, i + 1]))
}

/// A single `n`-simplex on vertices `1..=n+1`.
pub fn simplex(n: usize) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::InvalidArgument("simplex needs n >= 1".into()));
    }
    SimplicialComplex::closure_of([1..=n as Vertex + 1])
}

/// Icosahedron on vertices `0..12`: poles 0 and 11, rings 1..=5 and 6..=10.
pub fn icosahedron() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..5u32 {
        let j = (i + 1) % 5;
        let (u, un) = (1 + i, 1 + j);
        let (w, wn) = (6 + i, 6 + j);
        facets.push([0, u, un]);
        facets.push([11, w, wn]);
        facets.push([u, un, w]);
        facets.push([w, wn, un]);
    }
    SimplicialComplex::closure_of(facets).expect("static facet list")
}

/// Seven-vertex torus: facets `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus7() -> SimplicialComplex {
    let facets = (0..7u32).flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]]);
    SimplicialComplex::closure_of(facets).expect("static facet list")
}

/// Edges of the complete multipartite graph with the given part sizes,
/// labeling vertices consecutively from 1 part by part.
pub fn complete_multipartite_edges(parts: &[usize]) -> Vec<(Vertex, Vertex)> {
    let mut labels = Vec::new();
    let mut next = 1;
    for &size in parts {
        labels.push((next..next + size as Vertex).collect::<Vec<_>>());
        next += size as Vertex;
    }
    let mut edges = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            for &x in a {
                for &y in b {
                    edges.push((x, y));
                }
            }
        }
    }
    edges
}
