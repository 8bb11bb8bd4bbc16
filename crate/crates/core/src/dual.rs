//! The dual graph: facets as nodes, joined when they share a wall.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write;

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    facets: Vec<Simplex>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualGraphReport {
    pub nodes: usize,
    pub edges: usize,
    /// Common degree when the graph is regular.
    pub regular_degree: Option<usize>,
    pub triangle_free: bool,
}

impl DualGraph {
    pub fn new(c: &SimplicialComplex) -> Self {
        let facets = c.facets();
        let mut by_wall: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
        for (i, f) in facets.iter().enumerate() {
            if f.len() < 2 {
                continue;
            }
            for skip in 0..f.len() {
                let wall: Vec<u32> = f
                    .vertices()
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &v)| v)
                    .collect();
                by_wall.entry(wall).or_default().push(i);
            }
        }
        let mut adjacency = vec![Vec::new(); facets.len()];
        for sharing in by_wall.values() {
            for (a, &i) in sharing.iter().enumerate() {
                for &j in &sharing[a + 1..] {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        for n in &mut adjacency {
            n.sort_unstable();
            n.dedup();
        }
        DualGraph { facets, adjacency }
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn node_count(&self) -> usize {
        self.facets.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect()
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|n| n.len() == first)
            .then_some(first)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().iter().all(|&(i, j)| {
            !self.adjacency[i]
                .iter()
                .any(|k| self.adjacency[j].binary_search(k).is_ok())
        })
    }

    /// Breadth-first distances; `None` for unreachable facets.
    pub fn distances_from(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.facets.len()];
        let mut queue = VecDeque::new();
        dist[start] = Some(0);
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            let d = dist[i].expect("queued nodes have a distance");
            for &j in &self.adjacency[i] {
                if dist[j].is_none() {
                    dist[j] = Some(d + 1);
                    queue.push_back(j);
                }
            }
        }
        dist
    }

    /// Largest finite distance between two facets.
    pub fn diameter(&self) -> usize {
        (0..self.facets.len())
            .flat_map(|i| self.distances_from(i).into_iter().flatten())
            .max()
            .unwrap_or(0)
    }

    pub fn report(&self) -> DualGraphReport {
        DualGraphReport {
            nodes: self.node_count(),
            edges: self.edges().len(),
            regular_degree: self.regular_degree(),
            triangle_free: self.is_triangle_free(),
        }
    }

    /// Graphviz rendering; nodes are labeled by their sorted facet.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dual {\n");
        for (i, f) in self.facets.iter().enumerate() {
            let _ = writeln!(out, "  f{i} [label=\"{f}\"];");
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  f{i} -- f{j};");
        }
        out.push_str("}\n");
        out
    }
}
