//! Dehn–Sommerville spheres and manifolds.
//!
//! The empty complex is the sphere of dimension -1. A complex of dimension
//! `q` is a sphere when its Euler characteristic is `1 + (-1)^q` and every
//! unit sphere is a sphere of dimension `q - 1`. A manifold only asks the
//! unit-sphere condition.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::SimplicialComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SphereVerdict {
    pub is_sphere: bool,
    /// Dimension of the tested complex, `-1` when empty.
    pub dim: isize,
}

/// Memoizing recognizer. Results are cached per complex after an
/// order-preserving relabeling to `0..n`, so translated copies of the same
/// sub-complex share one entry.
#[derive(Default)]
pub struct DsRecognizer {
    cache: HashMap<SimplicialComplex, bool>,
}

impl DsRecognizer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_sphere(&mut self, c: &SimplicialComplex) -> SphereVerdict {
        let dim = c.dim();
        if c.is_empty() {
            return SphereVerdict {
                is_sphere: true,
                dim,
            };
        }
        let key = c.compacted();
        if let Some(&hit) = self.cache.get(&key) {
            return SphereVerdict {
                is_sphere: hit,
                dim,
            };
        }
        let expected_chi = if dim % 2 == 0 { 2 } else { 0 };
        let is_sphere = c.euler_characteristic() == expected_chi && self.unit_spheres_are(c, dim - 1);
        self.cache.insert(key, is_sphere);
        SphereVerdict { is_sphere, dim }
    }

    pub fn is_manifold(&mut self, c: &SimplicialComplex) -> bool {
        self.unit_spheres_are(c, c.dim() - 1)
    }

    fn unit_spheres_are(&mut self, c: &SimplicialComplex, dim: isize) -> bool {
        c.simplices().all(|x| {
            let s = c.unit_sphere(x).expect("x is a member");
            let v = self.is_sphere(&s);
            v.is_sphere && v.dim == dim
        })
    }
}

pub fn is_ds_sphere(c: &SimplicialComplex) -> SphereVerdict {
    DsRecognizer::new().is_sphere(c)
}

pub fn is_ds_manifold(c: &SimplicialComplex) -> bool {
    DsRecognizer::new().is_manifold(c)
}
