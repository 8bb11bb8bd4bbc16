//! Vertex curvature and the two Gauss–Bonnet identities.
//!
//! `K(v) = 1 - f_0(S(v))/2 + f_1(S(v))/3 - ...`, the integral of the unit
//! sphere's simplex generating function over `[-1, 0]`. Summed over vertices it
//! gives the Euler characteristic; before integrating, the same sum is the
//! derivative `f'(t) = sum_v f_{S(v)}(t)`.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::complex::{SimplicialComplex, Simplex, Vertex};
use crate::poly::FPolynomial;

pub type Rational = Ratio<i64>;

fn ratio_string<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCurvature {
    pub vertex: Vertex,
    #[serde(serialize_with = "ratio_string")]
    pub curvature: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvatureReport {
    pub vertices: Vec<VertexCurvature>,
    #[serde(serialize_with = "ratio_string")]
    pub total: Rational,
    pub euler_characteristic: i64,
    /// `sum_v K(v) == chi`.
    pub gauss_bonnet: bool,
    /// `f'(t) == sum_v f_{S(v)}(t)` coefficient-wise.
    pub generating_function_identity: bool,
}

/// Curvature from the f-vector of a vertex's unit sphere.
pub fn curvature_from_sphere(sphere_f: &[u64]) -> Rational {
    sphere_f
        .iter()
        .enumerate()
        .fold(Rational::from_integer(1), |acc, (k, &f)| {
            let term = Rational::new(f as i64, k as i64 + 2);
            if k % 2 == 0 {
                acc - term
            } else {
                acc + term
            }
        })
}

pub fn curvature_report(c: &SimplicialComplex) -> CurvatureReport {
    let mut vertices = Vec::new();
    let mut sphere_sum = FPolynomial::zero();
    for v in c.vertices() {
        let x = Simplex::from_sorted(vec![v]);
        let sphere = c.unit_sphere(&x).expect("vertex is a member");
        let f = sphere.f_vector();
        sphere_sum = &sphere_sum + &FPolynomial::from_f_vector(&f);
        vertices.push(VertexCurvature {
            vertex: v,
            curvature: curvature_from_sphere(&f),
        });
    }
    let total = vertices
        .iter()
        .fold(Rational::from_integer(0), |acc, k| acc + k.curvature);
    let chi = c.euler_characteristic();
    CurvatureReport {
        vertices,
        total,
        euler_characteristic: chi,
        gauss_bonnet: total == Rational::from_integer(chi),
        generating_function_identity: c.f_polynomial().derivative() == sphere_sum,
    }
}
