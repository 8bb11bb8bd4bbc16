use thiserror::Error;

use crate::complex::Simplex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty facet at position {0}")]
    EmptyFacet(usize),
    #[error("facet at position {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: u32 },
    #[error("self-loop on vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u32, u32),
    #[error("simplex {0} is not in the complex")]
    NotInComplex(Simplex),
    #[error("joined complexes share vertex {0}; enable relabeling")]
    OverlappingVertices(u32),
    #[error("complex is not admissible: {0}")]
    Inadmissible(String),
    #[error("frame {0:?} is not a frame of this bundle")]
    UnknownFrame(Vec<u32>),
    #[error("wall {wall} lies in {count} facets")]
    WallViolation { wall: Simplex, count: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal consistency violated: {0}")]
    Consistency(String),
    #[error("light cone violated: {0}")]
    LightCone(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
