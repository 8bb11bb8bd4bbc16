//! Reversible signed-particle dynamics on the frame bundle of a finite
//! abstract simplicial complex.
//!
//! The crate has three layers:
//!
//! * combinatorial topology: [`complex`], [`ds`], [`curvature`], [`dual`],
//!   plus [`generators`] and [`io`] for building inputs;
//! * the dynamics: [`bundle`] of ordered facets, [`config`]urations of signed
//!   particles, the involutions and steps in [`dynamics`] (frame values) and
//!   [`engine`] (bundle indices), [`orbit`]s and [`eddie`] tracers;
//! * the [`analysis`] harness for censuses, light-cone probes and tracer
//!   experiments.
//!
//! ```
//! use framedyn::{generators, orbit, Configuration, Frame};
//!
//! let octahedron = generators::octahedron();
//! let blinker = Configuration::new(
//!     vec![Frame::from([1, 2, 3])],
//!     vec![Frame::from([1, 3, 2])],
//! );
//! let record = orbit::orbit(&octahedron, &blinker, 100)?;
//! assert_eq!(record.period, Some(2));
//! # Ok::<(), framedyn::Error>(())
//! ```

pub mod analysis;
pub mod bundle;
pub mod complex;
pub mod config;
pub mod curvature;
pub mod ds;
pub mod dual;
pub mod dynamics;
pub mod eddie;
pub mod engine;
pub mod error;
pub mod generators;
pub mod io;
pub mod orbit;
pub mod poly;

pub use bundle::{Bundle, Frame, FrameId};
pub use complex::{JoinMode, Simplex, SimplicialComplex, Vertex};
pub use config::{Configuration, Sign};
pub use dynamics::Mode;
pub use error::{Error, Result};
pub use poly::FPolynomial;

// The guide's chapters are compiled as doctests so their snippets stay
// in sync with the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/frames.md")]
    mod frames {}
    #[doc = include_str!("../../../book/src/dynamics.md")]
    mod dynamics {}
    #[doc = include_str!("../../../book/src/eddies.md")]
    mod eddies {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments {}
}
