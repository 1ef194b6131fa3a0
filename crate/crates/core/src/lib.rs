//! Exact differential-operator models of so(n+2) acting on polynomials.

pub mod ambient;
pub mod duality;
pub mod error;
pub mod exprio;
pub mod gmodule;
pub mod harmonic;
pub mod liealg;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod sample;
pub mod scalars;
pub mod symmetry;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::{Frame, FrameKind, Poly};
pub use scalars::{Rational, Scalar};
pub use weyl::WeylOp;
