//! Exact computational projective geometry for pencils of conics.
//!
//! The crate builds the involution that a pencil of conics through four base
//! points induces on a line, and checks the butterfly-theorem family of
//! statements on concrete configurations with exact arithmetic only: the
//! rationals and a single quadratic extension `Q(√d)` at a time.

pub mod arith;
pub mod butterfly;
pub mod cli;
pub mod conic;
pub mod error;
pub mod involution;
mod linalg;
pub mod pencil;
pub mod projective;
pub mod serial;

pub use arith::{int, quad_roots, rat, squarefree_sqrt, QuadExt, Rat, RootPair, Scalar};
pub use conic::{Conic, IntersectionKind, IntersectionResult};
pub use error::GeomError;
pub use involution::{apolar, involution_from_pairs, involution_with_fixed_points, BinaryQuadratic, InvolutionRel};
pub use pencil::{Pencil, PencilParam};
pub use projective::{cross_ratio, general_position, harmonic_conjugate, join, meet, CrossRatio, HomParam, Line, LineChart, Point};
