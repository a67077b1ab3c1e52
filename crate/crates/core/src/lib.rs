//! Exact computation with supersymmetric and Laurent supersymmetric
//! polynomials for `gl(m|n)`, and with the Weyl-groupoid geometry of their
//! zero loci.
//!
//! Modules, bottom up:
//! - [`exactmath`]: rational scalars, row reduction, kernels
//! - [`poly`]: sparse (Laurent) polynomials in `x1..xm, y1..yn`
//! - [`symmetry`]: the Weyl group `S_m x S_n`
//! - [`membership`]: membership tests for the two invariant algebras, generators, graded bases
//! - [`geometry`]: the bilinear form, isotropic roots, affine subspaces, groupoid closures,
//!   vanishing ideals

pub mod error;
pub mod exactmath;
pub mod geometry;
pub mod membership;
pub mod poly;
pub mod symmetry;

pub use error::Error;
pub use exactmath::{Matrix, Scalar};
pub use geometry::{AffineSubspace, ClosureOptions, IsotropicRoot, NullstellensatzReport, Point, SuperalgebraicSet};
pub use membership::Verdict;
pub use poly::{LaurentPoly, Mode, Monomial, Signature};
pub use symmetry::WeylElement;
