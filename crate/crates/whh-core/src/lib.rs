//! Operator calculus for Wiener-Hopf plus Hankel operators `W(a) ± H(b)`
//! on the half-line, for generating functions of the form
//! `e^{i δ t} · p(t)/q(t)` with exact Gaussian-rational coefficients.
//!
//! The crate computes mean-motion and winding indices, Wiener-Hopf
//! factorizations, explicit kernel and cokernel bases (including the
//! infinite-dimensional parametrized parts that appear when the mean
//! motion is negative), and verifies every construction against a
//! Laguerre-Galerkin matrix oracle with SVD-based defect counts.
//!
//! The crate is `no_std` (with `alloc`); all floating-point math goes
//! through `num-traits`/`libm`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod factorization;
pub mod funcspace;
pub mod kernels;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod ratfn;
pub mod rational;
pub mod roots;
pub mod symbols;
pub mod whh;

pub use error::{Error, Result};
pub use factorization::Factorization;
pub use funcspace::PiecewiseExpPoly;
pub use kernels::{Dim, FreePart, KernelDescription, ProjectionSplit};
pub use rational::GaussianRational;
pub use ratfn::RationalFn;
pub use symbols::{MatchingPair, SubordinatedPair, SymbolExpr};
pub use whh::{CaseTag, Sign, WhhReport};

pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::BigRational;

/// Relative residual below which an element counts as annihilated.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// A numeric root closer to the real axis than this (relative to its
/// magnitude) cannot be classified by half-plane.
pub const AXIS_TOL: f64 = 1e-9;
