//! Error types shared across the crate.

use alloc::string::String;
use core::fmt;
use num_complex::Complex64;

pub type Result<T> = core::result::Result<T, Error>;

/// Why a symbol fails to be invertible in the algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum InvertibilityWitness {
    /// The numerator vanishes at (approximately) this real point.
    RealZero(f64),
    /// deg num < deg den, so the symbol vanishes at infinity.
    VanishesAtInfinity,
    /// The symbol is identically zero.
    ZeroSymbol,
}

impl fmt::Display for InvertibilityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvertibilityWitness::RealZero(t) => write!(f, "real zero near t = {t}"),
            InvertibilityWitness::VanishesAtInfinity => write!(f, "vanishes at infinity"),
            InvertibilityWitness::ZeroSymbol => write!(f, "zero symbol"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The symbol is not invertible in G (real zero or decay at infinity).
    NotInvertibleInG(InvertibilityWitness),
    /// A rational function has a pole on the real axis.
    PoleOnAxis(f64),
    /// A numeric root sits too close to the real axis to classify.
    RootOnAxis(Complex64),
    /// The half-plane zero/pole split of a symbol does not exist over the
    /// Gaussian rationals, so no exact factorization can be produced.
    SplitNotExact,
    /// The pair (a, b) violates a·ã = b·b̃, or g·g̃ ≠ 1 for a claimed
    /// matching function.
    NotMatching,
    /// W(c) is not right-invertible, so the φ± transport is unavailable.
    NotRightInvertible,
    /// A function claimed to lie in a kernel has a large residual.
    NotInKernel { residual: f64 },
    /// The (ν, n) index combination is not resolved by the theory this
    /// crate implements; the tag carries the offending indices.
    CaseUnsupported(String),
    /// An integral over an unbounded interval with a non-decaying rate.
    DivergentIntegral,
    /// A basis handed to the oracle is numerically rank-deficient.
    DegenerateBasis,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInvertibleInG(w) => write!(f, "symbol not invertible in G: {w}"),
            Error::PoleOnAxis(t) => write!(f, "pole on the real axis near t = {t}"),
            Error::RootOnAxis(z) => write!(f, "root too close to the real axis: {z}"),
            Error::SplitNotExact => {
                write!(f, "half-plane factor split is not exact over the Gaussian rationals")
            }
            Error::NotMatching => write!(f, "matching condition violated"),
            Error::NotRightInvertible => write!(f, "operator is not right-invertible"),
            Error::NotInKernel { residual } => {
                write!(f, "element is not in the kernel (residual {residual:e})")
            }
            Error::CaseUnsupported(tag) => write!(f, "case not resolved by the theory: {tag}"),
            Error::DivergentIntegral => write!(f, "divergent integral"),
            Error::DegenerateBasis => write!(f, "numerically dependent basis"),
        }
    }
}

impl core::error::Error for Error {}
