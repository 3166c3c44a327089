//! Exact Gaussian-rational scalars: complex numbers with arbitrary
//! precision rational real and imaginary parts.
//!
//! These are the coefficients of everything in the exact layer, so that
//! matching and subordination identities are decidable equalities rather
//! than tolerance checks.

use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        GaussianRational { re: BigRational::one(), im: BigRational::zero() }
    }

    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// `re + im·i` from integer pairs, mostly for tests and builders.
    pub fn from_parts(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    /// `(re_n/re_d) + (im_n/im_d)·i`.
    pub fn from_ratio(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        GaussianRational {
            re: BigRational::new(BigInt::from(re_n), BigInt::from(re_d)),
            im: BigRational::new(BigInt::from(im_n), BigInt::from(im_d)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|² as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "inverse of zero Gaussian rational");
        GaussianRational { re: &self.re / &n, im: -&self.im / &n }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

/// Lossy but deterministic conversion; good to the last f64 bit for all
/// operands this crate produces.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fallback for magnitudes outside f64 range.
        if r.is_positive() {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    })
}

/// Parse "p/q" or "p" into an exact rational.
pub fn rational_from_str(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(p))
        }
    }
}

pub fn rational_to_string(r: &BigRational) -> alloc::string::String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", rational_to_string(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", rational_to_string(&self.im))
        } else {
            write!(
                f,
                "({}{}{}i)",
                rational_to_string(&self.re),
                if self.im.is_negative() { "" } else { "+" },
                rational_to_string(&self.im)
            )
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv()
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let z = GaussianRational::from_parts(3, -2);
        let w = GaussianRational::from_ratio(1, 2, 5, 3);
        let p = &z * &w;
        let back = &p / &w;
        assert_eq!(back, z);
        assert_eq!(&z * &z.inv(), GaussianRational::one());
        assert_eq!((&z.conj()).conj(), z);
    }

    #[test]
    fn norms_and_conversion() {
        let z = GaussianRational::from_parts(3, 4);
        assert_eq!(z.norm_sqr(), BigRational::from_integer(BigInt::from(25)));
        let c = z.to_complex();
        assert_eq!(c, Complex64::new(3.0, 4.0));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(rational_from_str("3/4").unwrap(), BigRational::new(BigInt::from(3), BigInt::from(4)));
        assert_eq!(rational_from_str("-7").unwrap(), BigRational::from_integer(BigInt::from(-7)));
        assert_eq!(rational_from_str("6/-4").unwrap(), BigRational::new(BigInt::from(-3), BigInt::from(2)));
        assert!(rational_from_str("1/0").is_none());
        assert!(rational_from_str("x").is_none());
    }
}
