//! Dense univariate polynomials over the Gaussian rationals,
//! coefficients stored in ascending degree.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::rational::GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![GaussianRational::one()] }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Polynomial { coeffs: vec![GaussianRational::zero(), GaussianRational::one()] }
    }

    /// `t - z`.
    pub fn linear(z: &GaussianRational) -> Self {
        Polynomial { coeffs: vec![-z, GaussianRational::one()] }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> GaussianRational {
        self.coeffs.last().cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex();
        }
        acc
    }

    pub fn to_complex_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| c.to_complex()).collect()
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// p(-t): alternate the signs of odd coefficients.
    pub fn compose_neg(&self) -> Self {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Conjugate the coefficients (the polynomial with p̄(t) = conj(p(t̄))).
    pub fn conj_coeffs(&self) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|c| c.conj()).collect() }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * &GaussianRational::from_int((k + 1) as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        self.scale(&self.leading().inv())
    }

    /// Euclidean division: self = q·div + r with deg r < deg div.
    pub fn divrem(&self, div: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dlead = div.leading().inv();
        let dd = div.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![GaussianRational::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = &rem[rem.len() - 1] * &dlead;
            for j in 0..dd {
                let sub = &q * &div.coeffs[j];
                rem[k + j] = &rem[k + j] - &sub;
            }
            rem.pop();
            quot[k] = q;
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Exact quotient, panics if the division leaves a remainder.
    pub fn div_exact(&self, div: &Polynomial) -> Polynomial {
        let (q, r) = self.divrem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn from_roots(roots: &[GaussianRational]) -> Polynomial {
        let mut p = Polynomial::one();
        for z in roots {
            p = &p * &Polynomial::linear(z);
        }
        p
    }

    /// Real and imaginary parts as real-rational coefficient vectors.
    pub fn real_imag_parts(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let re = self.coeffs.iter().map(|c| c.re.clone()).collect();
        let im = self.coeffs.iter().map(|c| c.im.clone()).collect();
        (re, im)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) - &rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                out[i + j] = &out[i + j] + &prod;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·t")?,
                _ => write!(f, "{c}·t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn mul_divrem_roundtrip() {
        let a = Polynomial::new(vec![q(1), q(2), q(3)]);
        let b = Polynomial::new(vec![q(-4), GaussianRational::i(), q(1)]);
        let p = &a * &b;
        let (quot, rem) = p.divrem(&b);
        assert!(rem.is_zero());
        assert_eq!(quot, a);
    }

    #[test]
    fn divrem_with_remainder() {
        let a = Polynomial::new(vec![q(1), q(0), q(0), q(1)]); // 1 + t^3
        let b = Polynomial::new(vec![q(1), q(1)]); // 1 + t
        let (quot, rem) = a.divrem(&b);
        assert!(rem.is_zero());
        assert_eq!(&quot * &b, a);
        let c = Polynomial::new(vec![q(2), q(0), q(1)]); // 2 + t^2
        let (quot2, rem2) = c.divrem(&b);
        assert_eq!(&(&quot2 * &b) + &rem2, c);
        assert_eq!(rem2.degree(), Some(0));
    }

    #[test]
    fn gcd_of_common_factor() {
        let common = Polynomial::linear(&GaussianRational::from_parts(0, 1)); // t - i
        let a = &common * &Polynomial::new(vec![q(1), q(1)]);
        let b = &common * &Polynomial::new(vec![q(3), q(0), q(1)]);
        let g = a.gcd(&b);
        assert_eq!(g, common.monic());
    }

    #[test]
    fn compose_neg_involution() {
        let a = Polynomial::new(vec![q(1), q(2), q(3), GaussianRational::i()]);
        assert_eq!(a.compose_neg().compose_neg(), a);
        // (t-i)(-t) = -t-i = -(t+i)
        let c = Polynomial::linear(&GaussianRational::i());
        let r = c.compose_neg();
        assert_eq!(r, Polynomial::new(vec![-&GaussianRational::i(), -&q(1)]));
    }

    #[test]
    fn eval_exact_and_complex() {
        let p = Polynomial::new(vec![q(-1), q(0), q(1)]); // t^2 - 1
        assert!(p.eval(&q(1)).is_zero());
        assert_eq!(p.eval_complex(Complex64::new(0.0, 1.0)), Complex64::new(-2.0, 0.0));
    }
}
