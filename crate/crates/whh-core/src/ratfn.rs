//! Rational functions num/den over the Gaussian rationals, kept in a
//! canonical form (coprime, monic denominator) so that equality is
//! structural.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::poly::Polynomial;
use crate::rational::GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFn {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFn { num, den: Polynomial::one() };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_exact(&g), den.div_exact(&g))
        } else {
            (num, den)
        };
        let lead = den.leading().inv();
        den = den.scale(&lead);
        num = num.scale(&lead);
        RationalFn { num, den }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFn { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        RationalFn::from_poly(Polynomial::constant(c))
    }

    pub fn one() -> Self {
        RationalFn::constant(GaussianRational::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Finite iff deg num ≤ deg den.
    pub fn value_at_infinity(&self) -> Option<GaussianRational> {
        let dn = self.num.degree();
        let dd = self.den.degree().unwrap_or(0);
        match dn {
            None => Some(GaussianRational::zero()),
            Some(dn) if dn < dd => Some(GaussianRational::zero()),
            Some(dn) if dn == dd => Some(&self.num.leading() / &self.den.leading()),
            _ => None,
        }
    }

    pub fn eval(&self, z: &GaussianRational) -> Option<GaussianRational> {
        let d = self.den.eval(z);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(z) / &d)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.num.eval_complex(z) / self.den.eval_complex(z)
    }

    pub fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero rational function");
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    /// r(-t).
    pub fn reflect(&self) -> Self {
        RationalFn::new(self.num.compose_neg(), self.den.compose_neg())
    }

    /// The function with conjugated coefficients; equals conj(r(t)) on ℝ.
    pub fn conj_coeffs(&self) -> Self {
        RationalFn::new(self.num.conj_coeffs(), self.den.conj_coeffs())
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        RationalFn::new(self.num.scale(s), self.den.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = RationalFn::one();
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        out
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    /// (t - i)/(t + i)
    fn cayley() -> RationalFn {
        RationalFn::new(
            Polynomial::linear(&GaussianRational::i()),
            Polynomial::linear(&-&GaussianRational::i()),
        )
    }

    #[test]
    fn canonical_equality() {
        let a = RationalFn::new(
            Polynomial::new(vec![q(2), q(2)]),
            Polynomial::new(vec![q(4), q(0), q(2)]),
        );
        let b = RationalFn::new(
            Polynomial::new(vec![q(1), q(1)]),
            Polynomial::new(vec![q(2), q(0), q(1)]),
        );
        assert_eq!(a, b);
    }

    #[test]
    fn common_factors_cancel() {
        let c = cayley();
        let prod = &c * &c.inv();
        assert!(prod.is_one());
        let sq = &c * &c;
        assert_eq!(&sq * &c.inv(), c);
    }

    #[test]
    fn reflect_and_conj_on_cayley() {
        let c = cayley();
        // Cayley reflected = Cayley inverse, and conj-coefficients too.
        assert_eq!(c.reflect(), c.inv());
        assert_eq!(c.conj_coeffs(), c.inv());
        assert_eq!(c.reflect().reflect(), c);
    }

    #[test]
    fn infinity_values() {
        let c = cayley();
        assert_eq!(c.value_at_infinity().unwrap(), q(1));
        let proper = RationalFn::new(Polynomial::one(), Polynomial::new(vec![q(1), q(0), q(1)]));
        assert!(proper.value_at_infinity().unwrap().is_zero());
        let improper = RationalFn::new(Polynomial::new(vec![q(0), q(0), q(1)]), Polynomial::new(vec![q(1), q(1)]));
        assert!(improper.value_at_infinity().is_none());
    }
}
