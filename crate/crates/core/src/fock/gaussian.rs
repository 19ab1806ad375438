//! Polynomials with Gaussian-rational coefficients, stored as a real and an
//! imaginary [`GradedPoly`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::polyring::{GradedPoly, Rational};
use crate::symfunc::RingElem;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GaussianPoly {
    pub re: GradedPoly,
    pub im: GradedPoly,
}

impl GaussianPoly {
    pub fn new(re: GradedPoly, im: GradedPoly) -> Self {
        GaussianPoly { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(GradedPoly::one())
    }

    pub fn i() -> Self {
        Self::new(GradedPoly::zero(), GradedPoly::one())
    }

    pub fn real(re: GradedPoly) -> Self {
        Self::new(re, GradedPoly::zero())
    }

    pub fn rational(c: Rational) -> Self {
        Self::real(GradedPoly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.re.scale(c), self.im.scale(c))
    }

    /// Multiplication by `i`.
    pub fn times_i(&self) -> Self {
        Self::new(-&self.im, self.re.clone())
    }

    pub fn truncate(&self, w: u32) -> Self {
        Self::new(self.re.truncate(w), self.im.truncate(w))
    }

    pub fn with_cutoff(&self, cutoff: Option<u32>) -> Self {
        Self::new(self.re.with_cutoff(cutoff), self.im.with_cutoff(cutoff))
    }
}

impl<'a> Add<&'a GaussianPoly> for &'a GaussianPoly {
    type Output = GaussianPoly;
    fn add(self, o: &GaussianPoly) -> GaussianPoly {
        GaussianPoly::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussianPoly> for &'a GaussianPoly {
    type Output = GaussianPoly;
    fn sub(self, o: &GaussianPoly) -> GaussianPoly {
        GaussianPoly::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussianPoly> for &'a GaussianPoly {
    type Output = GaussianPoly;
    fn mul(self, o: &GaussianPoly) -> GaussianPoly {
        let re = &(&self.re * &o.re) - &(&self.im * &o.im);
        let im = &(&self.re * &o.im) + &(&self.im * &o.re);
        GaussianPoly::new(re, im)
    }
}

impl Neg for &GaussianPoly {
    type Output = GaussianPoly;
    fn neg(self) -> GaussianPoly {
        GaussianPoly::new(-&self.re, -&self.im)
    }
}

impl Add for GaussianPoly {
    type Output = GaussianPoly;
    fn add(self, o: GaussianPoly) -> GaussianPoly {
        &self + &o
    }
}

impl Sub for GaussianPoly {
    type Output = GaussianPoly;
    fn sub(self, o: GaussianPoly) -> GaussianPoly {
        &self - &o
    }
}

impl Mul for GaussianPoly {
    type Output = GaussianPoly;
    fn mul(self, o: GaussianPoly) -> GaussianPoly {
        &self * &o
    }
}

impl Neg for GaussianPoly {
    type Output = GaussianPoly;
    fn neg(self) -> GaussianPoly {
        -&self
    }
}

impl RingElem for GaussianPoly {
    fn zero() -> Self {
        GaussianPoly::zero()
    }
    fn one() -> Self {
        GaussianPoly::one()
    }
    fn is_zero(&self) -> bool {
        GaussianPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// `0`, `re`, `i*(im)` or `re + i*(im)`.
impl fmt::Display for GaussianPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i*({})", self.im),
            (false, false) => write!(f, "{} + i*({})", self.re, self.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    fn g(re: &str, im: &str) -> GaussianPoly {
        GaussianPoly::new(re.parse().unwrap(), im.parse().unwrap())
    }

    #[test]
    fn i_squared() {
        assert_eq!(&GaussianPoly::i() * &GaussianPoly::i(), -GaussianPoly::one());
        assert_eq!(GaussianPoly::one().times_i(), GaussianPoly::i());
    }

    #[test]
    fn arithmetic() {
        let a = g("t1", "2");
        let b = g("1", "-t1");
        assert_eq!(&a * &b, g("3*t1", "2 - t1^2"));
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(a.scale(&rat(1, 2)), g("(1/2)*t1", "1"));
    }

    #[test]
    fn display() {
        assert_eq!(GaussianPoly::zero().to_string(), "0");
        assert_eq!(g("t1", "0").to_string(), "t1");
        assert_eq!(g("0", "1/2").to_string(), "i*(1/2)");
        assert_eq!(g("t1", "-t3").to_string(), "t1 + i*(-t3)");
    }
}
