use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial in `x` with rational coefficients, stored densely in
/// ascending degree with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coefficients: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        RationalPolynomial { coefficients }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^degree`
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coefficients = vec![BigRational::zero(); degree];
        coefficients.push(c);
        Self::new(coefficients)
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> BigRational {
        self.coefficients.get(degree).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coefficients.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coefficients.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `c · x^shift` in place of a general product.
    pub fn scale_shift(&self, c: &BigRational, shift: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coefficients = vec![BigRational::zero(); shift];
        coefficients.extend(self.coefficients.iter().map(|a| a * c));
        Self::new(coefficients)
    }
}

impl From<i64> for RationalPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }
}

impl AddAssign<&RationalPolynomial> for RationalPolynomial {
    fn add_assign(&mut self, rhs: &RationalPolynomial) {
        if self.coefficients.len() < rhs.coefficients.len() {
            self.coefficients.resize(rhs.coefficients.len(), BigRational::zero());
        }
        for (a, b) in self.coefficients.iter_mut().zip(&rhs.coefficients) {
            *a += b;
        }
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        RationalPolynomial { coefficients: self.coefficients.iter().map(|c| -c).collect() }
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c < &BigRational::zero() { "-" } else { "+" };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (d, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}*x")?,
                (_, true) => write!(f, "x^{d}")?,
                (_, false) => write!(f, "{a}*x^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic() {
        let p = RationalPolynomial::new(vec![q(1, 2), q(0, 1), q(3, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(2));
        let x = RationalPolynomial::x();
        let prod = &p * &x;
        assert_eq!(prod.coefficients(), &[q(0, 1), q(1, 2), q(0, 1), q(3, 1)]);
        assert!((&p - &p).is_zero());
        assert_eq!(p.eval(&q(2, 1)), q(25, 2));
        assert_eq!(p.scale_shift(&q(2, 1), 1), &p.scale(&q(2, 1)) * &x);
        assert_eq!(RationalPolynomial::zero().degree(), None);
        assert_eq!(format!("{}", RationalPolynomial::new(vec![q(1, 2), q(-1, 1), q(3, 4)])), "3/4*x^2 - x + 1/2");
    }
}
