//! The localization `R_x`.

use std::fmt;

use super::GradedModule;
use crate::error::{Error, Result};
use crate::ring::poly::{add_exp, mul_exp};
use crate::ring::{Field, Poly};

/// `s/x^n` in lowest terms: when `n > 0`, `x` does not divide `s`.
#[derive(Clone, PartialEq, Eq)]
pub struct RxElt {
    numerator: Poly,
    den: u32,
}

impl RxElt {
    /// Reduces `s/x^n` to lowest terms.
    pub fn new(s: Poly, n: u32) -> RxElt {
        if s.is_zero() {
            return RxElt { numerator: s, den: 0 };
        }
        let k = s.x_valuation().min(n);
        RxElt { numerator: s.div_x_pow(k), den: n - k }
    }

    pub fn zero(field: Field) -> RxElt {
        RxElt { numerator: Poly::zero(field), den: 0 }
    }

    pub fn from_poly(s: Poly) -> RxElt {
        RxElt { numerator: s, den: 0 }
    }

    /// `1/x^n`.
    pub fn inverse_x_power(field: Field, n: u32) -> RxElt {
        RxElt { numerator: Poly::one(field), den: n }
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn den_exponent(&self) -> u32 {
        self.den
    }

    pub fn add(&self, other: &RxElt) -> RxElt {
        let n = self.den.max(other.den);
        let lhs = self.numerator.shift(n - self.den, 0);
        let rhs = other.numerator.shift(n - other.den, 0);
        RxElt::new(lhs.add(&rhs), n)
    }

    pub fn neg(&self) -> RxElt {
        RxElt { numerator: self.numerator.neg(), den: self.den }
    }

    pub fn sub(&self, other: &RxElt) -> RxElt {
        self.add(&other.neg())
    }

    pub fn mul_poly(&self, r: &Poly) -> RxElt {
        RxElt::new(r.mul(&self.numerator), self.den)
    }

    pub fn mul(&self, other: &RxElt) -> RxElt {
        RxElt::new(self.numerator.mul(&other.numerator), add_exp(self.den, other.den))
    }

    /// `s/x^n ↦ s^p / x^{pn}`.
    pub fn frobenius_power(&self) -> RxElt {
        let p = self.numerator.field().characteristic();
        RxElt::new(self.numerator.frobenius(), mul_exp(self.den, p))
    }

    /// Homogeneous degree `deg(s) − n`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        self.numerator.homogeneous_degree().map(|d| d as i64 - self.den as i64)
    }

    /// Degree with the usual error for zero/inhomogeneous elements.
    pub fn degree_checked(&self) -> Result<i64> {
        if self.numerator.is_zero() {
            return Err(Error::UndefinedDegree);
        }
        self.homogeneous_degree().ok_or(Error::NotHomogeneous)
    }
}

impl GradedModule for RxElt {
    fn field(&self) -> Field {
        self.numerator.field()
    }

    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(self.add(other))
    }

    fn neg(&self) -> Self {
        RxElt::neg(self)
    }

    fn act(&self, r: &Poly) -> Result<Self> {
        Ok(self.mul_poly(r))
    }

    fn degree(&self) -> Option<i64> {
        self.homogeneous_degree()
    }
}

impl fmt::Display for RxElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({})/x", self.numerator),
            n => write!(f, "({})/x^{n}", self.numerator),
        }
    }
}

impl fmt::Debug for RxElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rx({self})")
    }
}
