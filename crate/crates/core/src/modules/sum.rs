use std::fmt;

use super::GradedModule;
use crate::error::{Error, Result};
use crate::ring::{Field, Poly};

/// An element `(a, b)` of a direct sum `A ⊕ B`.
#[derive(Clone, PartialEq)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: GradedModule, B: GradedModule> GradedModule for Pair<A, B> {
    fn field(&self) -> Field {
        self.0.field()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(Pair(self.0.try_add(&other.0)?, self.1.try_add(&other.1)?))
    }

    fn neg(&self) -> Self {
        Pair(self.0.neg(), self.1.neg())
    }

    fn act(&self, r: &Poly) -> Result<Self> {
        Ok(Pair(self.0.act(r)?, self.1.act(r)?))
    }

    fn degree(&self) -> Option<i64> {
        match (self.0.is_zero(), self.1.is_zero()) {
            (true, true) => None,
            (false, true) => self.0.degree(),
            (true, false) => self.1.degree(),
            (false, false) => {
                let d = self.0.degree()?;
                (self.1.degree()? == d).then_some(d)
            }
        }
    }
}

impl<A: GradedModule, B: GradedModule> Pair<A, B> {
    /// Degree of a homogeneous pair, with an error otherwise.
    pub fn degree_checked(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::UndefinedDegree);
        }
        self.degree().ok_or(Error::NotHomogeneous)
    }
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

impl<A: fmt::Debug, B: fmt::Debug> fmt::Debug for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.0, self.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::{EElt, RxElt};

    #[test]
    fn componentwise() {
        let f = Field::prime(3).unwrap();
        let a = Pair(RxElt::new(Poly::y(f), 1), Poly::one(f));
        assert_eq!(a.degree(), Some(0));
        let b = a.act(&Poly::x(f)).unwrap();
        assert_eq!(b, Pair(RxElt::from_poly(Poly::y(f)), Poly::x(f)));
        assert!(a.try_sub(&a).unwrap().is_zero());
        let mixed = Pair(Poly::x(f), EElt::parse(f, "1/(x*y)").unwrap());
        assert_eq!(mixed.degree(), None);
        assert_eq!(mixed.degree_checked(), Err(Error::NotHomogeneous));
    }
}
