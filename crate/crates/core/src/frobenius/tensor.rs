//! Normal forms in `F(M) = F_*R ⊗_R M`.
//!
//! `F_*R` is free over `R` (acting through Frobenius) on the monomials
//! `x^a y^b` with `0 ≤ a, b < p`, so every element of `F(M)` is uniquely
//! `Σ x^a y^b ⊗ m_ab`. The relation `s·r^p ⊗ m = s ⊗ r·m` moves everything
//! else into the second slot.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::modules::{GradedModule, Pair};
use crate::ring::poly::fmt_monomial;
use crate::ring::{Exponents, Field, Poly};

#[derive(Clone)]
pub struct Tensor<M> {
    field: Field,
    slots: BTreeMap<Exponents, M>,
}

impl<M: GradedModule> Tensor<M> {
    pub fn zero(field: Field) -> Self {
        Tensor { field, slots: BTreeMap::new() }
    }

    /// Normal form of `r ⊗ m`: decompose `r = Σ x^a y^b r_ab^p` and move each
    /// `r_ab` across the tensor sign.
    pub fn normalize(r: &Poly, m: &M) -> Result<Self> {
        let mut out = Tensor::zero(m.field());
        for (ab, part) in r.frobenius_decompose() {
            out.add_to_slot(ab, m.act(&part)?)?;
        }
        Ok(out)
    }

    /// `Σ r_i ⊗ m_i`, normalized.
    pub fn normalize_sum<'a>(field: Field, terms: impl IntoIterator<Item = (&'a Poly, &'a M)>) -> Result<Self>
    where
        M: 'a,
    {
        let mut out = Tensor::zero(field);
        for (r, m) in terms {
            out = out.try_add(&Tensor::normalize(r, m)?)?;
        }
        Ok(out)
    }

    /// Builds a tensor from slots already in normal position (`a, b < p`).
    pub fn from_slots(field: Field, slots: impl IntoIterator<Item = (Exponents, M)>) -> Result<Self> {
        let p = field.characteristic();
        let mut out = Tensor::zero(field);
        for ((a, b), m) in slots {
            if a >= p || b >= p {
                return Err(Error::NotNormalForm { a, b });
            }
            out.add_to_slot((a, b), m)?;
        }
        Ok(out)
    }

    fn add_to_slot(&mut self, ab: Exponents, m: M) -> Result<()> {
        let merged = match self.slots.remove(&ab) {
            Some(old) => old.try_add(&m)?,
            None => m,
        };
        if !merged.is_zero() {
            self.slots.insert(ab, merged);
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self) -> impl Iterator<Item = (Exponents, &M)> + '_ {
        self.slots.iter().map(|(&ab, m)| (ab, m))
    }

    pub fn slot(&self, a: u32, b: u32) -> Option<&M> {
        self.slots.get(&(a, b))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (ab, m) in other.slots() {
            out.add_to_slot(ab, m.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Tensor { field: self.field, slots: self.slots.iter().map(|(&ab, m)| (ab, m.neg())).collect() }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    /// Degree under `deg(x^a y^b ⊗ m) = a + b + p·deg(m)`.
    pub fn degree(&self) -> Option<i64> {
        let p = self.field.characteristic() as i64;
        let mut degrees = self.slots.iter().map(|(&(a, b), m)| m.degree().map(|d| a as i64 + b as i64 + p * d));
        let first = degrees.next()??;
        for d in degrees {
            if d? != first {
                return None;
            }
        }
        Some(first)
    }

    /// Applies an `R`-linear map slotwise (`id ⊗ g`).
    pub fn map_slots<N: GradedModule>(&self, mut g: impl FnMut(&M) -> Result<N>) -> Result<Tensor<N>> {
        let mut out = Tensor::zero(self.field);
        for (ab, m) in self.slots() {
            out.add_to_slot(ab, g(m)?)?;
        }
        Ok(out)
    }
}

impl<A: GradedModule, B: GradedModule> Tensor<Pair<A, B>> {
    /// `(r₁⊗a, r₂⊗b) ↦ r₁⊗(a,0) + r₂⊗(0,b)`.
    pub fn combine(first: &Tensor<A>, second: &Tensor<B>, zero_a: impl Fn() -> A, zero_b: impl Fn() -> B) -> Result<Self> {
        let mut out = Tensor::zero(first.field);
        for (ab, a) in first.slots() {
            out.add_to_slot(ab, Pair(a.clone(), zero_b()))?;
        }
        for (ab, b) in second.slots() {
            out.add_to_slot(ab, Pair(zero_a(), b.clone()))?;
        }
        Ok(out)
    }

    /// Inverse of [`Tensor::combine`].
    pub fn split(&self) -> (Tensor<A>, Tensor<B>) {
        let first = Tensor {
            field: self.field,
            slots: self.slots.iter().filter(|(_, m)| !m.0.is_zero()).map(|(&ab, m)| (ab, m.0.clone())).collect(),
        };
        let second = Tensor {
            field: self.field,
            slots: self.slots.iter().filter(|(_, m)| !m.1.is_zero()).map(|(&ab, m)| (ab, m.1.clone())).collect(),
        };
        (first, second)
    }
}

impl<M: PartialEq> PartialEq for Tensor<M> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.slots.len() == other.slots.len()
            && self.slots.iter().zip(other.slots.iter()).all(|((k1, m1), (k2, m2))| k1 == k2 && m1 == m2)
    }
}

impl<M: fmt::Display> fmt::Display for Tensor<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slots.is_empty() {
            return write!(f, "0");
        }
        for (k, (&(a, b), m)) in self.slots.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if a == 0 && b == 0 {
                write!(f, "1")?;
            } else {
                fmt_monomial(f, a, b)?;
            }
            write!(f, " (x) {m}")?;
        }
        Ok(())
    }
}

impl<M: fmt::Display> fmt::Debug for Tensor<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::{EElt, RxElt};
    use crate::ring::parse_poly;

    fn poly(f: Field, s: &str) -> Poly {
        parse_poly(f, s).unwrap()
    }

    #[test]
    fn rx_examples_char_2() {
        let f = Field::prime(2).unwrap();
        let inv_x = RxElt::inverse_x_power(f, 1);
        let t = Tensor::normalize(&poly(f, "x^3"), &inv_x).unwrap();
        assert_eq!(t, Tensor::from_slots(f, [((1, 0), RxElt::from_poly(Poly::one(f)))]).unwrap());
        let t = Tensor::normalize(&poly(f, "y^2"), &inv_x).unwrap();
        assert_eq!(t, Tensor::from_slots(f, [((0, 0), RxElt::new(Poly::y(f), 1))]).unwrap());
    }

    #[test]
    fn e_example_char_3_vanishes() {
        let f = Field::prime(3).unwrap();
        let t = Tensor::normalize(&poly(f, "x^4*y^3"), &EElt::parse(f, "1/(x*y)").unwrap()).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn rejects_unnormalized_slots() {
        let f = Field::prime(2).unwrap();
        let err = Tensor::from_slots(f, [((2, 0), Poly::one(f))]).unwrap_err();
        assert_eq!(err, Error::NotNormalForm { a: 2, b: 0 });
    }

    #[test]
    fn twisted_degree() {
        let f = Field::prime(3).unwrap();
        let t = Tensor::normalize(&poly(f, "x^2*y"), &EElt::parse(f, "1/(x^2*y^3)").unwrap()).unwrap();
        // deg = 3 + 3·(−5)
        assert_eq!(t.degree(), Some(-12));
    }

    #[test]
    fn combine_and_split_are_inverse() {
        let f = Field::prime(2).unwrap();
        let a = Tensor::normalize(&poly(f, "x*y"), &RxElt::inverse_x_power(f, 1)).unwrap();
        let b = Tensor::normalize(&Poly::one(f), &Poly::one(f)).unwrap();
        let c = Tensor::combine(&a, &b, || RxElt::zero(f), || Poly::zero(f)).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.split(), (a, b));
    }
}
