//! Sparse polynomials in `k[x,y]`.

use std::collections::BTreeMap;
use std::fmt;

use super::field::{Field, Fq};
use crate::error::{Error, Result};

/// Exponent pair `(x-exponent, y-exponent)`.
pub type Exponents = (u32, u32);

pub(crate) fn add_exp(a: u32, b: u32) -> u32 {
    a.checked_add(b).expect("exponent overflow")
}

pub(crate) fn mul_exp(a: u32, b: u32) -> u32 {
    a.checked_mul(b).expect("exponent overflow")
}

/// A polynomial in `k[x,y]`, stored as a map from exponents to nonzero
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    terms: BTreeMap<Exponents, Fq>,
}

impl Poly {
    pub fn zero(field: Field) -> Poly {
        Poly { field, terms: BTreeMap::new() }
    }

    pub fn one(field: Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: Fq) -> Poly {
        Poly::monomial(c, 0, 0)
    }

    /// `c * x^a * y^b`.
    pub fn monomial(c: Fq, a: u32, b: u32) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Poly { field: c.field(), terms }
    }

    pub fn x(field: Field) -> Poly {
        Poly::monomial(field.one(), 1, 0)
    }

    pub fn y(field: Field) -> Poly {
        Poly::monomial(field.one(), 0, 1)
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Exponents, Fq)>) -> Poly {
        let mut p = Poly::zero(field);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponents, Fq)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Fq {
        self.terms.get(&(a, b)).copied().unwrap_or(self.field.zero())
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: Fq) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert(self.field.zero());
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Maximal monomial degree and whether every monomial has that degree.
    pub fn degree(&self) -> Result<(u32, bool)> {
        let mut degrees = self.terms.keys().map(|&(a, b)| add_exp(a, b));
        let first = degrees.next().ok_or(Error::UndefinedDegree)?;
        let (max, homogeneous) = degrees.fold((first, true), |(m, h), d| (m.max(d), h && d == first));
        Ok((max, homogeneous))
    }

    /// Degree if homogeneous, `None` for zero or inhomogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.degree() {
            Ok((d, true)) => Some(d),
            _ => None,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly { field: self.field, terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }

    pub fn scale(&self, c: Fq) -> Poly {
        Poly::from_terms(self.field, self.terms().map(|(e, v)| (e, v * c)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.field);
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in other.terms() {
                out.add_term((add_exp(a1, a2), add_exp(b1, b2)), c1 * c2);
            }
        }
        out
    }

    /// Multiplication by `x^a y^b`.
    pub fn shift(&self, a: u32, b: u32) -> Poly {
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(&(i, j), &c)| ((add_exp(i, a), add_exp(j, b)), c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.field);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `r ↦ r^p`: every coefficient is raised to the `p`-th power and every
    /// exponent multiplied by `p`.
    pub fn frobenius(&self) -> Poly {
        let p = self.field.characteristic();
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(&(a, b), &c)| ((mul_exp(a, p), mul_exp(b, p)), c.frobenius())).collect(),
        }
    }

    /// Unique decomposition `r = Σ x^a y^b · (r_ab)^p` with `0 ≤ a, b < p`.
    pub fn frobenius_decompose(&self) -> BTreeMap<Exponents, Poly> {
        let p = self.field.characteristic();
        let mut parts: BTreeMap<Exponents, Poly> = BTreeMap::new();
        for ((i, j), c) in self.terms() {
            parts
                .entry((i % p, j % p))
                .or_insert_with(|| Poly::zero(self.field))
                .add_term((i / p, j / p), c.pth_root());
        }
        parts
    }

    /// Largest `k` with `x^k` dividing every monomial (`0` for the zero polynomial).
    pub fn x_valuation(&self) -> u32 {
        self.terms.keys().map(|&(a, _)| a).min().unwrap_or(0)
    }

    /// Exact division by `x^k`; the caller guarantees `k ≤ x_valuation`.
    pub(crate) fn div_x_pow(&self, k: u32) -> Poly {
        Poly { field: self.field, terms: self.terms.iter().map(|(&(a, b), &c)| ((a - k, b), c)).collect() }
    }
}

fn fmt_factor(f: &mut fmt::Formatter<'_>, var: char, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

/// Writes `x^a*y^b` (nothing for `a = b = 0`).
pub(crate) fn fmt_monomial(f: &mut fmt::Formatter<'_>, a: u32, b: u32) -> fmt::Result {
    fmt_factor(f, 'x', a)?;
    if a > 0 && b > 0 {
        write!(f, "*")?;
    }
    fmt_factor(f, 'y', b)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest degree first, then descending x-exponent
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|((a1, b1), _), ((a2, b2), _)| (a2 + b2, a2).cmp(&(a1 + b1, a1)));
        for (k, ((a, b), c)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if a == 0 && b == 0 {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "{c}*")?;
                }
                fmt_monomial(f, a, b)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn mono(f: Field, c: i64, a: u32, b: u32) -> Poly {
        Poly::monomial(f.from_int(c), a, b)
    }

    fn recompose(f: Field, parts: &BTreeMap<Exponents, Poly>) -> Poly {
        parts.iter().fold(Poly::zero(f), |acc, (&(a, b), r)| acc.add(&r.frobenius().shift(a, b)))
    }

    #[test]
    fn decompose_x3_plus_y_in_char_2() {
        let f = gf(2);
        let r = mono(f, 1, 3, 0).add(&mono(f, 1, 0, 1));
        let parts = r.frobenius_decompose();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&(1, 0)], Poly::x(f));
        assert_eq!(parts[&(0, 1)], Poly::one(f));
    }

    #[test]
    fn decompose_zero_is_empty() {
        assert!(Poly::zero(gf(5)).frobenius_decompose().is_empty());
    }

    #[test]
    fn decompose_x4y3_in_char_3() {
        let f = gf(3);
        let r = mono(f, 1, 4, 3);
        let parts = r.frobenius_decompose();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&(1, 0)], mono(f, 1, 1, 1));
        assert_eq!(recompose(f, &parts), r);
    }

    #[test]
    fn decompose_over_extension_field_takes_roots() {
        let f = Field::new(3, 2).unwrap();
        let g = f.generator();
        let r = Poly::monomial(g, 3, 0).add(&Poly::monomial(g * g, 1, 2));
        assert_eq!(recompose(f, &r.frobenius_decompose()), r);
    }

    #[test]
    fn degree_examples() {
        let f = gf(2);
        assert_eq!(mono(f, 1, 2, 1).degree(), Ok((3, true)));
        assert_eq!(Poly::x(f).add(&mono(f, 1, 0, 2)).degree(), Ok((2, false)));
        for alpha in 0..6 {
            assert_eq!(mono(f, 1, 0, alpha).degree(), Ok((alpha, true)));
        }
        assert_eq!(Poly::zero(f).degree(), Err(Error::UndefinedDegree));
    }

    #[test]
    fn frobenius_is_ring_map() {
        let f = gf(3);
        let a = mono(f, 2, 1, 0).add(&mono(f, 1, 0, 1));
        let b = mono(f, 1, 2, 3).add(&Poly::one(f));
        assert_eq!(a.add(&b).frobenius(), a.frobenius().add(&b.frobenius()));
        assert_eq!(a.mul(&b).frobenius(), a.frobenius().mul(&b.frobenius()));
        assert_eq!(a.frobenius(), a.pow(3));
    }

    #[test]
    fn display() {
        let f = gf(3);
        let r = mono(f, 1, 0, 2).add(&mono(f, 2, 1, 1)).add(&Poly::one(f));
        assert_eq!(r.to_string(), "2*x*y + y^2 + 1");
        assert_eq!(Poly::zero(f).to_string(), "0");
    }
}
