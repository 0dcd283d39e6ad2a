//! `E = H²_(x,y)(R)`, spanned by inverse monomials `1/(x^a y^b)` with
//! `a, b ≥ 1`. The socle generator is `1/(xy)` in degree −2.

use std::collections::BTreeMap;
use std::fmt;

use super::GradedModule;
use crate::error::{Error, Result};
use crate::ring::parse::{parse_coefficient, parse_monomial, split_terms};
use crate::ring::poly::{add_exp, fmt_monomial, mul_exp};
use crate::ring::{Exponents, Field, Fq, Poly};

/// A finite sum `Σ c/(x^a y^b)` with `a, b ≥ 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct EElt {
    field: Field,
    terms: BTreeMap<Exponents, Fq>,
}

impl EElt {
    pub fn zero(field: Field) -> EElt {
        EElt { field, terms: BTreeMap::new() }
    }

    /// `c/(x^a y^b)`; zero unless both exponents are at least 1.
    pub fn inverse_monomial(c: Fq, a: u32, b: u32) -> EElt {
        let mut e = EElt::zero(c.field());
        e.add_term((a, b), c);
        e
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Exponents, Fq)>) -> EElt {
        let mut e = EElt::zero(field);
        for (ab, c) in terms {
            e.add_term(ab, c);
        }
        e
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

    /// Adds `c/(x^a y^b)`, silently dropping terms with a nonpositive exponent.
    pub(crate) fn add_term(&mut self, (a, b): Exponents, c: Fq) {
        if a == 0 || b == 0 || c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert(self.field.zero());
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &EElt) -> EElt {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &EElt) -> EElt {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> EElt {
        EElt { field: self.field, terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }

    pub fn scale(&self, c: Fq) -> EElt {
        EElt::from_terms(self.field, self.terms().map(|(e, v)| (e, v * c)))
    }

    /// The `R`-action: `x^c y^d · 1/(x^a y^b) = 1/(x^{a-c} y^{b-d})`, zero
    /// once an exponent drops below 1.
    pub fn act(&self, r: &Poly) -> EElt {
        let mut out = EElt::zero(self.field);
        for ((c, d), s) in r.terms() {
            for ((a, b), v) in self.terms() {
                if a > c && b > d {
                    out.add_term((a - c, b - d), s * v);
                }
            }
        }
        out
    }

    /// Normal form of the fraction `h/(x^A y^B)`.
    pub fn from_fraction(h: &Poly, big_a: u32, big_b: u32) -> EElt {
        EElt::inverse_monomial(h.field().one(), big_a, big_b).act(h)
    }

    /// Čech-style vanishing test: is `(xy)^r · h ∈ (x^{A+r}, y^{B+r})` for
    /// some `r ≤ r_max`?
    pub fn is_zero_cech(h: &Poly, big_a: u32, big_b: u32, r_max: u32) -> bool {
        (0..=r_max).any(|r| {
            let lifted = h.shift(r, r);
            let (ia, ib) = (add_exp(big_a, r), add_exp(big_b, r));
            let vanishes = lifted.terms().all(|((i, j), _)| i >= ia || j >= ib);
            vanishes
        })
    }

    /// Default search bound `deg(h) + A + B` for [`EElt::is_zero_cech`].
    pub fn default_cech_bound(h: &Poly, big_a: u32, big_b: u32) -> u32 {
        let d = h.degree().map(|(d, _)| d).unwrap_or(0);
        add_exp(add_exp(d, big_a), big_b)
    }

    /// `Σ c/(x^a y^b) ↦ Σ c^p/(x^{pa} y^{pb})`.
    pub fn frobenius_power(&self) -> EElt {
        let p = self.field.characteristic();
        EElt {
            field: self.field,
            terms: self.terms.iter().map(|(&(a, b), &c)| ((mul_exp(a, p), mul_exp(b, p)), c.frobenius())).collect(),
        }
    }

    /// Homogeneous degree `−a−b`, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|&(a, b)| -(a as i64) - b as i64);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Parses `c/(x^a*y^b)` terms joined by `+`/`-`, e.g. `1/(x^2*y) + 2/(x*y^4)`.
    pub fn parse(field: Field, s: &str) -> Result<EElt> {
        if s.trim() == "0" {
            return Ok(EElt::zero(field));
        }
        let mut out = EElt::zero(field);
        for (negated, term) in split_terms(s)? {
            let (num, den) = term
                .split_once('/')
                .ok_or_else(|| Error::Parse(format!("`{term}` is not of the form c/(x^a*y^b)")))?;
            let c = parse_coefficient(field, num)?;
            let den = den.trim().trim_start_matches('(').trim_end_matches(')');
            let (a, b) = parse_monomial(den)?;
            if a == 0 || b == 0 {
                return Err(Error::Parse(format!("`{term}`: both exponents must be at least 1")));
            }
            out.add_term((a, b), if negated { -c } else { c });
        }
        Ok(out)
    }
}

impl GradedModule for EElt {
    fn field(&self) -> Field {
        self.field
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(self.add(other))
    }

    fn neg(&self) -> Self {
        EElt::neg(self)
    }

    fn act(&self, r: &Poly) -> Result<Self> {
        Ok(EElt::act(self, r))
    }

    fn degree(&self) -> Option<i64> {
        self.homogeneous_degree()
    }
}

impl fmt::Display for EElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&((a, b), _)| (a + b, a));
        for (k, ((a, b), c)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}/(")?;
            fmt_monomial(f, a, b)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for EElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({self})")
    }
}
