//! Coefficient sequences `C(1), C(2), …` indexed by the `y`-exponent of
//! the `E`-terms a homogeneous map produces.

use crate::error::{Error, Result};
use crate::ring::{Field, Fq};

/// `C(b)` for `b ≥ 1`. Known for `b ≤ prec` (all `b` when `prec` is
/// `None`); known coefficients past the stored vector are zero.
#[derive(Clone, Debug)]
pub(crate) struct YSeries {
    field: Field,
    coeffs: Vec<Fq>,
    prec: Option<usize>,
}

impl YSeries {
    pub fn zero(field: Field) -> YSeries {
        YSeries { field, coeffs: Vec::new(), prec: None }
    }

    pub fn new(field: Field, mut coeffs: Vec<Fq>, prec: Option<usize>) -> YSeries {
        if let Some(n) = prec {
            coeffs.truncate(n);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        YSeries { field, coeffs, prec }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn prec(&self) -> Option<usize> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest `b` with a nonzero coefficient (0 when zero).
    pub fn support_end(&self) -> usize {
        self.coeffs.len()
    }

    pub fn lowest_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| i + 1)
    }

    pub fn knows(&self, b: i64) -> bool {
        b < 1 || self.prec.is_none_or(|n| b as u64 <= n as u64)
    }

    pub fn get(&self, b: i64) -> Result<Fq> {
        if b < 1 {
            return Ok(self.field.zero());
        }
        if !self.knows(b) {
            return Err(Error::InsufficientPrecision { needed: b as usize, available: self.prec.unwrap_or(0) });
        }
        Ok(self.coeffs.get(b as usize - 1).copied().unwrap_or(self.field.zero()))
    }

    /// Nonzero `(b, C(b))`.
    pub fn nonzero(&self) -> impl Iterator<Item = (i64, Fq)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, &c)| (i as i64 + 1, c))
    }

    pub fn add(&self, other: &YSeries) -> YSeries {
        let prec = min_prec(self.prec, other.prec);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(self.field.zero());
                let b = other.coeffs.get(i).copied().unwrap_or(self.field.zero());
                a + b
            })
            .collect();
        YSeries::new(self.field, coeffs, prec)
    }

    pub fn neg(&self) -> YSeries {
        YSeries { field: self.field, coeffs: self.coeffs.iter().map(|&c| -c).collect(), prec: self.prec }
    }

    pub fn scale(&self, c: Fq) -> YSeries {
        YSeries::new(self.field, self.coeffs.iter().map(|&v| v * c).collect(), self.prec)
    }

    /// `C'(b) = C(b + k)`.
    pub fn drop_front(&self, k: usize) -> YSeries {
        let coeffs = self.coeffs.iter().skip(k).copied().collect();
        YSeries::new(self.field, coeffs, self.prec.map(|n| n.saturating_sub(k)))
    }

    /// Agreement on every `b` known to both sides.
    pub fn eq_window(&self, other: &YSeries) -> bool {
        let window = min_prec(self.prec, other.prec);
        let len = self.coeffs.len().max(other.coeffs.len());
        let len = window.map_or(len, |n| len.min(n));
        (0..len).all(|i| {
            let a = self.coeffs.get(i).copied().unwrap_or(self.field.zero());
            let b = other.coeffs.get(i).copied().unwrap_or(self.field.zero());
            a == b
        })
    }
}

pub(crate) fn min_prec(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}
