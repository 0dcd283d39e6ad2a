//! `*Hom(F(R_x), E)`.

use std::fmt;

use super::rx::{anchored_to_y, common_degree, eval_line};
use super::series::YSeries;
use super::{fmt_coeffs, reconstruct};
use crate::error::{Error, Result};
use crate::modules::{EElt, GradedModule, RxElt};
use crate::ring::{Field, Fq, Poly};

/// A homogeneous `h : F(R_x) → E` of degree `d`, where `1⊗1/x^L` has
/// degree `−pL`.
///
/// `h(1⊗1/x^L) = Σ_b C(b)/(x^{pL−d−b} y^b)` over `b ≤ pL−d−1`. Writing
/// `d = (α−1)p − β` with `−p+2 ≤ β ≤ 1` and `c_i = C(β+i)` gives
/// `h(1⊗1/x^{α+n}) = Σ_{i<(n+1)p} c_i/(x^{(n+1)p−i} y^{β+i})`.
#[derive(Clone)]
pub struct HomFRxE {
    d: i64,
    series: YSeries,
}

/// `(α, β)` with `d = (α−1)p − β` and `−p+2 ≤ β ≤ 1`.
pub fn anchors(p: u32, d: i64) -> (i64, i64) {
    let p = p as i64;
    let beta = 1 - (d + 1).rem_euclid(p);
    (((d + beta) / p) + 1, beta)
}

impl HomFRxE {
    pub fn zero(field: Field) -> HomFRxE {
        HomFRxE { d: 0, series: YSeries::zero(field) }
    }

    /// From `c_0, c_1, …` anchored at the canonical `β`.
    pub fn new(field: Field, d: i64, coeffs: &[Fq], precision: Option<usize>) -> Result<HomFRxE> {
        let (_, beta) = anchors(field.characteristic(), d);
        Ok(HomFRxE { d, series: anchored_to_y(field, beta, coeffs, precision)? })
    }

    pub fn from_y_coeffs(field: Field, d: i64, coeffs: Vec<Fq>, prec: Option<usize>) -> HomFRxE {
        HomFRxE { d, series: YSeries::new(field, coeffs, prec) }
    }

    pub(crate) fn from_series(d: i64, series: YSeries) -> HomFRxE {
        HomFRxE { d, series }
    }

    pub(crate) fn series(&self) -> &YSeries {
        &self.series
    }

    /// Rebuilds a map from its values on `1⊗1/x^L`, `L ≤ max_level`.
    pub fn from_levels(field: Field, d: i64, max_level: u32, eval: impl FnMut(u32) -> Result<EElt>) -> Result<HomFRxE> {
        let p = field.characteristic() as i64;
        Ok(HomFRxE { d, series: reconstruct(field, d, p, max_level, eval)? })
    }

    pub fn field(&self) -> Field {
        self.series.field()
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn alpha(&self) -> i64 {
        anchors(self.field().characteristic(), self.d).0
    }

    pub fn beta(&self) -> i64 {
        anchors(self.field().characteristic(), self.d).1
    }

    pub fn is_zero(&self) -> bool {
        self.series.is_zero()
    }

    pub fn is_exact(&self) -> bool {
        self.series.is_exact()
    }

    pub fn y_precision(&self) -> Option<usize> {
        self.series.prec()
    }

    pub fn precision(&self) -> Option<usize> {
        self.series.prec().map(|n| (n as i64 - self.beta() + 1).max(0) as usize)
    }

    pub fn y_coeff(&self, b: i64) -> Result<Fq> {
        self.series.get(b)
    }

    pub fn coeff(&self, i: usize) -> Result<Fq> {
        self.series.get(self.beta() + i as i64)
    }

    /// `h(1⊗1/x^L)`.
    pub fn eval(&self, level: u32) -> Result<EElt> {
        let p = self.field().characteristic() as i64;
        eval_line(&self.series, p * level as i64 - self.d)
    }

    /// `h(r ⊗ s/x^n) = r·s^p·h(1⊗1/x^n)`.
    pub fn eval_tensor(&self, r: &Poly, m: &RxElt) -> Result<EElt> {
        if r.is_zero() || m.is_zero() {
            return Ok(EElt::zero(self.field()));
        }
        Ok(self.eval(m.den_exponent())?.act(&r.mul(&m.numerator().frobenius())))
    }

    pub fn add(&self, other: &HomFRxE) -> Result<HomFRxE> {
        let d = common_degree(self.d, self.is_zero(), other.d, other.is_zero())?;
        Ok(HomFRxE { d, series: self.series.add(&other.series) })
    }

    pub fn neg(&self) -> HomFRxE {
        HomFRxE { d: self.d, series: self.series.neg() }
    }
}

impl PartialEq for HomFRxE {
    fn eq(&self, other: &Self) -> bool {
        self.field() == other.field()
            && (self.d == other.d || self.is_zero() || other.is_zero())
            && self.series.eq_window(&other.series)
    }
}

impl fmt::Display for HomFRxE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coeffs(f, self.d, self.beta(), &self.series)
    }
}

impl fmt::Debug for HomFRxE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomFRxE({self})")
    }
}

/// Test vector for the `i`-th coefficient: `f_i(x^m y^n ⊗ y^k/x^ℓ) = c_i/(xy)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitIndices {
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub l: i64,
}

/// With `i = qp + r`, `0 ≤ r < p`: `m = p−1−r`, `ℓ = α+q`,
/// `n = (β+r−1) mod p`, `k = (β+i−1−n)/p`. Indices with `β+i < 1` carry no
/// coefficient.
pub fn split_indices(p: u32, i: usize, alpha: i64, beta: i64) -> Result<SplitIndices> {
    let (p, i) = (p as i64, i as i64);
    if beta + i < 1 {
        return Err(Error::ForcedZero { index: i as usize, y_exponent: beta + i });
    }
    let (q, r) = (i / p, i % p);
    let n = (beta + r - 1).rem_euclid(p);
    let k = (beta + i - 1 - n) / p;
    Ok(SplitIndices { m: (p - 1 - r) as u32, n: n as u32, k: k as u32, l: alpha + q })
}
