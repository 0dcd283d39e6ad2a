//! `M = *Hom(R_x, E)`, the graded Matlis dual of `R_x`.

use std::fmt;

use super::series::YSeries;
use super::{fmt_coeffs, reconstruct};
use crate::error::{Error, Result};
use crate::modules::{EElt, GradedModule, RxElt};
use crate::ring::{Field, Fq, Poly};

/// A homogeneous `f : R_x → E` of degree `d`.
///
/// `f` is fixed by one coefficient per `y`-exponent `b ≥ 1`:
/// `f(1/x^n) = Σ_b C(b)/(x^{n−d−b} y^b)`, summed over `b ≤ n−d−1`.
/// With `β = −d−1` and `c_i = C(β+i)` this reads
/// `f(1/x^n) = Σ_{i≤n} c_i/(x^{n−i+1} y^{β+i})`.
#[derive(Clone)]
pub struct HomRxE {
    d: i64,
    series: YSeries,
}

impl HomRxE {
    pub fn zero(field: Field) -> HomRxE {
        HomRxE { d: 0, series: YSeries::zero(field) }
    }

    /// From `c_0, c_1, …` anchored at `β = −d−1`. `precision` is the number
    /// of known coefficients `N`; `None` means every later coefficient is 0.
    pub fn new(field: Field, d: i64, coeffs: &[Fq], precision: Option<usize>) -> Result<HomRxE> {
        let beta = -d - 1;
        let y = anchored_to_y(field, beta, coeffs, precision)?;
        Ok(HomRxE { d, series: y })
    }

    /// From `C(1), C(2), …`; `prec` counts known `y`-exponents.
    pub fn from_y_coeffs(field: Field, d: i64, coeffs: Vec<Fq>, prec: Option<usize>) -> HomRxE {
        HomRxE { d, series: YSeries::new(field, coeffs, prec) }
    }

    pub(crate) fn from_series(d: i64, series: YSeries) -> HomRxE {
        HomRxE { d, series }
    }

    pub(crate) fn series(&self) -> &YSeries {
        &self.series
    }

    /// Rebuilds a map from its values on `1/x^n`, `n = 0, 1, …, max_level`,
    /// stopping early at the first level the source cannot supply.
    pub fn from_levels(field: Field, d: i64, max_level: u32, eval: impl FnMut(u32) -> Result<EElt>) -> Result<HomRxE> {
        Ok(HomRxE { d, series: reconstruct(field, d, 1, max_level, eval)? })
    }

    pub fn field(&self) -> Field {
        self.series.field()
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn beta(&self) -> i64 {
        -self.d - 1
    }

    pub fn is_exact(&self) -> bool {
        self.series.is_exact()
    }

    /// Known `y`-exponents (`None` when exact).
    pub fn y_precision(&self) -> Option<usize> {
        self.series.prec()
    }

    /// Number of known anchored coefficients `N`.
    pub fn precision(&self) -> Option<usize> {
        self.series.prec().map(|n| (n as i64 - self.beta() + 1).max(0) as usize)
    }

    pub fn y_coeff(&self, b: i64) -> Result<Fq> {
        self.series.get(b)
    }

    /// `c_i = C(β+i)`.
    pub fn coeff(&self, i: usize) -> Result<Fq> {
        self.series.get(self.beta() + i as i64)
    }

    /// `f(1/x^n)`.
    pub fn eval(&self, n: u32) -> Result<EElt> {
        eval_line(&self.series, n as i64 - self.d)
    }

    /// `f(s/x^n) = s·f(1/x^n)`.
    pub fn eval_rx(&self, m: &RxElt) -> Result<EElt> {
        if m.is_zero() {
            return Ok(EElt::zero(self.field()));
        }
        Ok(self.eval(m.den_exponent())?.act(m.numerator()))
    }

    /// `(x^a y^b · f)(m) = x^a y^b f(m)`.
    pub fn act_monomial(&self, c: Fq, a: u32, b: u32) -> HomRxE {
        HomRxE { d: self.d + a as i64 + b as i64, series: self.series.drop_front(b as usize).scale(c) }
    }

    pub fn add(&self, other: &HomRxE) -> Result<HomRxE> {
        let d = common_degree(self.d, self.series.is_zero(), other.d, other.series.is_zero())?;
        Ok(HomRxE { d, series: self.series.add(&other.series) })
    }

    pub fn neg(&self) -> HomRxE {
        HomRxE { d: self.d, series: self.series.neg() }
    }

    pub fn scale(&self, c: Fq) -> HomRxE {
        HomRxE { d: self.d, series: self.series.scale(c) }
    }
}

/// Converts coefficients anchored at `β` into a `y`-indexed series.
pub(crate) fn anchored_to_y(field: Field, beta: i64, coeffs: &[Fq], precision: Option<usize>) -> Result<YSeries> {
    if let Some(n) = precision {
        if coeffs.len() > n {
            return Err(Error::InsufficientPrecision { needed: coeffs.len(), available: n });
        }
    }
    let mut y = Vec::new();
    for (i, &c) in coeffs.iter().enumerate() {
        let b = beta + i as i64;
        if b < 1 {
            if !c.is_zero() {
                return Err(Error::ForcedZero { index: i, y_exponent: b });
            }
            continue;
        }
        if y.len() < b as usize {
            y.resize(b as usize, field.zero());
        }
        y[b as usize - 1] = c;
    }
    let prec = precision.map(|n| (beta + n as i64 - 1).max(0) as usize);
    Ok(YSeries::new(field, y, prec))
}

/// `Σ_{b ≤ top−1} C(b)/(x^{top−b} y^b)`, the value on a level whose terms
/// have total degree `−top`.
pub(crate) fn eval_line(series: &YSeries, top: i64) -> Result<EElt> {
    let field = series.field();
    let last = top - 1;
    if last < 1 {
        return Ok(EElt::zero(field));
    }
    if !series.knows(last) {
        return Err(Error::InsufficientPrecision { needed: last as usize, available: series.prec().unwrap_or(0) });
    }
    Ok(EElt::from_terms(
        field,
        series.nonzero().take_while(|&(b, _)| b <= last).map(|(b, c)| (((top - b) as u32, b as u32), c)),
    ))
}

pub(crate) fn common_degree(d1: i64, zero1: bool, d2: i64, zero2: bool) -> Result<i64> {
    match (zero1, zero2) {
        (true, _) if d1 != d2 => Ok(d2),
        (_, true) => Ok(d1),
        _ if d1 == d2 => Ok(d1),
        _ => Err(Error::DegreeMismatch { expected: d1, found: d2 }),
    }
}

impl PartialEq for HomRxE {
    /// Equality on the shared precision window.
    fn eq(&self, other: &Self) -> bool {
        self.field() == other.field()
            && (self.d == other.d || self.series.is_zero() || other.series.is_zero())
            && self.series.eq_window(&other.series)
    }
}

impl GradedModule for HomRxE {
    fn field(&self) -> Field {
        self.series.field()
    }

    fn is_zero(&self) -> bool {
        self.series.is_zero()
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.add(other)
    }

    fn neg(&self) -> Self {
        HomRxE::neg(self)
    }

    fn act(&self, r: &Poly) -> Result<Self> {
        if self.is_zero() || r.is_zero() {
            return Ok(HomRxE { d: self.d, series: YSeries::zero(self.field()) });
        }
        if r.homogeneous_degree().is_none() {
            return Err(Error::NotHomogeneous);
        }
        let mut out = HomRxE::zero(self.field());
        for ((a, b), c) in r.terms() {
            out = out.add(&self.act_monomial(c, a, b))?;
        }
        Ok(out)
    }

    fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.d)
    }
}

impl fmt::Display for HomRxE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coeffs(f, self.d, self.beta(), &self.series)
    }
}

impl fmt::Debug for HomRxE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomRxE({self})")
    }
}
