//! Graded homomorphism spaces into `E` and the isomorphism
//! `*Hom(F(R_x), E) ≅ F(*Hom(R_x, E))` that makes `M = *Hom(R_x, E)` a
//! graded F-module.

pub mod duality;
pub mod frx;
pub mod rx;
pub(crate) mod series;
pub mod sum;

use std::fmt;

use crate::error::{Error, Result};
use crate::modules::EElt;
use crate::ring::Field;
use series::YSeries;

pub use duality::{dual_precompose_theta, dual_precompose_theta_inv, hom_fr_to_fe, phi, psi, theta_hom, theta_hom_inv};
pub use frx::{anchors, split_indices, HomFRxE, SplitIndices};
pub use rx::HomRxE;
pub use sum::{HomFSumE, HomSumE};

/// Reads `C(b)` off the values at levels `0..=max_level`, where level `L`
/// has terms of total degree `d − scale·L`.
pub(crate) fn reconstruct(
    field: Field,
    d: i64,
    scale: i64,
    max_level: u32,
    mut eval: impl FnMut(u32) -> Result<EElt>,
) -> Result<YSeries> {
    let mut coeffs = Vec::new();
    let mut known = 0i64;
    for level in 0..=max_level {
        let value = match eval(level) {
            Ok(v) => v,
            Err(Error::InsufficientPrecision { .. }) => break,
            Err(e) => return Err(e),
        };
        let top = scale * level as i64 - d;
        if let Some(((a, b), _)) = value.terms().find(|&((a, b), _)| a as i64 + b as i64 != top) {
            return Err(Error::NotAHomomorphism(format!("level {level}: 1/(x^{a}*y^{b}) has degree other than {}", -top)));
        }
        for b in 1..top {
            let c = value.coeff((top - b) as u32, b as u32);
            if b <= known {
                if coeffs[b as usize - 1] != c {
                    return Err(Error::NotAHomomorphism(format!("level {level}: y^{b} coefficient changed")));
                }
            } else {
                coeffs.push(c);
            }
        }
        known = known.max(top - 1);
    }
    Ok(YSeries::new(field, coeffs, Some(known as usize)))
}

/// `deg d; beta b; c = [c0, c1, …]`, starting at the anchor or at the
/// lowest nonzero `y`-exponent, whichever is smaller.
pub(crate) fn fmt_coeffs(f: &mut fmt::Formatter<'_>, d: i64, beta: i64, series: &YSeries) -> fmt::Result {
    if series.is_zero() && series.is_exact() {
        return write!(f, "0");
    }
    let start = series.lowest_nonzero().map_or(beta, |b| beta.min(b as i64));
    let end = series.prec().map_or(series.support_end() as i64, |n| n as i64);
    write!(f, "deg {d}; beta {start}; c = [")?;
    let mut first = true;
    for b in start..=end {
        if !first {
            write!(f, ", ")?;
        }
        first = false;
        write!(f, "{}", series.get(b).expect("within precision"))?;
    }
    if !series.is_exact() {
        write!(f, "{}...", if first { "" } else { ", " })?;
    }
    write!(f, "]")
}
