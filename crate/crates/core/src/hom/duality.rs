//! Precomposition with `θ_{R_x}^{-1}` and the isomorphism
//! `*Hom(F(R_x), E) ≅ F(*Hom(R_x, E))`.

use super::series::{min_prec, YSeries};
use super::{HomFRxE, HomRxE};
use crate::error::{Error, Result};
use crate::frobenius::{theta_e, Tensor};
use crate::modules::EElt;

/// `f ↦ f ∘ θ_{R_x}^{-1}`. Since `θ_{R_x}^{-1}(1⊗1/x^L) = 1/x^{pL}` the
/// coefficients carry over unchanged.
pub fn dual_precompose_theta(f: &HomRxE) -> HomFRxE {
    HomFRxE::from_series(f.d(), f.series().clone())
}

/// `h ↦ h ∘ θ_{R_x}`.
pub fn dual_precompose_theta_inv(h: &HomFRxE) -> HomRxE {
    HomRxE::from_series(h.d(), h.series().clone())
}

/// Splits `h` by the residue of the `y`-exponent mod `p`. The class of `b`
/// becomes one term `x^{a'} y^{b'} ⊗ g` with `b' = −b mod p`,
/// `a' = d+b mod p`, `deg g = (d−a'−b')/p` and `G((b+b')/p) = C(b)^{1/p}`.
pub fn phi(h: &HomFRxE) -> Result<Tensor<HomRxE>> {
    let field = h.field();
    let p = field.characteristic() as i64;
    let d = h.d();
    let series = h.series();
    let mut slots = Vec::new();
    for rho in 0..p {
        let b_shift = (-rho).rem_euclid(p);
        let a_shift = (d + rho).rem_euclid(p);
        let dg = (d - a_shift - b_shift) / p;
        let j_end = (series.support_end() as i64 + b_shift) / p;
        let coeffs = (1..=j_end).map(|j| series.get(p * j - b_shift).map(|c| c.pth_root())).collect::<Result<Vec<_>>>()?;
        let prec = series.prec().map(|n| ((n as i64 + b_shift) / p) as usize);
        let g = HomRxE::from_y_coeffs(field, dg, coeffs, prec);
        slots.push(((a_shift as u32, b_shift as u32), g));
    }
    Tensor::from_slots(field, slots)
}

/// `r ⊗ g ↦ (1⊗1/x^L ↦ r·g(1/x^L)^p)`, read off as coefficients:
/// `x^a y^b ⊗ g` sends `G(j)` to `C(pj−b) = G(j)^p`. `d` is the degree of
/// the tensor, needed when it is zero.
pub fn psi(t: &Tensor<HomRxE>, d: i64) -> Result<HomFRxE> {
    let field = t.field();
    let p = field.characteristic() as i64;
    let mut coeffs = Vec::new();
    let mut prec: Option<usize> = None;
    for ((a, b), g) in t.slots() {
        let found = a as i64 + b as i64 + p * g.d();
        if found != d {
            return Err(Error::DegreeMismatch { expected: d, found });
        }
        for (j, c) in g.series().nonzero() {
            let big_b = (p * j - b as i64) as usize;
            if coeffs.len() < big_b {
                coeffs.resize(big_b, field.zero());
            }
            coeffs[big_b - 1] += c.frobenius();
        }
        if let Some(n) = g.y_precision() {
            let first_unknown = p * (n as i64 + 1) - b as i64;
            prec = min_prec(prec, Some((first_unknown - 1) as usize));
        }
    }
    Ok(HomFRxE::from_series(d, YSeries::new(field, coeffs, prec)))
}

/// The structure map `θ_M = phi ∘ (precomposition with θ_{R_x}^{-1})`.
pub fn theta_hom(f: &HomRxE) -> Result<Tensor<HomRxE>> {
    phi(&dual_precompose_theta(f))
}

pub fn theta_hom_inv(t: &Tensor<HomRxE>, d: i64) -> Result<HomRxE> {
    Ok(dual_precompose_theta_inv(&psi(t, d)?))
}

/// `*Hom(F(R), E) → F(E)`, on the value at `1⊗1`.
pub fn hom_fr_to_fe(value: &EElt) -> Result<Tensor<EElt>> {
    theta_e(value)
}
