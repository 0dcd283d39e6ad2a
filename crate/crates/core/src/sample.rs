//! Seeded random homogeneous elements for property runs.

use rand::Rng;

use crate::extension::LElt;
use crate::frobenius::Tensor;
use crate::hom::{HomFRxE, HomRxE};
use crate::modules::{EElt, Pair, RxElt};
use crate::ring::{Field, Fq, Poly};

pub fn fq<R: Rng>(rng: &mut R, field: Field) -> Fq {
    field.element(rng.gen_range(0..field.order() as u64)).expect("code in range")
}

pub fn nonzero_fq<R: Rng>(rng: &mut R, field: Field) -> Fq {
    field.element(rng.gen_range(1..field.order() as u64)).expect("code in range")
}

/// A homogeneous polynomial of degree `deg`; each monomial is kept with
/// probability one half.
pub fn homogeneous_poly<R: Rng>(rng: &mut R, field: Field, deg: u32) -> Poly {
    let mut terms = Vec::new();
    for a in 0..=deg {
        if rng.gen_bool(0.5) {
            terms.push(((a, deg - a), fq(rng, field)));
        }
    }
    Poly::from_terms(field, terms)
}

/// A polynomial with up to `terms` monomials of total degree at most `max_deg`.
pub fn poly<R: Rng>(rng: &mut R, field: Field, max_deg: u32, terms: usize) -> Poly {
    Poly::from_terms(
        field,
        (0..terms).map(|_| {
            let a = rng.gen_range(0..=max_deg);
            let b = rng.gen_range(0..=max_deg - a);
            ((a, b), fq(rng, field))
        }),
    )
}

/// A homogeneous element of `R_x` of degree `deg`.
pub fn rx<R: Rng>(rng: &mut R, field: Field, deg: i64) -> RxElt {
    let n = rng.gen_range((-deg).max(0)..=(-deg).max(0) + 4);
    RxElt::new(homogeneous_poly(rng, field, (deg + n) as u32), n as u32)
}

/// A homogeneous element of `E` of degree `deg` (zero unless `deg ≤ −2`).
pub fn e<R: Rng>(rng: &mut R, field: Field, deg: i64) -> EElt {
    let total = -deg;
    if total < 2 {
        return EElt::zero(field);
    }
    let mut terms = Vec::new();
    for a in 1..total {
        if rng.gen_bool(0.5) {
            terms.push(((a as u32, (total - a) as u32), fq(rng, field)));
        }
    }
    EElt::from_terms(field, terms)
}

/// Random coefficients for every `y`-exponent the anchored precision `n`
/// covers, including those below the anchor.
fn y_coeffs<R: Rng>(rng: &mut R, field: Field, beta: i64, n: usize) -> (Vec<Fq>, usize) {
    let prec = (beta + n as i64 - 1).max(0) as usize;
    ((0..prec).map(|_| fq(rng, field)).collect(), prec)
}

/// A truncated degree-`d` element of `*Hom(R_x, E)` with `n` anchored
/// coefficients.
pub fn hom_rx<R: Rng>(rng: &mut R, field: Field, d: i64, n: usize) -> HomRxE {
    let (c, prec) = y_coeffs(rng, field, -d - 1, n);
    HomRxE::from_y_coeffs(field, d, c, Some(prec))
}

pub fn hom_frx<R: Rng>(rng: &mut R, field: Field, d: i64, n: usize) -> HomFRxE {
    let (_, beta) = crate::hom::anchors(field.characteristic(), d);
    let (c, prec) = y_coeffs(rng, field, beta, n);
    HomFRxE::from_y_coeffs(field, d, c, Some(prec))
}

/// The slots `(a, b)` of a degree-`d` tensor with the degree `(d−a−b)/p`
/// of the module element they hold.
fn slots(field: Field, d: i64) -> Vec<((u32, u32), i64)> {
    let p = field.characteristic();
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            let rest = d - a as i64 - b as i64;
            if rest.rem_euclid(p as i64) == 0 {
                out.push(((a, b), rest / p as i64));
            }
        }
    }
    out
}

pub fn r_tensor<R: Rng>(rng: &mut R, field: Field, d: i64) -> Tensor<Poly> {
    let s = slots(field, d).into_iter().filter(|&(_, k)| k >= 0).map(|(ab, k)| (ab, homogeneous_poly(rng, field, k as u32)));
    Tensor::from_slots(field, s.collect::<Vec<_>>()).expect("normal slots")
}

pub fn rx_tensor<R: Rng>(rng: &mut R, field: Field, d: i64) -> Tensor<RxElt> {
    let s: Vec<_> = slots(field, d).into_iter().map(|(ab, k)| (ab, rx(rng, field, k))).collect();
    Tensor::from_slots(field, s).expect("normal slots")
}

pub fn e_tensor<R: Rng>(rng: &mut R, field: Field, d: i64) -> Tensor<EElt> {
    let s: Vec<_> = slots(field, d).into_iter().map(|(ab, k)| (ab, e(rng, field, k))).collect();
    Tensor::from_slots(field, s).expect("normal slots")
}

pub fn n_tensor<R: Rng>(rng: &mut R, field: Field, d: i64) -> Tensor<Pair<RxElt, Poly>> {
    let first = rx_tensor(rng, field, d);
    let second = r_tensor(rng, field, d);
    Tensor::combine(&first, &second, || RxElt::zero(field), || Poly::zero(field)).expect("same field")
}

pub fn hom_tensor<R: Rng>(rng: &mut R, field: Field, d: i64, n: usize) -> Tensor<HomRxE> {
    let s: Vec<_> = slots(field, d).into_iter().map(|(ab, k)| (ab, hom_rx(rng, field, k, n))).collect();
    Tensor::from_slots(field, s).expect("normal slots")
}

pub fn l_elt<R: Rng>(rng: &mut R, field: Field, d: i64, n: usize) -> LElt {
    Pair(hom_rx(rng, field, d, n), e(rng, field, d))
}

pub fn l_tensor<R: Rng>(rng: &mut R, field: Field, d: i64, n: usize) -> Tensor<LElt> {
    let first = hom_tensor(rng, field, d, n);
    let second = e_tensor(rng, field, d);
    Tensor::combine(&first, &second, || HomRxE::zero(field), || EElt::zero(field)).expect("same field")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::GradedModule;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_homogeneous() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for p in [2, 3, 5] {
            let f = Field::prime(p).unwrap();
            for d in -8..3 {
                let x = rx(&mut rng, f, d);
                assert!(x.is_zero() || x.degree() == Some(d));
                let y = e(&mut rng, f, d);
                assert!(y.is_zero() || y.degree() == Some(d));
                let t = l_tensor(&mut rng, f, d, 10);
                assert!(t.is_zero() || t.degree() == Some(d));
                let t = n_tensor(&mut rng, f, d);
                assert!(t.is_zero() || t.degree() == Some(d));
            }
        }
    }

    #[test]
    fn seeded_is_reproducible() {
        let f = Field::prime(3).unwrap();
        let a = hom_rx(&mut ChaCha8Rng::seed_from_u64(9), f, -4, 12);
        let b = hom_rx(&mut ChaCha8Rng::seed_from_u64(9), f, -4, 12);
        assert_eq!(a.to_string(), b.to_string());
    }
}
