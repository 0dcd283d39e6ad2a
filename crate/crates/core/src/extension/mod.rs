//! The extension `0 → E → L → M → 0` with `L = M ⊕ E` as a module and the
//! F-structure induced from `θ_N(u)`, together with the candidate
//! splittings `g(f, e) = (f, e + f(t/x^α))` and their failure to commute
//! with the structure maps.

mod search;
mod walkthrough;

use std::fmt;

use crate::error::{Error, Result};
use crate::frobenius::{theta_e_inv, Tensor, Twist};
use crate::hom::{hom_fr_to_fe, phi, psi, theta_hom, HomFSumE, HomRxE, HomSumE};
use crate::hom::dual_precompose_theta_inv;
use crate::modules::{EElt, GradedModule, Pair, RxElt};
use crate::ring::{Field, Poly};

pub use search::{enumerate_candidates, splitting_search, CandidateResult, SearchReport};
pub use walkthrough::{defect_walkthrough, Stage, Walkthrough};

/// An element of `L = M ⊕ E`.
pub type LElt = Pair<HomRxE, EElt>;

/// `L` with the structure map coming from `θ_N(u)`.
#[derive(Clone, Debug)]
pub struct ExtensionL {
    twist: Twist,
}

/// The intermediates of `θ_L` on one element.
#[derive(Clone, Debug)]
pub struct ThetaLTrace {
    /// `(m, r) ↦ f(m) + r·e` on `N`.
    pub on_n: HomSumE,
    /// The same map precomposed with `θ_N^{-1}`.
    pub on_fn: HomFSumE,
    pub hom_part: Tensor<HomRxE>,
    pub e_part: Tensor<EElt>,
    pub image: Tensor<LElt>,
}

impl ExtensionL {
    pub fn new(twist: Twist) -> ExtensionL {
        ExtensionL { twist }
    }

    /// The direct sum `M ⊕ E` with its componentwise structure.
    pub fn split(field: Field) -> ExtensionL {
        ExtensionL { twist: Twist::split(field) }
    }

    pub fn twist(&self) -> &Twist {
        &self.twist
    }

    pub fn field(&self) -> Field {
        self.twist.field()
    }

    pub fn theta_l(&self, x: &LElt) -> Result<Tensor<LElt>> {
        Ok(self.theta_l_trace(x)?.image)
    }

    pub fn theta_l_trace(&self, x: &LElt) -> Result<ThetaLTrace> {
        let field = self.field();
        let on_n = HomSumE { f: x.0.clone(), e: x.1.clone() };
        let on_fn = on_n.precompose_theta_n_inv(&self.twist)?;
        let hom_part = phi(&on_fn.h1)?;
        let e_part = hom_fr_to_fe(&on_fn.h2)?;
        let image = Tensor::combine(&hom_part, &e_part, || HomRxE::zero(field), || EElt::zero(field))?;
        Ok(ThetaLTrace { on_n, on_fn, hom_part, e_part, image })
    }

    /// Inverse of [`ExtensionL::theta_l`]: undo `phi` and `θ_E`, then add
    /// back `f(u)`.
    pub fn theta_l_inv(&self, t: &Tensor<LElt>) -> Result<LElt> {
        let field = self.field();
        if t.is_zero() {
            return Ok(Pair(HomRxE::zero(field), EElt::zero(field)));
        }
        let d = t.degree().ok_or(Error::NotHomogeneous)?;
        let (hom_part, e_part) = t.split();
        let f = dual_precompose_theta_inv(&psi(&hom_part, d)?);
        let h2 = theta_e_inv(&e_part);
        let e = h2.add(&f.eval_rx(self.twist.u())?);
        Ok(Pair(f, e))
    }
}

/// `θ_M ⊕ θ_E`.
pub fn theta_split(x: &LElt) -> Result<Tensor<LElt>> {
    let field = x.0.field();
    let hom = theta_hom(&x.0)?;
    let e = hom_fr_to_fe(&x.1)?;
    Tensor::combine(&hom, &e, || HomRxE::zero(field), || EElt::zero(field))
}

/// A degree-zero correction `t/x^α`; `t = 0` is the identity splitting.
#[derive(Clone, PartialEq, Debug)]
pub struct CandidateSplitting {
    alpha: u32,
    t: Poly,
}

impl CandidateSplitting {
    /// `t` must be zero or homogeneous of degree `α` with a nonzero `y^α`
    /// coefficient.
    pub fn new(alpha: u32, t: Poly) -> Result<CandidateSplitting> {
        if t.is_zero() {
            return Ok(CandidateSplitting { alpha: 0, t });
        }
        match t.homogeneous_degree() {
            Some(a) if a == alpha => {}
            Some(a) => return Err(Error::DegreeMismatch { expected: alpha as i64, found: a as i64 }),
            None => return Err(Error::NotHomogeneous),
        }
        if t.coeff(0, alpha).is_zero() {
            return Err(Error::Parse(format!("t = {t} needs a nonzero y^{alpha} term")));
        }
        Ok(CandidateSplitting { alpha, t })
    }

    pub fn identity(field: Field) -> CandidateSplitting {
        CandidateSplitting { alpha: 0, t: Poly::zero(field) }
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn t(&self) -> &Poly {
        &self.t
    }

    pub fn is_identity(&self) -> bool {
        self.t.is_zero()
    }

    /// `t/x^α ∈ R_x`.
    pub fn correction(&self) -> RxElt {
        RxElt::new(self.t.clone(), self.alpha)
    }

    /// `g(f, e) = (f, e + f(t/x^α))`.
    pub fn apply(&self, x: &LElt) -> Result<LElt> {
        if self.is_identity() {
            return Ok(x.clone());
        }
        Ok(Pair(x.0.clone(), x.1.add(&x.0.eval_rx(&self.correction())?)))
    }
}

impl fmt::Display for CandidateSplitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha = {}, t = {}", self.alpha, self.t)
    }
}

/// `φ_α(1/x^n) = 1/(x^{n+1} y^{αp+2})`.
pub fn phi_alpha(field: Field, alpha: u32) -> HomRxE {
    let p = field.characteristic() as i64;
    HomRxE::new(field, -(alpha as i64) * p - 3, &[field.one()], None).expect("leading coefficient is not forced")
}

/// `(φ_α, 1/(x y^{αp+2}))`.
pub fn test_element(field: Field, alpha: u32) -> LElt {
    let p = field.characteristic();
    Pair(phi_alpha(field, alpha), EElt::inverse_monomial(field.one(), 1, alpha * p + 2))
}

/// `θ_split^{-1}(θ_L(g(x))) − θ_split^{-1}((id⊗g)(θ_split(x)))`, zero exactly
/// when the square for `g` commutes on `x`.
pub fn square_defect(ext: &ExtensionL, g: &CandidateSplitting, x: &LElt) -> Result<LElt> {
    let split = ExtensionL::split(ext.field());
    let lhs = split.theta_l_inv(&ext.theta_l(&g.apply(x)?)?)?;
    let rhs = split.theta_l_inv(&theta_split(x)?.map_slots(|m| g.apply(m))?)?;
    lhs.try_sub(&rhs)
}

/// `−1/(x²y^{αp+1}) + t/(x^{α+1}y^{αp+2}) − t^p/(x^{αp+1}y^{αp+2})`, the
/// `E`-part of the defect for `u = y/x` on the test element.
pub fn obstruction(g: &CandidateSplitting) -> EElt {
    let field = g.t.field();
    let p = field.characteristic();
    let a = g.alpha;
    let b0 = a * p + 2;
    EElt::inverse_monomial(-field.one(), 2, b0 - 1)
        .add(&EElt::from_fraction(&g.t, a + 1, b0))
        .sub(&EElt::from_fraction(&g.t.frobenius(), a * p + 1, b0))
}

/// The term of the obstruction nothing else can cancel: `−1/(x²y)` when
/// `α = 0`, and `−c^p/(x^{αp+1}y²)` for `c` the `y^α` coefficient of `t`
/// otherwise.
pub fn surviving_term(g: &CandidateSplitting) -> EElt {
    let field = g.t.field();
    let p = field.characteristic();
    if g.alpha == 0 {
        return EElt::inverse_monomial(-field.one(), 2, 1);
    }
    let c = g.t.coeff(0, g.alpha);
    EElt::inverse_monomial(-c.frobenius(), g.alpha * p + 1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn l_zero(f: Field) -> LElt {
        Pair(HomRxE::zero(f), EElt::zero(f))
    }

    #[test]
    fn split_structure_is_componentwise() {
        let f = gf(3);
        let x = test_element(f, 1);
        assert_eq!(ExtensionL::split(f).theta_l(&x).unwrap(), theta_split(&x).unwrap());
    }

    #[test]
    fn theta_l_roundtrip_on_test_elements() {
        for p in [2, 3, 5] {
            let f = gf(p);
            let ext = ExtensionL::new(Twist::y_over_x(f));
            for alpha in 0..3 {
                let x = test_element(f, alpha);
                let t = ext.theta_l(&x).unwrap();
                assert_eq!(t.degree(), Some(x.0.d()));
                assert_eq!(ext.theta_l_inv(&t).unwrap(), x);
                assert_eq!(ext.theta_l(&ext.theta_l_inv(&t).unwrap()).unwrap(), t);
            }
        }
    }

    #[test]
    fn candidate_g_examples() {
        let f = gf(2);
        let x = test_element(f, 1);
        assert_eq!(CandidateSplitting::identity(f).apply(&x).unwrap(), x);
        let g = CandidateSplitting::new(1, parse_poly(f, "y + x").unwrap()).unwrap();
        let gx = g.apply(&x).unwrap();
        let expected = x.1.add(&EElt::from_fraction(g.t(), 2, 4));
        assert_eq!(gx, Pair(x.0.clone(), expected));
        // E ⊂ L is fixed and the projection to M is unchanged
        let e_only = Pair(HomRxE::zero(f), x.1.clone());
        assert_eq!(g.apply(&e_only).unwrap(), e_only);
        assert_eq!(gx.0, x.0);
    }

    #[test]
    fn candidate_validation() {
        let f = gf(3);
        assert!(CandidateSplitting::new(2, parse_poly(f, "x^2").unwrap()).is_err());
        assert!(CandidateSplitting::new(2, parse_poly(f, "y").unwrap()).is_err());
        assert!(CandidateSplitting::new(2, parse_poly(f, "y^2 + x").unwrap()).is_err());
        assert!(CandidateSplitting::new(2, parse_poly(f, "2*y^2 + x*y").unwrap()).is_ok());
    }

    #[test]
    fn defect_matches_closed_form() {
        for p in [2, 3] {
            let f = gf(p);
            let ext = ExtensionL::new(Twist::y_over_x(f));
            for (alpha, t) in [(0, "1"), (1, "y"), (1, "y + x"), (2, "2*y^2 + x^2")] {
                let Ok(t) = parse_poly(f, t) else { continue };
                let g = CandidateSplitting::new(alpha, t).unwrap();
                let defect = square_defect(&ext, &g, &test_element(f, alpha)).unwrap();
                assert!(defect.0.is_zero());
                assert_eq!(defect.1, obstruction(&g), "p={p} {g}");
            }
        }
    }

    #[test]
    fn obstruction_examples() {
        let f = gf(2);
        for t in ["0", "1"] {
            let g = CandidateSplitting::new(0, parse_poly(f, t).unwrap()).unwrap();
            assert_eq!(obstruction(&g), EElt::parse(f, "1/(x^2*y)").unwrap());
        }
        let f = gf(3);
        for c in f.elements() {
            let g = CandidateSplitting::new(0, Poly::constant(c)).unwrap();
            assert_eq!(obstruction(&g), EElt::parse(f, "-1/(x^2*y)").unwrap());
        }
    }

    #[test]
    fn leading_term_can_cancel() {
        // t = y at α = 1 kills −1/(x²y^{p+1}); another term remains
        let f = gf(2);
        let g = CandidateSplitting::new(1, Poly::y(f)).unwrap();
        let ob = obstruction(&g);
        assert!(ob.coeff(2, 3).is_zero());
        assert_eq!(ob, surviving_term(&g));
    }

    #[test]
    fn split_control() {
        let f = gf(3);
        let ext = ExtensionL::split(f);
        let g = CandidateSplitting::identity(f);
        for alpha in 0..3 {
            assert!(square_defect(&ext, &g, &test_element(f, alpha)).unwrap().is_zero());
        }
        assert!(ext.theta_l_inv(&Tensor::zero(f)).unwrap().is_zero());
        assert!(ext.theta_l(&l_zero(f)).unwrap().is_zero());
    }
}
