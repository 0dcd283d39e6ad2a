//! Homomorphisms out of `N = R_x ⊕ R` and out of `F(N)`.

use std::fmt;

use super::{dual_precompose_theta, HomFRxE, HomRxE};
use crate::error::Result;
use crate::frobenius::{Tensor, Twist};
use crate::modules::{EElt, Pair, RxElt};
use crate::ring::Poly;

/// `(m, r) ↦ f(m) + r·e`, the image of `(f, e)` under
/// `*Hom(R_x,E) ⊕ E ≅ *Hom(R_x ⊕ R, E)`.
#[derive(Clone, PartialEq, Debug)]
pub struct HomSumE {
    pub f: HomRxE,
    pub e: EElt,
}

impl HomSumE {
    pub fn eval(&self, m: &RxElt, r: &Poly) -> Result<EElt> {
        Ok(self.f.eval_rx(m)?.add(&self.e.act(r)))
    }

    /// Precomposition with `θ_N^{-1}`. On `F(R_x)` this is the plain dual of
    /// `f`; on `1⊗(0,1)` it is the value at `θ_N^{-1}(1⊗(0,1)) = (−u, 1)`.
    pub fn precompose_theta_n_inv(&self, twist: &Twist) -> Result<HomFSumE> {
        let h2 = self.e.sub(&self.f.eval_rx(twist.u())?);
        Ok(HomFSumE { h1: dual_precompose_theta(&self.f), h2 })
    }
}

impl fmt::Display for HomSumE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + r*({})", self.f, self.e)
    }
}

/// A map `F(R_x ⊕ R) → E`: `h1` on `F(R_x)` and `h2 = h(1⊗(0,1))`.
#[derive(Clone, PartialEq, Debug)]
pub struct HomFSumE {
    pub h1: HomFRxE,
    pub h2: EElt,
}

impl HomFSumE {
    pub fn eval(&self, t: &Tensor<Pair<RxElt, Poly>>) -> Result<EElt> {
        let field = t.field();
        let mut out = EElt::zero(field);
        for ((a, b), Pair(m, r)) in t.slots() {
            let mono = Poly::monomial(field.one(), a, b);
            out = out.add(&self.h1.eval_tensor(&mono, m)?);
            out = out.add(&self.h2.act(&mono.mul(&r.frobenius())));
        }
        Ok(out)
    }
}

impl fmt::Display for HomFSumE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + (1(x)(0,1) -> {})", self.h1, self.h2)
    }
}
