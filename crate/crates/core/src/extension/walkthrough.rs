//! Step-by-step recomputation of `θ_L ∘ g` and `(id⊗g) ∘ θ_{M⊕E}` on the
//! test element, each step compared with its closed form.

use super::{obstruction, square_defect, test_element, theta_split, CandidateSplitting, ExtensionL, LElt};
use crate::error::{Error, Result};
use crate::frobenius::{Tensor, Twist};
use crate::hom::HomRxE;
use crate::modules::{EElt, GradedModule, Pair, RxElt};
use crate::ring::{Field, Poly};

#[derive(Clone, Debug, PartialEq)]
pub struct Stage {
    pub name: &'static str,
    pub computed: String,
    pub expected: String,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct Walkthrough {
    pub field: Field,
    pub candidate: CandidateSplitting,
    pub stages: Vec<Stage>,
}

impl Walkthrough {
    pub fn passed(&self) -> bool {
        self.stages.iter().all(|s| s.ok)
    }

    /// The first mismatching stage as an error.
    pub fn verify(&self) -> Result<()> {
        match self.stages.iter().find(|s| !s.ok) {
            Some(s) => Err(Error::WalkthroughMismatch { stage: s.name.to_string() }),
            None => Ok(()),
        }
    }
}

struct Recorder(Vec<Stage>);

impl Recorder {
    fn check<T: PartialEq + std::fmt::Display>(&mut self, name: &'static str, computed: &T, expected: &T) {
        self.0.push(Stage { name, computed: computed.to_string(), expected: expected.to_string(), ok: computed == expected });
    }

    fn check_list<T: PartialEq + std::fmt::Display>(&mut self, name: &'static str, computed: &[T], expected: &[T]) {
        let show = |v: &[T]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ");
        self.0.push(Stage { name, computed: show(computed), expected: show(expected), ok: computed == expected });
    }
}

const LEVELS: u32 = 6;

/// Recomputes the defect for `u = y/x`, the candidate `t/x^α` and the
/// test element `(φ_α, 1/(xy^{αp+2}))`.
pub fn defect_walkthrough(field: Field, alpha: u32, t: Poly) -> Result<Walkthrough> {
    let p = field.characteristic();
    let one = field.one();
    let g = CandidateSplitting::new(alpha, t.clone())?;
    let twist = Twist::y_over_x(field);
    let ext = ExtensionL::new(twist.clone());
    let b0 = alpha * p + 2;
    let x = test_element(field, alpha);
    let phi_a = x.0.clone();
    let e0 = x.1.clone();
    let e_t = EElt::from_fraction(&t, alpha + 1, b0);
    let e_low = EElt::inverse_monomial(one, 2, b0 - 1);
    let zero_hom = || HomRxE::zero(field);
    let zero_e = || EElt::zero(field);
    let mut rec = Recorder(Vec::new());

    let gx = g.apply(&x)?;
    let e1 = e0.add(&e_t);
    rec.check("g(test)", &gx, &Pair(phi_a.clone(), e1.clone()));

    let trace = ext.theta_l_trace(&gx)?;
    let on_n = &trace.on_n;
    let mut computed = vec![on_n.eval(&RxElt::zero(field), &Poly::one(field))?];
    let mut expected = vec![e1.clone()];
    for n in 0..LEVELS {
        computed.push(on_n.eval(&RxElt::inverse_x_power(field, n), &Poly::zero(field))?);
        expected.push(EElt::inverse_monomial(one, n + 1, b0));
    }
    rec.check_list("phi'", &computed, &expected);

    // ψ = φ' ∘ θ_N^{-1}, both from the coefficient form and by evaluating φ'
    let psi_01 = e_low.neg().add(&e0).add(&e_t);
    let inv = twist.theta_n_inv(&Tensor::from_slots(field, [((0, 0), Pair(RxElt::zero(field), Poly::one(field)))])?);
    rec.check_list("psi(1(x)(0,1))", &[trace.on_fn.h2.clone(), on_n.eval(&inv.0, &inv.1)?], &[psi_01.clone(), psi_01]);

    let mut computed = Vec::new();
    let mut expected = Vec::new();
    for n in 0..LEVELS {
        let slot = Tensor::from_slots(field, [((0, 0), Pair(RxElt::inverse_x_power(field, n), Poly::zero(field)))])?;
        let back = twist.theta_n_inv(&slot);
        computed.push(trace.on_fn.h1.eval(n)?);
        computed.push(on_n.eval(&back.0, &back.1)?);
        let value = EElt::inverse_monomial(one, p * n + 1, b0);
        expected.push(value.clone());
        expected.push(value);
    }
    rec.check_list("psi_1", &computed, &expected);

    let lift = |a: u32, b: u32| Poly::monomial(one, a * (p - 1), b * (p - 1));
    let f_hom = Tensor::normalize(&lift(1, b0), &phi_a)?;
    rec.check("F(Hom) part", &trace.hom_part, &f_hom);

    let f_e = Tensor::normalize(&lift(2, b0 - 1), &e_low.neg())?
        .try_add(&Tensor::normalize(&lift(1, b0), &e0)?)?
        .try_add(&Tensor::normalize(&lift(alpha + 1, b0).mul(&t), &EElt::inverse_monomial(one, alpha + 1, b0))?)?;
    rec.check("psi_2 in F(E)", &trace.e_part, &f_e);

    let via_ext = Tensor::normalize(&lift(1, b0), &Pair(phi_a.clone(), e0.clone()))?
        .try_add(&Tensor::normalize(&lift(2, b0 - 1), &Pair(zero_hom(), e_low.neg()))?)?
        .try_add(&Tensor::normalize(
            &lift(alpha + 1, b0).mul(&t),
            &Pair(zero_hom(), EElt::inverse_monomial(one, alpha + 1, b0)),
        )?)?;
    rec.check("theta_L(g(test))", &trace.image, &via_ext);

    let split_image = theta_split(&x)?;
    let via_split = split_image.map_slots(|m| g.apply(m))?;
    let split_expected = Tensor::normalize(&lift(1, b0), &Pair(phi_a.clone(), zero_e()))?
        .try_add(&Tensor::normalize(&lift(1, b0), &Pair(zero_hom(), e0.clone()))?)?
        .try_add(&Tensor::normalize(&lift(1, b0), &Pair(zero_hom(), e_t.clone()))?)?;
    rec.check("(id(x)g)(theta(test))", &via_split, &split_expected);

    let split = ExtensionL::split(field);
    let back1: LElt = split.theta_l_inv(&trace.image)?;
    rec.check("theta^-1 theta_L(g(test))", &back1, &Pair(phi_a.clone(), e0.add(&e_t).sub(&e_low)));
    let back2 = split.theta_l_inv(&via_split)?;
    let e_tp = EElt::from_fraction(&t.frobenius(), alpha * p + 1, b0);
    rec.check("theta^-1 (id(x)g)(theta(test))", &back2, &Pair(phi_a.clone(), e0.add(&e_tp)));

    let defect = square_defect(&ext, &g, &x)?;
    let ob = obstruction(&g);
    rec.check("defect", &defect, &Pair(zero_hom(), ob.clone()));
    rec.0.push(Stage {
        name: "defect nonzero",
        computed: defect.1.to_string(),
        expected: "nonzero".into(),
        ok: !defect.is_zero(),
    });

    Ok(Walkthrough { field, candidate: g, stages: rec.0 })
}
