//! Structure isomorphisms `θ_M : M → F(M)` for `R`, `R_x`, `E` and the
//! twisted sum `N = R_x ⊕ R`.

use std::fmt;

use super::tensor::Tensor;
use crate::error::{Error, Result};
use crate::modules::{EElt, GradedModule, Pair, RxElt};
use crate::ring::{Field, Poly};

/// `r ↦ r ⊗ 1`.
pub fn theta_r(r: &Poly) -> Result<Tensor<Poly>> {
    Tensor::normalize(r, &Poly::one(r.field()))
}

/// `Σ x^a y^b ⊗ s ↦ Σ x^a y^b s^p`.
pub fn theta_r_inv(t: &Tensor<Poly>) -> Poly {
    t.slots().fold(Poly::zero(t.field()), |acc, ((a, b), s)| acc.add(&s.frobenius().shift(a, b)))
}

/// `s/x^n ↦ s·x^{n(p−1)} ⊗ 1/x^n`.
pub fn theta_rx(m: &RxElt) -> Result<Tensor<RxElt>> {
    let field = m.field();
    let p = field.characteristic();
    let n = m.den_exponent();
    let lifted = m.numerator().shift(n.checked_mul(p - 1).expect("exponent overflow"), 0);
    Tensor::normalize(&lifted, &RxElt::inverse_x_power(field, n))
}

/// `r ⊗ s/x^n ↦ r·s^p / x^{pn}`.
pub fn theta_rx_inv(t: &Tensor<RxElt>) -> RxElt {
    t.slots().fold(RxElt::zero(t.field()), |acc, ((a, b), m)| {
        acc.add(&m.frobenius_power().mul_poly(&Poly::monomial(t.field().one(), a, b)))
    })
}

/// `Σ c/(x^a y^b) ↦ Σ c·(x^a y^b)^{p−1} ⊗ 1/(x^a y^b)`.
pub fn theta_e(e: &EElt) -> Result<Tensor<EElt>> {
    let field = e.field();
    let p = field.characteristic();
    let mut out = Tensor::zero(field);
    for ((a, b), c) in e.terms() {
        let lift = Poly::monomial(c, a * (p - 1), b * (p - 1));
        out = out.try_add(&Tensor::normalize(&lift, &EElt::inverse_monomial(field.one(), a, b))?)?;
    }
    Ok(out)
}

/// `x^a y^b ⊗ 1/(x^c y^d) ↦ 1/(x^{pc−a} y^{pd−b})`.
pub fn theta_e_inv(t: &Tensor<EElt>) -> EElt {
    t.slots().fold(EElt::zero(t.field()), |acc, ((a, b), e)| {
        acc.add(&e.frobenius_power().act(&Poly::monomial(t.field().one(), a, b)))
    })
}

/// A degree-zero element `u ∈ R_x` parameterizing the structure map of
/// `N = R_x ⊕ R` through `(θ_{R_x}^{-1} ⊕ θ_R^{-1}) ∘ θ_N (m, r) = (m + r·u, r)`.
#[derive(Clone, PartialEq)]
pub struct Twist {
    u: RxElt,
}

impl Twist {
    pub fn new(u: RxElt) -> Result<Twist> {
        if !u.is_zero() {
            match u.degree_checked()? {
                0 => {}
                d => return Err(Error::InvalidTwist(d)),
            }
        }
        Ok(Twist { u })
    }

    /// The split structure `u = 0`.
    pub fn split(field: Field) -> Twist {
        Twist { u: RxElt::zero(field) }
    }

    /// `u = y/x`.
    pub fn y_over_x(field: Field) -> Twist {
        Twist { u: RxElt::new(Poly::y(field), 1) }
    }

    pub fn u(&self) -> &RxElt {
        &self.u
    }

    pub fn is_split(&self) -> bool {
        self.u.is_zero()
    }

    pub fn field(&self) -> Field {
        self.u.field()
    }

    pub fn theta_n(&self, (m, r): (&RxElt, &Poly)) -> Result<Tensor<Pair<RxElt, Poly>>> {
        let field = self.field();
        let first = theta_rx(&m.add(&self.u.mul_poly(r)))?;
        let second = theta_r(r)?;
        Tensor::combine(&first, &second, || RxElt::zero(field), || Poly::zero(field))
    }

    pub fn theta_n_inv(&self, t: &Tensor<Pair<RxElt, Poly>>) -> Pair<RxElt, Poly> {
        let (first, second) = t.split();
        let m = theta_rx_inv(&first);
        let r = theta_r_inv(&second);
        Pair(m.sub(&self.u.mul_poly(&r)), r)
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.u)
    }
}

impl fmt::Debug for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Twist({})", self.u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn poly(f: Field, s: &str) -> Poly {
        parse_poly(f, s).unwrap()
    }

    #[test]
    fn theta_rx_examples() {
        let f = gf(2);
        let t = theta_rx(&RxElt::inverse_x_power(f, 1)).unwrap();
        assert_eq!(t, Tensor::from_slots(f, [((1, 0), RxElt::inverse_x_power(f, 1))]).unwrap());
        let one = RxElt::from_poly(Poly::one(f));
        assert_eq!(theta_rx(&one).unwrap(), Tensor::from_slots(f, [((0, 0), one.clone())]).unwrap());
        for p in [2, 3, 5] {
            let f = gf(p);
            let t = Tensor::from_slots(f, [((0, 0), RxElt::inverse_x_power(f, 1))]).unwrap();
            assert_eq!(theta_rx_inv(&t), RxElt::inverse_x_power(f, p as u32));
        }
    }

    #[test]
    fn theta_r_examples() {
        let f = gf(2);
        assert_eq!(theta_r(&Poly::one(f)).unwrap(), Tensor::from_slots(f, [((0, 0), Poly::one(f))]).unwrap());
        let t = Tensor::from_slots(f, [((1, 0), Poly::y(f))]).unwrap();
        assert_eq!(theta_r_inv(&t), poly(f, "x*y^2"));
        let t = theta_r(&poly(f, "x^2")).unwrap();
        assert_eq!(t, Tensor::from_slots(f, [((0, 0), Poly::x(f))]).unwrap());
        assert_eq!(theta_r_inv(&t), poly(f, "x^2"));
    }

    #[test]
    fn theta_e_examples() {
        for p in [2u32, 3, 5] {
            let f = gf(p as u64);
            let socle = EElt::inverse_monomial(f.one(), 1, 1);
            let t = theta_e(&socle).unwrap();
            let expected = Tensor::from_slots(f, [((p - 1, p - 1), socle.clone())]).unwrap();
            assert_eq!(t, expected);
            let unit = Tensor::from_slots(f, [((0, 0), socle.clone())]).unwrap();
            assert_eq!(theta_e_inv(&unit), EElt::inverse_monomial(f.one(), p, p));
            assert_eq!(theta_e_inv(&t), socle);
        }
    }

    #[test]
    fn theta_n_with_y_over_x() {
        let f = gf(2);
        let twist = Twist::y_over_x(f);
        let t = Tensor::from_slots(f, [((0, 0), Pair(RxElt::zero(f), Poly::one(f)))]).unwrap();
        assert_eq!(twist.theta_n_inv(&t), Pair(RxElt::new(Poly::y(f), 1).neg(), Poly::one(f)));

        let image = twist.theta_n((&RxElt::zero(f), &Poly::one(f))).unwrap();
        let expected = Tensor::from_slots(
            f,
            [((1, 1), Pair(RxElt::inverse_x_power(f, 1), Poly::zero(f))), ((0, 0), Pair(RxElt::zero(f), Poly::one(f)))],
        )
        .unwrap();
        assert_eq!(image, expected);
        assert_eq!(twist.theta_n_inv(&image), Pair(RxElt::zero(f), Poly::one(f)));
    }

    #[test]
    fn split_twist_is_componentwise() {
        let f = gf(3);
        let twist = Twist::split(f);
        let m = RxElt::new(poly(f, "y^2 + x*y"), 3);
        let r = poly(f, "2*x^2*y + y^3");
        let image = twist.theta_n((&m, &r)).unwrap();
        let (first, second) = image.split();
        assert_eq!(first, theta_rx(&m).unwrap());
        assert_eq!(second, theta_r(&r).unwrap());
    }

    #[test]
    fn twist_must_have_degree_zero() {
        let f = gf(3);
        assert_eq!(Twist::new(RxElt::new(Poly::y(f), 2)), Err(Error::InvalidTwist(-1)));
        assert!(Twist::new(RxElt::new(poly(f, "y^2 + x*y"), 2)).is_ok());
        assert_eq!(Twist::new(RxElt::new(poly(f, "y^2 + x"), 2)), Err(Error::NotHomogeneous));
    }
}
