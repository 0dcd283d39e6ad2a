//! The base graded `R`-modules: `R` itself, the localization `R_x`, the
//! injective hull `E = H²_(x,y)(R)`, and direct sums.

pub mod ecoh;
pub mod rx;
pub mod sum;

use std::fmt;

use crate::error::Result;
use crate::ring::{Field, Poly};

pub use ecoh::EElt;
pub use rx::RxElt;
pub use sum::Pair;

/// Elements of a graded `R`-module with exact arithmetic.
///
/// `PartialEq` is the module's notion of equality; for truncated
/// homomorphisms it means agreement on the shared known window.
pub trait GradedModule: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn field(&self) -> Field;

    fn is_zero(&self) -> bool;

    fn try_add(&self, other: &Self) -> Result<Self>;

    fn neg(&self) -> Self;

    /// The `R`-action `r · m`.
    fn act(&self, r: &Poly) -> Result<Self>;

    /// Homogeneous degree; `None` for zero or inhomogeneous elements.
    fn degree(&self) -> Option<i64>;

    fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }
}

impl GradedModule for Poly {
    fn field(&self) -> Field {
        Poly::field(self)
    }

    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(self.add(other))
    }

    fn neg(&self) -> Self {
        Poly::neg(self)
    }

    fn act(&self, r: &Poly) -> Result<Self> {
        Ok(r.mul(self))
    }

    fn degree(&self) -> Option<i64> {
        self.homogeneous_degree().map(i64::from)
    }
}
