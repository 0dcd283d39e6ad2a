//! Exact computation with graded F-modules over `R = k[x,y]`, `k = GF(p^e)`.
//!
//! The crate builds the structure maps of `R`, `R_x`, `E = H²_(x,y)(R)` and
//! of the graded Matlis dual `M = *Hom(R_x, E)`, assembles the twisted
//! extension `0 → E → L → M → 0`, and searches the candidate splittings of
//! that extension, showing that none of them is compatible with Frobenius.

pub mod cli;
pub mod error;
pub mod extension;
pub mod frobenius;
pub mod hom;
pub mod modules;
pub mod ring;
pub mod sample;

pub use error::{Error, Result};
