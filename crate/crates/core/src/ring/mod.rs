//! Exact arithmetic in `k = GF(p^e)` and in `R = k[x,y]`.

pub mod field;
pub mod parse;
pub mod poly;

pub use field::{is_prime, Field, Fq};
pub use parse::parse_poly;
pub use poly::{Exponents, Poly};
