//! The Frobenius functor `F(M) = F_*R ⊗_R M` and the structure maps of the
//! basic graded F-modules.

pub mod structure;
pub mod tensor;

pub use structure::{theta_e, theta_e_inv, theta_r, theta_r_inv, theta_rx, theta_rx_inv, Twist};
pub use tensor::Tensor;
