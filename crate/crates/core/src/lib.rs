//! Bicomplex (tessarine) numbers, the bicomplex Gamma function and the
//! bicomplex one-parameter Mittag-Leffler function, with numerical checks
//! of the identities these functions satisfy.
//!
//! Every analytic function of a bicomplex variable is evaluated through the
//! idempotent decomposition `ξ = ξ1 e1 + ξ2 e2`: the complex kernels in
//! [`gamma`] and [`mittag_leffler`] are applied to `ξ1` and `ξ2` separately.

// NaN-rejecting checks are written as `!(x > 0.0)` on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bicomplex;
mod dd;
pub mod error;
pub mod gamma;
pub mod harness;
pub mod identities;
pub mod mittag_leffler;
pub mod quadrature;
pub mod series;
pub mod special;

pub use bicomplex::{Bicomplex, Hyperbolic, I2ModulusRadicand};
pub use error::{Component, Error, Result};
pub use mittag_leffler::{MLEvalOptions, MlValue};
pub use special::{bc_gamma, bc_ml, Algorithm, MLParameter, SpecialCase};
