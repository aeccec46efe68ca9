//! The λ-ring side: line-sum normal forms, `λ_{-1}`, Bott elements and their
//! inverses, symmetric-function reduction, and square-zero augmented rings.

pub mod charp;
pub mod linesum;
pub mod symmetric;

pub use charp::{curve_theta_inverse, AugmentedTruncated};
pub use linesum::{lambda_minus_one_rep, lambda_minus_one_twisted, LineSumClass, RepLineSum};
pub use symmetric::{cartier_identity_check, expand_elementary, geometric_factor, symmetric_reduce, Poly};
