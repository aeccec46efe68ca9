//! Exact scalars: rationals, cyclotomic numbers, localizations at a prime,
//! and the linear algebra the rest of the crate needs.

pub mod cyclotomic;
pub mod linalg;
pub mod rational;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use linalg::{mat_mul, rank, smith_normal_form, EchelonBasis, Field, Fp, Matrix, SmithForm, F31};
pub use rational::{binomial, int, is_prime, ratio, LocalizedAtL, Rational};
