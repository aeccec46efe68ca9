//! `K_0` of the point and of `P^n` with coefficients in representation rings,
//! tensor power operations on them, and the Riemann-Roch identities that can
//! be checked in these models.

pub mod eqk;
pub mod identities;
pub mod pn;
pub mod rr;
pub mod tau;

pub use eqk::{display_kvalue, EqIdeal, EqKClass, EqWitness, KClassFunction, KValue};
pub use pn::{euler_characteristic, KClassPn};
pub use tau::{
    cross_product, cyclic_embedding, evaluate_symbols, outer_tau, signed_twisted_power, tau_of_integer, tau_series_by_cross, kunneth_pushforward, random_decomposed, restrict_eqk,
    tau_checked, tau_cycle_psi, tau_external, tau_internal, tensor_power_trace_oracle, vector_space_trace_oracle,
    Block, BundleSum, DecomposedClass, ExternalRoute, ExternalSymbol, SubgroupSpec, TauRoute,
};
