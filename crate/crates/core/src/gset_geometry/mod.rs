//! Equivariant bundles on finite `G`-sets over a point: push-forwards, tensor
//! powers with their `C_l × H` structure, and `τ^l` on `K_1` of a field.

pub mod bundle;
pub mod congruence;
pub mod k1;

pub use bundle::{orbit_stabilizers, tau_cyclic_character, CyclicProduct, EquivariantBundle};
pub use congruence::{congruence_checks, congruence_checks_on, congruence_grid, CyclicTarget, induction_adams, power_modes, FiberChoice};
pub use k1::{binomial_identity_sum, binomial_pair_terms, k1_tensor_power, K1Element, PairTerm};
