//! Graded polynomial algebras and degreewise exact linear algebra: Koszul
//! homology, the conormal module of the diagonal with its symmetric-group
//! action, invariant sections of external tensor powers, and surjectivity
//! certificates for the maps onto the diagonal ideal.

mod certificates;
mod conormal;
mod graded;
mod koszul;
mod tensor;

pub use certificates::{
    alpha_generators, alpha_image_dim_dense, alpha_surjective, greedy_choices, invariant_sections_generate,
    section_from_choices, AlphaDegree, AlphaMode, AlphaReport, SectionsCertificate,
};
pub use conormal::{diagonal_conormal, ConormalDegree, ConormalReport, EquivariantGradedPiece};
pub use graded::{monomial_degree, monomial_mul, monomials_of_degree, GradedAlgebra, Monomial, Poly};
pub use koszul::{linear_kernel_oracle, subsets, summation_homotopy_holds, GradedMap, HomologyTable, KoszulComplex};
pub use tensor::{binomial_span_rank, ContentBlocks, Subquotient, TensorPower};
