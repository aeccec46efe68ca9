//! Character tables, class functions and their ring operations, and ideal
//! membership in representation rings.

pub mod classfn;
pub mod ideal;
pub mod seminormal;
pub mod table;

pub use classfn::ClassFunction;
pub use ideal::{
    cyclotomic_quotient_kernel, cyclotomic_quotient_map, lattice_membership, modular_dimension_quotient,
    modular_quotient_order, regular_jordan_blocks, trivial_injection_checks, RepIdeal, RepWitness,
};
pub use seminormal::SeminormalRep;
pub use table::{character_table, character_table_uncached, CharacterTable, MurnaghanNakayama};
