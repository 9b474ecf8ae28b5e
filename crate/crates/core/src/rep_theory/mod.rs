//! Character tables, Frobenius–Schur indicators and irrep multiplicities: an
//! independent route to `N_q` and `N_a` used to cross-check the counting formulas.

mod abelian;
mod character_table;
mod indicators;
mod multiplicity;
mod projector;

pub use character_table::{
    character_table, character_table_bounded, CharacterTable, Irrep, DEFAULT_CHARACTER_TABLE_LIMIT,
};
pub use indicators::{frobenius_schur_indicators, is_totally_orthogonal, FsIndicators};
pub use multiplicity::{
    ambient_multiplicities, ambient_multiplicities_by_orbit, na_oracle, nq_oracle,
    MultiplicityVector, MULTIPLICITY_TOLERANCE,
};
pub use projector::{
    isotypic_projector, isotypic_projector_bounded, SparseMatrix, DEFAULT_PROJECTOR_LIMIT,
};
