//! Exact linear algebra over ℤ, ℚ, and prime fields.
//!
//! Everything downstream (homology, ring structure, fingerprints) reduces to
//! the operations here: Smith normal form for integer homology, and exact
//! field elimination for ranks, kernels, solves, and quotient coordinates.

mod field;
mod int;

pub use field::{
    primitive_integer_vector, quotient_coordinates, Field, FieldMatrix, PrimeField,
    QuotientSpace, RankAccumulator, Rationals,
};
pub use int::{smith_normal_form, IntMatrix, SmithForm};
