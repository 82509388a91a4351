//! Exact computation of the cohomology rings of moment-angle complexes.
//!
//! Given a finite abstract simplicial complex `K` on `[m]`, the moment-angle
//! complex `Z_K` has cohomology decomposing over subsets `J ⊆ [m]` as the
//! reduced cohomology of the full subcomplexes `K_J` (Hochster), with the
//! ring structure induced by the signed union product. This crate computes
//! that bigraded decomposition and ring exactly (ℤ, ℚ, or 𝔽_p — no floating
//! point), together with the combinatorial constructions (joins, connected
//! sums, stellar subdivisions, belts, irreducible decompositions of
//! 2-spheres) and the algebraic ones (gyration, connected sums of sphere
//! products, ring fingerprints) needed to verify the structural theorems
//! relating them.

pub mod belts;
pub mod complex;
pub mod decompose;
pub mod error;
pub mod graded_ring;
pub mod homology;
pub mod linalg;
pub mod moment_angle;
pub mod scx;
pub mod verify;
pub mod vertex_set;
pub mod zoo;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use vertex_set::VertexSet;
