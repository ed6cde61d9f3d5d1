//! Arc diagrams of permutations and their crossing/nesting statistics.
//!
//! A permutation is drawn as an arc diagram: weak exceedances above the
//! vertex line, deficiencies below with reversed orientation. The crate
//! computes k-crossing and k-nesting numbers, applies an involution that
//! swaps them while fixing the per-vertex degree sequence, and exhaustively
//! verifies the enumerative consequences (distribution tables, Catalan
//! counts of non-crossing permutations, maximum-nesting closed forms, and
//! the symmetry of the joint distribution).
//!
//! Entry points:
//! - [`perm`]: permutations, arc diagrams, vertex types, degree sequences.
//! - [`stats`]: crossing/nesting numbers with a brute-force oracle.
//! - [`tableau`]: partitions, partial tableaux, and the matching ↔
//!   oscillating-tableau bijection.
//! - [`involution`]: inflation to partial matchings and the involution Ψ.
//! - [`enumeration`]: exhaustive tables and closed-form checks.
//! - [`render`] / [`cli`]: drawing and the command-line surface.

pub mod cli;
pub mod enumeration;
pub mod involution;
pub mod perm;
pub mod render;
pub mod stats;
pub mod tableau;
