//! Exact-arithmetic toolkit for finite-dimensional real Lie algebras carrying
//! almost contact and almost 3-contact structures.
//!
//! Everything here is computed over arbitrary-precision rationals: validity of
//! the defining identities, structural invariants (normality tensor, ζ_i, 𝒵,
//! δ, ψ), the low-dimensional classification recognizers, metric connections
//! with totally skew-symmetric torsion, a catalog of constructed examples, and
//! first homology of crystallographic lattice quotients. There are no
//! tolerances anywhere — every test is an exact zero test.

pub mod algebra;
pub mod connection;
pub mod constructors;
pub mod contact;
pub mod forms;
pub mod homology;
pub mod json;
pub mod linalg;
pub mod metric;
pub mod rational;
pub mod reports;
pub mod subspace;
pub mod three_contact;

pub use rational::Rational;
