//! Exact-arithmetic toolkit for Hom-algebras.
//!
//! The crate builds finite-dimensional algebras from structure constants over
//! the rationals, deforms them along multiplicative endomorphisms (the twist
//! `μ_α = α ∘ μ`), verifies the G-Hom-associativity axioms for every subgroup
//! of Σ₃, computes the α-twisted Chevalley-Eilenberg homology of Hom-Lie
//! algebras, and constructs Yang-Baxter and braid operators attached to them.
//! Every computation is exact: scalars are arbitrary-precision rationals and
//! no floating point is used anywhere.

pub mod document;
pub mod error;
pub mod families;
pub mod homalg;
pub mod homology;
pub mod hybe;
pub mod linalg;
pub mod rational;
pub mod witt;

pub use error::Error;
pub use homalg::{FinAlgebra, HomAlgebra, LinearSelfMap, SubgroupS3};
pub use linalg::Matrix;
pub use rational::Rational;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
