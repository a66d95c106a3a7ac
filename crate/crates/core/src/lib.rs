//! Computations with finitely presented groups arising from Seifert fibred
//! spaces: exact abelianization via Smith normal form, finite-quotient
//! fingerprints, Todd-Coxeter coset enumeration, exponent-p quotients, and
//! finite-level checks for fibre-product (Grothendieck pair) constructions.
//!
//! The crate is organised bottom-up:
//!
//! * [`matrix`] - exact integer linear algebra (generic scalar),
//! * [`word`], [`presentation`] - words and finitely presented groups,
//! * [`finite`] - a catalog of small finite groups with full enumeration,
//! * [`hom`] - homomorphism counting, fingerprints, density checks,
//! * [`coset`] - coset enumeration and Reidemeister-Schreier rewriting,
//! * [`pquot`] - prime-power polycyclic presentations and p-quotients,
//! * [`seifert`] - Seifert data, euler numbers, closed-form homology,
//! * [`pairs`] - fibre products and finite-level Grothendieck reports.

pub mod abelian;
pub mod coset;
pub mod finite;
pub mod hom;
pub mod matrix;
pub mod pairs;
pub mod pquot;
pub mod presentation;
pub mod refute;
pub mod seifert;
pub mod word;

/// Default exact integer scalar.
pub type Int = num_bigint::BigInt;
/// Exact rational numbers (euler numbers are these).
pub type Rat = num_rational::BigRational;
/// Integer matrices over the default scalar.
pub type IntMatrix = matrix::Matrix<Int>;

pub use abelian::AbelianInvariants;
pub use presentation::Presentation;
pub use word::Word;
