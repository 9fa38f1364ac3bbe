//! Exact arithmetic for even integral symmetric forms and their linking forms.
//!
//! The crate decides whether the linking form `(L#/L, λ_b)` of an integral
//! symmetric form vanishes in the Witt group of linking forms, using the
//! residue maps `∂_p : W(Q) → W(F_p)`, and checks the consequence that an
//! even form of odd determinant with vanishing linking form has signature
//! divisible by 8. Everything is computed with arbitrary-precision integers
//! and rationals; floating point only appears in the optional numeric Gauss
//! sum comparison.
//!
//! Modules:
//! - [`forms`]: Gram matrices, determinant, signature, rational diagonalization.
//! - [`witt`]: rational Witt classes, residue maps, finite-field Witt classes,
//!   factorization.
//! - [`smith`]: Smith normal form and integer lattice bases.
//! - [`discriminant`]: discriminant groups, linking forms, metabolizers, Gauss
//!   sums and the end-to-end theorem check.
//! - [`cyclotomic`]: exact arithmetic in `Z[ζ_n]`.
//! - [`knots`]: Seifert matrices and pretzel knots.
//! - [`diophantine`]: residue obstructions for `pq + pr + qr = ±m²`.
#![no_std]

extern crate alloc;

pub mod cyclotomic;
pub mod diophantine;
pub mod discriminant;
pub mod forms;
pub mod knots;
pub mod smith;
pub mod witt;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use discriminant::{
    DiscriminantForm, GaussSumValue, MainTheoremReport, DEFAULT_DET_BOUND, DEFAULT_GROUP_BOUND,
};
pub use forms::{DiagonalRationalForm, FormReport, IntegerSymmetricForm, PivotPolicy};
pub use knots::{analyze_knot, KnotError, KnotReport, PretzelKnot, SeifertMatrix};
pub use witt::{FiniteWittClass, PrimeFactorization, WittClassQ};
