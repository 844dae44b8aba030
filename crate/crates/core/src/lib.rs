//! Exact classical knot invariants from Seifert matrices, plus interval
//! bookkeeping for the smooth concordance invariants τ and s.
//!
//! The crate is `#![no_std]` and only needs `alloc`. Everything is computed
//! with arbitrary-precision integers and rationals; there is no floating
//! point anywhere.
//!
//! * [`algebra`]: Laurent polynomials, integer matrices, polynomial-matrix
//!   determinants and signatures of symmetric matrices.
//! * [`seifert`]: validated Seifert matrices, twisted doubles, block sums and
//!   the band-move relation.
//! * [`invariants`]: Alexander polynomial, determinant, signature, Arf
//!   invariant, genus and cheap slice obstructions.
//! * [`ledger`]: interval bounds on τ and s, cited axioms, connected sums,
//!   band-move widening and the two certificates built on top of them.
//! * [`catalog`]: the literal matrices used by the worked example.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod invariants;
pub mod ledger;
pub mod seifert;

pub use algebra::{IntMatrix, LaurentPoly, PolyMatrix};
pub use invariants::InvariantReport;
pub use ledger::{AxiomStore, BoundedValue, Certificate, KnotRecord, LedgerError, Sliceness};
pub use seifert::{BandMoveClaim, SeifertError, SeifertMatrix};
