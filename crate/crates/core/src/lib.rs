//! Exact arithmetic for Colombeau generalized numbers `K̄` and generalized
//! quaternions `H̄`.
//!
//! Values are represented on the dyadic mesh `ε_n = 2^{-n}` by eventually
//! periodic families of truncated Puiseux series. Within this class the sharp
//! valuation, the unit / zero-divisor dichotomy, idempotents, annihilators of
//! finitely generated ideals and the identity-theorem criterion for
//! generalized polynomials are all decidable, and this crate decides them
//! exactly.

pub mod conformance;
pub mod epsset;
pub mod error;
pub mod expr;
pub mod gennum;
pub mod holo;
pub mod ideals;
pub mod json;
pub mod polyann;
pub mod quat;
pub mod scalar;
pub mod series;
pub mod testing;

pub use epsset::IndexSet;
pub use error::{Error, Result};
pub use gennum::{Classification, Equality, GenNumber, Negligibility, QPositivity, Valuation};
pub use quat::{GenQuaternion, QuatClassification};
pub use scalar::{Coeff, ExtRational};
pub use series::PuiseuxSeries;
