//! Exact arithmetic for finite-dimensional multiplicative Hom-Lie algebras
//! over ℚ and ℚ(i).
//!
//! An algebra is a vector space `L` with a skew bracket and a linear map `α`
//! satisfying the twisted Jacobi identity
//! `[α(x), [y, z]] + [α(y), [z, x]] + [α(z), [x, y]] = 0`.
//! It is multiplicative when `α[x, y] = [α(x), α(y)]`.
//!
//! ```
//! use homlie::{fixtures, series};
//!
//! let l = fixtures::c2_fixture().algebra;
//! assert!(l.check_axioms().is_multiplicative_hom_lie());
//! assert_eq!(series::solvable_class(&l).unwrap(), Some(2));
//! assert_eq!(series::nilpotent_class(&l).unwrap(), None);
//! ```

pub mod algebra;
pub mod constructions;
pub mod document;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod linalg;
pub mod series;

pub use algebra::{Axiom, AxiomReport, HomLieAlgebra, Witness};
pub use error::{Error, ParseError, Result};
pub use field::{GaussianRational, Rational};
pub use linalg::{Matrix, Scalar, Subspace, Vector};
pub use series::{SeriesKind, SeriesReport, Verdict};
