//! Exact symbolic computation in n-fold tensor powers of a free
//! graded-commutative algebra.
//!
//! Elements are finite linear combinations of tensor words whose slots hold
//! monomials in declared graded generators. Multiplication follows the Koszul
//! sign rule: moving a factor of degree p past one of degree q costs
//! (-1)^(p q). On top of that arithmetic the crate reduces elements modulo
//! monomial-tensor ideals, checks congruences, and verifies three claims
//! about chain products of positional zero-divisors (a_1 - a_k), producing a
//! per-term certificate for each verdict.
//!
//! Coefficients are exact: arbitrary-precision rationals or a prime field.
//!
//! ```
//! use koszul::claims::check_original_first_part;
//! use koszul::context::Generator;
//! use koszul::scalar::Field;
//!
//! // The uncorrected first congruence breaks at arity 4: a single residual
//! // word with a unit in slot 3 survives reduction.
//! let a = Generator::new("a", 1).unwrap();
//! let report = check_original_first_part(&a, 4, Field::Rationals).unwrap();
//! assert!(!report.holds());
//! assert_eq!(report.residual().term_count(), 1);
//! ```

pub mod claims;
pub mod cli;
pub mod context;
pub mod element;
pub mod error;
pub mod expr;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod products;
pub mod render;
pub mod scalar;
pub mod structured;
pub mod word;

pub use crate::claims::{Claim, Classification, TermRecord, VerificationReport};
pub use crate::context::{Context, ContextSpec, Generator};
pub use crate::element::Element;
pub use crate::error::AlgebraError;
pub use crate::ideal::MonomialIdeal;
pub use crate::monomial::{FactorMonomial, Sign};
pub use crate::scalar::{Field, Scalar};
pub use crate::word::TensorWord;
