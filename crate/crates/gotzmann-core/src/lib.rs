//! Combinatorics of monomials under the lexicographic order: lexsegments
//! and lexintervals, Borel (strongly stable) closures, gaps and cogaps,
//! the mu function, and the classification of Gotzmann monomials in up to
//! four variables, with every closed form paired against a brute-force
//! oracle.
//!
//! The crate is `no_std` (with `alloc`); all operations are pure functions
//! over immutable values and safe to run from any number of threads.
//!
//! ```
//! use gotzmann_core::{classify, gaps, Monomial, DEFAULT_ENUM_CAP};
//!
//! // x2*x3 has exactly one gap in four variables, x1*x4, so its Borel
//! // closure falls one short of a lexsegment and the monomial is not
//! // Gotzmann there.
//! let u = Monomial::parse("x2*x3", 4)?;
//! let report = gaps::gap_report(&u, DEFAULT_ENUM_CAP)?;
//! assert_eq!(report.gap_count, 1);
//! assert_eq!(report.u_tilde.to_string(), "x2^2");
//!
//! let verdict = classify::is_gotzmann_closed_form(&u)?;
//! assert!(!verdict.is_gotzmann);
//!
//! // One factor of x4 repairs it.
//! assert_eq!(classify::minimal_padding(&u, 100, DEFAULT_ENUM_CAP)?, 1);
//! # Ok::<(), gotzmann_core::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod borel;
pub mod classify;
pub mod error;
pub mod gaps;
pub mod lex;
pub mod monomial;

pub use borel::MaxgenMonomial;
pub use classify::{Method, ThresholdReport, Verdict};
pub use error::{Error, Result};
pub use gaps::GapReport;
pub use lex::{LexInterval, MonomialSet};
pub use monomial::{Monomial, VarIndex};

/// Default cap on materialized set sizes: enumeration requests beyond this
/// many elements fail with [`Error::EnumerationCapExceeded`] instead of
/// exhausting memory.
pub const DEFAULT_ENUM_CAP: usize = 5_000_000;
