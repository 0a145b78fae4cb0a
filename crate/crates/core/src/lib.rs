//! Exact verification of harmonic-number summation identities.
//!
//! Every identity in the catalogue ([`IdentityId`]) pairs a terminating
//! alternating sum over binomial coefficients and generalized harmonic
//! numbers with a closed form. The crate evaluates both sides in exact
//! rational arithmetic and compares them structurally:
//!
//! * [`rational`], [`jet`] — big rationals and truncated Taylor jets;
//! * [`combinatorics`] — `H_n^<l>(x)`, shifted factorials, binomials;
//! * [`oracle`] — brute-force evaluation of every left-hand side;
//! * [`closed_forms`] — every right-hand side and its singular set;
//! * [`verifier`] — parameter grids, parallel comparison, derivative and
//!   hypergeometric cross-checks, mutation sensitivity;
//! * [`report`] — JSON, CSV and text renderings of a report.
//!
//! ```
//! use whipple::{IdentityId, Params, Rational};
//!
//! let x: Rational = "1/2".parse().unwrap();
//! let p = Params::nx(1, x);
//! let lhs = IdentityId::ThmH2T0.lhs(&p).unwrap();
//! let rhs = IdentityId::ThmH2T0.rhs(&p).unwrap();
//! assert_eq!(lhs, rhs);
//! assert_eq!(rhs.to_string(), "-16/27");
//! ```

pub mod closed_forms;
pub mod combinatorics;
pub mod error;
pub mod jet;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod verifier;

pub use closed_forms::{IdentityId, Kind, Mutation, PRange, Params};
pub use error::{Error, Result};
pub use jet::Jet;
pub use oracle::{Family, Weight};
pub use rational::Rational;

/// The guide's chapters, compiled so their snippets run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/rationals-and-jets.md")]
    mod rationals_and_jets {}
    #[doc = include_str!("../../../book/src/harmonic-numbers.md")]
    mod harmonic_numbers {}
    #[doc = include_str!("../../../book/src/series-oracle.md")]
    mod series_oracle {}
    #[doc = include_str!("../../../book/src/closed-forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/near-misses.md")]
    mod near_misses {}
}
