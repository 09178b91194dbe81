//! Explicit witnesses that Reed-Solomon codes fail the separating property,
//! and the brute-force oracles that check them.
//!
//! Two coalitions `U`, `V` of codewords are *separated* when some coordinate
//! has disjoint symbol sets on the two sides. A code is `c`-separating if
//! every pair of disjoint coalitions of size at most `c` is separated. The
//! [`constructions`] module builds pairs of polynomial families whose
//! encodings are not separated, for several parameter regimes, and
//! [`constructions::verify_witness`] re-checks every claim with the
//! generic machinery in [`oracle`].
//!
//! ```
//! use rssep::constructions::{construct_c2_third, verify_witness};
//! use rssep::field::make_field;
//!
//! let gf13 = make_field(13, 1).unwrap();
//! let w = construct_c2_third(&gf13).unwrap();
//! let report = verify_witness(&w).unwrap();
//! assert_eq!(report.verdict, "PASS");
//! assert_eq!(w.claimed_d, 13 - 5);
//! ```

pub mod cli;
pub mod code;
pub mod constructions;
pub mod field;
pub mod oracle;
pub mod poly;

use thiserror::Error;

/// Any failure surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] field::FieldError),
    #[error(transparent)]
    Poly(#[from] poly::PolyError),
    #[error(transparent)]
    Code(#[from] code::CodeError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error(transparent)]
    Construction(#[from] constructions::ConstructionError),
    #[error(transparent)]
    Verify(#[from] constructions::VerifyFailure),
    #[error(transparent)]
    Json(#[from] constructions::JsonError),
}

impl Error {
    /// Stable machine-readable tag for the error family.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Field(_) => "field",
            Error::Poly(_) => "poly",
            Error::Code(_) => "code",
            Error::Oracle(_) => "oracle",
            Error::Construction(_) => "construction",
            Error::Verify(_) => "verify",
            Error::Json(_) => "parse",
        }
    }
}
