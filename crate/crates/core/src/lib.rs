//! Exact arithmetic for the Riordan group acting on truncated power series,
//! the Stirling-number description of barycentric subdivision, and finite
//! simplicial complexes, together with finite-window checks that multiples
//! of the Euler characteristic are the only face-count combinations that are
//! constant on simplices or invariant under barycentric subdivision.
//!
//! ```
//! use riordan_chi::{expr, RiordanPair, Series};
//!
//! // Row n of F is the f-vector of the n-simplex, so F applied to the
//! // alternating column lists chi of every simplex.
//! let f = RiordanPair::f_matrix(8);
//! let chis = f.apply(&expr::eval_str("1/(1+x)", 8).unwrap());
//! assert_eq!(chis, Series::from_ints(&[1; 8]).unwrap());
//! ```
//!
//! The guide under `book/` walks through each module; its code listings are
//! compiled and run as doc-tests of this crate.

pub mod error;
pub mod expr;
pub mod fps;
pub mod matrix;
pub mod riordan;
pub mod simplicial;
pub mod subdivision;
pub mod verify;

pub use error::{Error, Result};
pub use fps::{Coefficient, Series};
pub use matrix::ExactMatrix;
pub use num_bigint::BigInt;
pub use riordan::RiordanPair;
pub use simplicial::{Complex, Face};

/// The guide's chapters, so `cargo test` runs their listings.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/riordan.md")]
    mod riordan {}
    #[doc = include_str!("../../../book/src/subdivision.md")]
    mod subdivision {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
