//! Appell-Lauricella period functions and hypergeometric functions over prime
//! fields, with exact values in cyclotomic integers.
//!
//! Characters of `F_p^×` are addressed by their exponent against a fixed
//! generator, and every character sum is computed exactly in `Z[ζ_{p-1}]`.
//! On top of that sit point counts for generalized Picard curves, the
//! classical truncated series with its Hasse-invariant congruence, and a
//! registry that checks each transformation identity over a whole field.
//!
//! ```
//! use ff_lauricella::{appell, Character, PrimeField};
//!
//! let f = PrimeField::new(7).unwrap();
//! let eta = Character::of_order(&f, 3).unwrap();
//! let eps = Character::trivial(&f);
//! let params = appell::AppellParams::two(eta, eta, eta, eps, 3, 5).unwrap();
//! let direct = appell::pdn(&params).unwrap();
//! assert_eq!(direct, appell::pdn_via_jacobi(&params).unwrap());
//! ```

pub mod appell;
pub mod character;
pub mod charsum;
pub mod classical;
pub mod curves;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod verify;

pub use character::Character;
pub use cyclotomic::{CycFraction, CycValue};
pub use error::{Error, Result};
pub use field::PrimeField;

/// The book's chapters, compiled as doc-tests so their snippets stay current.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/period-functions.md")]
    mod period_functions {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/classical.md")]
    mod classical {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
