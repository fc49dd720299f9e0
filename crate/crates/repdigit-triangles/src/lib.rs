//! Pythagorean triangles built from repeated digits.
//!
//! A base-`b` repdigit is a number whose base-`b` expansion is `k` copies of
//! one digit `d`. This crate classifies and searches the Pythagorean
//! triangles that pair such a repdigit with the digit power `d^k`:
//!
//! * **type 1** - one leg `d^k`, hypotenuse `d_{k,b}`;
//! * **type 2** - the two legs are `d^k` and `d_{k,b}`.
//!
//! The canonical example is `216^2 + 630^2 = 666^2`: in base 10, `216 = 6^3`
//! is a leg and `666` is the hypotenuse, a type-1 triangle.
//!
//! Module map:
//!
//! * [`bigmath`] - exact big-integer primitives (`isqrt`, perfect squares,
//!   gcd, powers);
//! * [`repdigit`] - the `(k, b, d)` spec, repdigit evaluation, base
//!   rendering;
//! * [`triples`] - the `(delta, m, n)` parametrization, its inverse, and the
//!   type-1 / type-2 checks;
//! * [`families`] - five constructive two-digit families and the per-digit
//!   corollary constructors;
//! * [`search`] - bounded exhaustive scans, congruence prefilters, and the
//!   five theorem verifications.
//!
//! The companion `book/` directory walks through the mathematics chapter by
//! chapter; its code snippets compile and run as part of `cargo test`.

pub mod bigmath;
pub mod error;
pub mod families;
pub mod repdigit;
pub mod search;
pub mod triples;

pub use bigmath::Natural;
pub use error::Error;
pub use families::{FamilyId, FamilyParams};
pub use repdigit::RepdigitSpec;
pub use search::{SearchRange, SearchReport, TheoremBounds, TheoremVerification, Verdict};
pub use triples::{TriangleType, TriangleWitness, TripleParams};

// The guide chapters double as doctests so the book can never drift from
// the API. Each dummy item carries one chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/repdigits.md")]
    pub struct Repdigits;
    #[doc = include_str!("../../../book/src/parametrization.md")]
    pub struct Parametrization;
    #[doc = include_str!("../../../book/src/families.md")]
    pub struct Families;
    #[doc = include_str!("../../../book/src/verification.md")]
    pub struct Verification;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct CommandLine;
}
