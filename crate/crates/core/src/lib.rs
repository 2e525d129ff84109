//! Exact computation of Hilbert series of highest weight varieties in type A.
//!
//! The crate covers Grassmannian cones and the closure of the minimal nilpotent
//! orbit of `sl_{n+1}`, the Catalan and Narayana families that appear as their
//! h-vectors, and executable checks of the binomial identities that tie the two
//! together (Li Shan-lan, Hurwitz, Legendre).
//!
//! All arithmetic is exact over [`num_bigint::BigInt`] and
//! [`num_rational::BigRational`].

pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod hilbert;
pub mod identities;
pub mod series;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};
pub use exact::{binomial, factorial, falling_factorial, Rational};
pub use series::{HilbertSeries, Polynomial, TruncatedSeries};
pub use weights::{DominantWeight, PositiveRoot};
