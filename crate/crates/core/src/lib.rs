//! Exact certificates for `k`-sign consistency and `k`-positivity of Hankel,
//! Toeplitz and circulant matrices.
//!
//! Any `k`-minor of a Hankel matrix is a nonnegative integer combination of
//! the `k`-minors of a `k`-row reshaped Hankel matrix, with Littlewood–Richardson
//! coefficients. Checking that one short, wide matrix is sign consistent
//! therefore certifies the large one. This crate computes those expansions and
//! the certificates built on them, in exact rational arithmetic throughout.
//!
//! | module | contents |
//! |---|---|
//! | [`exact`] | rationals, signs, partitions, index tuples, permutations |
//! | [`tableaux`] | Kostka numbers, LR coefficients, Schur and monomial evaluation |
//! | [`matrix`] | exact matrices, Hankel/Toeplitz/circulant/Vandermonde builders, minors |
//! | [`decomp`] | minor decompositions and the Hankel minor formula |
//! | [`certify`] | brute-force and structured certificates |
//! | [`cli`] | the `signcert` command-line front end |

pub mod certify;
pub mod cli;
pub mod decomp;
pub mod error;
pub mod exact;
pub mod limits;
pub mod matrix;
pub mod tableaux;

pub use certify::{CertificateReport, Certifier, CertifyOptions, Method, Outcome, Witness};
pub use error::{Error, Result};
pub use exact::{IndexTuple, IntTuple, Partition, Ratio, Sign};
pub use limits::Limits;
pub use matrix::{ExactMatrix, PeriodicSequence, Sequence, SequenceWindow};
