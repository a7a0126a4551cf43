//! Certified enclosures for the zeros of Bessel functions, cylinder
//! functions, and their derivatives.
//!
//! The zeros of `J_nu`, `Y_nu`, the cylinder combinations
//! `C_{nu,tau} = J_nu cos(pi tau) + Y_nu sin(pi tau)`, their derivatives,
//! and the derivatives of ultraspherical Bessel functions
//! `x^{-eta} J_nu(x)` are level crossings of slowly varying phase
//! functions.  This crate evaluates closed-form envelopes that bound
//! those phase functions from both sides, inverts the envelopes with
//! certified brackets, and assembles the inversions into two-sided zero
//! enclosures, guaranteed bounds on zero-counting functions, and
//! one-sided bounds for the ultraspherical case.
//!
//! The main entry points:
//!
//! * [`enclose`] - enclosure of the k-th zero of one of the eight
//!   supported zero families;
//! * [`count_bessel_zeros`] / [`count_deriv_zeros`] - integer bounds on
//!   the number of zeros below a threshold;
//! * [`special`] - the reference oracle (`J`, `Y`, Airy) every bound is
//!   tested against;
//! * [`phase`] - continuous-branch phase functions and true zeros;
//! * [`liouville`] - self-verification of the Sturm comparison
//!   conditions that underpin the envelope bounds;
//! * [`classic`] - McMahon, Hethcote, Elbert-Laforgia, Qu-Wong and
//!   Airy-type bounds for benchmarking.
//!
//! See the `examples/` directory for one runnable example per
//! capability, and the `phasebound` binary for the command-line front
//! end.

mod dd;
mod error;

pub mod classic;
pub mod cli;
pub mod enclose;
pub mod envelope;
pub mod invert;
pub mod liouville;
pub mod phase;
pub mod special;

pub use enclose::{count_bessel_zeros, count_deriv_zeros, enclose, BoundStatus, CountBound, Enclosure};
pub use envelope::{critical_points, eval_envelope, CriticalPoints, EnvelopeKind};
pub use error::Error;
pub use invert::{invert, InverseQuery, Inverted};
pub use phase::ZeroFamily;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
