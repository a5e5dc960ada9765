//! Exact partial-fraction decompositions with uniform pole multiplicity and
//! machine certification of q-binomial / q-harmonic identities over Q(q).

pub mod bell;
pub mod error;
pub mod exact;
pub mod parse;
pub mod pfd;
pub mod poly;
pub mod qcomb;
pub mod ratfunc;
pub mod registry;
pub mod sweep;

pub use error::{Error, Result};
pub use exact::{Field, QRatFunc, Rational};
pub use poly::Poly;
