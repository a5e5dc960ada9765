//! Exact ground arithmetic: arbitrary-precision rationals and the
//! rational-function field Q(q), both behind the minimal [`Field`] interface
//! shared by the polynomial and decomposition code.

mod qfunc;
mod rational;

pub use qfunc::QRatFunc;
pub use rational::{binomial, factorial, Rational};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::fmt::Debug;

/// Minimal exact field interface.
///
/// Everything generic in this crate (polynomials in `x`, Bell values,
/// decompositions, identity checks) is written against this trait so that it
/// runs unchanged over `Q` and over `Q(q)`.
pub trait Field: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn from_rational(r: &Rational) -> Self;
    fn canonical_text(&self) -> String;

    /// Splits the canonical text into `(negative, magnitude, compound)` for
    /// embedding as a coefficient. `compound` is true when the magnitude must
    /// be parenthesized before being multiplied by a power of a variable.
    fn term_text(&self) -> (bool, String, bool);

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// The rational value obtained by setting `q = v`. Fields in which `q`
    /// is already a number return the element unchanged.
    fn specialize_q(&self, v: &Rational) -> Result<Rational>;

    /// Whether `q` is an indeterminate of this field.
    fn has_symbolic_q() -> bool {
        false
    }

    /// Rough storage size, used to prefer small pivots during elimination.
    fn size_hint(&self) -> usize {
        1
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::from_rational(&Rational::from_bigint(n.clone()))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_i64(n))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power with a signed exponent.
    fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            if self.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(self.pow(e.unsigned_abs()).inv()?)
        }
    }
}

/// `(-1)^e` as a field element.
pub fn sign<K: Field>(e: i64) -> K {
    if e.rem_euclid(2) == 0 {
        K::one()
    } else {
        K::one().neg()
    }
}

/// Sums an iterator of field elements.
pub fn sum<K: Field, I: IntoIterator<Item = K>>(items: I) -> K {
    items.into_iter().fold(K::zero(), |acc, v| acc.add(&v))
}
