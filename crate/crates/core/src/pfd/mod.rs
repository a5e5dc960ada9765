//! Partial-fraction decomposition of `Q(x) / prod_j (x - a_j)^m`.
//!
//! Three engines share one term representation:
//! * [`decompose_closed_form`] builds every coefficient directly from
//!   derivatives of `Q` at the poles and complete Bell polynomials of power
//!   sums of reciprocal pole gaps;
//! * [`decompose_q`] is the same formula specialized to the poles
//!   `a_j = q^{-j}`, written in the `1/(1 - x q^j)^e` basis with Gaussian
//!   binomial prefactors;
//! * [`decompose_oracle`] solves the linear system obtained by clearing
//!   denominators, and serves as an independent check.

mod closed_form;
mod linsolve;
mod qpoles;
mod sample;

pub use closed_form::{decompose_closed_form, g_at_pole, x_sequence};
pub use linsolve::{decompose_oracle, solve_linear};
pub use qpoles::{
    decompose_q, q_basis_factor, q_pole_spec, q_pole_x_sequence, theorem_q_terms,
    x1_harmonic_form, QBasisTerms,
};
pub use sample::{random_instance, random_poles};

use crate::error::{Error, Result};
use crate::exact::Field;
use crate::poly::Poly;
use std::collections::BTreeMap;

/// Distinct poles sharing one multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct PoleSpec<K> {
    poles: Vec<K>,
    multiplicity: u32,
}

impl<K: Field> PoleSpec<K> {
    pub fn new(poles: Vec<K>, multiplicity: u32) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        for (i, a) in poles.iter().enumerate() {
            if poles[..i].contains(a) {
                return Err(Error::DuplicatePoles(i));
            }
        }
        Ok(PoleSpec {
            poles,
            multiplicity,
        })
    }

    pub fn poles(&self) -> &[K] {
        &self.poles
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    /// `deg P = s m`.
    pub fn degree(&self) -> usize {
        self.poles.len() * self.multiplicity as usize
    }

    /// `x - a_j`.
    pub fn factor(&self, j: usize) -> Poly<K> {
        Poly::linear(self.poles[j].neg(), K::one())
    }

    /// `P(x) = prod_j (x - a_j)^m`.
    pub fn denominator(&self) -> Poly<K> {
        (0..self.len()).fold(Poly::one(), |acc, j| {
            acc.mul(&self.factor(j).pow(self.multiplicity))
        })
    }

    pub(crate) fn check_numerator(&self, q: &Poly<K>) -> Result<()> {
        match q.degree() {
            Some(d) if d >= self.degree() => Err(Error::DegreeTooLarge {
                degree: d,
                bound: self.degree(),
            }),
            _ => Ok(()),
        }
    }
}

/// `sum c_{j,e} / (x - a_j)^e`, keyed by `(j, e)`; zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Decomposition<K> {
    terms: BTreeMap<(usize, u32), K>,
}

impl<K: Field> Decomposition<K> {
    pub fn new() -> Self {
        Decomposition {
            terms: BTreeMap::new(),
        }
    }

    /// Adds `c` to the coefficient of `(j, e)`.
    pub fn accumulate(&mut self, j: usize, e: u32, c: K) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((j, e)).or_insert_with(K::zero);
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.remove(&(j, e));
        }
    }

    pub fn get(&self, j: usize, e: u32) -> K {
        self.terms.get(&(j, e)).cloned().unwrap_or_else(K::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, u32, &K)> {
        self.terms.iter().map(|(&(j, e), c)| (j, e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Text like `1/x^2 + 2/x - 2/(x - 1)`: poles in index order, powers
    /// descending.
    pub fn to_text(&self, spec: &PoleSpec<K>) -> String {
        let mut keys: Vec<(usize, u32)> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let mut out = String::new();
        for (j, e) in keys {
            let (neg, mag, _) = self.terms[&(j, e)].term_text();
            let num = if mag.contains(' ') || mag.contains('/') || mag.contains('*') {
                format!("({mag})")
            } else {
                mag
            };
            let base = pole_text(&spec.poles[j]);
            let den = match (e, base == "x") {
                (1, true) => base,
                (1, false) => format!("({base})"),
                (_, true) => format!("{base}^{e}"),
                (_, false) => format!("({base})^{e}"),
            };
            let sep = match (out.is_empty(), neg) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            out.push_str(sep);
            out.push_str(&num);
            out.push('/');
            out.push_str(&den);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn pole_text<K: Field>(a: &K) -> String {
    if a.is_zero() {
        return "x".into();
    }
    let (neg, mag, _) = a.term_text();
    let mag = if mag.contains(' ') {
        format!("({mag})")
    } else {
        mag
    };
    if neg {
        format!("x + {mag}")
    } else {
        format!("x - {mag}")
    }
}

/// Recombines a decomposition over `P`: returns `(num, P)` with
/// `num = sum c_{j,e} P / (x - a_j)^e`.
pub fn recombine<K: Field>(d: &Decomposition<K>, spec: &PoleSpec<K>) -> (Poly<K>, Poly<K>) {
    let mut num = Poly::zero();
    for (j, e, c) in d.terms() {
        num = num.add(&basis_numerator(spec, j, e).scale(c));
    }
    (num, spec.denominator())
}

/// `P / (x - a_j)^e = prod_{i != j} (x - a_i)^m * (x - a_j)^(m - e)`.
pub(crate) fn basis_numerator<K: Field>(spec: &PoleSpec<K>, j: usize, e: u32) -> Poly<K> {
    let m = spec.multiplicity();
    (0..spec.len())
        .filter(|&i| i != j)
        .fold(spec.factor(j).pow(m - e), |acc, i| {
            acc.mul(&spec.factor(i).pow(m))
        })
}
