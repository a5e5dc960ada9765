//! Dense univariate polynomials over an exact [`Field`].
//!
//! The variable is `x` unless a different name is passed to
//! [`Poly::to_text`]; `Poly<Rational>` doubles as the representation of
//! polynomials in `q` inside [`QRatFunc`](crate::exact::QRatFunc).

use crate::error::{Error, Result};
use crate::exact::{Field, Rational};
use crate::exact::factorial;
use std::fmt;

/// `coeffs[i]` is the coefficient of `x^i`; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(K::one(), 1)
    }

    pub fn monomial(c: K, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: K, c1: K) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(K::neg).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
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

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Formal derivative of the given order.
    pub fn derivative(&self, order: usize) -> Self {
        if order == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= order {
            return Self::zero();
        }
        // i!/(i-order)! as exact integers
        let coeffs = (order..self.coeffs.len())
            .map(|i| {
                let falling = factorial(i as u64) / factorial((i - order) as u64);
                self.coeffs[i].mul(&K::from_bigint(&falling))
            })
            .collect();
        Self::new(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc.mul(v).add(c))
    }

    /// Euclidean division: `self = quot * b + rem` with `deg rem < deg b`.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self)> {
        let lead = b.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead.inv()?;
        let db = b.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![K::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db].mul(&lead_inv);
            if !c.is_zero() {
                for (i, bc) in b.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&c.mul(bc));
                }
            }
            quot[k] = c;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of an exact division; `None` if `b` does not divide `self`.
    pub fn exact_div(&self, b: &Self) -> Option<Self> {
        match self.divrem(b) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Substitutes `x -> c x`.
    pub fn scale_arg(&self, c: &K) -> Self {
        let mut pw = K::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.mul(&pw));
            pw = pw.mul(c);
        }
        Self::new(coeffs)
    }

    /// `x^n * p(1/x)` as a polynomial; requires `n >= deg p`.
    pub fn reverse_to_x_power(&self, n: usize) -> Result<Self> {
        let Some(d) = self.degree() else {
            return Ok(Self::zero());
        };
        if n < d {
            return Err(Error::DegreeTooLarge {
                degree: d,
                bound: n + 1,
            });
        }
        let mut coeffs = vec![K::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    /// Maps every coefficient into another field.
    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Canonical text: descending powers of `var`, coefficients rendered by
    /// the field's own canonical text, `"0"` for the zero polynomial.
    pub fn to_text(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag, compound) = c.term_text();
            let body = match i {
                0 => mag,
                _ => {
                    let mono = if i == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{i}")
                    };
                    if mag == "1" {
                        mono
                    } else if compound {
                        format!("({mag})*{mono}")
                    } else {
                        format!("{mag}*{mono}")
                    }
                }
            };
            match (out.is_empty(), neg) {
                (true, false) => out.push_str(&body),
                (true, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Poly<Rational> {
    /// Divides by the leading coefficient. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Lowest power of the variable with a nonzero coefficient.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the lowest `k` coefficients (division by `x^k`).
    pub fn unshift(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Monic greatest common divisor over Q. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        // Powers of the variable are split off first; they are ubiquitous in
        // q-power identities and cheap to handle exactly.
        let v = self.valuation().min(other.valuation());
        let mut a = self.unshift(self.valuation()).monic();
        let mut b = other.unshift(other.valuation()).monic();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                a = Self::one();
                break;
            }
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic().shift(v)
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QRatFunc;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    fn q() -> QRatFunc {
        QRatFunc::q()
    }

    #[test]
    fn basic_products() {
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1])), p(&[-1, 0, 1]));
        assert_eq!(p(&[-1, 1]).pow(0), Poly::one());
        // (1 - x)(1 - q x) = q x^2 - (1 + q) x + 1
        let one = QRatFunc::one();
        let a = Poly::linear(one.clone(), one.neg());
        let b = Poly::linear(one.clone(), q().neg());
        let expected = Poly::new(vec![one.clone(), one.add(&q()).neg(), q()]);
        assert_eq!(a.mul(&b), expected);
    }

    #[test]
    fn trimming() {
        assert!(p(&[0, 0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(p(&[1, 1]).sub(&p(&[0, 1])), p(&[1]));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(1), p(&[0, 0, 3]));
        assert!(p(&[0, 0, 0, 1]).derivative(4).is_zero());
        assert_eq!(p(&[1, 1, 1, 1]).derivative(2), p(&[2, 6]));
        // (x - q)^2 -> 2x - 2q
        let one = QRatFunc::one();
        let xq = Poly::linear(q().neg(), one.clone()).pow(2);
        let two = QRatFunc::from_i64(2);
        assert_eq!(
            xq.derivative(1),
            Poly::linear(q().mul(&two).neg(), two.clone())
        );
    }

    #[test]
    fn evaluation() {
        assert!(p(&[-1, 0, 1]).eval(&Rational::one()).is_zero());
        let one = QRatFunc::one();
        let poch2 = Poly::linear(one.clone(), one.neg()).mul(&Poly::linear(one.clone(), q().neg()));
        assert!(poch2.eval(&q().inv().unwrap()).is_zero());
        let xx = Poly::new(vec![one.clone(), one.clone(), one.clone()]);
        assert_eq!(xx.eval(&q()).canonical_text(), "q^2 + q + 1");
    }

    #[test]
    fn division() {
        let (qu, r) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(qu, p(&[1, 1]));
        assert!(r.is_zero());
        let (qu, r) = p(&[0, 1]).divrem(&p(&[0, 0, 1])).unwrap();
        assert!(qu.is_zero());
        assert_eq!(r, p(&[0, 1]));
        assert_eq!(p(&[1]).divrem(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn argument_scaling_and_reversal() {
        assert_eq!(p(&[1, 0, 1]).scale_arg(&Rational::one()), p(&[1, 0, 1]));
        assert_eq!(p(&[-1, 1]).reverse_to_x_power(1).unwrap(), p(&[1, -1]));
        assert_eq!(p(&[1]).reverse_to_x_power(2).unwrap(), p(&[0, 0, 1]));
        assert!(matches!(
            p(&[1, 1, 1]).reverse_to_x_power(1),
            Err(Error::DegreeTooLarge { .. })
        ));
        // x^2 (1 - q/x) = x^2 - q x
        let one = QRatFunc::one();
        let t = Poly::linear(one.clone(), q().neg());
        let r = t.reverse_to_x_power(2).unwrap();
        assert_eq!(r, Poly::new(vec![QRatFunc::zero(), q().neg(), one]));
        // (x;q)_1 at q^{-1} x
        let one = QRatFunc::one();
        let s = Poly::linear(one.clone(), one.neg()).scale_arg(&q().inv().unwrap());
        assert_eq!(s, Poly::linear(one, q().inv().unwrap().neg()));
    }

    #[test]
    fn gcd_over_q() {
        let a = p(&[-1, 0, 1]).mul(&p(&[0, 0, 1]));
        let b = p(&[1, 1]).mul(&p(&[0, 1]));
        assert_eq!(a.gcd(&b), p(&[0, 1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[3])), p(&[1]));
        assert_eq!(p(&[2, 4]).gcd(&Poly::zero()), Poly::new(vec![Rational::frac(1, 2), Rational::one()]));
    }

    #[test]
    fn text_rendering() {
        assert_eq!(p(&[1, -2, 0, 1]).to_text("x"), "x^3 - 2*x + 1");
        assert_eq!(p(&[-1, 1]).to_text("q"), "q - 1");
        assert_eq!(p(&[0, -1]).to_text("x"), "-x");
        assert_eq!(Poly::<Rational>::zero().to_text("x"), "0");
        let half = Poly::new(vec![Rational::frac(-1, 3), Rational::frac(1, 2)]);
        assert_eq!(half.to_text("x"), "(1/2)*x - 1/3");
        let one = QRatFunc::one();
        let poch2 = Poly::linear(one.clone(), one.neg()).mul(&Poly::linear(one, q().neg()));
        assert_eq!(poch2.to_text("x"), "q*x^2 - (q + 1)*x + 1");
    }
}
