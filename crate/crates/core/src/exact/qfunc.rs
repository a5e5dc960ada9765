use super::{Field, Rational};
use crate::error::{Error, Result};
use crate::poly::Poly;
use std::fmt;

/// Element of the rational-function field Q(q).
///
/// Always stored canonically: `den` is monic, `gcd(num, den) = 1`, and zero
/// is `0/1`. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRatFunc {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl QRatFunc {
    /// Builds `num/den` and reduces it to canonical form.
    pub fn from_parts(num: Poly<Rational>, den: Poly<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (exact(&num, &g), exact(&den, &g))
        };
        Ok(Self::normalized(num, den))
    }

    /// Makes an already-coprime pair monic in the denominator.
    fn normalized(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            QRatFunc { num, den }
        } else {
            let inv = lead.inv().expect("nonzero");
            QRatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(num: Poly<Rational>) -> Self {
        QRatFunc {
            num,
            den: Poly::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(Poly::x())
    }

    /// `q^e` for a signed exponent.
    pub fn q_pow(e: i64) -> Self {
        let mono = Poly::monomial(Rational::one(), e.unsigned_abs() as usize);
        if e >= 0 {
            Self::from_poly(mono)
        } else {
            QRatFunc {
                num: Poly::one(),
                den: mono,
            }
        }
    }

    pub fn numer(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<Rational> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Exact value at `q = v`.
    pub fn eval_at_q(&self, v: &Rational) -> Result<Rational> {
        let d = self.den.eval(v);
        if d.is_zero() {
            return Err(Error::PoleAtSample(v.to_string()));
        }
        self.num.eval(v).div(&d)
    }

    /// Image under the field automorphism `q -> 1/q`.
    pub fn subst_q_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let rn = self.num.reverse_to_x_power(dn).expect("exact degree");
        let rd = self.den.reverse_to_x_power(dd).expect("exact degree");
        let (num, den) = if dd >= dn {
            (rn.shift(dd - dn), rd)
        } else {
            (rn, rd.shift(dn - dd))
        };
        Self::from_parts(num, den).expect("nonzero denominator")
    }
}

fn exact(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    a.exact_div(b).expect("divisor of a gcd divides exactly")
}

impl Field for QRatFunc {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let t = self.num.add(&rhs.num);
            if self.den.is_one() {
                return Self::from_poly(t);
            }
            return Self::from_parts(t, self.den.clone()).expect("nonzero denominator");
        }
        // Henrici: only the shared part of the denominators can cancel.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            return Self::normalized(num, self.den.mul(&rhs.den));
        }
        let b1 = exact(&self.den, &g);
        let d1 = exact(&rhs.den, &g);
        let t = self.num.mul(&d1).add(&rhs.num.mul(&b1));
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = t.gcd(&g);
        let (t, gd) = if g2.is_one() {
            (t, g)
        } else {
            (exact(&t, &g2), exact(&g, &g2))
        };
        Self::normalized(t, b1.mul(&d1).mul(&gd))
    }

    fn neg(&self) -> Self {
        QRatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (exact(&self.num, &g1), exact(&rhs.den, &g1))
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (exact(&rhs.num, &g2), exact(&self.den, &g2))
        };
        Self::normalized(a.mul(&c), b.mul(&d))
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    fn from_rational(r: &Rational) -> Self {
        Self::from_poly(Poly::constant(r.clone()))
    }

    fn specialize_q(&self, v: &Rational) -> Result<Rational> {
        self.eval_at_q(v)
    }

    fn has_symbolic_q() -> bool {
        true
    }

    fn size_hint(&self) -> usize {
        let bits = |p: &Poly<Rational>| -> usize {
            p.coeffs()
                .iter()
                .map(|c| (c.numer().bits() + c.denom().bits()) as usize)
                .sum()
        };
        bits(&self.num) + bits(&self.den)
    }

    fn canonical_text(&self) -> String {
        let n = self.num.to_text("q");
        if self.den.is_one() {
            return n;
        }
        let d = self.den.to_text("q");
        let n = if self.num.term_count() > 1 {
            format!("({n})")
        } else {
            n
        };
        let d = if self.den.term_count() > 1 {
            format!("({d})")
        } else {
            d
        };
        format!("{n}/{d}")
    }

    fn term_text(&self) -> (bool, String, bool) {
        let negative = self.num.leading().is_some_and(|c| c.is_negative());
        let mag = if negative {
            Field::neg(self).canonical_text()
        } else {
            self.canonical_text()
        };
        let compound = mag.contains(' ') || mag.contains('/') || mag.contains('*');
        (negative, mag, compound)
    }
}

impl fmt::Display for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

impl fmt::Debug for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

impl From<Rational> for QRatFunc {
    fn from(r: Rational) -> Self {
        Self::from_rational(&r)
    }
}
