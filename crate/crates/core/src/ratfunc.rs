//! Rational functions in `x` over an exact field, kept unreduced.
//!
//! Equality is decided by cross-multiplication, so no polynomial gcd over
//! the coefficient field is ever needed.

use crate::error::{Error, Result};
use crate::exact::Field;
use crate::poly::Poly;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct RatFuncX<K> {
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: Field> RatFuncX<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFuncX { num, den })
    }

    pub fn from_poly(num: Poly<K>) -> Self {
        RatFuncX {
            num,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn numer(&self) -> &Poly<K> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatFuncX {
                num: self.num.add(&rhs.num),
                den: self.den.clone(),
            };
        }
        RatFuncX {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
    }

    pub fn neg(&self) -> Self {
        RatFuncX {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RatFuncX {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        RatFuncX {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Numerator over `target`, provided the current denominator divides it.
    pub fn rebase(&self, target: &Poly<K>) -> Option<Poly<K>> {
        let k = target.exact_div(&self.den)?;
        Some(self.num.mul(&k))
    }

    /// Cross-multiplication equality `a/b = c/d  <=>  a d - c b = 0`.
    pub fn equals(&self, rhs: &Self) -> bool {
        if self.den == rhs.den {
            return self.num == rhs.num;
        }
        // When one denominator divides the other, compare over the larger.
        let (small, large) = if self.den.degree() <= rhs.den.degree() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if let Some(k) = large.den.exact_div(&small.den) {
            return small.num.mul(&k) == large.num;
        }
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }

    /// `self - rhs` over the product denominator.
    pub fn residual(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatFuncX {
                num: self.num.sub(&rhs.num),
                den: self.den.clone(),
            };
        }
        RatFuncX {
            num: self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
    }

    pub fn eval(&self, x: &K) -> Result<K> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtSample(x.canonical_text()));
        }
        self.num.eval(x).div(&d)
    }

    /// Maps both numerator and denominator coefficient-wise (e.g. a
    /// specialization of `q`).
    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Result<RatFuncX<L>> {
        RatFuncX::new(self.num.map(&f), self.den.map(&f))
    }

    /// Builds `sum c / f_j^e` over the common denominator `prod_j f_j^m`.
    ///
    /// `terms` yields `(j, e, c)` with `1 <= e <= m`.
    pub fn from_pole_terms<I>(factors: &[Poly<K>], m: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, u32, K)>,
    {
        let powers: Vec<Vec<Poly<K>>> = factors
            .iter()
            .map(|f| {
                let mut v = vec![Poly::one()];
                for e in 1..=m as usize {
                    let next = v[e - 1].mul(f);
                    v.push(next);
                }
                v
            })
            .collect();
        // cofactor[j] = prod_{i != j} f_i^m
        let cofactors: Vec<Poly<K>> = (0..factors.len())
            .map(|j| {
                (0..factors.len())
                    .filter(|&i| i != j)
                    .fold(Poly::one(), |acc, i| acc.mul(&powers[i][m as usize]))
            })
            .collect();
        let den = cofactors
            .first()
            .map(|c| c.mul(&powers[0][m as usize]))
            .unwrap_or_else(Poly::one);
        let mut num = Poly::zero();
        for (j, e, c) in terms {
            assert!(e >= 1 && e <= m, "pole power out of range");
            if c.is_zero() {
                continue;
            }
            let part = cofactors[j].mul(&powers[j][(m - e) as usize]).scale(&c);
            num = num.add(&part);
        }
        RatFuncX { num, den }
    }

    pub fn to_text(&self) -> String {
        format!("({})/({})", self.num.to_text("x"), self.den.to_text("x"))
    }
}

impl<K: Field> fmt::Debug for RatFuncX<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
