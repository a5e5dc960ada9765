//! q-numbers, q-shifted factorials, Gaussian binomials, q-harmonic numbers
//! and (q-)Apéry numbers.
//!
//! A [`QComb`] fixes the value of `q` (the indeterminate itself, or an exact
//! rational sample) and memoizes the scalar tables that identity sweeps
//! revisit constantly.

use crate::error::{Error, Result};
use crate::exact::{binomial, Field, QRatFunc, Rational};
use crate::poly::Poly;
use crate::ratfunc::RatFuncX;
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::RwLock;

pub struct QComb<K: Field> {
    q: K,
    q_inv: K,
    factorials: RwLock<Vec<K>>,
    binomials: RwLock<HashMap<(u32, u32), K>>,
    harmonic: RwLock<Vec<K>>,
    harmonic_inv: RwLock<Vec<K>>,
}

impl QComb<QRatFunc> {
    /// `q` is the indeterminate of Q(q).
    pub fn symbolic() -> Self {
        Self::with_q(QRatFunc::q()).expect("q is invertible")
    }
}

impl QComb<Rational> {
    /// `q` specialized to an exact nonzero rational.
    pub fn numeric(q: Rational) -> Result<Self> {
        Self::with_q(q)
    }
}

impl<K: Field> QComb<K> {
    pub fn with_q(q: K) -> Result<Self> {
        let q_inv = q.inv()?;
        Ok(QComb {
            q,
            q_inv,
            factorials: RwLock::new(vec![K::one()]),
            binomials: RwLock::new(HashMap::new()),
            harmonic: RwLock::new(vec![K::zero()]),
            harmonic_inv: RwLock::new(vec![K::zero()]),
        })
    }

    pub fn q(&self) -> &K {
        &self.q
    }

    /// `q^e` for a signed exponent.
    pub fn q_pow(&self, e: i64) -> K {
        if e >= 0 {
            self.q.pow(e as u64)
        } else {
            self.q_inv.pow(e.unsigned_abs())
        }
    }

    /// `[k]_q = (1 - q^k)/(1 - q)`; for `k >= 1` this is `1 + q + ... + q^(k-1)`
    /// and `[-k] = -q^(-k) [k]`.
    pub fn qnumber(&self, k: i64) -> K {
        if k >= 0 {
            let mut acc = K::zero();
            let mut pw = K::one();
            for _ in 0..k {
                acc = acc.add(&pw);
                pw = pw.mul(&self.q);
            }
            acc
        } else {
            self.qnumber(-k).mul(&self.q_pow(k)).neg()
        }
    }

    /// `(x;q)_n` as a polynomial in `x`.
    pub fn qpochhammer(&self, n: u32) -> Poly<K> {
        (0..n).fold(Poly::one(), |acc, i| {
            acc.mul(&Poly::linear(K::one(), self.q_pow(i as i64).neg()))
        })
    }

    /// The scalar `(a;q)_n`.
    pub fn qpochhammer_at(&self, a: &K, n: u32) -> K {
        let mut acc = K::one();
        let mut t = a.clone();
        for _ in 0..n {
            acc = acc.mul(&K::one().sub(&t));
            t = t.mul(&self.q);
        }
        acc
    }

    /// `(q;q)_n`.
    pub fn qfactorial(&self, n: u32) -> K {
        let n = n as usize;
        if let Some(v) = self.factorials.read().unwrap().get(n) {
            return v.clone();
        }
        let mut table = self.factorials.write().unwrap();
        while table.len() <= n {
            let k = table.len() as i64;
            let next = table[table.len() - 1].mul(&K::one().sub(&self.q_pow(k)));
            table.push(next);
        }
        table[n].clone()
    }

    /// Gaussian binomial `[n j]`, zero outside `0 <= j <= n`. Computed from
    /// the defining quotient of q-factorials.
    pub fn qbinomial(&self, n: u32, j: i64) -> K {
        if j < 0 || j > n as i64 {
            return K::zero();
        }
        let j = j as u32;
        if let Some(v) = self.binomials.read().unwrap().get(&(n, j)) {
            return v.clone();
        }
        let den = self.qfactorial(j).mul(&self.qfactorial(n - j));
        let v = self
            .qfactorial(n)
            .div(&den)
            .expect("q is not a root of unity");
        self.binomials.write().unwrap().insert((n, j), v.clone());
        v
    }

    /// `H_n(q) = sum_{k=1}^n 1/[k]_q`.
    pub fn qharmonic(&self, n: u32) -> K {
        self.harmonic_table(n, false)
    }

    /// `H_n(q^{-1})`, i.e. the harmonic sum with every `[k]` taken at `1/q`.
    pub fn qharmonic_inv(&self, n: u32) -> K {
        self.harmonic_table(n, true)
    }

    fn harmonic_table(&self, n: u32, inverted: bool) -> K {
        let lock = if inverted {
            &self.harmonic_inv
        } else {
            &self.harmonic
        };
        let n = n as usize;
        if let Some(v) = lock.read().unwrap().get(n) {
            return v.clone();
        }
        let mut table = lock.write().unwrap();
        while table.len() <= n {
            let k = table.len() as i64;
            let bracket = if inverted {
                // [k]_{1/q} = q^{1-k} [k]_q
                self.qnumber(k).mul(&self.q_pow(1 - k))
            } else {
                self.qnumber(k)
            };
            let term = bracket.inv().expect("q is not a root of unity");
            let next = table[table.len() - 1].add(&term);
            table.push(next);
        }
        table[n].clone()
    }

    /// `H_{n,q}(x) = sum_{i=1}^n q^i/(1 - x q^i)` over the common denominator
    /// `prod_{i=1}^n (1 - x q^i)`.
    pub fn gen_harmonic_x(&self, n: u32) -> GenHarmonicX<K> {
        let factors: Vec<Poly<K>> = (1..=n)
            .map(|i| Poly::linear(K::one(), self.q_pow(i as i64).neg()))
            .collect();
        let den = factors.iter().fold(Poly::one(), |acc, f| acc.mul(f));
        let mut num = Poly::zero();
        for i in 0..factors.len() {
            let cof = factors
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != i)
                .fold(Poly::one(), |acc, (_, f)| acc.mul(f));
            num = num.add(&cof.scale(&self.q_pow(i as i64 + 1)));
        }
        GenHarmonicX { n, num, den }
    }

    /// Zheng-normalized q-Apéry sum `sum_k q^{k(k-2n)} [n k]^2 [n+k k]^2`.
    pub fn q_apery_zheng(&self, n: u32) -> K {
        let n_i = n as i64;
        (0..=n).fold(K::zero(), |acc, k| {
            let k_i = k as i64;
            let t = self
                .qbinomial(n, k_i)
                .mul(&self.qbinomial(n + k, k_i))
                .pow(2)
                .mul(&self.q_pow(k_i * (k_i - 2 * n_i)));
            acc.add(&t)
        })
    }

    /// Straub-normalized sum `sum_k q^{(n-k)^2} [n k]^2 [n+k k]^2`.
    pub fn q_apery_straub(&self, n: u32) -> K {
        let n_i = n as i64;
        (0..=n).fold(K::zero(), |acc, k| {
            let k_i = k as i64;
            let t = self
                .qbinomial(n, k_i)
                .mul(&self.qbinomial(n + k, k_i))
                .pow(2)
                .mul(&self.q_pow((n_i - k_i).pow(2)));
            acc.add(&t)
        })
    }
}

/// `H_{n,q}(x)` stored as `num / den` with `den = prod_{i=1}^n (1 - x q^i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenHarmonicX<K: Field> {
    pub n: u32,
    pub num: Poly<K>,
    pub den: Poly<K>,
}

impl<K: Field> GenHarmonicX<K> {
    pub fn to_ratfunc(&self) -> RatFuncX<K> {
        RatFuncX::new(self.num.clone(), self.den.clone()).expect("nonzero product")
    }
}

/// Classical Apéry number `sum_k C(n,k)^2 C(n+k,k)^2`.
pub fn apery(n: u64) -> BigInt {
    (0..=n)
        .map(|k| {
            let t = binomial(n, k) * binomial(n + k, k);
            &t * &t
        })
        .sum()
}

/// Classical harmonic number `H_n = sum_{k=1}^n 1/k`.
pub fn harmonic(n: u64) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, k| {
        acc.add(&Rational::frac(1, k as i64))
    })
}

/// Rejects sample values of `q` at which q-denominators can vanish: `0`,
/// and any `q` with `q^k = 1` for some `1 <= k <= max_order`.
pub fn validate_numeric_q(q: &Rational, max_order: u32) -> Result<()> {
    if q.is_zero() {
        return Err(Error::InvalidConfig("q must be nonzero".into()));
    }
    let mut pw = Rational::one();
    for k in 1..=max_order {
        pw = pw.mul(q);
        if pw.is_one() {
            return Err(Error::InvalidConfig(format!(
                "q = {q} is a root of unity of order {k}"
            )));
        }
    }
    Ok(())
}
