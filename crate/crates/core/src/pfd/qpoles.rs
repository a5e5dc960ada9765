use super::{Decomposition, PoleSpec};
use crate::bell::bell_partition;
use crate::error::{Error, Result};
use crate::exact::{factorial, sign, Field};
use crate::poly::Poly;
use crate::qcomb::QComb;
use crate::ratfunc::RatFuncX;
use std::collections::BTreeMap;

/// Poles `q^0, q^{-1}, ..., q^{-n}` with multiplicity `m`.
pub fn q_pole_spec<K: Field>(qc: &QComb<K>, n: u32, m: u32) -> Result<PoleSpec<K>> {
    PoleSpec::new((0..=n as i64).map(|j| qc.q_pow(-j)).collect(), m)
}

/// `1/(x - q^{-j})^e = (-1)^e q^{je} / (1 - x q^j)^e`; returns `(-1)^e q^{je}`.
pub fn q_basis_factor<K: Field>(qc: &QComb<K>, j: usize, e: u32) -> K {
    sign::<K>(e as i64).mul(&qc.q_pow(j as i64 * e as i64))
}

/// `x_l = m (l-1)! sum_{i != j} q^{jl} / (1 - q^{j-i})^l` for `l = 1..=max_l`.
pub fn q_pole_x_sequence<K: Field>(qc: &QComb<K>, n: u32, j: u32, m: u32, max_l: usize) -> Vec<K> {
    let recips: Vec<K> = (0..=n)
        .filter(|&i| i != j)
        .map(|i| {
            let gap = K::one().sub(&qc.q_pow(j as i64 - i as i64));
            qc.q_pow(j as i64).div(&gap).expect("q is not a root of unity")
        })
        .collect();
    let mk = K::from_i64(m as i64);
    let mut powers = recips.clone();
    let mut out = Vec::with_capacity(max_l);
    for l in 1..=max_l {
        let s = powers.iter().fold(K::zero(), |acc, p| acc.add(p));
        out.push(mk.mul(&K::from_bigint(&factorial(l as u64 - 1))).mul(&s));
        for (p, r) in powers.iter_mut().zip(&recips) {
            *p = p.mul(r);
        }
    }
    out
}

/// The harmonic form of the first Bell argument:
/// `x_1 = q^j m / (1 - q) * (H_j(q) - q H_{n-j}(q^{-1}))`.
pub fn x1_harmonic_form<K: Field>(qc: &QComb<K>, n: u32, j: u32, m: u32) -> K {
    let h = qc
        .qharmonic(j)
        .sub(&qc.q().mul(&qc.qharmonic_inv(n - j)));
    let pre = qc
        .q_pow(j as i64)
        .mul(&K::from_i64(m as i64))
        .div(&K::one().sub(qc.q()))
        .expect("q != 1");
    pre.mul(&h)
}

/// Terms `sum c_{j,e} / (1 - x q^j)^e` over the poles `j = 0..=n`, each of
/// multiplicity up to `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct QBasisTerms<K> {
    pub n: u32,
    pub m: u32,
    terms: BTreeMap<(usize, u32), K>,
}

impl<K: Field> QBasisTerms<K> {
    pub fn new(n: u32, m: u32) -> Self {
        QBasisTerms {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

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

    pub fn scale(&self, c: &K) -> Self {
        let mut out = Self::new(self.n, self.m);
        for (j, e, v) in self.terms() {
            out.accumulate(j, e, v.mul(c));
        }
        out
    }

    /// The same function written over `1/(x - q^{-j})^e`.
    pub fn to_x_basis(&self, qc: &QComb<K>) -> Decomposition<K> {
        let mut out = Decomposition::new();
        for (j, e, c) in self.terms() {
            let f = q_basis_factor(qc, j, e).inv().expect("nonzero");
            out.accumulate(j, e, c.mul(&f));
        }
        out
    }

    pub fn from_x_basis(d: &Decomposition<K>, qc: &QComb<K>, n: u32, m: u32) -> Self {
        let mut out = Self::new(n, m);
        for (j, e, c) in d.terms() {
            out.accumulate(j, e, c.mul(&q_basis_factor(qc, j, e)));
        }
        out
    }

    /// Sums the terms over the common denominator `(x;q)_{n+1}^m`.
    pub fn to_ratfunc(&self, qc: &QComb<K>) -> RatFuncX<K> {
        let factors: Vec<Poly<K>> = (0..=self.n as i64)
            .map(|j| Poly::linear(K::one(), qc.q_pow(j).neg()))
            .collect();
        RatFuncX::from_pole_terms(&factors, self.m, self.terms().map(|(j, e, c)| (j, e, c.clone())))
    }
}

/// Closed form specialized to the poles `q^{-j}`: returns the terms of
/// `(q;q)_n^m Q(x) / (x;q)_{n+1}^m`, where the coefficient of
/// `1/(1 - x q^j)^{m-i-k}` collects
/// `[n j]^m q^{m C(j+1,2)} (-1)^{mj+i} B_k Q^{(i)}(q^{-j}) / (i! k! q^{j(i+k)})`.
pub fn theorem_q_terms<K: Field>(qc: &QComb<K>, q: &Poly<K>, n: u32, m: u32) -> Result<QBasisTerms<K>> {
    let bound = ((n + 1) * m) as usize;
    if let Some(d) = q.degree() {
        if d >= bound {
            return Err(Error::DegreeTooLarge { degree: d, bound });
        }
    }
    if m == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let mu = m as usize;
    let derivs: Vec<Poly<K>> = (0..mu).map(|i| q.derivative(i)).collect();
    let inv_fact: Vec<K> = (0..mu)
        .map(|i| K::from_bigint(&factorial(i as u64)).inv().expect("nonzero"))
        .collect();
    let mut out = QBasisTerms::new(n, m);
    for j in 0..=n {
        let ji = j as i64;
        let pre = qc
            .qbinomial(n, ji)
            .pow(m as u64)
            .mul(&qc.q_pow(m as i64 * ji * (ji + 1) / 2));
        let xs = q_pole_x_sequence(qc, n, j, m, mu - 1);
        let bells: Vec<K> = (0..mu)
            .map(|k| bell_partition(k, &xs).mul(&inv_fact[k]))
            .collect();
        let pole = qc.q_pow(-ji);
        for i in 0..mu {
            let v = derivs[i].eval(&pole);
            if v.is_zero() {
                continue;
            }
            let v = v.mul(&inv_fact[i]).mul(&sign(m as i64 * ji + i as i64));
            for k in 0..mu - i {
                let c = pre
                    .mul(&bells[k])
                    .mul(&v)
                    .mul(&qc.q_pow(-ji * (i + k) as i64));
                out.accumulate(j as usize, (mu - i - k) as u32, c);
            }
        }
    }
    Ok(out)
}

/// Decomposition of `Q / prod_j (x - q^{-j})^m` computed through the
/// q-specialized closed form.
pub fn decompose_q<K: Field>(qc: &QComb<K>, q: &Poly<K>, n: u32, m: u32) -> Result<Decomposition<K>> {
    let t = theorem_q_terms(qc, q, n, m)?;
    // (x;q)_{n+1} = (-1)^{n+1} q^{C(n+1,2)} prod_j (x - q^{-j})
    let n1 = n as i64 + 1;
    let kappa = sign::<K>(n1 * m as i64).mul(&qc.q_pow(m as i64 * n1 * (n1 - 1) / 2));
    let scale = kappa.div(&qc.qfactorial(n).pow(m as u64))?;
    Ok(t.scale(&scale).to_x_basis(qc))
}
