//! q-free identities over Q: Euler's finite-difference formula, Apéry
//! numbers, the Ahlgren-Ono harmonic sum and Chu's rational-function
//! identity.

use super::{Checker, Params};
use crate::error::Result;
use crate::exact::{binomial, factorial, sign, Field, Rational};
use crate::poly::Poly;
use crate::qcomb::{apery, harmonic};
use crate::ratfunc::RatFuncX;

fn big(n: u64, k: u64) -> Rational {
    Rational::from_bigint(binomial(n, k))
}

pub(crate) fn euler_classical<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, l) = (p.u("n") as u64, p.u("l") as u64);
    let total = (0..=n).fold(Rational::zero(), |acc, j| {
        let t = big(n, j)
            .mul(&sign(j as i64))
            .mul(&Rational::from_i64(j as i64).pow(l));
        acc.add(&t)
    });
    let rhs = if l < n {
        Rational::zero()
    } else {
        sign::<Rational>(n as i64).mul(&Rational::from_bigint(factorial(n)))
    };
    c.scalar("Euler's finite-difference formula", &total, &rhs);
    Ok(())
}

pub(crate) fn apery_numbers<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n") as usize;
    // n^3 u_n = (34n^3 - 51n^2 + 27n - 5) u_{n-1} - (n-1)^3 u_{n-2}
    let mut u = vec![Rational::one(), Rational::from_i64(5)];
    for k in 2..=n as i64 {
        let a = Rational::from_i64(34 * k.pow(3) - 51 * k * k + 27 * k - 5);
        let b = Rational::from_i64((k - 1).pow(3));
        let next = a
            .mul(&u[k as usize - 1])
            .sub(&b.mul(&u[k as usize - 2]))
            .div(&Rational::from_i64(k.pow(3)))?;
        u.push(next);
    }
    let direct = Rational::from_bigint(apery(n as u64));
    c.scalar("direct sum = three-term recurrence", &direct, &u[n]);
    if n < 4 {
        let table = [1, 5, 73, 1445];
        c.scalar("tabulated value", &direct, &Rational::from_i64(table[n]));
    }
    Ok(())
}

pub(crate) fn ahlgren_ono<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n") as u64;
    let mut total = Rational::zero();
    for k in 1..=n {
        let w = big(n, k).mul(&big(n + k, k)).pow(2);
        let two_k = Rational::from_i64(2 * k as i64);
        let h = Rational::one()
            .add(&two_k.mul(&harmonic(n + k)))
            .add(&two_k.mul(&harmonic(n - k)))
            .sub(&two_k.mul(&Rational::from_i64(2)).mul(&harmonic(k)));
        total = total.add(&w.mul(&h));
    }
    c.scalar("harmonic Apery sum vanishes", &total, &Rational::zero());
    Ok(())
}

pub(crate) fn chu<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n") as u64;
    let r = |v: i64| Rational::from_i64(v);
    let factors: Vec<Poly<Rational>> = (0..=n as i64)
        .map(|j| Poly::linear(r(j), r(1)))
        .collect();
    let mut terms = Vec::new();
    for j in 0..=n {
        let w = big(n, j).mul(&big(n + j, j)).pow(2);
        let two_j = r(2 * j as i64);
        let hk = harmonic(j);
        let simple = Rational::one()
            .add(&two_j.mul(&harmonic(n + j).sub(&hk)))
            .add(&two_j.mul(&harmonic(n - j).sub(&hk)));
        terms.push((j as usize, 2, w.mul(&r(-(j as i64)))));
        terms.push((j as usize, 1, w.mul(&simple)));
    }
    let lhs = RatFuncX::from_pole_terms(&factors, 2, terms);
    // x (1-x)_n^2 / (x)_{n+1}^2 with rising factorials
    let rising_one_minus_x = (0..n as i64).fold(Poly::one(), |acc, i| {
        acc.mul(&Poly::linear(r(1 + i), r(-1)))
    });
    let rising_x = factors.iter().fold(Poly::one(), |acc, f| acc.mul(f));
    let rhs = RatFuncX::new(
        Poly::x().mul(&rising_one_minus_x.pow(2)),
        rising_x.pow(2),
    )?;
    c.ratfunc("Chu's identity", &lhs, &rhs);
    Ok(())
}
