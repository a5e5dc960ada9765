//! Scalar sums: the limiting case of the q-pole decomposition and the
//! identities obtained from it by fixing `m` and `Q`.

use super::check::random_qpoly;
use super::pfd_ids::harmonic_gap;
use super::{c2, n_params, nl_params, Checker, Grid, Params};
use crate::bell::bell_partition;
use crate::error::Result;
use crate::exact::{factorial, sign, Field};
use crate::pfd::q_pole_x_sequence;

pub(crate) fn n_upto_10(grid: &Grid) -> Vec<Params> {
    n_params(grid, 0, 10)
}

pub(crate) fn nl_upto_8(grid: &Grid) -> Vec<Params> {
    nl_params(grid, 1, 8, 0)
}

pub(crate) fn nl_upto_10(grid: &Grid) -> Vec<Params> {
    nl_params(grid, 1, 10, 0)
}

pub(crate) fn n_from_1_upto_6(grid: &Grid) -> Vec<Params> {
    n_params(grid, 1, 6)
}

pub(crate) fn limit_instances(grid: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for n in grid.n_range(0, 6) {
        for m in grid.m_range(3) {
            for l in (0..m * (n + 1)).filter(|&l| grid.l_allowed(l)) {
                out.push(
                    Params::new()
                        .with("n", n)
                        .with("m", m)
                        .with("l", l)
                        .with("seed", grid.seed),
                );
            }
        }
    }
    out
}

pub(crate) fn m2_sum_instances(grid: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for n in grid.n_range(0, 6) {
        for l in (0..=2 * n + 1).filter(|&l| grid.l_allowed(l)) {
            out.push(Params::new().with("n", n).with("l", l).with("seed", grid.seed));
        }
    }
    out
}

pub(crate) fn limit_sum<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, m, l) = (p.u("n"), p.u("m"), p.u("l"));
    let qc = c.qc();
    let mut rng = c.rng("limit", &[n as u64, m as u64, l as u64]);
    let q = random_qpoly(&mut rng, qc, l as usize);
    c.context(format!("Q = {}", q.to_text("x")));
    let mu = m as usize;
    let derivs: Vec<_> = (0..mu).map(|i| q.derivative(i)).collect();
    let fact = |k: usize| K::from_bigint(&factorial(k as u64));
    let mut total = K::zero();
    for j in 0..=n {
        let ji = j as i64;
        let pre = qc
            .qbinomial(n, ji)
            .pow(m as u64)
            .mul(&qc.q_pow(m as i64 * c2(ji)));
        let xs = q_pole_x_sequence(qc, n, j, m, mu - 1);
        let pole = qc.q_pow(-ji);
        for (i, d) in derivs.iter().enumerate() {
            let k = mu - 1 - i;
            let v = sign::<K>(m as i64 * ji + i as i64 + 1)
                .mul(&bell_partition(k, &xs))
                .mul(&d.eval(&pole))
                .div(&fact(i).mul(&fact(k)))?;
            total = total.add(&pre.mul(&v));
        }
    }
    let top = m * (n + 1) - 1;
    let rhs = if l < top {
        K::zero()
    } else {
        let ni = n as i64;
        sign::<K>(m as i64 * (ni + 1))
            .mul(&qc.qfactorial(n).pow(m as u64))
            .mul(&qc.q_pow(-(m as i64) * c2(ni + 1)))
            .mul(q.leading().expect("nonzero"))
    };
    c.scalar("limiting weighted Bell sum", &total, &rhs);
    Ok(())
}

pub(crate) fn cor_m1_sum<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, l) = (p.u("n"), p.u("l"));
    let qc = c.qc();
    let mut rng = c.rng("m1sum", &[n as u64, l as u64]);
    let q = random_qpoly(&mut rng, qc, l as usize);
    c.context(format!("Q = {}", q.to_text("x")));
    let total = (0..=n).fold(K::zero(), |acc, j| {
        let ji = j as i64;
        let t = qc
            .qbinomial(n, ji)
            .mul(&qc.q_pow(c2(ji)))
            .mul(&sign(ji))
            .mul(&q.eval(&qc.q_pow(-ji)));
        acc.add(&t)
    });
    let ni = n as i64;
    let rhs = if l < n {
        K::zero()
    } else {
        sign::<K>(ni)
            .mul(&qc.qfactorial(n))
            .mul(&qc.q_pow(-c2(ni + 1)))
            .mul(q.leading().expect("nonzero"))
    };
    c.scalar("simple-pole limiting sum", &total, &rhs);
    Ok(())
}

pub(crate) fn q_euler<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, l) = (p.u("n"), p.u("l"));
    let qc = c.qc();
    let (ni, li) = (n as i64, l as i64);
    let total = (0..=n).fold(K::zero(), |acc, j| {
        let ji = j as i64;
        let t = qc
            .qbinomial(n, ji)
            .mul(&qc.q_pow(c2(ji) - ji * li))
            .mul(&sign(ji))
            .mul(&qc.qnumber(ji).pow(l as u64));
        acc.add(&t)
    });
    let rhs = if l < n {
        K::zero()
    } else {
        sign::<K>(ni)
            .mul(&qc.qfactorial(n))
            .div(&K::one().sub(qc.q()).pow(n as u64))?
            .mul(&qc.q_pow(-c2(ni + 1)))
    };
    c.scalar("q-analogue of Euler's finite-difference formula", &total, &rhs);
    Ok(())
}

pub(crate) fn cor_m2_sum<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, l) = (p.u("n"), p.u("l"));
    let qc = c.qc();
    let mut rng = c.rng("m2sum", &[n as u64, l as u64]);
    let q = random_qpoly(&mut rng, qc, l as usize);
    c.context(format!("Q = {}", q.to_text("x")));
    let dq = q.derivative(1);
    let mut total = K::zero();
    for j in 0..=n {
        let ji = j as i64;
        let pole = qc.q_pow(-ji);
        let h = harmonic_gap(qc, n, j)?;
        let inner = dq.eval(&pole).sub(
            &K::from_i64(2)
                .mul(&qc.q_pow(ji))
                .mul(&q.eval(&pole))
                .mul(&h),
        );
        let w = qc.qbinomial(n, ji).pow(2).mul(&qc.q_pow(ji * (ji - 1)));
        total = total.add(&w.mul(&inner));
    }
    let ni = n as i64;
    let rhs = if l < 2 * n + 1 {
        K::zero()
    } else {
        qc.qfactorial(n)
            .pow(2)
            .mul(&qc.q_pow(-ni * (ni + 1)))
            .mul(q.leading().expect("nonzero"))
    };
    c.scalar("double-pole limiting sum", &total, &rhs);
    Ok(())
}

pub(crate) fn harmonic_square_sum<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n");
    let qc = c.qc();
    let total = (0..=n).fold(K::zero(), |acc, j| {
        let ji = j as i64;
        let h = qc
            .qharmonic(j)
            .sub(&qc.q().mul(&qc.qharmonic_inv(n - j)));
        acc.add(&qc.qbinomial(n, ji).pow(2).mul(&qc.q_pow(ji * ji)).mul(&h))
    });
    c.scalar("unit-numerator harmonic sum vanishes", &total, &K::zero());
    Ok(())
}

/// Name of the variant whose last harmonic term carries the `[j]` factor.
pub const VARIANT_WITH_BRACKET: &str = "2q[j]H_{n-j}(1/q)";
/// Name of the variant exactly as printed.
pub const VARIANT_AS_PRINTED: &str = "2qH_{n-j}(1/q)";

pub(crate) fn qapery_harmonic_variant<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n");
    let qc = c.qc();
    let q = qc.q();
    let ni = n as i64;
    let mut printed = K::zero();
    let mut bracketed = K::zero();
    for j in 0..=n {
        let ji = j as i64;
        let bj = qc.qnumber(ji);
        let w = qc
            .qbinomial(n, ji)
            .mul(&qc.qbinomial(n + j, ji))
            .pow(2)
            .mul(&qc.q_pow(ji * (ji - 1) - 2 * ni * ji));
        let common = K::one()
            .add(&K::from_i64(2).mul(&bj).mul(&qc.qharmonic(n + j)))
            .sub(&K::from_i64(4).mul(&bj).mul(&qc.qharmonic(j)));
        let last = K::from_i64(2).mul(q).mul(&qc.qharmonic_inv(n - j));
        printed = printed.add(&w.mul(&common.add(&last)));
        bracketed = bracketed.add(&w.mul(&common.add(&last.mul(&bj))));
    }
    let rhs = qc.q_pow(-ni * (ni + 1));
    let a = printed == rhs;
    let b = bracketed == rhs;
    c.flag("exactly one variant holds", a != b);
    let holding = match (a, b) {
        (true, false) => VARIANT_AS_PRINTED,
        (false, true) => VARIANT_WITH_BRACKET,
        (true, true) => "both",
        (false, false) => "neither",
    };
    c.note(format!("holding variant: {holding}"));
    Ok(())
}
