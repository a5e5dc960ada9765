//! Identities obtained from the simple-pole decomposition with numerators
//! of the form `prod (x - y q^i)`: the `y`-family, its `y = q` case and the
//! generalized harmonic extension.

use super::{c2, nl_params, Checker, Grid, Params};
use crate::error::{Error, Result};
use crate::exact::{sign, Field, Rational};
use crate::pfd::QBasisTerms;
use crate::poly::Poly;
use crate::qcomb::QComb;
use crate::ratfunc::RatFuncX;

pub(crate) fn y_instances(grid: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for n in grid.n_range(0, 6) {
        for mode in ["rational", "q_power"] {
            out.push(Params::new().with("n", n).with("y_mode", mode));
        }
    }
    out
}

pub(crate) fn nl_positive(grid: &Grid) -> Vec<Params> {
    nl_params(grid, 1, 8, 1)
}

pub(crate) fn harmonic_x_instances(grid: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for n in grid.n_range(1, 5) {
        for m in 1..=n {
            if grid.m_max.is_none_or(|cap| m <= cap) {
                out.push(Params::new().with("n", n).with("m", m));
            }
        }
    }
    out
}

/// `(q;q)_n prod_{i<n} (x - y q^i) / (x;q)_{n+1}`.
fn y_rhs<K: Field>(qc: &QComb<K>, n: u32, y: &K) -> Result<RatFuncX<K>> {
    let num = (0..n as i64).fold(Poly::one(), |acc, i| {
        acc.mul(&Poly::linear(y.mul(&qc.q_pow(i)).neg(), K::one()))
    });
    RatFuncX::new(num.scale(&qc.qfactorial(n)), qc.qpochhammer(n + 1))
}

/// `sum_j (-1)^j [n j] q^{C(j+1,2) - jn} (y;q)_{n+j} / ((y;q)_j (1 - x q^j))`.
fn y_lhs<K: Field>(qc: &QComb<K>, n: u32, y: &K) -> Result<RatFuncX<K>> {
    let ni = n as i64;
    let mut t = QBasisTerms::new(n, 1);
    for j in 0..=n {
        let ji = j as i64;
        let ratio = qc
            .qpochhammer_at(y, n + j)
            .div(&qc.qpochhammer_at(y, j))?;
        let v = sign::<K>(ji)
            .mul(&qc.qbinomial(n, ji))
            .mul(&qc.q_pow(c2(ji + 1) - ji * ni))
            .mul(&ratio);
        t.accumulate(j as usize, 1, v);
    }
    Ok(t.to_ratfunc(qc))
}

pub(crate) fn y_family<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n");
    let qc = c.qc();
    let wanted = 2 * n as usize + 2;
    let mut used = 0usize;
    let mut seen: Vec<K> = Vec::new();
    let mut t = 0i64;
    while used < wanted {
        if t > 64 {
            return Err(Error::InvalidConfig("not enough admissible y samples".into()));
        }
        let (y, label) = match p.s("y_mode") {
            "rational" => {
                // 3/2, -5/2, 7/2, ...
                let num = if t % 2 == 0 { 2 * t + 3 } else { -(2 * t + 3) };
                let r = Rational::frac(num, 2);
                (K::from_rational(&r), r.to_string())
            }
            _ => (qc.q_pow(t + 1), format!("q^{}", t + 1)),
        };
        t += 1;
        if seen.contains(&y) {
            continue;
        }
        // (y;q)_j must be nonzero for every j <= n.
        let lhs = match y_lhs(qc, n, &y) {
            Ok(v) => v,
            Err(Error::DivisionByZero) => continue,
            Err(e) => return Err(e),
        };
        seen.push(y.clone());
        c.ratfunc(&format!("y = {label}"), &lhs, &y_rhs(qc, n, &y)?);
        used += 1;
    }
    c.note(format!(
        "both sides have degree at most {n} in y; certified at {used} distinct samples"
    ));
    Ok(())
}

/// `(-1)^j [n j] [n+j j] q^{C(j+1,2) - jn}`.
fn part_weight<K: Field>(qc: &QComb<K>, n: u32, j: u32) -> K {
    let (ni, ji) = (n as i64, j as i64);
    sign::<K>(ji)
        .mul(&qc.qbinomial(n, ji))
        .mul(&qc.qbinomial(n + j, ji))
        .mul(&qc.q_pow(c2(ji + 1) - ji * ni))
}

pub(crate) fn yq_part1<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n");
    let qc = c.qc();
    let mut t = QBasisTerms::new(n, 1);
    for j in 0..=n {
        t.accumulate(j as usize, 1, part_weight(qc, n, j));
    }
    let reversed = qc
        .qpochhammer(n)
        .scale_arg(qc.q())
        .reverse_to_x_power(n as usize)?;
    let rhs = RatFuncX::new(reversed, qc.qpochhammer(n + 1))?;
    c.ratfunc("y = q case", &t.to_ratfunc(qc), &rhs);
    Ok(())
}

pub(crate) fn yq_part2<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, l) = (p.u("n"), p.u("l"));
    let qc = c.qc();
    let mut total = K::zero();
    for j in 0..=n {
        let d = K::one().sub(&qc.q_pow((j + l) as i64));
        total = total.add(&part_weight(qc, n, j).div(&d)?);
    }
    c.scalar("x = q^l specialization vanishes", &total, &K::zero());
    Ok(())
}

pub(crate) fn yq_part3<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, l) = (p.u("n"), p.u("l"));
    let qc = c.qc();
    let (ni, li) = (n as i64, l as i64);
    let top = K::one().sub(&qc.q_pow(ni + li));
    let mut total = K::zero();
    for j in 0..n {
        let ji = j as i64;
        let v = sign::<K>(ni + 1 + ji)
            .mul(&qc.qbinomial(n, ji))
            .mul(&qc.qbinomial(n + j, ji))
            .mul(&top)
            .div(&K::one().sub(&qc.q_pow(ji + li)))?
            .mul(&qc.q_pow(c2(ji + 1) + ni * ni - ji * ni));
        total = total.add(&v);
    }
    let rhs = qc.qbinomial(2 * n, ni).mul(&qc.q_pow(c2(ni + 1)));
    c.scalar("central q-binomial from the truncated sum", &total, &rhs);
    Ok(())
}

pub(crate) fn yq_part4<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n");
    let qc = c.qc();
    let ni = n as i64;
    let total = (0..=n).fold(K::zero(), |acc, j| {
        acc.add(&part_weight(qc, n, j).mul(&sign(ni)))
    });
    c.scalar("q^{C(n+1,2)} as an alternating sum", &qc.q_pow(c2(ni + 1)), &total);
    Ok(())
}

pub(crate) fn harmonic_x<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, m) = (p.u("n"), p.u("m"));
    let qc = c.qc();
    let ni = n as i64;
    let common = qc.gen_harmonic_x(n + m).den;
    let over = |f: &RatFuncX<K>| -> Result<Poly<K>> {
        f.rebase(&common)
            .ok_or_else(|| Error::InvalidConfig("denominator does not divide the common one".into()))
    };

    let mut lhs = Poly::zero();
    for j in 0..=n {
        let ji = j as i64;
        let w = sign::<K>(ji)
            .mul(&qc.qbinomial(n, ji))
            .mul(&qc.qbinomial(n + j, ji))
            .mul(&qc.q_pow(c2(ji) - ji * ni));
        let diff = over(&qc.gen_harmonic_x(m + j).to_ratfunc())?
            .sub(&over(&qc.gen_harmonic_x(j).to_ratfunc())?);
        lhs = lhs.add(&diff.scale(&w));
    }

    let mut rhs = Poly::zero();
    for i in 1..=m as i64 {
        let num = qc.qpochhammer(n).scale_arg(&qc.q_pow(i - ni));
        let den = qc.qpochhammer(n + 1).scale_arg(&qc.q_pow(i));
        let term = RatFuncX::new(num, den)?;
        rhs = rhs.add(&over(&term)?.scale(&qc.q_pow(i)));
    }
    let rhs = rhs.scale(&sign::<K>(ni).mul(&qc.q_pow(c2(ni + 1))));
    c.ratfunc(
        "generalized harmonic differences",
        &RatFuncX::new(lhs, common.clone())?,
        &RatFuncX::new(rhs, common)?,
    );
    Ok(())
}
