//! Decomposition identities: the generic closed form, its q-pole
//! specialization and the corollaries obtained by fixing `m` or `Q`.

use super::check::random_qpoly;
use super::{c2, n_params, Checker, Grid, Params};
use crate::bell::bell_partition;
use crate::error::Result;
use crate::exact::{binomial, factorial, sign, Field};
use crate::pfd::{
    decompose_closed_form, decompose_oracle, q_pole_x_sequence, random_poles, recombine,
    theorem_q_terms, x1_harmonic_form, PoleSpec, QBasisTerms,
};
use crate::poly::Poly;
use crate::qcomb::QComb;
use crate::ratfunc::RatFuncX;
use rand::Rng;

pub(crate) fn n_upto_6(grid: &Grid) -> Vec<Params> {
    n_params(grid, 0, 6)
}

pub(crate) fn n_upto_8(grid: &Grid) -> Vec<Params> {
    n_params(grid, 0, 8)
}

pub(crate) fn thm1_instances(grid: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for s in 1..=4u32 {
        for m in grid.m_range(3) {
            for trial in 0..grid.trials(9) {
                out.push(
                    Params::new()
                        .with("s", s)
                        .with("m", m)
                        .with("trial", trial)
                        .with("seed", grid.seed),
                );
            }
        }
    }
    out
}

pub(crate) fn thm1_generic<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (s, m, trial) = (p.u("s"), p.u("m"), p.u("trial"));
    let mut rng = c.rng("thm1", &[s as u64, m as u64, trial as u64]);
    let poles = random_poles(&mut rng, s as usize);
    let degree = rng.gen_range(0..(s * m) as usize);
    let q = random_qpoly(&mut rng, c.qc(), degree);
    let spec = PoleSpec::new(poles.iter().map(K::from_rational).collect(), m)?;
    c.context(format!(
        "poles = [{}], Q = {}",
        poles.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", "),
        q.to_text("x")
    ));

    let closed = decompose_closed_form(&q, &spec)?;
    let oracle = decompose_oracle(&q, &spec)?;
    c.decomposition("closed form = linear-system solution", &closed, &oracle);
    let (num, den) = recombine(&closed, &spec);
    c.ratfunc(
        "recombination = Q/P",
        &RatFuncX::new(num, den)?,
        &RatFuncX::new(q, spec.denominator())?,
    );
    Ok(())
}

fn random_instances(grid: &Grid, n_cap: u32, m_cap: u32, trials: u32) -> Vec<Params> {
    let mut out = Vec::new();
    for n in grid.n_range(0, n_cap) {
        for m in grid.m_range(m_cap) {
            for trial in 0..grid.trials(trials) {
                out.push(
                    Params::new()
                        .with("n", n)
                        .with("m", m)
                        .with("trial", trial)
                        .with("seed", grid.seed),
                );
            }
        }
    }
    out
}

pub(crate) fn thm2_instances(grid: &Grid) -> Vec<Params> {
    random_instances(grid, 6, 3, 5)
}

pub(crate) fn m1_instances(grid: &Grid) -> Vec<Params> {
    random_instances(grid, 6, 1, 5)
}

pub(crate) fn cor_m2_instances(grid: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for n in grid.n_range(0, 8) {
        for trial in 0..grid.trials(3) {
            out.push(
                Params::new()
                    .with("n", n)
                    .with("trial", trial)
                    .with("seed", grid.seed),
            );
        }
    }
    out
}

pub(crate) fn nm_instances(grid: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for n in grid.n_range(0, 6) {
        for m in grid.m_range(3) {
            out.push(Params::new().with("n", n).with("m", m));
        }
    }
    out
}

pub(crate) fn monomial_instances(grid: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for n in grid.n_range(0, 4) {
        for m in grid.m_range(3) {
            for l in (0..(n + 1) * m).filter(|&l| grid.l_allowed(l)) {
                out.push(Params::new().with("n", n).with("m", m).with("l", l));
            }
        }
    }
    out
}

/// The random numerator shared by the q-pole entries: degree below
/// `(n+1) m`, keyed by `(n, m, trial)` only.
fn q_pole_numerator<K: Field>(c: &Checker<'_, K>, n: u32, m: u32, trial: u32) -> Poly<K> {
    let mut rng = c.rng("qpoly", &[n as u64, m as u64, trial as u64]);
    let degree = rng.gen_range(0..((n + 1) * m) as usize);
    random_qpoly(&mut rng, c.qc(), degree)
}

/// `(q;q)_n^m Q(x) / (x;q)_{n+1}^m` built from q-Pochhammer products.
fn scaled_lhs<K: Field>(qc: &QComb<K>, q: &Poly<K>, n: u32, m: u32) -> Result<RatFuncX<K>> {
    RatFuncX::new(
        q.scale(&qc.qfactorial(n).pow(m as u64)),
        qc.qpochhammer(n + 1).pow(m),
    )
}

pub(crate) fn thm2_q_poles<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, m, trial) = (p.u("n"), p.u("m"), p.u("trial"));
    let qc = c.qc();
    let q = q_pole_numerator(c, n, m, trial);
    c.context(format!("Q = {}", q.to_text("x")));
    let rhs = theorem_q_terms(qc, &q, n, m)?.to_ratfunc(qc);
    c.ratfunc("triple sum = (q;q)_n^m Q/(x;q)_{n+1}^m", &scaled_lhs(qc, &q, n, m)?, &rhs);
    if trial == 0 && m >= 2 {
        for j in 0..=n {
            let generic = q_pole_x_sequence(qc, n, j, m, 1).remove(0);
            let harmonic = x1_harmonic_form(qc, n, j, m);
            c.scalar(&format!("x_1 harmonic form, j = {j}"), &harmonic, &generic);
        }
    }
    Ok(())
}

/// `(H_j(q) - q H_{n-j}(1/q)) / (1 - q)`.
pub(crate) fn harmonic_gap<K: Field>(qc: &QComb<K>, n: u32, j: u32) -> Result<K> {
    qc.qharmonic(j)
        .sub(&qc.q().mul(&qc.qharmonic_inv(n - j)))
        .div(&K::one().sub(qc.q()))
}

pub(crate) fn cor_m2_pfd<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, trial) = (p.u("n"), p.u("trial"));
    let qc = c.qc();
    let mut rng = c.rng("qpoly-m2", &[n as u64, trial as u64]);
    let degree = rng.gen_range(0..(2 * n + 2) as usize);
    let q = random_qpoly(&mut rng, qc, degree);
    c.context(format!("Q = {}", q.to_text("x")));
    let dq = q.derivative(1);
    let mut t = QBasisTerms::new(n, 2);
    for j in 0..=n {
        let ji = j as i64;
        let w = qc.qbinomial(n, ji).pow(2).mul(&qc.q_pow(ji * (ji + 1)));
        let pole = qc.q_pow(-ji);
        let qv = q.eval(&pole);
        let dv = dq.eval(&pole);
        let h = harmonic_gap(qc, n, j)?;
        t.accumulate(j as usize, 2, w.mul(&qv));
        let simple = qc
            .q_pow(-ji)
            .mul(&dv)
            .neg()
            .add(&K::from_i64(2).mul(&qv).mul(&h));
        t.accumulate(j as usize, 1, w.mul(&simple));
    }
    c.ratfunc("m = 2 decomposition", &scaled_lhs(qc, &q, n, 2)?, &t.to_ratfunc(qc));
    Ok(())
}

pub(crate) fn m2_unit_numerator<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n");
    let qc = c.qc();
    let mut t = QBasisTerms::new(n, 2);
    let mut at_zero = K::zero();
    for j in 0..=n {
        let ji = j as i64;
        let w = qc.qbinomial(n, ji).pow(2).mul(&qc.q_pow(ji * (ji + 1)));
        let h2 = K::from_i64(2).mul(&harmonic_gap(qc, n, j)?);
        t.accumulate(j as usize, 2, w.clone());
        t.accumulate(j as usize, 1, w.mul(&h2));
        at_zero = at_zero.add(&w.mul(&K::one().add(&h2)));
    }
    let lhs = scaled_lhs(qc, &Poly::one(), n, 2)?;
    c.ratfunc("Q = 1 decomposition", &lhs, &t.to_ratfunc(qc));
    c.scalar("x = 0 specialization", &qc.qfactorial(n).pow(2), &at_zero);
    Ok(())
}

/// `B_k(x_1..x_k) / k!` for `k = 0..m`, with the q-pole Bell arguments.
fn bell_over_factorial<K: Field>(qc: &QComb<K>, n: u32, j: u32, m: u32) -> Vec<K> {
    let xs = q_pole_x_sequence(qc, n, j, m, m as usize - 1);
    (0..m as usize)
        .map(|k| {
            bell_partition(k, &xs)
                .div(&K::from_bigint(&factorial(k as u64)))
                .expect("nonzero factorial")
        })
        .collect()
}

pub(crate) fn cor_monomial<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, m, l) = (p.u("n"), p.u("m"), p.u("l"));
    let qc = c.qc();
    let mut t = QBasisTerms::new(n, m);
    for j in 0..=n {
        let ji = j as i64;
        let pre = qc
            .qbinomial(n, ji)
            .pow(m as u64)
            .mul(&qc.q_pow(m as i64 * c2(ji + 1)));
        let bells = bell_over_factorial(qc, n, j, m);
        for i in 0..m {
            let b = K::from_bigint(&binomial(l as u64, i as u64));
            if b.is_zero() {
                continue;
            }
            for k in 0..m - i {
                let v = pre
                    .mul(&b)
                    .mul(&sign(m as i64 * ji + i as i64))
                    .mul(&bells[k as usize])
                    .mul(&qc.q_pow(-ji * (k + l) as i64));
                t.accumulate(j as usize, m - i - k, v);
            }
        }
    }
    let lhs = scaled_lhs(qc, &Poly::monomial(K::one(), l as usize), n, m)?;
    c.ratfunc("monomial numerator decomposition", &lhs, &t.to_ratfunc(qc));
    Ok(())
}

pub(crate) fn cor_unit_numerator<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, m) = (p.u("n"), p.u("m"));
    let qc = c.qc();
    let mut t = QBasisTerms::new(n, m);
    for j in 0..=n {
        let ji = j as i64;
        let pre = qc
            .qbinomial(n, ji)
            .pow(m as u64)
            .mul(&qc.q_pow(m as i64 * c2(ji + 1)))
            .mul(&sign(m as i64 * ji));
        let bells = bell_over_factorial(qc, n, j, m);
        for k in 0..m {
            let v = pre.mul(&bells[k as usize]).mul(&qc.q_pow(-ji * k as i64));
            t.accumulate(j as usize, m - k, v);
        }
    }
    let lhs = scaled_lhs(qc, &Poly::one(), n, m)?;
    c.ratfunc("unit numerator decomposition", &lhs, &t.to_ratfunc(qc));
    Ok(())
}

pub(crate) fn cor_m1_pfd<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let (n, trial) = (p.u("n"), p.u("trial"));
    let qc = c.qc();
    let q = q_pole_numerator(c, n, 1, trial);
    c.context(format!("Q = {}", q.to_text("x")));
    let mut t = QBasisTerms::new(n, 1);
    for j in 0..=n {
        let ji = j as i64;
        let v = sign::<K>(ji)
            .mul(&qc.qbinomial(n, ji))
            .mul(&qc.q_pow(c2(ji + 1)))
            .mul(&q.eval(&qc.q_pow(-ji)));
        t.accumulate(j as usize, 1, v);
    }
    c.ratfunc("simple-pole decomposition", &scaled_lhs(qc, &q, n, 1)?, &t.to_ratfunc(qc));
    Ok(())
}
