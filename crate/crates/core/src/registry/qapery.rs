//! The q-Apéry family: the q-extension of Chu's identity, the explicit
//! double-pole decomposition defining `a_q(n,k)`, and the two normalizations
//! of the q-Apéry numbers.

use super::{Checker, Params};
use crate::error::Result;
use crate::exact::{Field, Rational};
use crate::pfd::{decompose_oracle, q_pole_spec, QBasisTerms};
use crate::poly::Poly;
use crate::qcomb::{apery, QComb};
use crate::ratfunc::RatFuncX;

/// `[n j]^2 [n+j j]^2`.
fn apery_weight<K: Field>(qc: &QComb<K>, n: u32, j: u32) -> K {
    let j_i = j as i64;
    qc.qbinomial(n, j_i).mul(&qc.qbinomial(n + j, j_i)).pow(2)
}

pub(crate) fn zheng<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n");
    let qc = c.qc();
    let q = qc.q();
    let ni = n as i64;
    // (xq;q)_n and x^n (q/x;q)_n = prod_{i=1}^n (x - q^i)
    let shifted = qc.qpochhammer(n).scale_arg(q);
    let reversed = shifted.reverse_to_x_power(n as usize)?;
    let one_minus_x = Poly::linear(K::one(), K::one().neg());
    let lhs = RatFuncX::new(reversed.pow(2), one_minus_x.mul(&shifted.pow(2)))?;

    // The displayed weight is [n j]^2 q^{j(j-2n)}; the pole values of the
    // numerator below force an extra [n+j j]^2, which is certified here. The
    // weight without it is evaluated too and reported.
    let mut t = QBasisTerms::new(n, 2);
    let mut printed = QBasisTerms::new(n, 2);
    t.accumulate(0, 1, K::one());
    printed.accumulate(0, 1, K::one());
    for j in 1..=n {
        let ji = j as i64;
        let w = qc.qbinomial(n, ji).pow(2).mul(&qc.q_pow(ji * (ji - 2 * ni)));
        let bj = qc.qnumber(ji);
        let double = qc.q_pow(ji).sub(&K::one());
        let simple = K::one()
            .sub(&K::from_i64(4).mul(&bj).mul(&qc.qharmonic(j)))
            .add(&K::from_i64(2).mul(&bj).mul(&qc.qharmonic(n + j)))
            .add(&K::from_i64(2).mul(q).mul(&bj).mul(&qc.qharmonic_inv(n - j)));
        let full = w.mul(&qc.qbinomial(n + j, ji).pow(2));
        t.accumulate(j as usize, 2, full.mul(&double));
        t.accumulate(j as usize, 1, full.mul(&simple));
        printed.accumulate(j as usize, 2, w.mul(&double));
        printed.accumulate(j as usize, 1, w.mul(&simple));
    }
    let lhs = RatFuncX::new(
        lhs.rebase(&qc.qpochhammer(n + 1).pow(2)).expect("(1-x)(xq;q)_n^2 divides (x;q)_{n+1}^2"),
        qc.qpochhammer(n + 1).pow(2),
    )?;
    c.ratfunc("q-extension of Chu's identity", &lhs, &t.to_ratfunc(qc));
    let printed_holds = lhs.equals(&printed.to_ratfunc(qc));
    c.note(format!(
        "weight [n j]^2 q^(j(j-2n)) without [n+j j]^2: {}",
        if printed_holds { "holds" } else { "fails" }
    ));

    // The numerator used in the derivation and its values at the poles.
    let qpoly = one_minus_x.mul(&reversed.pow(2));
    let product = (1..=ni).fold(one_minus_x.clone(), |acc, i| {
        acc.mul(&Poly::linear(qc.q_pow(i).neg(), K::one()).pow(2))
    });
    c.ratfunc(
        "Q(x) = (1-x) x^{2n} (q/x;q)_n^2 = (1-x) prod (x-q^i)^2",
        &RatFuncX::from_poly(qpoly.clone()),
        &RatFuncX::from_poly(product),
    );
    let dq = qpoly.derivative(1);
    let qf2 = qc.qfactorial(n).pow(2);
    for j in 0..=n {
        let ji = j as i64;
        let pole = qc.q_pow(-ji);
        let b2 = qc.qbinomial(n + j, ji).pow(2);
        let value = qc
            .q_pow(-ji * (2 * ni + 1))
            .mul(&qc.q_pow(ji).sub(&K::one()))
            .mul(&qf2)
            .mul(&b2);
        c.scalar(&format!("Q(q^-{j})"), &qpoly.eval(&pole), &value);
        let gap = qc.qharmonic(n + j).sub(&qc.qharmonic(j));
        let slope = qc.q_pow(-2 * ni * ji).mul(&qf2).mul(&b2).mul(
            &K::one()
                .neg()
                .sub(&K::from_i64(2).mul(&qc.qnumber(ji)).mul(&gap)),
        );
        c.scalar(&format!("Q'(q^-{j})"), &dq.eval(&pole), &slope);
    }
    Ok(())
}

pub(crate) fn zheng_sum<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n");
    let qc = c.qc();
    let ni = n as i64;
    let mut total = K::zero();
    for k in 0..=n {
        let ki = k as i64;
        let h = K::from_i64(2)
            .mul(&qc.qharmonic(k))
            .sub(&qc.qharmonic(n + k))
            .sub(&qc.q().mul(&qc.qharmonic_inv(n - k)));
        let term = qc
            .q_pow(ki * (ki - 2 * ni))
            .mul(&apery_weight(qc, n, k))
            .mul(&h);
        total = total.add(&term);
    }
    c.scalar("harmonic q-Apery sum vanishes", &total, &K::zero());
    Ok(())
}

/// `a_q(n,j) = [n j]^2 [n+j j]^2 q^{j(j+1) - n(n+2j+1)}`.
fn a_coefficient<K: Field>(qc: &QComb<K>, n: u32, j: u32) -> K {
    let (ni, ji) = (n as i64, j as i64);
    apery_weight(qc, n, j).mul(&qc.q_pow(ji * (ji + 1) - ni * (ni + 2 * ji + 1)))
}

pub(crate) fn ckra_explicit<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n");
    let qc = c.qc();
    let q = qc.q();
    let ni = n as i64;
    let num = qc.qpochhammer(n).scale_arg(&qc.q_pow(-ni)).pow(2);
    let lhs = RatFuncX::new(num.clone(), qc.qpochhammer(n + 1).pow(2))?;

    let one_minus_q = K::one().sub(q);
    let mut explicit = QBasisTerms::new(n, 2);
    for j in 0..=n {
        let a = a_coefficient(qc, n, j);
        let h = K::from_i64(4)
            .mul(&qc.qharmonic(j))
            .sub(&K::from_i64(2).mul(q).mul(&qc.qharmonic_inv(n - j)))
            .sub(&K::from_i64(2).mul(&qc.qharmonic(n + j)))
            .div(&one_minus_q)?;
        explicit.accumulate(j as usize, 2, a.clone());
        explicit.accumulate(j as usize, 1, a.mul(&h));
    }
    c.ratfunc("explicit double-pole decomposition", &lhs, &explicit.to_ratfunc(qc));

    // Independent coefficients: solve for num / prod (x - q^{-j})^2, then
    // account for (x;q)_{n+1}^2 = q^{n(n+1)} prod (x - q^{-j})^2.
    let spec = q_pole_spec(qc, n, 2)?;
    let solved = decompose_oracle(&num, &spec)?;
    let oracle = QBasisTerms::from_x_basis(&solved, qc, n, 2).scale(&qc.q_pow(-ni * (ni + 1)));
    c.q_terms("a_q, b_q match the linear-system solution", &explicit, &oracle);

    // The pole values carry a factor (q;q)_n^2 that the stated values leave
    // implicit.
    let qf2 = qc.qfactorial(n).pow(2);
    for j in 0..=n {
        let ji = j as i64;
        let pole = qc.q_pow(-ji);
        let b2 = qc.qbinomial(n + j, ji).pow(2).mul(&qf2);
        let base = qc.q_pow(-ni * (ni + 2 * ji + 1));
        c.scalar(&format!("Q(q^-{j})"), &num.eval(&pole), &base.mul(&b2));
        let slope = K::from_i64(2)
            .mul(&base)
            .mul(&qc.q_pow(ji))
            .mul(&b2)
            .mul(&qc.qharmonic(n + j).sub(&qc.qharmonic(j)).div(&one_minus_q)?);
        c.scalar(&format!("Q'(q^-{j})"), &num.derivative(1).eval(&pole), &slope);
    }

    let krz = (0..=n).fold(K::zero(), |acc, k| {
        acc.add(&oracle.get(k as usize, 2).mul(&qc.q_pow(-(k as i64))))
    });
    c.scalar(
        "q^{n(n+1)} sum a_q(n,k)/q^k = Zheng form",
        &qc.q_pow(ni * (ni + 1)).mul(&krz),
        &qc.q_apery_zheng(n),
    );
    c.scalar(
        "q^{n(2n+1)} sum a_q(n,k)/q^k = Straub form",
        &qc.q_pow(ni * (2 * ni + 1)).mul(&krz),
        &qc.q_apery_straub(n),
    );
    Ok(())
}

pub(crate) fn ckra_at_zero<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n");
    let qc = c.qc();
    let q = qc.q();
    let ni = n as i64;
    let one_minus_q = K::one().sub(q);
    let mut total = K::zero();
    for j in 0..=n {
        let ji = j as i64;
        let h = one_minus_q
            .add(&K::from_i64(4).mul(&qc.qharmonic(j)))
            .sub(&K::from_i64(2).mul(q).mul(&qc.qharmonic_inv(n - j)))
            .sub(&K::from_i64(2).mul(&qc.qharmonic(n + j)));
        let w = apery_weight(qc, n, j).mul(&qc.q_pow(ji * (ji + 1) - 2 * ni * ji));
        total = total.add(&w.mul(&h));
    }
    let rhs = qc.q_pow(ni * (ni + 1)).mul(&one_minus_q);
    c.scalar("x = 0 specialization", &total, &rhs);
    Ok(())
}

pub(crate) fn q_apery_normalizations<K: Field>(c: &mut Checker<'_, K>, p: &Params) -> Result<()> {
    let n = p.u("n");
    let qc = c.qc();
    let ni = n as i64;
    let krz = (0..=n).fold(K::zero(), |acc, k| {
        acc.add(&a_coefficient(qc, n, k).mul(&qc.q_pow(-(k as i64))))
    });
    let zheng = qc.q_apery_zheng(n);
    let straub = qc.q_apery_straub(n);
    c.scalar("Zheng normalization", &qc.q_pow(ni * (ni + 1)).mul(&krz), &zheng);
    c.scalar("Straub normalization", &qc.q_pow(ni * (2 * ni + 1)).mul(&krz), &straub);
    c.scalar("q^{n^2} Zheng = Straub", &qc.q_pow(ni * ni).mul(&zheng), &straub);
    if c.is_symbolic() {
        let target = Rational::from_bigint(apery(n as u64));
        let one = Rational::one();
        c.scalar("Straub form at q = 1 is A(n)", &straub.specialize_q(&one)?, &target);
        c.scalar("Zheng form at q = 1 is A(n)", &zheng.specialize_q(&one)?, &target);
    }
    Ok(())
}
