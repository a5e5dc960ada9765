//! Property suites for the ground fields, polynomials in `x`, Bell
//! polynomials and the q-analogue tables.

use num_bigint::BigInt;
use proptest::prelude::*;
use qpfd::bell::{bell_partition, bell_recurrence};
use qpfd::exact::binomial;
use qpfd::qcomb::QComb;
use qpfd::{Field, Poly, QRatFunc, Rational};

fn rational() -> impl Strategy<Value = Rational> + Clone {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::frac(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> + Clone {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn qpoly(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> + Clone {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(Poly::new)
}

/// Elements of Q(q) with numerator degree <= 6 and denominator degree <= 3.
fn qrat() -> impl Strategy<Value = QRatFunc> + Clone {
    (qpoly(6), qpoly(3).prop_filter("nonzero", |p| !p.is_zero()))
        .prop_map(|(n, d)| QRatFunc::from_parts(n, d).unwrap())
}

fn poly_over<K: Field + 'static, S: Strategy<Value = K> + Clone + 'static>(
    coeff: S,
    max_deg: usize,
) -> impl Strategy<Value = Poly<K>> {
    prop::collection::vec(coeff, 0..=max_deg + 1).prop_map(Poly::new)
}

fn field_axioms<K: Field>(a: &K, b: &K, c: &K) {
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert_eq!(a.add(&K::zero()), a.clone());
    assert_eq!(a.mul(&K::one()), a.clone());
    assert!(a.add(&a.neg()).is_zero());
    match a.inv() {
        Ok(i) => assert!(a.mul(&i).is_one()),
        Err(_) => assert!(a.is_zero()),
    }
    if !b.is_zero() {
        assert_eq!(a.div(b).unwrap().mul(b), a.clone());
    }
}

fn ring_axioms<K: Field>(a: &Poly<K>, b: &Poly<K>, c: &Poly<K>) {
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert_eq!(a.mul(&Poly::one()), a.clone());
    assert!(a.sub(a).is_zero());
    if !a.is_zero() && !b.is_zero() {
        assert_eq!(
            a.mul(b).degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }
}

fn divrem_law<K: Field>(a: &Poly<K>, b: &Poly<K>) {
    if b.is_zero() {
        assert!(a.divrem(b).is_err());
        return;
    }
    let (q, r) = a.divrem(b).unwrap();
    assert_eq!(q.mul(b).add(&r), a.clone());
    assert!(r.is_zero() || r.degree() < b.degree());
}

fn leibniz<K: Field>(a: &Poly<K>, b: &Poly<K>) {
    let lhs = a.mul(b).derivative(1);
    let rhs = a.derivative(1).mul(b).add(&a.mul(&b.derivative(1)));
    assert_eq!(lhs, rhs);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn qrat_field_axioms(a in qrat(), b in qrat(), c in qrat()) {
        field_axioms(&a, &b, &c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn qrat_is_canonical(a in qrat()) {
        // monic denominator, coprime parts, and reduction is idempotent
        prop_assert!(a.denom().leading().unwrap().is_one());
        prop_assert!(a.numer().gcd(a.denom()).is_one() || a.is_zero());
        let again = QRatFunc::from_parts(a.numer().clone(), a.denom().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        prop_assert_eq!(again.canonical_text(), a.canonical_text());
    }

    #[test]
    fn q_inverse_is_an_involutive_automorphism(a in qrat(), b in qrat()) {
        prop_assert_eq!(a.subst_q_inverse().subst_q_inverse(), a.clone());
        prop_assert_eq!(
            a.mul(&b).subst_q_inverse(),
            a.subst_q_inverse().mul(&b.subst_q_inverse())
        );
        prop_assert_eq!(
            a.add(&b).subst_q_inverse(),
            a.subst_q_inverse().add(&b.subst_q_inverse())
        );
    }

    #[test]
    fn evaluation_at_q_is_a_homomorphism(a in qrat(), b in qrat(), v in nonzero_rational()) {
        if let (Ok(x), Ok(y)) = (a.eval_at_q(&v), b.eval_at_q(&v)) {
            prop_assert_eq!(a.add(&b).eval_at_q(&v).unwrap(), x.add(&y));
            prop_assert_eq!(a.mul(&b).eval_at_q(&v).unwrap(), x.mul(&y));
        }
    }

    #[test]
    fn rational_poly_ring(
        a in poly_over(rational(), 6),
        b in poly_over(rational(), 6),
        c in poly_over(rational(), 6),
    ) {
        ring_axioms(&a, &b, &c);
        divrem_law(&a, &b);
        leibniz(&a, &b);
    }

    #[test]
    fn scale_arg_matches_evaluation(
        a in poly_over(rational(), 6),
        c in rational(),
        x in rational(),
    ) {
        prop_assert_eq!(a.scale_arg(&c).eval(&x), a.eval(&c.mul(&x)));
    }

    #[test]
    fn evaluation_in_x_is_a_homomorphism(
        a in poly_over(rational(), 6),
        b in poly_over(rational(), 6),
        x in rational(),
    ) {
        prop_assert_eq!(a.mul(&b).eval(&x), a.eval(&x).mul(&b.eval(&x)));
        prop_assert_eq!(a.add(&b).eval(&x), a.eval(&x).add(&b.eval(&x)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn qrat_poly_ring(
        a in poly_over(qrat(), 3),
        b in poly_over(qrat(), 3),
        c in poly_over(qrat(), 3),
    ) {
        ring_axioms(&a, &b, &c);
        divrem_law(&a, &b);
        leibniz(&a, &b);
    }

    #[test]
    fn qrat_scale_arg(a in poly_over(qrat(), 4), c in qrat(), x in qrat()) {
        prop_assert_eq!(a.scale_arg(&c).eval(&x), a.eval(&c.mul(&x)));
    }

    #[test]
    fn bell_cross_oracle_over_q(xs in prop::collection::vec(rational(), 8)) {
        for n in 0..=8 {
            prop_assert_eq!(bell_partition(n, &xs), bell_recurrence(n, &xs));
        }
    }

    #[test]
    fn bell_cross_oracle_over_qq(xs in prop::collection::vec(qrat(), 6)) {
        for n in 0..=6 {
            prop_assert_eq!(bell_partition(n, &xs), bell_recurrence(n, &xs));
        }
    }
}

#[test]
fn bell_cross_oracle_symbolic_arguments_up_to_eight() {
    // x_l = q^l + l, so every partition contributes a distinct monomial mix
    let xs: Vec<QRatFunc> = (1..=8)
        .map(|l| QRatFunc::q_pow(l).add(&QRatFunc::from_i64(l)))
        .collect();
    for n in 0..=8 {
        assert_eq!(bell_partition(n, &xs), bell_recurrence(n, &xs), "n = {n}");
    }
}

#[test]
fn bell_numbers_at_unit_arguments() {
    let ones = vec![Rational::one(); 8];
    let expected = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
    for (n, &b) in expected.iter().enumerate() {
        assert_eq!(bell_partition(n, &ones), Rational::from_i64(b));
    }
}

#[test]
fn q_pascal_recurrence_and_q_one_degeneration() {
    let qc = QComb::<QRatFunc>::symbolic();
    let one = Rational::one();
    for n in 1..=12u32 {
        for j in 0..=n as i64 {
            let lhs = qc.qbinomial(n, j);
            let first = qc
                .qbinomial(n - 1, j - 1)
                .add(&qc.q_pow(j).mul(&qc.qbinomial(n - 1, j)));
            let second = qc
                .qbinomial(n - 1, j)
                .add(&qc.q_pow(n as i64 - j).mul(&qc.qbinomial(n - 1, j - 1)));
            assert_eq!(lhs, first, "[{n} {j}]");
            assert_eq!(lhs, second, "[{n} {j}]");
            assert!(lhs.is_polynomial());
            let classical = Rational::from_bigint(binomial(n as u64, j as u64));
            assert_eq!(lhs.specialize_q(&one).unwrap(), classical);
        }
    }
}

#[test]
fn q_pascal_in_numeric_mode() {
    for q in [Rational::from_i64(2), Rational::from_i64(3), Rational::frac(5, 2)] {
        let qc = QComb::numeric(q).unwrap();
        for n in 1..=12u32 {
            for j in 0..=n as i64 {
                let rhs = qc
                    .qbinomial(n - 1, j - 1)
                    .add(&qc.q_pow(j).mul(&qc.qbinomial(n - 1, j)));
                assert_eq!(qc.qbinomial(n, j), rhs);
            }
        }
    }
}

#[test]
fn q_apery_normalizations_differ_by_q_n_squared() {
    let qc = QComb::<QRatFunc>::symbolic();
    for n in 0..=8u32 {
        let ni = n as i64;
        assert_eq!(
            qc.q_pow(ni * ni).mul(&qc.q_apery_zheng(n)),
            qc.q_apery_straub(n),
            "n = {n}"
        );
        let at_one = qc.q_apery_straub(n).specialize_q(&Rational::one()).unwrap();
        assert_eq!(at_one, Rational::from_bigint(qpfd::qcomb::apery(n as u64)));
    }
    assert_eq!(qpfd::qcomb::apery(3), BigInt::from(1445));
}
