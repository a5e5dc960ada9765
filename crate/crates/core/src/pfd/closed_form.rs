use super::{Decomposition, PoleSpec};
use crate::bell::bell_partition;
use crate::error::Result;
use crate::exact::{factorial, sign, Field};
use crate::poly::Poly;

/// `g_j(a_j) = prod_{i != j} (a_j - a_i)^{-m}`.
pub fn g_at_pole<K: Field>(spec: &PoleSpec<K>, j: usize) -> K {
    let aj = &spec.poles()[j];
    let prod = spec
        .poles()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .fold(K::one(), |acc, (_, ai)| acc.mul(&aj.sub(ai)));
    prod.pow(spec.multiplicity() as u64)
        .inv()
        .expect("distinct poles")
}

/// `x_l = m (l-1)! sum_{i != j} (a_j - a_i)^{-l}` for `l = 1..=max_l`.
pub fn x_sequence<K: Field>(spec: &PoleSpec<K>, j: usize, max_l: usize) -> Vec<K> {
    let aj = &spec.poles()[j];
    let recips: Vec<K> = spec
        .poles()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .map(|(_, ai)| aj.sub(ai).inv().expect("distinct poles"))
        .collect();
    let m = K::from_i64(spec.multiplicity() as i64);
    let mut powers = recips.clone();
    let mut out = Vec::with_capacity(max_l);
    for l in 1..=max_l {
        let s = powers.iter().fold(K::zero(), |acc, p| acc.add(p));
        out.push(m.mul(&K::from_bigint(&factorial(l as u64 - 1))).mul(&s));
        for (p, r) in powers.iter_mut().zip(&recips) {
            *p = p.mul(r);
        }
    }
    out
}

/// Closed-form decomposition: the coefficient of `(x - a_j)^{-(m-i-k)}`
/// collects `(-1)^k g_j(a_j) B_k(x_1..x_k) Q^{(i)}(a_j) / (i! k!)`.
pub fn decompose_closed_form<K: Field>(q: &Poly<K>, spec: &PoleSpec<K>) -> Result<Decomposition<K>> {
    spec.check_numerator(q)?;
    let m = spec.multiplicity() as usize;
    let derivs: Vec<Poly<K>> = (0..m).map(|i| q.derivative(i)).collect();
    let inv_fact: Vec<K> = (0..m)
        .map(|i| K::from_bigint(&factorial(i as u64)).inv().expect("nonzero"))
        .collect();
    let mut out = Decomposition::new();
    for (j, aj) in spec.poles().iter().enumerate() {
        let g = g_at_pole(spec, j);
        let xs = x_sequence(spec, j, m.saturating_sub(1));
        let bells: Vec<K> = (0..m)
            .map(|k| bell_partition(k, &xs).mul(&sign(k as i64)).mul(&inv_fact[k]))
            .collect();
        let vals: Vec<K> = (0..m)
            .map(|i| derivs[i].eval(aj).mul(&inv_fact[i]))
            .collect();
        for i in 0..m {
            if vals[i].is_zero() {
                continue;
            }
            for k in 0..m - i {
                let c = g.mul(&bells[k]).mul(&vals[i]);
                out.accumulate(j, (m - i - k) as u32, c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exact::{QRatFunc, Rational};

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn g_values() {
        let s = PoleSpec::new(vec![r(4)], 3).unwrap();
        assert!(g_at_pole(&s, 0).is_one());
        let s = PoleSpec::new(vec![r(1), r(2)], 1).unwrap();
        assert_eq!(g_at_pole(&s, 0), r(-1));
        let s = PoleSpec::new(vec![r(1), r(2), r(3)], 2).unwrap();
        assert_eq!(g_at_pole(&s, 1), r(1));
    }

    #[test]
    fn x_values() {
        let s = PoleSpec::new(vec![r(4)], 3).unwrap();
        assert!(x_sequence(&s, 0, 3).iter().all(|v| v.is_zero()));
        let s = PoleSpec::new(vec![r(0), r(1)], 1).unwrap();
        assert_eq!(x_sequence(&s, 1, 1), vec![r(1)]);
        // poles {1, 1/q}, m = 2, j = 0: x_1 = 2/(1 - 1/q)
        let q = QRatFunc::q();
        let s = PoleSpec::new(vec![QRatFunc::one(), q.inv().unwrap()], 2).unwrap();
        let expected = QRatFunc::from_i64(2)
            .div(&QRatFunc::one().sub(&q.inv().unwrap()))
            .unwrap();
        assert_eq!(x_sequence(&s, 0, 1), vec![expected]);
    }

    #[test]
    fn cover_up_cases() {
        let s = PoleSpec::new(vec![r(1), r(2)], 1).unwrap();
        let d = decompose_closed_form(&Poly::one(), &s).unwrap();
        assert_eq!(d.get(0, 1), r(-1));
        assert_eq!(d.get(1, 1), r(1));
        let s = PoleSpec::new(vec![r(0), r(1)], 2).unwrap();
        let d = decompose_closed_form(&Poly::one(), &s).unwrap();
        assert_eq!(
            d.to_text(&s),
            "1/x^2 + 2/x + 1/(x - 1)^2 - 2/(x - 1)"
        );
        let s = PoleSpec::new(vec![r(5)], 1).unwrap();
        let d = decompose_closed_form(&Poly::constant(r(7)), &s).unwrap();
        assert_eq!(d.get(0, 1), r(7));
    }

    #[test]
    fn degree_bound() {
        let s = PoleSpec::new(vec![r(0), r(1)], 1).unwrap();
        let q = Poly::new(vec![r(0), r(0), r(1)]);
        assert_eq!(
            decompose_closed_form(&q, &s),
            Err(Error::DegreeTooLarge { degree: 2, bound: 2 })
        );
    }
}
