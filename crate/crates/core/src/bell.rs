//! Complete Bell polynomials, evaluated two independent ways: the explicit
//! sum over integer partitions, and the binomial recurrence.

use crate::exact::{binomial, factorial, Field};
use num_bigint::BigInt;

/// All multiplicity vectors `(m_1, ..., m_n)` with `m_1 + 2 m_2 + ... + n m_n = n`,
/// in descending lexicographic order. `n = 0` yields the single empty vector.
pub fn enumerate_partitions(n: usize) -> Vec<Vec<u32>> {
    fn go(part: usize, n: usize, remaining: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if part > n {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for mult in (0..=remaining / part).rev() {
            cur.push(mult as u32);
            go(part + 1, n, remaining - mult * part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `n! / (m_1! ... m_n! (1!)^{m_1} ... (n!)^{m_n})` for a multiplicity vector.
pub fn partition_weight(mults: &[u32]) -> BigInt {
    let n: u64 = mults
        .iter()
        .enumerate()
        .map(|(i, &m)| (i as u64 + 1) * m as u64)
        .sum();
    let mut den = BigInt::from(1);
    for (i, &m) in mults.iter().enumerate() {
        den *= factorial(m as u64);
        den *= num_traits::pow(factorial(i as u64 + 1), m as usize);
    }
    factorial(n) / den
}

/// `B_n(x_1, ..., x_n)` from the partition sum. `xs[l - 1]` holds `x_l`.
pub fn bell_partition<K: Field>(n: usize, xs: &[K]) -> K {
    assert!(xs.len() >= n, "need at least {n} Bell arguments");
    enumerate_partitions(n)
        .iter()
        .fold(K::zero(), |acc, mults| {
            let mut term = K::from_bigint(&partition_weight(mults));
            for (l, &m) in mults.iter().enumerate() {
                if m > 0 {
                    term = term.mul(&xs[l].pow(m as u64));
                }
            }
            acc.add(&term)
        })
}

/// `B_n` from `B_{k+1} = sum_{i=0}^k C(k, i) B_{k-i} x_{i+1}`.
pub fn bell_recurrence<K: Field>(n: usize, xs: &[K]) -> K {
    assert!(xs.len() >= n, "need at least {n} Bell arguments");
    let mut b = vec![K::one()];
    for k in 0..n {
        let next = (0..=k).fold(K::zero(), |acc, i| {
            let c = K::from_bigint(&binomial(k as u64, i as u64));
            acc.add(&c.mul(&b[k - i]).mul(&xs[i]))
        });
        b.push(next);
    }
    b.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn partitions_small() {
        assert_eq!(enumerate_partitions(0), vec![Vec::<u32>::new()]);
        assert_eq!(
            enumerate_partitions(3),
            vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]
        );
        let counts: Vec<usize> = (0..=10).map(|n| enumerate_partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn partitions_are_valid_and_unique() {
        for n in 0..=9 {
            let parts = enumerate_partitions(n);
            for p in &parts {
                let s: usize = p.iter().enumerate().map(|(i, &m)| (i + 1) * m as usize).sum();
                assert_eq!(s, n);
            }
            let mut sorted = parts.clone();
            sorted.sort_by(|a, b| b.cmp(a));
            sorted.dedup();
            assert_eq!(sorted, parts);
        }
    }

    #[test]
    fn small_values() {
        assert!(bell_partition::<Rational>(0, &[]).is_one());
        assert_eq!(bell_partition(1, &[r(7)]), r(7));
        // x1^3 + 3 x1 x2 + x3 at (2, 3, 5)
        assert_eq!(bell_partition(3, &[r(2), r(3), r(5)]), r(8 + 18 + 5));
        assert_eq!(bell_recurrence(2, &[r(2), r(3)]), r(7));
        assert_eq!(bell_recurrence(4, &vec![r(1); 4]), r(15));
    }

    #[test]
    fn bell_numbers() {
        let ones = vec![r(1); 8];
        let expected = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in expected.iter().enumerate() {
            assert_eq!(bell_partition(n, &ones), r(b));
            assert_eq!(bell_recurrence(n, &ones), r(b));
        }
    }

    #[test]
    fn weights_are_integral() {
        // Sum of weights over partitions of n is the Bell number.
        for n in 0..=8 {
            let total: BigInt = enumerate_partitions(n).iter().map(|p| partition_weight(p)).sum();
            assert_eq!(total, bell_recurrence(n, &vec![r(1); n]).numer().clone());
            for p in enumerate_partitions(n) {
                let w = partition_weight(&p);
                let mut den = BigInt::from(1);
                for (i, &m) in p.iter().enumerate() {
                    den *= factorial(m as u64) * num_traits::pow(factorial(i as u64 + 1), m as usize);
                }
                assert_eq!(&w * den, factorial(n as u64));
            }
        }
    }
}
