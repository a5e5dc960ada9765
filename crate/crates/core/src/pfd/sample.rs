//! Seeded random instances over Q, used by the benchmarks.

use super::PoleSpec;
use crate::exact::Rational;
use crate::poly::Poly;
use crate::registry::instance_seed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Distinct rational poles `num/den` with `den` in 1..=3 and value in [-9, 9].
pub fn random_poles(rng: &mut impl Rng, s: usize) -> Vec<Rational> {
    let mut poles: Vec<Rational> = Vec::with_capacity(s);
    while poles.len() < s {
        let den = rng.gen_range(1i64..=3);
        let num = rng.gen_range(-9 * den..=9 * den);
        let a = Rational::frac(num, den);
        if !poles.contains(&a) {
            poles.push(a);
        }
    }
    poles
}

/// A numerator of degree `s m - 1` with integer coefficients in [-9, 9]
/// over `s` random poles of multiplicity `m`.
pub fn random_instance(seed: u64, s: u32, m: u32, trial: u32) -> (Poly<Rational>, PoleSpec<Rational>) {
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(
        seed,
        "bench",
        &[s as u64, m as u64, trial as u64],
    ));
    let poles = random_poles(&mut rng, s as usize);
    let degree = (s * m) as usize - 1;
    let mut coeffs: Vec<Rational> = (0..degree)
        .map(|_| Rational::from_i64(rng.gen_range(-9..=9)))
        .collect();
    let lead = loop {
        let v = rng.gen_range(-9i64..=9);
        if v != 0 {
            break v;
        }
    };
    coeffs.push(Rational::from_i64(lead));
    let spec = PoleSpec::new(poles, m).expect("distinct poles, m >= 1");
    (Poly::new(coeffs), spec)
}
