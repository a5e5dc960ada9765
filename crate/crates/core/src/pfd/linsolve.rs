use super::{basis_numerator, Decomposition, PoleSpec};
use crate::error::{Error, Result};
use crate::exact::Field;
use crate::poly::Poly;

/// Solves `a x = b` exactly by Gaussian elimination with row pivoting on the
/// smallest available nonzero entry. Fails with `SingularSystem` unless the
/// square system has a unique solution.
pub fn solve_linear<K: Field>(mut a: Vec<Vec<K>>, mut b: Vec<K>) -> Result<Vec<K>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|row| row.len() == n), "square system expected");
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].size_hint())
            .ok_or(Error::SingularSystem)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].inv()?;
        for c in col..n {
            a[col][c] = a[col][c].mul(&inv);
        }
        b[col] = b[col].mul(&inv);
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..n {
                if !a[col][c].is_zero() {
                    a[r][c] = a[r][c].sub(&f.mul(&a[col][c]));
                }
            }
            b[r] = b[r].sub(&f.mul(&b[col]));
        }
    }
    Ok(b)
}

/// Decomposition by undetermined coefficients: multiplying through by `P`
/// and matching powers of `x` gives an `s m` by `s m` system for the
/// unknowns `c_{j,e}`.
pub fn decompose_oracle<K: Field>(q: &Poly<K>, spec: &PoleSpec<K>) -> Result<Decomposition<K>> {
    spec.check_numerator(q)?;
    let m = spec.multiplicity();
    let size = spec.degree();
    let unknowns: Vec<(usize, u32)> = (0..spec.len())
        .flat_map(|j| (1..=m).map(move |e| (j, e)))
        .collect();
    let columns: Vec<Poly<K>> = unknowns
        .iter()
        .map(|&(j, e)| basis_numerator(spec, j, e))
        .collect();
    let a: Vec<Vec<K>> = (0..size)
        .map(|row| columns.iter().map(|c| c.coeff(row)).collect())
        .collect();
    let b: Vec<K> = (0..size).map(|row| q.coeff(row)).collect();
    let sol = solve_linear(a, b)?;
    let mut out = Decomposition::new();
    for (&(j, e), c) in unknowns.iter().zip(sol) {
        out.accumulate(j, e, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn small_system() {
        // x + y = 3, x - y = 1
        let a = vec![vec![r(1), r(1)], vec![r(1), r(-1)]];
        assert_eq!(solve_linear(a, vec![r(3), r(1)]).unwrap(), vec![r(2), r(1)]);
        let singular = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert_eq!(solve_linear(singular, vec![r(1), r(1)]), Err(Error::SingularSystem));
    }

    #[test]
    fn oracle_cases() {
        let s = PoleSpec::new(vec![r(0), r(1)], 2).unwrap();
        assert!(decompose_oracle(&Poly::zero(), &s).unwrap().is_empty());
        let d = decompose_oracle(&Poly::one(), &s).unwrap();
        assert_eq!(d.to_text(&s), "1/x^2 + 2/x + 1/(x - 1)^2 - 2/(x - 1)");
        let s = PoleSpec::new(vec![r(0)], 3).unwrap();
        let d = decompose_oracle(&Poly::one(), &s).unwrap();
        assert_eq!(d.to_text(&s), "1/x^3");
    }
}
