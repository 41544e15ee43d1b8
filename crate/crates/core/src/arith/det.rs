use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntPolynomial, Rational};
use crate::{Error, Result};

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::Dimension(format!(
            "expected a square {n}x{n} matrix, found a row of length {}",
            row.len()
        )));
    }
    Ok(n)
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn int_det(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    Ok(if sign { -d } else { d })
}

/// Interpolation nodes `0, 1, −1, 2, −2, …`.
fn nodes(count: usize) -> impl Iterator<Item = BigInt> {
    (0..count as i64).map(|i| BigInt::from(if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) }))
}

/// Determinant of a square matrix over `ℤ[t]` by evaluation at
/// `n·maxdeg + 1` integer nodes and exact Newton interpolation.
pub fn poly_matrix_det(m: &[Vec<IntPolynomial>]) -> Result<IntPolynomial> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let maxdeg = m
        .iter()
        .flatten()
        .filter_map(IntPolynomial::degree)
        .max()
        .unwrap_or(0);
    let xs: Vec<BigInt> = nodes(n * maxdeg + 1).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|x| {
            let vals: Vec<Vec<BigInt>> = m
                .iter()
                .map(|row| row.iter().map(|p| p.eval(x)).collect())
                .collect();
            int_det(&vals)
        })
        .collect::<Result<_>>()?;
    interpolate(&xs, &ys)
}

/// Newton divided differences, expanded to monomial coefficients; the
/// result must have integer coefficients.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Result<IntPolynomial> {
    let k = xs.len();
    let mut dd: Vec<Rational> = ys.iter().cloned().map(Rational::from_integer).collect();
    for level in 1..k {
        for i in (level..k).rev() {
            let denom = &xs[i] - &xs[i - level];
            dd[i] = (&dd[i] - &dd[i - 1]) / Rational::from_integer(denom);
        }
    }
    // Horner on the Newton basis
    let mut coeffs: Vec<Rational> = alloc::vec![dd[k - 1].clone()];
    for i in (0..k - 1).rev() {
        let xi = Rational::from_integer(xs[i].clone());
        let mut next = alloc::vec![Rational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &xi;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    let ints = coeffs
        .into_iter()
        .map(|c| {
            c.is_integer()
                .then(|| c.to_integer())
                .ok_or_else(|| Error::Consistency("interpolated determinant is not integral".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::new(ints))
}

/// Determinant over `ℤ[t]` by Bareiss fraction-free elimination with exact
/// polynomial division. Independent of [`poly_matrix_det`]; used to
/// cross-check it.
pub fn poly_matrix_det_bareiss(m: &[Vec<IntPolynomial>]) -> Result<IntPolynomial> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<IntPolynomial>> = m.to_vec();
    let mut sign = false;
    let mut prev = IntPolynomial::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(IntPolynomial::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.div_exact(&prev).ok_or_else(|| {
                    Error::Consistency("Bareiss step is not an exact division".into())
                })?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 { IntPolynomial::one() } else { a[n - 1][n - 1].clone() };
    Ok(if sign { -d } else { d })
}

/// Characteristic polynomial `det(t·I − A)` of an integer matrix.
pub fn char_poly(a: &[Vec<BigInt>]) -> Result<IntPolynomial> {
    let t = IntPolynomial::t();
    let m: Vec<Vec<IntPolynomial>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| {
                    let c = IntPolynomial::constant(-v);
                    if i == j {
                        &c + &t
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    poly_matrix_det(&m)
}

/// `det(I − t·A)` of an integer matrix.
pub fn det_one_minus_t(a: &[Vec<BigInt>]) -> Result<IntPolynomial> {
    let m: Vec<Vec<IntPolynomial>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| {
                    let mut c = alloc::vec![BigInt::zero(), -v];
                    if i == j {
                        c[0] = BigInt::one();
                    }
                    IntPolynomial::new(c)
                })
                .collect()
        })
        .collect();
    poly_matrix_det(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    /// Laplace expansion along the first row: the independent oracle.
    fn cofactor_det(m: &[Vec<IntPolynomial>]) -> IntPolynomial {
        let n = m.len();
        if n == 0 {
            return IntPolynomial::one();
        }
        let mut acc = IntPolynomial::zero();
        for j in 0..n {
            let minor: Vec<Vec<IntPolynomial>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * &cofactor_det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn identity_has_determinant_one() {
        let id: Vec<Vec<IntPolynomial>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { p(&[1]) } else { p(&[]) }).collect())
            .collect();
        assert_eq!(poly_matrix_det(&id).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn diagonal_two_by_two() {
        let m = vec![vec![p(&[1, -1]), p(&[])], vec![p(&[]), p(&[1, 1])]];
        assert_eq!(poly_matrix_det(&m).unwrap(), p(&[1, 0, -1]));
        assert_eq!(poly_matrix_det_bareiss(&m).unwrap(), p(&[1, 0, -1]));
    }

    #[test]
    fn non_square_is_rejected() {
        let m = vec![vec![p(&[1]), p(&[2])]];
        assert!(matches!(poly_matrix_det(&m), Err(Error::Dimension(_))));
    }

    #[test]
    fn integer_determinant_with_pivoting() {
        let m = vec![
            vec![BigInt::from(0), BigInt::from(2)],
            vec![BigInt::from(3), BigInt::from(4)],
        ];
        assert_eq!(int_det(&m).unwrap(), BigInt::from(-6));
    }

    #[test]
    fn characteristic_polynomials() {
        let a = vec![
            vec![BigInt::from(3), BigInt::from(2)],
            vec![BigInt::from(-2), BigInt::from(-1)],
        ];
        assert_eq!(char_poly(&a).unwrap(), p(&[1, -2, 1]));
        assert_eq!(det_one_minus_t(&a).unwrap(), p(&[1, -2, 1]));
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<IntPolynomial>>> {
        (0usize..=4).prop_flat_map(|n| {
            proptest::collection::vec(
                proptest::collection::vec(
                    proptest::collection::vec(-5i64..=5, 0..=3).prop_map(|c| p(&c)),
                    n,
                ),
                n,
            )
        })
    }

    proptest! {
        #[test]
        fn interpolation_agrees_with_cofactor_expansion(m in arb_matrix()) {
            let oracle = cofactor_det(&m);
            prop_assert_eq!(poly_matrix_det(&m).unwrap(), oracle.clone());
            prop_assert_eq!(poly_matrix_det_bareiss(&m).unwrap(), oracle);
        }
    }
}
