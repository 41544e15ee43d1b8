use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Rational, RationalFunction};
use crate::{Error, Result};

/// Power series truncated after `t^order`; always holds `order + 1`
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` terms.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(
            coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::new(
            (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
            order,
        )
    }

    /// Cauchy product truncated to the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }
}

/// Taylor coefficients of `f` at `t = 0` up to `t^order`.
pub fn series_expand(f: &RationalFunction, order: usize) -> Result<PowerSeries> {
    let den = f.denominator();
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::SingularSeries);
    }
    let d0 = Rational::from_integer(d0);
    let num = f.numerator();
    let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = Rational::from_integer(num.coeff(k));
        for (j, dj) in den.coeffs().iter().enumerate().skip(1).take(k) {
            if !dj.is_zero() {
                acc -= &out[k - j] * Rational::from_integer(dj.clone());
            }
        }
        out.push(acc / &d0);
    }
    Ok(PowerSeries { coeffs: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::IntPolynomial;

    fn rf(n: IntPolynomial, d: IntPolynomial) -> RationalFunction {
        RationalFunction::new(n, d).unwrap()
    }

    fn one_minus(e: usize) -> IntPolynomial {
        IntPolynomial::one_minus_t_pow(e)
    }

    #[test]
    fn geometric_series() {
        let f = rf(IntPolynomial::one(), one_minus(1));
        assert_eq!(series_expand(&f, 4).unwrap(), PowerSeries::from_integers(&[1, 1, 1, 1, 1], 4));
    }

    /// Counts monomials `w^a x^b y^c z^d` with `2a + 3b + 4c + 6d = k`, minus
    /// the multiples of the degree-12 relation.
    fn weighted_monomials(weights: &[usize], k: usize) -> i64 {
        fn go(weights: &[usize], k: usize) -> i64 {
            match weights.split_first() {
                None => (k == 0) as i64,
                Some((&w, rest)) => (0..=k / w).map(|a| go(rest, k - a * w)).sum(),
            }
        }
        go(weights, k)
    }

    #[test]
    fn invariant_ring_of_tetrahedral_group() {
        let weights = [2, 3, 4, 6];
        let oracle: Vec<i64> = (0..=6)
            .map(|k| {
                weighted_monomials(&weights, k)
                    - if k >= 12 { weighted_monomials(&weights, k - 12) } else { 0 }
            })
            .collect();
        assert_eq!(oracle, [1, 0, 1, 1, 2, 1, 4]);
        let den: IntPolynomial = weights.iter().map(|&w| one_minus(w)).product();
        let f = rf(one_minus(12), den);
        assert_eq!(series_expand(&f, 6).unwrap(), PowerSeries::from_integers(&oracle, 6));
    }

    /// Integer long division of power series, independent of `series_expand`.
    fn long_division(num: &[i64], den: &[i64], order: usize) -> Vec<i64> {
        let mut rem: Vec<i64> = (0..=order).map(|k| num.get(k).copied().unwrap_or(0)).collect();
        let mut out = Vec::new();
        for k in 0..=order {
            let q = rem[k] / den[0];
            for (j, d) in den.iter().enumerate() {
                if k + j <= order {
                    rem[k + j] -= q * d;
                }
            }
            out.push(q);
        }
        out
    }

    #[test]
    fn long_division_example() {
        let den = &one_minus(1) * &one_minus(2).pow(2);
        let den_i64: Vec<i64> = den.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
        let oracle = long_division(&[1, 0, 0, 0, -1], &den_i64, 4);
        assert_eq!(oracle, [1, 1, 3, 3, 5]);
        let f = rf(one_minus(4), den);
        assert_eq!(series_expand(&f, 4).unwrap(), PowerSeries::from_integers(&oracle, 4));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let f = rf(IntPolynomial::one(), IntPolynomial::t());
        assert_eq!(series_expand(&f, 3), Err(Error::SingularSeries));
    }
}
