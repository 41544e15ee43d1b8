use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::series::{series_expand, PowerSeries};
use super::{IntPolynomial, Rational};
use crate::{Error, Result};

/// Quotient of two integer polynomials in canonical form: coprime in `ℤ[t]`
/// (no common polynomial factor and no common integer content) with a
/// denominator of positive leading coefficient. Structural equality is
/// therefore equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_one() {
            num = IntPolynomial::new(num.coeffs().iter().map(|a| a / &c).collect());
            den = IntPolynomial::new(den.coeffs().iter().map(|a| a / &c).collect());
        }
        Ok(RationalFunction { num, den })
    }

    /// Builds `num / den` where `num` has rational coefficients, clearing the
    /// common denominator of `num` into `den`.
    pub fn from_rational_numerator(num: &[Rational], den: IntPolynomial) -> Result<Self> {
        let l = num
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = num
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect::<Vec<_>>();
        Self::new(IntPolynomial::new(ints), den.scale(&l))
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(IntPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }

    /// `(1 − tᵉ)ᵇ` for any integer exponent `b`.
    pub fn one_minus_t_pow(e: usize, b: i32) -> Self {
        let base = IntPolynomial::one_minus_t_pow(e).pow(b.unsigned_abs());
        if b >= 0 {
            Self::from_poly(base)
        } else {
            Self::new(IntPolynomial::one(), base).expect("nonzero denominator")
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    /// The polynomial this function equals, if its denominator is `1`.
    pub fn to_polynomial(&self) -> Option<IntPolynomial> {
        self.den.is_one().then(|| self.num.clone())
    }

    /// `f(tᵏ)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        Self::new(self.num.substitute_power(k), self.den.substitute_power(k))
            .expect("nonzero denominator")
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let (n, d) = (self.num.pow(e.unsigned_abs()), self.den.pow(e.unsigned_abs()));
        if e >= 0 {
            Self::new(n, d)
        } else {
            Self::new(d, n)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Taylor expansion at `t = 0` up to `tᵒʳᵈᵉʳ`.
    pub fn expand(&self, order: usize) -> Result<PowerSeries> {
        series_expand(self, order)
    }
}

/// Equality of rational functions by cross-multiplication; independent of
/// the canonical form.
pub fn rational_eq(f: &RationalFunction, g: &RationalFunction) -> bool {
    &f.num * &g.den == &g.num * &f.den
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl core::ops::Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        RationalFunction::add(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_powers_keep_their_sign() {
        // (1 − t)⁻¹·(1 − t) = 1 and (1 − t)⁻¹ = 1 + t + t² + …
        let inv = RationalFunction::one_minus_t_pow(1, -1);
        assert!(inv.mul(&RationalFunction::one_minus_t_pow(1, 1)).to_polynomial().unwrap().is_one());
        let s = inv.expand(3).unwrap().to_integers().unwrap();
        assert_eq!(s, [1, 1, 1, 1].map(BigInt::from));
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn reduces_to_canonical_form() {
        let f = rf(&[1, 0, -1], &[1, -1]);
        assert_eq!(f.numerator(), &p(&[1, 1]));
        assert!(f.denominator().is_one());
        let g = rf(&[2], &[-4, 0, -4]);
        assert_eq!(g.numerator(), &p(&[-1]));
        assert_eq!(g.denominator(), &p(&[2, 0, 2]));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(
            RationalFunction::new(p(&[1]), IntPolynomial::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn cross_multiplied_equality() {
        assert!(rational_eq(&rf(&[1, 0, -1], &[1, -1]), &rf(&[1, 1], &[1])));
        assert!(!rational_eq(&rf(&[1, -1], &[1]), &rf(&[1, 1], &[1])));
    }

    #[test]
    fn negative_powers_of_one_minus_t() {
        let f = RationalFunction::one_minus_t_pow(6, -2);
        assert!(f.numerator().is_one());
        assert_eq!(f.denominator(), &p(&[1, 0, 0, 0, 0, 0, -1]).pow(2));
        let g = RationalFunction::one_minus_t_pow(3, 2).mul(&f);
        assert_eq!(g.denominator(), &p(&[1, 0, 0, 1]).pow(2));
    }

    #[test]
    fn rational_numerator_is_cleared() {
        let f = RationalFunction::from_rational_numerator(
            &[Rational::new(1.into(), 2.into()), Rational::new(1.into(), 3.into())],
            p(&[1]),
        )
        .unwrap();
        assert_eq!(f.numerator(), &p(&[3, 2]));
        assert_eq!(f.denominator(), &p(&[6]));
    }
}
