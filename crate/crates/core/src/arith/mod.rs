//! Exact arithmetic: rationals, cyclotomic fields, polynomials over ℤ,
//! rational functions, truncated power series and polynomial determinants.

mod cyclotomic;
mod det;
pub mod modp;
mod poly;
mod ratfunc;
mod series;

pub use cyclotomic::{CycloField, Cyclotomic};
pub use det::{
    char_poly, det_one_minus_t, int_det, poly_matrix_det, poly_matrix_det_bareiss,
};
pub use poly::{cyclotomic_polynomial, IntPolynomial};
pub use ratfunc::{rational_eq, RationalFunction};
pub use series::{series_expand, PowerSeries};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

use num_bigint::BigInt;

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Greatest common divisor on machine integers.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u64(a, b) * b
}
