use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{cyclotomic_polynomial, gcd_u64, lcm_u64, IntPolynomial, Rational};
use crate::{Error, Result};

/// The field `ℚ(ζ_N) = ℚ[x]/Φ_N(x)` with its power basis `1, ζ, …, ζ^{φ(N)−1}`.
///
/// Holds the reduction of every power `ζᵏ`, `0 ≤ k < N`, so that products can
/// be folded modulo `x^N − 1` first and then mapped into the basis.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    conductor: u32,
    modulus: IntPolynomial,
    powers: Vec<Vec<BigInt>>,
}

impl CycloField {
    pub fn new(conductor: u32) -> Arc<Self> {
        assert!(conductor >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(conductor);
        let phi = modulus.degree().unwrap();
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(conductor as usize);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..conductor {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic modulus
            let top = cur.pop().unwrap();
            cur.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, m) in cur.iter_mut().zip(modulus.coeffs()) {
                    *c -= &top * m;
                }
            }
        }
        Arc::new(CycloField {
            conductor,
            modulus,
            powers,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `φ(N)`, the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &IntPolynomial {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> Cyclotomic {
        Cyclotomic {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> Cyclotomic {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, q: Rational) -> Cyclotomic {
        let mut z = self.zero();
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(self: &Arc<Self>, n: i64) -> Cyclotomic {
        self.from_rational(Rational::from_integer(n.into()))
    }

    /// `ζ_Nᵏ` for any integer `k`.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> Cyclotomic {
        let k = k.rem_euclid(self.conductor as i64) as usize;
        Cyclotomic {
            field: self.clone(),
            coeffs: self.powers[k].iter().cloned().map(Rational::from_integer).collect(),
        }
    }

    /// `Σ cᵢ ζ_N^{kᵢ}` from (exponent, coefficient) terms.
    pub fn from_terms(self: &Arc<Self>, terms: &[(i64, Rational)]) -> Cyclotomic {
        let mut acc = vec![BigInt::zero(); self.conductor as usize];
        let den = terms.iter().fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
        for (k, c) in terms {
            let k = k.rem_euclid(self.conductor as i64) as usize;
            acc[k] += c.numer() * (&den / c.denom());
        }
        self.fold_powers(&acc, &den)
    }

    /// Element with the given power-basis coefficients (length `φ(N)`).
    pub fn element(self: &Arc<Self>, coeffs: Vec<Rational>) -> Result<Cyclotomic> {
        if coeffs.len() != self.degree() {
            return Err(Error::Dimension(alloc::format!(
                "Q(zeta_{}) needs {} coefficients, got {}",
                self.conductor,
                self.degree(),
                coeffs.len()
            )));
        }
        Ok(Cyclotomic {
            field: self.clone(),
            coeffs,
        })
    }

    /// Maps an integer vector indexed by exponents mod N, divided by `den`,
    /// into the power basis.
    fn fold_powers(self: &Arc<Self>, acc: &[BigInt], den: &BigInt) -> Cyclotomic {
        let phi = self.degree();
        let mut out: Vec<BigInt> = acc[..phi.min(acc.len())].to_vec();
        out.resize(phi, BigInt::zero());
        for (k, a) in acc.iter().enumerate().skip(phi) {
            if a.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                if !p.is_zero() {
                    *o += a * p;
                }
            }
        }
        Cyclotomic {
            field: self.clone(),
            coeffs: out
                .into_iter()
                .map(|c| Rational::new(c, den.clone()))
                .collect(),
        }
    }
}

/// Exact element of a cyclotomic field `ℚ(ζ_N)` in the power basis.
///
/// Elements of different conductors can be combined; both sides are lifted
/// to the field of the least common multiple first.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// `ζ_Nᵏ` in a freshly built field; prefer [`CycloField::zeta_pow`] in loops.
    pub fn zeta(conductor: u32, k: i64) -> Self {
        CycloField::new(conductor).zeta_pow(k)
    }

    pub fn rational(q: Rational) -> Self {
        CycloField::new(1).from_rational(q)
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Power-basis coefficients, length `φ(N)`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn to_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// Re-expresses the element in `ℚ(ζ_M)`; `M` must be a multiple of `N`.
    pub fn lift(&self, target: &Arc<CycloField>) -> Self {
        let (n, m) = (self.field.conductor, target.conductor);
        if n == m {
            return Cyclotomic {
                field: target.clone(),
                coeffs: self.coeffs.clone(),
            };
        }
        assert!(m % n == 0, "cannot lift Q(zeta_{n}) into Q(zeta_{m})");
        let step = (m / n) as i64;
        let terms: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 * step, c.clone()))
            .collect();
        target.from_terms(&terms)
    }

    /// Both operands in a common field.
    fn aligned(&self, other: &Self) -> (Self, Self) {
        let l = lcm_u64(self.conductor() as u64, other.conductor() as u64) as u32;
        let field = if l == self.conductor() {
            self.field.clone()
        } else if l == other.conductor() {
            other.field.clone()
        } else {
            CycloField::new(l)
        };
        (self.lift(&field), other.lift(&field))
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.conductor == other.field.conductor
    }

    fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (nums, den)
    }

    fn mul_same(&self, rhs: &Self) -> Self {
        let n = self.field.conductor as usize;
        let (a, da) = self.integer_form();
        let (b, db) = rhs.integer_form();
        let mut acc = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    acc[(i + j) % n] += x * y;
                }
            }
        }
        self.field.fold_powers(&acc, &(da * db))
    }

    /// Image under the Galois automorphism `ζ ↦ ζᵏ`, `gcd(k, N) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.field.conductor as i64;
        debug_assert_eq!(gcd_u64(k.rem_euclid(n) as u64, n as u64), 1);
        let terms: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 * k, c.clone()))
            .collect();
        self.field.from_terms(&terms)
    }

    /// Complex conjugation, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse via the product of the nontrivial Galois
    /// conjugates, whose product with `self` is the (rational) norm.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.field.conductor as i64;
        let mut others = self.field.one();
        for k in 2..n.max(2) {
            if gcd_u64(k as u64, n as u64) == 1 {
                others = others.mul_same(&self.galois(k));
            }
        }
        let norm = self
            .mul_same(&others)
            .to_rational()
            .ok_or_else(|| Error::Consistency("norm of a cyclotomic number is not rational".into()))?;
        Ok(others.scale(&norm.recip()))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients in `ℚ(ζ_M)` for comparison purposes; `M` a multiple of
    /// the conductor.
    pub fn coefficients_in(&self, field: &Arc<CycloField>) -> Vec<Rational> {
        self.lift(field).coeffs
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.same_field(other) {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = self.aligned(other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if !self.same_field(rhs) {
            let (a, b) = self.aligned(rhs);
            return &a + &b;
        }
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if !self.same_field(rhs) {
            let (a, b) = self.aligned(rhs);
            return &a - &b;
        }
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if !self.same_field(rhs) {
            let (a, b) = self.aligned(rhs);
            return a.mul_same(&b);
        }
        self.mul_same(rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders as `c₀ + c₁·z^1 + …` with `z = ζ_N`, e.g. `-1/2 + 3*z12^2`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.field.conductor;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "z{n}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use alloc::format;
    use proptest::prelude::*;

    #[test]
    fn zeta4_squared_is_minus_one() {
        let f = CycloField::new(4);
        let z = f.zeta_pow(1);
        assert_eq!(&z * &z, f.from_integer(-1));
    }

    #[test]
    fn zeta3_plus_zeta3_squared() {
        let f = CycloField::new(3);
        assert_eq!(&f.zeta_pow(1) + &f.zeta_pow(2), f.from_integer(-1));
    }

    #[test]
    fn conjugate_of_zeta5() {
        let f = CycloField::new(5);
        let c = f.zeta_pow(1).conj();
        // ζ⁴ = −1 − ζ − ζ² − ζ³ in the basis 1, ζ, ζ², ζ³
        assert_eq!(c.coefficients(), &[int(-1), int(-1), int(-1), int(-1)]);
        assert_eq!(c, f.zeta_pow(4));
    }

    #[test]
    fn mixed_conductors_lift_to_lcm() {
        let i = Cyclotomic::zeta(4, 1);
        let w = Cyclotomic::zeta(3, 1);
        let p = &i * &w;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, Cyclotomic::zeta(12, 7));
        assert_eq!(Cyclotomic::zeta(6, 2), Cyclotomic::zeta(3, 1));
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(CycloField::new(7).zero().inverse().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn inverse_of_sqrt_minus_three() {
        let f = CycloField::new(3);
        let s = &f.zeta_pow(1) - &f.zeta_pow(2);
        let inv = s.inverse().unwrap();
        assert_eq!(&s * &inv, f.one());
        assert_eq!(&s * &s, f.from_integer(-3));
        assert_eq!(inv, s.scale(&rat(-1, 3)));
    }

    #[test]
    fn display_format() {
        let f = CycloField::new(12);
        let x = &f.from_rational(rat(-1, 2)) + &f.zeta_pow(2).scale(&int(3));
        assert_eq!(format!("{x}"), "-1/2 + 3*z12^2");
        assert_eq!(format!("{}", f.zero()), "0");
    }

    fn arb_q12() -> impl Strategy<Value = Cyclotomic> {
        proptest::collection::vec((-20i64..20, 1i64..6), 4).prop_map(|cs| {
            let f = CycloField::new(12);
            f.element(cs.into_iter().map(|(n, d)| rat(n, d)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn norm_form_is_real(a in arb_q12()) {
            let n = &a * &a.conj();
            prop_assert_eq!(n.conj(), n);
        }

        #[test]
        fn field_axioms(a in arb_q12(), b in arb_q12(), c in arb_q12()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), CycloField::new(12).one());
            }
        }
    }
}
