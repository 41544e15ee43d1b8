//! McKay matrices of a finite subgroup of SL(2) or SL(3), the polynomial
//! matrices `M(t)`, `M₀(t)`, Molien series and the decomposition of the
//! symmetric powers of the natural representation.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{
    cyclotomic_polynomial, poly_matrix_det, CycloField, Cyclotomic, IntPolynomial,
    Rational, RationalFunction,
};
use crate::groups::{class_function_product, CharacterTable, ConjugacyClasses, MatrixGroup};
use crate::{Error, Result};

/// Tensor-product multiplicities: `b[i][j]` is the multiplicity of the
/// `i`-th irreducible in `γ ⊗ γ_j`, `bstar[i][j]` the same for `γ* ⊗ γ_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McKayMatrices {
    pub b: Vec<Vec<i64>>,
    pub bstar: Vec<Vec<i64>>,
}

impl McKayMatrices {
    pub fn size(&self) -> usize {
        self.b.len()
    }

    pub fn bstar_is_transpose(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.bstar[i][j] == self.b[j][i]))
    }

    pub fn b_is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.b[i][j] == self.b[j][i]))
    }
}

pub fn mckay_matrices(table: &CharacterTable, chi_gamma: &[Cyclotomic]) -> Result<McKayMatrices> {
    let conj: Vec<Cyclotomic> = chi_gamma.iter().map(Cyclotomic::conj).collect();
    let columns = |chi: &[Cyclotomic]| -> Result<Vec<Vec<i64>>> {
        let cols = table
            .rows()
            .iter()
            .map(|row| table.decompose(&class_function_product(chi, row)))
            .collect::<Result<Vec<_>>>()?;
        let k = table.len();
        Ok((0..k)
            .map(|i| (0..k).map(|j| cols[j][i] as i64).collect())
            .collect())
    };
    Ok(McKayMatrices {
        b: columns(chi_gamma)?,
        bstar: columns(&conj)?,
    })
}

/// Square matrix over `ℤ[t]`.
pub type PolyMatrix = Vec<Vec<IntPolynomial>>;

/// `M = (1+t²)I − tB` for `n = 2` or `M = (1−t³)I − tB + t²B*` for
/// `n = 3`, together with `M₀`: `M` with column 0 replaced by `e₀`.
pub fn build_m(mm: &McKayMatrices, n: usize) -> Result<(PolyMatrix, PolyMatrix)> {
    if n != 2 && n != 3 {
        return Err(Error::Dimension(format!("M(t) is defined for n = 2, 3, not {n}")));
    }
    let k = mm.size();
    let m: PolyMatrix = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let diag = i64::from(i == j);
                    let c = if n == 2 {
                        vec![diag, -mm.b[i][j], diag]
                    } else {
                        vec![diag, -mm.b[i][j], mm.bstar[i][j], -diag]
                    };
                    IntPolynomial::from_i64(&c)
                })
                .collect()
        })
        .collect();
    let mut m0 = m.clone();
    for (i, row) in m0.iter_mut().enumerate() {
        row[0] = IntPolynomial::from_i64(&[i64::from(i == 0)]);
    }
    Ok((m, m0))
}

/// `det M(t)` and `det M₀(t)`.
pub fn m_determinants(mm: &McKayMatrices, n: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    let (m, m0) = build_m(mm, n)?;
    Ok((poly_matrix_det(&m)?, poly_matrix_det(&m0)?))
}

// ---- polynomials over a cyclotomic field, ascending coefficients ----

fn class_factors(group: &MatrixGroup, classes: &ConjugacyClasses) -> Vec<Vec<Cyclotomic>> {
    (0..classes.len())
        .map(|c| group.element(classes.representative(c)).det_one_minus_t())
        .collect()
}

/// Power series of `1/d(t)` to `order`, for `d(0) = 1`.
fn reciprocal_series(d: &[Cyclotomic], order: usize) -> Vec<Cyclotomic> {
    let field = d[0].field().clone();
    let mut s: Vec<Cyclotomic> = Vec::with_capacity(order + 1);
    s.push(field.one());
    for m in 1..=order {
        let mut acc = field.zero();
        for (j, dj) in d.iter().enumerate().skip(1).take(m) {
            if !dj.is_zero() {
                acc = &acc - &(dj * &s[m - j]);
            }
        }
        s.push(acc);
    }
    s
}

/// Exact quotient `num / d` for `d(0) = 1`, or `None` if `d ∤ num`.
fn divide_exact(num: &[Cyclotomic], d: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
    let dn = d.len() - 1;
    if num.len() <= dn {
        return num.iter().all(Cyclotomic::is_zero).then(Vec::new);
    }
    let qlen = num.len() - dn;
    let mut rem: Vec<Cyclotomic> = num.to_vec();
    let mut q = Vec::with_capacity(qlen);
    for i in 0..qlen {
        let c = rem[i].clone();
        if !c.is_zero() {
            for (j, dj) in d.iter().enumerate() {
                if !dj.is_zero() {
                    rem[i + j] = &rem[i + j] - &(&c * dj);
                }
            }
        }
        q.push(c);
    }
    rem[qlen..].iter().all(Cyclotomic::is_zero).then_some(q)
}

fn rational_coefficients(p: &[Cyclotomic]) -> Result<Vec<Rational>> {
    p.iter()
        .map(|c| {
            c.to_rational()
                .ok_or_else(|| Error::Consistency(format!("coefficient {c} is not rational")))
        })
        .collect()
}

fn integer_polynomial(p: &[Rational]) -> Result<IntPolynomial> {
    p.iter()
        .map(|q| {
            q.is_integer()
                .then(|| q.to_integer())
                .ok_or_else(|| Error::Consistency(format!("coefficient {q} is not integral")))
        })
        .collect::<Result<Vec<_>>>()
        .map(IntPolynomial::new)
}

/// `∏_c det(I − t·g_c)` over conjugacy-class representatives.
pub fn det_m_class_product(group: &MatrixGroup, classes: &ConjugacyClasses) -> Result<IntPolynomial> {
    let factors = class_factors(group, classes);
    let field = group.field().clone();
    let mut acc = vec![field.one()];
    for f in &factors {
        let mut next = vec![field.zero(); acc.len() + f.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                next[i + j] = &next[i + j] + &(a * b);
            }
        }
        acc = next;
    }
    integer_polynomial(&rational_coefficients(&acc)?)
}

/// Molien series `(1/|G|) Σ_c |C_c| / det(I − t·g_c)`.
///
/// Each class term is written over `(1 − t^k)ⁿ` with `k` the order of the
/// class; the common denominator is the product of the cyclotomic
/// polynomials `Φ_d ⁿ` for the divisors `d` of the class orders, and shared
/// `Φ_d` factors are cancelled by trial division.
pub fn molien_series(group: &MatrixGroup, classes: &ConjugacyClasses) -> Result<RationalFunction> {
    let n = group.dim();
    let field = group.field().clone();
    let factors = class_factors(group, classes);
    let mut divisors: Vec<u64> = Vec::new();
    for c in 0..classes.len() {
        let k = classes.element_order(c);
        for d in (1..=k).filter(|d| k % d == 0) {
            if !divisors.contains(&d) {
                divisors.push(d);
            }
        }
    }
    divisors.sort_unstable();
    let den: IntPolynomial = divisors
        .iter()
        .map(|&d| cyclotomic_polynomial(d as u32).pow(n as u32))
        .product();

    let mut num: Vec<Cyclotomic> = vec![field.zero(); den.coeffs().len()];
    for (c, d) in factors.iter().enumerate() {
        let k = classes.element_order(c) as usize;
        let full = IntPolynomial::one_minus_t_pow(k).pow(n as u32);
        let full_c = lift_poly(&field, &full);
        let q = divide_exact(&full_c, d)
            .ok_or_else(|| Error::Consistency("class factor does not divide (1-t^k)^n".into()))?;
        let cofactor = den
            .div_exact(&full)
            .ok_or_else(|| Error::Consistency("(1-t^k)^n does not divide the denominator".into()))?;
        let weight = Rational::new(BigInt::from(classes.size(c)), BigInt::from(group.order()));
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            let qi = qi.scale(&weight);
            for (j, cj) in cofactor.coeffs().iter().enumerate() {
                if !cj.is_zero() {
                    num[i + j] = &num[i + j] + &qi.scale(&Rational::from_integer(cj.clone()));
                }
            }
        }
    }
    let num = rational_coefficients(&num)?;
    let l = num.iter().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let mut num = integer_polynomial(&num.iter().map(|c| c * Rational::from_integer(l.clone())).collect::<Vec<_>>())?;
    let mut den = den.scale(&l);
    for &d in divisors.iter().rev() {
        let phi = cyclotomic_polynomial(d as u32);
        while let (Some(a), Some(b)) = (num.div_exact(&phi), den.div_exact(&phi)) {
            num = a;
            den = b;
        }
    }
    RationalFunction::new(num, den)
}

fn lift_poly(field: &Arc<CycloField>, p: &IntPolynomial) -> Vec<Cyclotomic> {
    p.coeffs()
        .iter()
        .map(|c| field.from_rational(Rational::from_integer(c.clone())))
        .collect()
}

/// Multiplicities `v[m][i]` of the `i`-th irreducible in the `m`-th
/// symmetric power of the natural representation, `m = 0..=order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesVector {
    v: Vec<Vec<BigInt>>,
}

impl SeriesVector {
    pub fn new(v: Vec<Vec<BigInt>>) -> Self {
        SeriesVector { v }
    }

    pub fn order(&self) -> usize {
        self.v.len().saturating_sub(1)
    }

    pub fn components(&self) -> usize {
        self.v.first().map_or(0, Vec::len)
    }

    /// `v_m`, one entry per irreducible.
    pub fn at(&self, m: usize) -> &[BigInt] {
        &self.v[m]
    }

    /// Coefficients of the `i`-th component series.
    pub fn component(&self, i: usize) -> Vec<BigInt> {
        self.v.iter().map(|vm| vm[i].clone()).collect()
    }

    pub fn get_mut(&mut self, m: usize, i: usize) -> &mut BigInt {
        &mut self.v[m][i]
    }
}

/// `v_m` for `m ≤ order` by averaging `conj(χ_i)/det(I − t·g)` over classes.
pub fn symmetric_power_vector(
    group: &MatrixGroup,
    classes: &ConjugacyClasses,
    table: &CharacterTable,
    order: usize,
) -> Result<SeriesVector> {
    let factors = class_factors(group, classes);
    let traces: Vec<Vec<Cyclotomic>> =
        factors.iter().map(|d| reciprocal_series(d, order)).collect();
    decompose_series(table, &traces, order)
}

/// Same as [`symmetric_power_vector`], but with the symmetric-power
/// characters built from power traces by Newton's identity
/// `m·h_m = Σ_{r=1}^{m} p_r·h_{m−r}`.
pub fn symmetric_power_vector_newton(
    group: &MatrixGroup,
    classes: &ConjugacyClasses,
    table: &CharacterTable,
    order: usize,
) -> Result<SeriesVector> {
    let field = group.field().clone();
    let traces: Vec<Vec<Cyclotomic>> = (0..classes.len())
        .map(|c| {
            let g = classes.representative(c);
            let mut p = Vec::with_capacity(order + 1);
            let mut x = 0;
            p.push(field.zero());
            for _ in 1..=order {
                x = group.mul(x, g);
                p.push(group.element(x).trace());
            }
            let mut h = vec![field.one()];
            for m in 1..=order {
                let mut acc = field.zero();
                for r in 1..=m {
                    acc = &acc + &(&p[r] * &h[m - r]);
                }
                h.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(m))));
            }
            h
        })
        .collect();
    decompose_series(table, &traces, order)
}

fn decompose_series(table: &CharacterTable, traces: &[Vec<Cyclotomic>], order: usize) -> Result<SeriesVector> {
    let v = (0..=order)
        .map(|m| {
            let chi: Vec<Cyclotomic> = traces.iter().map(|t| t[m].clone()).collect();
            table
                .decompose(&chi)
                .map(|mult| mult.into_iter().map(BigInt::from).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SeriesVector { v })
}

fn mat_vec(a: &[Vec<i64>], v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(&x, y)| BigInt::from(x) * y).sum())
        .collect()
}

/// Truncated solution of `M(t)·x = e₀` by coefficient recursion.
pub fn solve_p_by_linear_system(mm: &McKayMatrices, n: usize, order: usize) -> Result<SeriesVector> {
    if n != 2 && n != 3 {
        return Err(Error::Dimension(format!("M(t) is defined for n = 2, 3, not {n}")));
    }
    let k = mm.size();
    let zero = vec![BigInt::zero(); k];
    let mut v: Vec<Vec<BigInt>> = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let back = |j: usize| if m >= j { &v[m - j] } else { &zero };
        let mut x = if m == 0 {
            let mut e0 = zero.clone();
            e0[0] = BigInt::one();
            e0
        } else {
            mat_vec(&mm.b, back(1))
        };
        if n == 2 {
            for (xi, yi) in x.iter_mut().zip(back(2)) {
                *xi -= yi;
            }
        } else {
            for ((xi, yi), zi) in x.iter_mut().zip(mat_vec(&mm.bstar, back(2))).zip(back(3)) {
                *xi += zi - yi;
            }
        }
        v.push(x);
    }
    Ok(SeriesVector { v })
}

/// Checks `v_{m+2} = B·v_{m+1} − B*·v_m + v_{m−1}` (`n = 3`) or
/// `B·v_m = v_{m+1} + v_{m−1}` (`n = 2`) throughout the truncation, with
/// `v_{−1} = 0`.
pub fn check_cg_recursion(v: &SeriesVector, mm: &McKayMatrices, n: usize) -> bool {
    let k = mm.size();
    if v.components() != k || v.order() < 2 {
        return false;
    }
    let zero = vec![BigInt::zero(); k];
    let at = |m: isize| if m < 0 { &zero } else { &v.v[m as usize] };
    let top = v.order() as isize;
    match n {
        2 => (0..top).all(|m| {
            let lhs = mat_vec(&mm.b, at(m));
            let rhs: Vec<BigInt> = at(m + 1).iter().zip(at(m - 1)).map(|(a, b)| a + b).collect();
            lhs == rhs
        }),
        3 => (-1..top - 1).all(|m| {
            let bv = mat_vec(&mm.b, at(m + 1));
            let bsv = mat_vec(&mm.bstar, at(m));
            let rhs: Vec<BigInt> = (0..k).map(|i| &bv[i] - &bsv[i] + &at(m - 1)[i]).collect();
            at(m + 2) == rhs.as_slice()
        }),
        _ => false,
    }
}

/// `Σ_i v_{mi}·deg γ_i = C(m+n−1, n−1)` and all entries non-negative.
pub fn check_dimension_counts(v: &SeriesVector, degrees: &[u64], n: usize) -> bool {
    (0..=v.order()).all(|m| {
        let row = v.at(m);
        let total: BigInt = row.iter().zip(degrees).map(|(x, &d)| x * BigInt::from(d)).sum();
        row.iter().all(|x| *x >= BigInt::zero()) && total == binomial(m + n - 1, n - 1)
    })
}

fn binomial(a: usize, b: usize) -> BigInt {
    (0..b).fold(BigInt::one(), |acc, i| acc * BigInt::from(a - i) / BigInt::from(i + 1))
}


#[cfg(test)]
mod tests;
