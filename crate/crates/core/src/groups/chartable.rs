use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use super::{ConjugacyClasses, MatrixGroup};
use crate::arith::modp::{dixon_prime, PrimeField};
use crate::arith::{CycloField, Cyclotomic, Rational};
use crate::{Error, Result};

/// Irreducible characters of a finite group, one row per character and
/// one column per conjugacy class (in the order of [`ConjugacyClasses`]).
///
/// Row 0 is the trivial character; the remaining rows are sorted by degree
/// and then lexicographically by their values. All values live in
/// `ℚ(ζₑ)` with `e` the group exponent.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    field: Arc<CycloField>,
    rows: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
    class_sizes: Vec<u64>,
    order: u64,
    prime: u64,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.rows[i]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn group_order(&self) -> u64 {
        self.order
    }

    /// The prime used for the modular eigenvalue computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// `⟨a, b⟩ = (1/|G|) Σ_c |C_c| a(c) conj(b(c))`.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = self.field.zero();
        for ((x, y), &size) in a.iter().zip(b).zip(&self.class_sizes) {
            let term = x * &y.conj();
            acc = &acc + &term.scale(&Rational::from_integer(size.into()));
        }
        acc.scale(&Rational::new(One::one(), self.order.into()))
    }

    /// Multiplicities of the irreducibles in a class function; fails unless
    /// every multiplicity is a non-negative integer.
    pub fn decompose(&self, chi: &[Cyclotomic]) -> Result<Vec<u64>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let m = self.inner_product(chi, row);
                m.to_rational()
                    .filter(|q| q.is_integer() && *q >= Rational::zero())
                    .and_then(|q| u64::try_from(q.to_integer()).ok())
                    .ok_or_else(|| {
                        Error::Consistency(format!(
                            "multiplicity of irreducible {} is {}, not a natural number",
                            i, m
                        ))
                    })
            })
            .collect()
    }
}

/// Pointwise product of two class functions.
pub fn class_function_product(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

/// Character of the defining representation: traces of class
/// representatives.
pub fn natural_character(group: &MatrixGroup, classes: &ConjugacyClasses) -> Vec<Cyclotomic> {
    (0..classes.len())
        .map(|c| group.element(classes.representative(c)).trace())
        .collect()
}

/// Irreducible characters by Dixon's method: simultaneous eigenvectors of
/// the class multiplication matrices over `F_p`, lifted to `ℚ(ζₑ)` through
/// the eigenvalue multiplicities of each class.
pub fn character_table(group: &MatrixGroup, classes: &ConjugacyClasses) -> Result<CharacterTable> {
    let order = group.order() as u64;
    let k = classes.len();
    let exponent = group.exponent();
    let p = dixon_prime(exponent, order);
    let fp = PrimeField::new(p);

    let mats = class_matrices(group, classes, &fp);
    let omegas = split_common_eigenspaces(&fp, &mats, k)?;

    let sizes: Vec<u64> = (0..k).map(|c| classes.size(c) as u64).collect();
    let field = CycloField::new(exponent as u32);
    let z = fp.root_of_unity(exponent);
    let power_classes: Vec<Vec<usize>> = (0..k)
        .map(|c| {
            let g = classes.representative(c);
            let mut out = vec![0];
            let mut y = g;
            while y != 0 {
                out.push(classes.class_of(y));
                y = group.mul(y, g);
            }
            out
        })
        .collect();

    let mut rows: Vec<(u64, Vec<Cyclotomic>)> = Vec::with_capacity(k);
    for omega in &omegas {
        let degree = degree_mod_p(&fp, omega, &sizes, classes, order)?;
        let d = fp.reduce(degree as i64);
        let modular: Vec<u64> = (0..k)
            .map(|c| fp.mul(fp.mul(omega[c], d), fp.inv(sizes[c] % p)))
            .collect();
        let row = (0..k)
            .map(|c| lift_value(&fp, &field, &modular, &power_classes[c], exponent, z, degree))
            .collect::<Result<Vec<_>>>()?;
        rows.push((degree, row));
    }

    rows.sort_by(|(da, ra), (db, rb)| {
        let trivial = |r: &Vec<Cyclotomic>| r.iter().all(|v| v.to_rational() == Some(Rational::one()));
        trivial(rb)
            .cmp(&trivial(ra))
            .then(da.cmp(db))
            .then_with(|| compare_rows(ra, rb))
    });
    let table = CharacterTable {
        field,
        degrees: rows.iter().map(|(d, _)| *d).collect(),
        rows: rows.into_iter().map(|(_, r)| r).collect(),
        class_sizes: sizes,
        order,
        prime: p,
    };
    check_table(&table)?;
    Ok(table)
}

fn compare_rows(a: &[Cyclotomic], b: &[Cyclotomic]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.coefficients().cmp(y.coefficients()))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// `mats[r][t][s]` = #{x ∈ C_r : x⁻¹·z_s ∈ C_t}, reduced mod p, so that the
/// central characters `ω` satisfy `mats[r]·ω = ω(C_r)·ω`.
fn class_matrices(group: &MatrixGroup, classes: &ConjugacyClasses, fp: &PrimeField) -> Vec<Vec<Vec<u64>>> {
    let k = classes.len();
    let mut counts = vec![vec![vec![0u64; k]; k]; k];
    let inverses: Vec<usize> = (0..group.order()).map(|x| group.inv(x)).collect();
    for s in 0..k {
        let zs = classes.representative(s);
        for (x, &xi) in inverses.iter().enumerate() {
            let t = classes.class_of(group.mul(xi, zs));
            counts[classes.class_of(x)][t][s] += 1;
        }
    }
    for m in counts.iter_mut() {
        for row in m.iter_mut() {
            for v in row.iter_mut() {
                *v %= fp.modulus();
            }
        }
    }
    counts
}

/// Splits `F_p^k` into common one-dimensional eigenspaces of `mats` and
/// returns each spanning vector scaled to have first coordinate 1.
fn split_common_eigenspaces(fp: &PrimeField, mats: &[Vec<Vec<u64>>], k: usize) -> Result<Vec<Vec<u64>>> {
    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity];
    for m in mats.iter().skip(1) {
        if spaces.iter().all(|w| w.len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for w in spaces {
            if w.len() == 1 {
                next.push(w);
                continue;
            }
            let images: Vec<Vec<u64>> = w.iter().map(|v| mat_vec(fp, m, v)).collect();
            let coords = fp.coordinates(&w, &images).ok_or_else(|| {
                Error::Consistency("class matrix does not preserve an eigenspace".into())
            })?;
            let d = w.len();
            // restricted map: column j is coords[j]
            let mut found = 0;
            for lambda in 0..fp.modulus() {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|i| {
                        (0..d)
                            .map(|j| {
                                let v = coords[j][i];
                                if i == j { fp.sub(v, lambda) } else { v }
                            })
                            .collect()
                    })
                    .collect();
                let ns = fp.nullspace(&shifted, d);
                if ns.is_empty() {
                    continue;
                }
                found += ns.len();
                next.push(
                    ns.iter()
                        .map(|u| {
                            (0..k)
                                .map(|c| {
                                    u.iter()
                                        .zip(&w)
                                        .fold(0, |acc, (&a, b)| fp.add(acc, fp.mul(a, b[c])))
                                })
                                .collect()
                        })
                        .collect(),
                );
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(Error::Consistency(
                    "class matrix is not diagonalizable over the chosen prime field".into(),
                ));
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|w| w.len() != 1) {
        return Err(Error::Consistency(
            "class matrices do not separate the irreducible characters".into(),
        ));
    }
    spaces
        .into_iter()
        .map(|mut w| {
            let v = w.pop().unwrap();
            if v[0] == 0 {
                return Err(Error::Consistency("central character vanishes at the identity".into()));
            }
            let inv = fp.inv(v[0]);
            Ok(v.iter().map(|&x| fp.mul(x, inv)).collect())
        })
        .collect()
}

fn mat_vec(fp: &PrimeField, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| fp.add(acc, fp.mul(a, b))))
        .collect()
}

/// `χ(1)² = |G| / Σ_s ω_s·ω_{s*}/|C_s|`, solved for `χ(1) ≤ √|G|`.
fn degree_mod_p(
    fp: &PrimeField,
    omega: &[u64],
    sizes: &[u64],
    classes: &ConjugacyClasses,
    order: u64,
) -> Result<u64> {
    let p = fp.modulus();
    let sum = (0..omega.len()).fold(0, |acc, s| {
        let term = fp.mul(fp.mul(omega[s], omega[classes.inverse(s)]), fp.inv(sizes[s] % p));
        fp.add(acc, term)
    });
    if sum == 0 {
        return Err(Error::Consistency("degree equation is singular mod p".into()));
    }
    let square = fp.mul(order % p, fp.inv(sum));
    (1..=order)
        .take_while(|d| d * d <= order)
        .find(|&d| fp.mul(d % p, d % p) == square)
        .ok_or_else(|| Error::Consistency("no admissible character degree".into()))
}

/// Recovers `χ(g) = Σ_k m_k ζ_o^k` from the modular values on the powers of
/// `g` (`o` = order of `g`), where `m_k` is the multiplicity of the
/// eigenvalue `ζ_o^k`.
fn lift_value(
    fp: &PrimeField,
    field: &Arc<CycloField>,
    modular: &[u64],
    powers: &[usize],
    exponent: u64,
    z: u64,
    degree: u64,
) -> Result<Cyclotomic> {
    let o = powers.len() as u64;
    let step = exponent / o;
    let zo = fp.pow(z, step);
    let zo_inv = fp.inv(zo);
    let inv_o = fp.inv(o % fp.modulus());
    let mut terms = Vec::new();
    let mut total = 0;
    for kk in 0..o {
        let base = fp.pow(zo_inv, kk);
        let mut acc = 0;
        let mut w = 1;
        for &c in powers {
            acc = fp.add(acc, fp.mul(modular[c], w));
            w = fp.mul(w, base);
        }
        let m = fp.mul(acc, inv_o);
        if m > degree {
            return Err(Error::Consistency(format!(
                "eigenvalue multiplicity {} exceeds the degree {}",
                m, degree
            )));
        }
        total += m;
        if m != 0 {
            terms.push(((kk * step) as i64, Rational::from_integer(m.into())));
        }
    }
    if total != degree {
        return Err(Error::Consistency("eigenvalue multiplicities do not sum to the degree".into()));
    }
    Ok(field.from_terms(&terms))
}

fn check_table(table: &CharacterTable) -> Result<()> {
    let sum: u64 = table.degrees.iter().map(|d| d * d).sum();
    if sum != table.order {
        return Err(Error::Consistency(format!(
            "squared degrees sum to {}, group order is {}",
            sum, table.order
        )));
    }
    for i in 0..table.len() {
        for j in i..table.len() {
            let ip = table.inner_product(&table.rows[i], &table.rows[j]);
            let expected = Rational::from_integer(u8::from(i == j).into());
            if ip.to_rational() != Some(expected) {
                return Err(Error::Consistency(format!(
                    "characters {} and {} have inner product {}",
                    i, j, ip
                )));
            }
        }
    }
    Ok(())
}
