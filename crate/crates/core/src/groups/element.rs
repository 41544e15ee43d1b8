use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{CycloField, Cyclotomic, Rational};
use crate::{Error, Result};

/// Square matrix over a cyclotomic field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupElement {
    dim: usize,
    entries: Vec<Cyclotomic>,
}

impl GroupElement {
    pub fn new(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension(format!(
                "group elements must be square and nonempty, got {} rows",
                dim
            )));
        }
        Ok(GroupElement {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(field: &Arc<CycloField>, dim: usize) -> Self {
        let entries = (0..dim * dim)
            .map(|k| if k / dim == k % dim { field.one() } else { field.zero() })
            .collect();
        GroupElement { dim, entries }
    }

    /// `c·I`
    pub fn scalar(c: &Cyclotomic, dim: usize) -> Self {
        let zero = c.field().zero();
        let entries = (0..dim * dim)
            .map(|k| if k / dim == k % dim { c.clone() } else { zero.clone() })
            .collect();
        GroupElement { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Cyclotomic>> {
        self.entries.chunks(self.dim).map(<[_]>::to_vec).collect()
    }

    /// Least common multiple of the entry conductors.
    pub fn conductor(&self) -> u32 {
        self.entries
            .iter()
            .fold(1u64, |l, c| crate::arith::lcm_u64(l, c.conductor() as u64)) as u32
    }

    /// Same matrix with every entry expressed in `field`.
    pub fn lift(&self, field: &Arc<CycloField>) -> Self {
        GroupElement {
            dim: self.dim,
            entries: self.entries.iter().map(|c| c.lift(field)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.entry(i, 0) * rhs.entry(0, j);
                for k in 1..n {
                    acc = &acc + &(self.entry(i, k) * rhs.entry(k, j));
                }
                entries.push(acc);
            }
        }
        GroupElement { dim: n, entries }
    }

    pub fn neg(&self) -> Self {
        GroupElement {
            dim: self.dim,
            entries: self.entries.iter().map(|c| -c).collect(),
        }
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut acc = self.entry(0, 0).clone();
        for i in 1..self.dim {
            acc = &acc + self.entry(i, i);
        }
        acc
    }

    /// Coefficients `c₀ … c_n` of `det(I − t·g) = Σ cₖ tᵏ`, i.e.
    /// `cₖ = (−1)ᵏ eₖ` with `eₖ` the elementary symmetric functions of the
    /// eigenvalues, read off as sums of principal minors.
    pub fn det_one_minus_t(&self) -> Vec<Cyclotomic> {
        let n = self.dim;
        let field = self.entries[0].field().clone();
        let mut out = Vec::with_capacity(n + 1);
        out.push(field.one());
        for k in 1..=n {
            let mut ek = field.zero();
            for subset in subsets(n, k) {
                ek = &ek + &self.minor(&subset);
            }
            out.push(if k % 2 == 1 { -ek } else { ek });
        }
        out
    }

    pub fn det(&self) -> Cyclotomic {
        let all: Vec<usize> = (0..self.dim).collect();
        self.minor(&all)
    }

    /// Principal minor on the given index set, by Laplace expansion.
    fn minor(&self, idx: &[usize]) -> Cyclotomic {
        match idx.len() {
            1 => self.entry(idx[0], idx[0]).clone(),
            _ => {
                let mut acc: Option<Cyclotomic> = None;
                let row = idx[0];
                for (pos, &col) in idx.iter().enumerate() {
                    let rest_rows = &idx[1..];
                    let rest_cols: Vec<usize> =
                        idx.iter().copied().filter(|&c| c != col).collect();
                    let sub = self.general_minor(rest_rows, &rest_cols);
                    let term = self.entry(row, col) * &sub;
                    acc = Some(match acc {
                        None if pos % 2 == 0 => term,
                        None => -term,
                        Some(a) if pos % 2 == 0 => &a + &term,
                        Some(a) => &a - &term,
                    });
                }
                acc.unwrap()
            }
        }
    }

    fn general_minor(&self, rows: &[usize], cols: &[usize]) -> Cyclotomic {
        if rows.len() == 1 {
            return self.entry(rows[0], cols[0]).clone();
        }
        let mut acc: Option<Cyclotomic> = None;
        for (pos, &col) in cols.iter().enumerate() {
            let rest_cols: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
            let term = self.entry(rows[0], col) * &self.general_minor(&rows[1..], &rest_cols);
            acc = Some(match acc {
                None if pos % 2 == 0 => term,
                None => -term,
                Some(a) if pos % 2 == 0 => &a + &term,
                Some(a) => &a - &term,
            });
        }
        acc.unwrap()
    }

    /// Lookup key: all entry coefficients in the (shared) entry field.
    pub(crate) fn key(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .flat_map(|c| c.coefficients().iter().cloned())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let e = self.entry(i, j);
                match e.to_rational() {
                    Some(q) => q == Rational::from_integer((i == j).into()),
                    None => false,
                }
            })
        })
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.chunks(self.dim)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_coefficients_of_a_rotation() {
        let f = CycloField::new(4);
        let i = f.zeta_pow(1);
        let g = GroupElement::new(alloc::vec![
            alloc::vec![i.clone(), f.zero()],
            alloc::vec![f.zero(), -&i],
        ])
        .unwrap();
        // det(I − t·diag(i, −i)) = 1 + t²
        let c = g.det_one_minus_t();
        assert_eq!(c, [f.one(), f.zero(), f.one()]);
        assert_eq!(g.det(), f.one());
        assert_eq!(g.trace(), f.zero());
        assert!(g.mul(&g).mul(&g).mul(&g).is_identity());
    }

    #[test]
    fn three_by_three_determinant() {
        let f = CycloField::new(1);
        let n = |v: i64| f.from_integer(v);
        let g = GroupElement::new(alloc::vec![
            alloc::vec![n(0), n(1), n(0)],
            alloc::vec![n(0), n(0), n(1)],
            alloc::vec![n(1), n(0), n(0)],
        ])
        .unwrap();
        assert_eq!(g.det(), n(1));
        // cyclic permutation: det(I − tP) = 1 − t³
        assert_eq!(g.det_one_minus_t(), [n(1), n(0), n(0), n(-1)]);
    }
}
