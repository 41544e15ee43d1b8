//! Arithmetic and linear algebra over a prime field `F_p`, `p < 2³²`.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 32) && is_prime(p), "{p} is not a small prime");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// An element of exact multiplicative order `e`; `e` must divide `p − 1`.
    pub fn root_of_unity(&self, e: u64) -> u64 {
        assert!((self.p - 1) % e == 0, "{e} does not divide p - 1");
        let factors = prime_factors(self.p - 1);
        let generator = (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1))
            .unwrap_or(1);
        self.pow(generator, (self.p - 1) / e)
    }

    /// Lifts a residue to the symmetric range `(−p/2, p/2]`.
    pub fn symmetric(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// Basis of the right null space `{x : A·x = 0}` of an `r × c` matrix.
    pub fn nullspace(&self, a: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut m: Vec<Vec<u64>> = a.to_vec();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(pr) = (row..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, pr);
            let inv = self.inv(m[row][col]);
            for v in m[row].iter_mut() {
                *v = self.mul(*v, inv);
            }
            for r in 0..m.len() {
                if r != row && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in 0..cols {
                        let s = self.mul(f, m[row][c]);
                        m[r][c] = self.sub(m[r][c], s);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.len() {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = self.neg(m[r][free]);
            }
            basis.push(v);
        }
        basis
    }

    /// Coordinates of each target vector in a linearly independent `basis`,
    /// or `None` if some target lies outside its span.
    pub fn coordinates(&self, basis: &[Vec<u64>], targets: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
        let d = basis.len();
        let k = basis.first().map_or(0, Vec::len);
        // augmented k × (d + t) system
        let mut m: Vec<Vec<u64>> = (0..k)
            .map(|r| {
                basis
                    .iter()
                    .map(|b| b[r])
                    .chain(targets.iter().map(|t| t[r]))
                    .collect()
            })
            .collect();
        let width = d + targets.len();
        let mut pivot_rows = Vec::with_capacity(d);
        let mut row = 0;
        for col in 0..d {
            let pr = (row..k).find(|&r| m[r][col] != 0)?;
            m.swap(row, pr);
            let inv = self.inv(m[row][col]);
            for v in m[row].iter_mut() {
                *v = self.mul(*v, inv);
            }
            for r in 0..k {
                if r != row && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in 0..width {
                        let s = self.mul(f, m[row][c]);
                        m[r][c] = self.sub(m[r][c], s);
                    }
                }
            }
            pivot_rows.push(row);
            row += 1;
        }
        // consistency: rows below the pivots must vanish in the target block
        if m[row..].iter().any(|r| r[d..].iter().any(|&v| v != 0)) {
            return None;
        }
        Some(
            (0..targets.len())
                .map(|t| pivot_rows.iter().map(|&r| m[r][d + t]).collect())
                .collect(),
        )
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2·√order`.
pub fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let mut p = exponent + 1;
    loop {
        if p * p > 4 * order && is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dixon_primes() {
        // A₄: exponent 6, order 12 → p ≡ 1 (mod 6), p > 6.93
        assert_eq!(dixon_prime(6, 12), 7);
        // order 120, exponent 60 → p > 21.9
        assert_eq!(dixon_prime(60, 120), 61);
        assert_eq!(dixon_prime(1, 1), 3);
    }

    #[test]
    fn roots_of_unity_have_exact_order() {
        let f = PrimeField::new(61);
        let z = f.root_of_unity(12);
        assert_eq!(f.pow(z, 12), 1);
        assert!((1..12).all(|k| f.pow(z, k) != 1));
    }

    #[test]
    fn nullspace_of_rank_one_matrix() {
        let f = PrimeField::new(7);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = f.nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot = (0..3).fold(0, |acc, i| f.add(acc, f.mul(a[0][i], v[i])));
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn coordinates_in_a_basis() {
        let f = PrimeField::new(11);
        let basis = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let target = vec![vec![3, 4, 7]];
        assert_eq!(f.coordinates(&basis, &target), Some(vec![vec![3, 4]]));
        assert_eq!(f.coordinates(&basis, &[vec![1, 0, 0]]), None);
    }
}
