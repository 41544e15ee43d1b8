//! Star-shaped graphs `T⁻`, `T`, `T⁺` and (extended) ADE diagrams, their
//! Gram matrices, Coxeter elements and characteristic polynomials.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{det_one_minus_t, IntPolynomial, RationalFunction};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Minus,
    Plain,
    Plus,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Minus => "minus",
            Variant::Plain => "plain",
            Variant::Plus => "plus",
        }
    }
}

impl core::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minus" => Ok(Variant::Minus),
            "plain" => Ok(Variant::Plain),
            "plus" => Ok(Variant::Plus),
            _ => Err(Error::InvalidDiagram(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdeLabel {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl fmt::Display for AdeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeLabel::A(k) => write!(f, "A{k}"),
            AdeLabel::D(k) => write!(f, "D{k}"),
            AdeLabel::E6 => f.write_str("E6"),
            AdeLabel::E7 => f.write_str("E7"),
            AdeLabel::E8 => f.write_str("E8"),
        }
    }
}

impl core::str::FromStr for AdeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDiagram(format!("unknown ADE label {s:?}"));
        match s {
            "E6" => Ok(AdeLabel::E6),
            "E7" => Ok(AdeLabel::E7),
            "E8" => Ok(AdeLabel::E8),
            _ => {
                let (head, rank) = s.split_at(1.min(s.len()));
                let k: usize = rank.parse().map_err(|_| bad())?;
                match head {
                    "A" if k >= 1 => Ok(AdeLabel::A(k)),
                    "D" if k >= 4 => Ok(AdeLabel::D(k)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramKind {
    Star { variant: Variant, alphas: Vec<usize> },
    Ade { label: AdeLabel, affine: bool },
}

/// A lattice spanned by roots of square −2, with its basis in the order
/// used for the Coxeter element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDiagram {
    pub kind: DiagramKind,
    pub vertices: Vec<String>,
    pub gram: Vec<Vec<i64>>,
}

impl CoxeterDiagram {
    pub fn rank(&self) -> usize {
        self.vertices.len()
    }

    fn from_edges(kind: DiagramKind, vertices: Vec<String>, edges: &[(usize, usize, i64)]) -> Self {
        let n = vertices.len();
        let mut gram = vec![vec![0i64; n]; n];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = -2;
        }
        for &(a, b, w) in edges {
            gram[a][b] = w;
            gram[b][a] = w;
        }
        CoxeterDiagram { kind, vertices, gram }
    }
}

/// Builds `T⁻`, `T` or `T⁺` for the arm lengths `alphas`.
///
/// Vertex order: each arm `δⁱ₁ … δⁱ_{αᵢ−1}` in turn, then `δ₀`, then `δ₁`
/// and `δ₂` where present. Arm tops are joined to `δ₀` (and to `δ₁`);
/// `⟨δ₀, δ₁⟩ = −2`.
pub fn build_diagram(variant: Variant, alphas: &[usize]) -> Result<CoxeterDiagram> {
    if alphas.is_empty() {
        return Err(Error::InvalidDiagram("at least one arm is required".into()));
    }
    if let Some(a) = alphas.iter().find(|&&a| a < 1) {
        return Err(Error::InvalidDiagram(format!("arm length {a} is less than 1")));
    }
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut tops = Vec::new();
    for (i, &a) in alphas.iter().enumerate() {
        for j in 1..a {
            if j > 1 {
                edges.push((vertices.len() - 1, vertices.len(), 1));
            }
            vertices.push(format!("d{}_{}", i + 1, j));
        }
        if a > 1 {
            tops.push(vertices.len() - 1);
        }
    }
    let d0 = vertices.len();
    vertices.push("d0".into());
    edges.extend(tops.iter().map(|&t| (t, d0, 1)));
    if variant != Variant::Minus {
        let d1 = vertices.len();
        vertices.push("d1".into());
        edges.extend(tops.iter().map(|&t| (t, d1, 1)));
        edges.push((d0, d1, -2));
        if variant == Variant::Plus {
            vertices.push("d2".into());
            edges.push((d1, d1 + 1, 1));
        }
    }
    Ok(CoxeterDiagram::from_edges(
        DiagramKind::Star { variant, alphas: alphas.to_vec() },
        vertices,
        &edges,
    ))
}

/// Dynkin diagram of type ADE, or its extension when `affine` is set.
///
/// The affine `A` cycle is ordered with its two bipartition halves
/// (even then odd positions around the cycle); `Ã₁` is a double edge.
pub fn build_ade(label: AdeLabel, affine: bool) -> Result<CoxeterDiagram> {
    let kind = DiagramKind::Ade { label, affine };
    let names = |n: usize| (0..n).map(|i| format!("v{i}")).collect::<Vec<_>>();
    let path = |n: usize| (1..n).map(|i| (i - 1, i, 1)).collect::<Vec<_>>();
    match label {
        AdeLabel::A(k) if k >= 1 => {
            if !affine {
                return Ok(CoxeterDiagram::from_edges(kind, names(k), &path(k)));
            }
            if k == 1 {
                return Ok(CoxeterDiagram::from_edges(kind, names(2), &[(0, 1, 2)]));
            }
            // position p on the cycle sits at basis index order[p]
            let n = k + 1;
            let mut order: Vec<usize> = (0..n).step_by(2).chain((1..n).step_by(2)).collect();
            let mut index = vec![0; n];
            for (i, &p) in order.iter().enumerate() {
                index[p] = i;
            }
            let edges: Vec<_> = (0..n).map(|p| (index[p], index[(p + 1) % n], 1)).collect();
            let vertices = order.drain(..).map(|p| format!("v{p}")).collect();
            Ok(CoxeterDiagram::from_edges(kind, vertices, &edges))
        }
        AdeLabel::D(k) if k >= 4 => {
            if affine {
                // chain v0 … v_{k−2}, extra leaves at v1 and v_{k−3}
                let mut edges = path(k - 1);
                edges.push((1, k - 1, 1));
                edges.push((k - 3, k, 1));
                Ok(CoxeterDiagram::from_edges(kind, names(k + 1), &edges))
            } else {
                // chain v0 … v_{k−2}, extra leaf at v_{k−3}
                let mut edges = path(k - 1);
                edges.push((k - 3, k - 1, 1));
                Ok(CoxeterDiagram::from_edges(kind, names(k), &edges))
            }
        }
        AdeLabel::E6 | AdeLabel::E7 | AdeLabel::E8 => {
            let arms: &[usize] = match (label, affine) {
                (AdeLabel::E6, false) => &[2, 3, 3],
                (AdeLabel::E7, false) => &[2, 3, 4],
                (AdeLabel::E8, false) => &[2, 3, 5],
                (AdeLabel::E6, true) => &[3, 3, 3],
                (AdeLabel::E7, true) => &[2, 4, 4],
                _ => &[2, 3, 6],
            };
            let star = build_diagram(Variant::Minus, arms)?;
            Ok(CoxeterDiagram { kind, ..star })
        }
        _ => Err(Error::InvalidDiagram(format!("no diagram of type {label}"))),
    }
}

/// Product of the reflections `s_e(x) = x + ⟨x, e⟩·e` in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterElement {
    pub matrix: Vec<Vec<BigInt>>,
    pub basis: Vec<String>,
    reflections: Vec<Vec<Vec<BigInt>>>,
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn transpose(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].clone()).collect()).collect()
}

/// `τ = s₀·s₁ ⋯ s_{n−1}`; fails if `τ` does not preserve the Gram form.
pub fn coxeter_element(d: &CoxeterDiagram) -> Result<CoxeterElement> {
    let n = d.rank();
    let reflections: Vec<Vec<Vec<BigInt>>> = (0..n)
        .map(|k| {
            let mut s = identity(n);
            for j in 0..n {
                s[k][j] += d.gram[j][k];
            }
            s
        })
        .collect();
    let matrix = reflections.iter().fold(identity(n), |acc, s| mat_mul(&acc, s));
    let gram: Vec<Vec<BigInt>> = d
        .gram
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    if mat_mul(&mat_mul(&transpose(&matrix), &gram), &matrix) != gram {
        return Err(Error::Consistency("Coxeter element does not preserve the form".into()));
    }
    Ok(CoxeterElement {
        matrix,
        basis: d.vertices.clone(),
        reflections,
    })
}

impl CoxeterElement {
    /// `τ⁻¹ = s_{n−1} ⋯ s₀`, each reflection being an involution.
    pub fn inverse(&self) -> Vec<Vec<BigInt>> {
        let n = self.matrix.len();
        self.reflections.iter().rev().fold(identity(n), |acc, s| mat_mul(&acc, s))
    }
}

/// `Δ(t) = det(I − t·τ)`.
pub fn char_poly_coxeter(c: &CoxeterElement) -> Result<IntPolynomial> {
    det_one_minus_t(&c.matrix)
}

/// `det(I − t·τ⁻¹)`.
pub fn char_poly_coxeter_inverse(c: &CoxeterElement) -> Result<IntPolynomial> {
    det_one_minus_t(&c.inverse())
}

/// `det(x·I − τ)` evaluated at `x = t²`.
pub fn char_poly_at_t_squared(c: &CoxeterElement) -> Result<IntPolynomial> {
    crate::arith::char_poly(&c.matrix).map(|p| p.substitute_power(2))
}

/// `det(I − t·τ)` for the (extended) ADE diagram of the given type.
pub fn ade_coxeter_polys(label: AdeLabel, affine: bool) -> Result<IntPolynomial> {
    char_poly_coxeter(&coxeter_element(&build_ade(label, affine)?)?)
}

/// The closed forms for `Δ` of `T⁻`, `T`, `T⁺` with
/// `Pᵢ = (1−t^{αᵢ})/(1−t)` and `Qᵢ = (1−t^{αᵢ−1})/(1−t)`:
///
/// * minus: `(1+t)·∏Pᵢ − t·Σ Qᵢ ∏_{j≠i} Pⱼ`
/// * plain: `(1−t)^{2−m}·∏(1−t^{αᵢ})`
/// * plus: `(1−2t−2t²+t³)·∏Pᵢ + t²·Σ Qᵢ ∏_{j≠i} Pⱼ`
pub fn closed_form_delta(variant: Variant, alphas: &[usize]) -> Result<IntPolynomial> {
    if alphas.is_empty() || alphas.contains(&0) {
        return Err(Error::InvalidDiagram(format!("invalid arm lengths {alphas:?}")));
    }
    let one_minus = |e: usize| RationalFunction::from_poly(IntPolynomial::one_minus_t_pow(e));
    let over = |e: usize| one_minus(e).div(&one_minus(1));
    let f = match variant {
        Variant::Plain => {
            let m = alphas.len() as i32;
            alphas
                .iter()
                .fold(RationalFunction::one_minus_t_pow(1, 2 - m), |acc, &a| acc.mul(&one_minus(a)))
        }
        Variant::Minus | Variant::Plus => {
            let ps = alphas.iter().map(|&a| over(a)).collect::<Result<Vec<_>>>()?;
            let product = ps.iter().fold(RationalFunction::one(), |acc, p| acc.mul(p));
            let mut sum = RationalFunction::zero();
            for (i, &a) in alphas.iter().enumerate() {
                let term = ps
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .fold(over(a - 1)?, |acc, (_, p)| acc.mul(p));
                sum = sum.add(&term);
            }
            let (lead, tail) = if variant == Variant::Minus {
                (IntPolynomial::from_i64(&[1, 1]), IntPolynomial::from_i64(&[0, -1]))
            } else {
                (IntPolynomial::from_i64(&[1, -2, -2, 1]), IntPolynomial::from_i64(&[0, 0, 1]))
            };
            RationalFunction::from_poly(lead)
                .mul(&product)
                .add(&RationalFunction::from_poly(tail).mul(&sum))
        }
    };
    f.to_polynomial().ok_or_else(|| {
        Error::NotPolynomial(format!(
            "closed form for {} {:?} does not clear to a polynomial: {}",
            variant.name(),
            alphas,
            f
        ))
    })
}
