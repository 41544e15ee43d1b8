//! Explicit generating matrices for the finite subgroups of SL(2) and SL(3)
//! in the catalog.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{int, rat, CycloField, Cyclotomic};
use crate::groups::GroupElement;

fn mat(rows: Vec<Vec<Cyclotomic>>) -> GroupElement {
    GroupElement::new(rows).expect("generator matrices are square")
}

fn q(n: i64) -> Cyclotomic {
    Cyclotomic::rational(int(n))
}

fn zeta(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::zeta(n, k)
}

fn diag(d: Vec<Cyclotomic>) -> GroupElement {
    let n = d.len();
    mat((0..n)
        .map(|i| (0..n).map(|j| if i == j { d[i].clone() } else { q(0) }).collect())
        .collect())
}

fn half(c: Cyclotomic) -> Cyclotomic {
    c.scale(&rat(1, 2))
}

/// `√5 = ζ + ζ⁴ − ζ² − ζ³` in `ℚ(ζ₅)`.
fn sqrt5() -> Cyclotomic {
    let f = CycloField::new(5);
    f.from_terms(&[(1, int(1)), (4, int(1)), (2, int(-1)), (3, int(-1))])
}

/// `√−7` as the quadratic Gauss sum in `ℚ(ζ₇)`.
fn sqrt_minus7() -> Cyclotomic {
    let f = CycloField::new(7);
    f.from_terms(&[
        (1, int(1)),
        (2, int(1)),
        (4, int(1)),
        (3, int(-1)),
        (5, int(-1)),
        (6, int(-1)),
    ])
}

// ---- SL(2) ----

/// Cyclic group of order `l`: `diag(ζ_l, ζ_l⁻¹)`.
pub fn cyclic(l: u32) -> Vec<GroupElement> {
    vec![diag(vec![zeta(l, 1), zeta(l, -1)])]
}

/// Binary dihedral group of order `4n`.
pub fn binary_dihedral(n: u32) -> Vec<GroupElement> {
    vec![
        diag(vec![zeta(2 * n, 1), zeta(2 * n, -1)]),
        mat(vec![vec![q(0), q(-1)], vec![q(1), q(0)]]),
    ]
}

/// `½·[[1+i, 1+i], [−1+i, 1−i]]`, an element of order 6.
fn tetrahedral_corner() -> GroupElement {
    let i = zeta(4, 1);
    let one = q(1);
    mat(vec![
        vec![half(&one + &i), half(&one + &i)],
        vec![half(&i - &one), half(&one - &i)],
    ])
}

/// Binary tetrahedral group, order 24.
pub fn binary_tetrahedral() -> Vec<GroupElement> {
    let i = zeta(4, 1);
    vec![
        diag(vec![i.clone(), -&i]),
        mat(vec![vec![q(0), q(1)], vec![q(-1), q(0)]]),
        tetrahedral_corner(),
    ]
}

/// Binary octahedral group, order 48.
pub fn binary_octahedral() -> Vec<GroupElement> {
    let mut g = binary_tetrahedral();
    g.push(diag(vec![zeta(8, 1), zeta(8, -1)]));
    g
}

/// Binary icosahedral group, order 120.
pub fn binary_icosahedral() -> Vec<GroupElement> {
    let i = zeta(4, 1);
    let s5 = sqrt5();
    let phi = half(&q(1) + &s5);
    // φ⁻¹ = φ − 1
    let phi_inv = &phi - &q(1);
    let b = &phi_inv * &i;
    vec![
        tetrahedral_corner(),
        mat(vec![
            vec![half(&phi + &b), half(q(1))],
            vec![half(q(-1)), half(&phi - &b)],
        ]),
    ]
}

// ---- SL(3) ----

/// Cyclic permutation of the coordinates.
fn cycle3() -> GroupElement {
    mat(vec![
        vec![q(0), q(1), q(0)],
        vec![q(0), q(0), q(1)],
        vec![q(1), q(0), q(0)],
    ])
}

/// `Δ(3n²)`: monomial matrices with cyclic permutation part.
pub fn delta_3n2(n: u32) -> Vec<GroupElement> {
    vec![cycle3(), diag(vec![zeta(n, 1), zeta(n, -1), q(1)])]
}

/// `Δ(6n²)`: monomial matrices with arbitrary permutation part.
pub fn delta_6n2(n: u32) -> Vec<GroupElement> {
    let mut g = delta_3n2(n);
    g.push(mat(vec![
        vec![q(0), q(-1), q(0)],
        vec![q(-1), q(0), q(0)],
        vec![q(0), q(0), q(-1)],
    ]));
    g
}

/// Hessian group of order 108.
pub fn hessian_108() -> Vec<GroupElement> {
    let w = zeta(3, 1);
    let w2 = zeta(3, 2);
    let scale = (&w - &w2).inverse().expect("ω ≠ ω²");
    let v = mat(vec![
        vec![scale.clone(), scale.clone(), scale.clone()],
        vec![scale.clone(), &scale * &w, &scale * &w2],
        vec![scale.clone(), &scale * &w2, &scale * &w],
    ]);
    vec![cycle3(), diag(vec![q(1), w.clone(), w2.clone()]), v]
}

/// `diag(ε, ε, εω)` with `ε = ζ₉²`.
fn hessian_twist() -> GroupElement {
    let eps = zeta(9, 2);
    diag(vec![eps.clone(), eps.clone(), &eps * &zeta(3, 1)])
}

/// Hessian group of order 216.
pub fn hessian_216() -> Vec<GroupElement> {
    let mut g = hessian_108();
    let u = hessian_twist();
    let u_inv = diag((0..3).map(|i| u.entry(i, i).inverse().unwrap()).collect());
    let v = g[2].clone();
    g.push(u.mul(&v).mul(&u_inv));
    g
}

/// Hessian group of order 648.
pub fn hessian_648() -> Vec<GroupElement> {
    let mut g = hessian_108();
    g.push(hessian_twist());
    g
}

/// Icosahedral group of order 60.
pub fn icosahedral_60() -> Vec<GroupElement> {
    let s5 = sqrt5();
    let mu1 = half(&q(-1) + &s5);
    let mu2 = half(&q(-1) - &s5);
    let h = |c: &Cyclotomic| half(c.clone());
    let m1 = q(-1);
    let w = mat(vec![
        vec![h(&m1), h(&mu2), h(&mu1)],
        vec![h(&mu2), h(&mu1), h(&m1)],
        vec![h(&mu1), h(&m1), h(&mu2)],
    ]);
    vec![cycle3(), diag(vec![q(1), q(-1), q(-1)]), w]
}

/// Klein group of order 168.
pub fn klein_168() -> Vec<GroupElement> {
    let b = |k: i64| zeta(7, k);
    // i/√7 = √−7 / 7
    let c = sqrt_minus7().scale(&rat(1, 7));
    let x = &c * &(&b(4) - &b(3));
    let y = &c * &(&b(2) - &b(5));
    let z = &c * &(&b(1) - &b(6));
    let w = mat(vec![
        vec![x.clone(), y.clone(), z.clone()],
        vec![y.clone(), z.clone(), x.clone()],
        vec![z, x, y],
    ]);
    vec![diag(vec![b(1), b(2), b(4)]), cycle3(), w]
}

fn with_center(mut g: Vec<GroupElement>) -> Vec<GroupElement> {
    g.push(GroupElement::scalar(&zeta(3, 1), 3));
    g
}

/// Icosahedral group times the centre of SL(3), order 180.
pub fn icosahedral_180() -> Vec<GroupElement> {
    with_center(icosahedral_60())
}

/// Klein group times the centre of SL(3), order 504.
pub fn klein_504() -> Vec<GroupElement> {
    with_center(klein_168())
}

/// Valentiner group, order 1080.
pub fn valentiner_1080() -> Vec<GroupElement> {
    let mut g = icosahedral_180();
    let w = zeta(3, 1);
    g.push(mat(vec![
        vec![q(-1), q(0), q(0)],
        vec![q(0), q(0), -&w],
        vec![q(0), -&zeta(3, 2), q(0)],
    ]));
    g
}
