use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::*;
use crate::arith::{rational_eq, series_expand};
use crate::catalog::generators as gens;
use crate::groups::{character_table, generate_group, natural_character, GroupElement};

struct Data {
    group: MatrixGroup,
    classes: ConjugacyClasses,
    table: CharacterTable,
    mm: McKayMatrices,
}

fn data(g: &[GroupElement], n: usize) -> Data {
    let group = generate_group(g, n, 5000).unwrap();
    let classes = group.conjugacy_classes();
    let table = character_table(&group, &classes).unwrap();
    let chi = natural_character(&group, &classes);
    let mm = mckay_matrices(&table, &chi).unwrap();
    Data { group, classes, table, mm }
}

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn one_minus(e: usize) -> IntPolynomial {
    IntPolynomial::one_minus_t_pow(e)
}

fn ratio(num: &[usize], den: &[usize]) -> RationalFunction {
    let n: IntPolynomial = num.iter().map(|&e| one_minus(e)).product();
    let d: IntPolynomial = den.iter().map(|&e| one_minus(e)).product();
    RationalFunction::new(n, d).unwrap()
}

#[test]
fn trivial_group_in_dimension_three() {
    let d = data(&[], 3);
    assert_eq!(d.mm.b, [[3]]);
    assert_eq!(d.mm.bstar, [[3]]);
    let (m, m0) = build_m(&d.mm, 3).unwrap();
    assert_eq!(m[0][0], p(&[1, -3, 3, -1]));
    assert_eq!(m0[0][0], p(&[1]));
    assert_eq!(det_m_class_product(&d.group, &d.classes).unwrap(), one_minus(1).pow(3));
    assert_eq!(molien_series(&d.group, &d.classes).unwrap(), ratio(&[], &[1, 1, 1]));
    let v = solve_p_by_linear_system(&d.mm, 3, 10).unwrap();
    // 1/(1−t)³ = Σ C(m+2, 2) tᵐ
    let expected: Vec<BigInt> = (0..=10).map(|m| BigInt::from((m + 1) * (m + 2) / 2)).collect();
    assert_eq!(v.component(0), expected);
}

#[test]
fn sign_group_in_sl2() {
    let d = data(&gens::cyclic(2), 2);
    assert_eq!(det_m_class_product(&d.group, &d.classes).unwrap(), one_minus(2).pow(2));
    let (dm, _) = m_determinants(&d.mm, 2).unwrap();
    assert_eq!(dm, one_minus(2).pow(2));
}

#[test]
fn binary_icosahedral_quiver_is_affine_e8() {
    let d = data(&gens::binary_icosahedral(), 2);
    let b = &d.mm.b;
    assert!(d.mm.b_is_symmetric());
    assert!(d.mm.bstar_is_transpose());
    assert!(b.iter().flatten().all(|&x| x == 0 || x == 1));
    assert!((0..9).all(|i| b[i][i] == 0));
    let mut degrees: Vec<i64> = b.iter().map(|r| r.iter().sum()).collect();
    degrees.sort();
    // a tree on 9 vertices with one branch point and three leaves
    assert_eq!(degrees, [1, 1, 1, 2, 2, 2, 2, 2, 3]);
    assert_eq!(
        molien_series(&d.group, &d.classes).unwrap(),
        ratio(&[60], &[12, 20, 30])
    );
}

#[test]
fn tetrahedral_monomial_group() {
    let d = data(&gens::delta_3n2(2), 3);
    assert!(d.mm.bstar_is_transpose());
    let (dm, dm0) = m_determinants(&d.mm, 3).unwrap();
    let expected = &(&one_minus(1).pow(4) * &p(&[1, 1]).pow(2)) * &one_minus(3).pow(2);
    assert_eq!(dm, expected);
    assert_eq!(det_m_class_product(&d.group, &d.classes).unwrap(), dm);
    let molien = molien_series(&d.group, &d.classes).unwrap();
    assert_eq!(molien, ratio(&[12], &[2, 3, 4, 6]));
    assert!(rational_eq(&RationalFunction::new(dm0, dm).unwrap(), &molien));

    let v = symmetric_power_vector(&d.group, &d.classes, &d.table, 2).unwrap();
    assert_eq!(v.at(0), [1.into(), 0.into(), 0.into(), 0.into()]);
    assert_eq!(v.at(1), [0.into(), 0.into(), 0.into(), 1.into()]);
    let weighted: BigInt = v.at(2).iter().zip(d.table.degrees()).map(|(x, &k)| x * k).sum();
    assert_eq!(weighted, BigInt::from(6));
}

#[test]
fn linear_system_agrees_with_averaging() {
    for (g, n) in [
        (gens::delta_6n2(4), 3),
        (gens::hessian_108(), 3),
        (gens::binary_octahedral(), 2),
        (gens::binary_dihedral(5), 2),
    ] {
        let d = data(&g, n);
        let avg = symmetric_power_vector(&d.group, &d.classes, &d.table, 30).unwrap();
        let newton = symmetric_power_vector_newton(&d.group, &d.classes, &d.table, 30).unwrap();
        let lin = solve_p_by_linear_system(&d.mm, n, 30).unwrap();
        assert_eq!(avg, newton);
        assert_eq!(avg, lin);
        assert!(check_cg_recursion(&lin, &d.mm, n));
        assert!(check_dimension_counts(&lin, d.table.degrees(), n));
        let molien = molien_series(&d.group, &d.classes).unwrap();
        let s = series_expand(&molien, 30).unwrap().to_integers().unwrap();
        assert_eq!(s, lin.component(0));
    }
}

#[test]
fn perturbed_vector_breaks_the_recursion() {
    let d = data(&gens::delta_3n2(2), 3);
    let mut v = solve_p_by_linear_system(&d.mm, 3, 30).unwrap();
    assert!(check_cg_recursion(&v, &d.mm, 3));
    *v.get_mut(7, 2) += 1;
    assert!(!check_cg_recursion(&v, &d.mm, 3));

    let d = data(&gens::binary_tetrahedral(), 2);
    let mut v = solve_p_by_linear_system(&d.mm, 2, 30).unwrap();
    assert!(check_cg_recursion(&v, &d.mm, 2));
    *v.get_mut(30, 0) += 1;
    assert!(!check_cg_recursion(&v, &d.mm, 2));
}

#[test]
fn build_m_rejects_other_dimensions() {
    let mm = McKayMatrices { b: vec![vec![4]], bstar: vec![vec![4]] };
    assert!(build_m(&mm, 4).is_err());
}
