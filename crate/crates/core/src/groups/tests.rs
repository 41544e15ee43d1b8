use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::arith::{int, Cyclotomic, Rational};
use crate::catalog::generators as gens;
use crate::Error;

fn build(g: &[GroupElement], dim: usize) -> (MatrixGroup, ConjugacyClasses) {
    let group = generate_group(g, dim, 5000).unwrap();
    let classes = group.conjugacy_classes();
    (group, classes)
}

/// Classes by brute force: conjugate by every element.
fn brute_force_class_sizes(group: &MatrixGroup) -> Vec<usize> {
    let n = group.order();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut size = 0;
        for g in 0..n {
            let y = group.mul(group.mul(group.inv(g), x), g);
            if !seen[y] {
                seen[y] = true;
                size += 1;
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Column orthogonality: `Σ_χ χ(a)·conj χ(b) = δ_ab·|G|/|C_a|`.
fn assert_column_orthogonality(table: &CharacterTable) {
    let k = table.len();
    for a in 0..k {
        for b in 0..k {
            let mut acc = Cyclotomic::rational(int(0));
            for row in table.rows() {
                acc = &acc + &(&row[a] * &row[b].conj());
            }
            let expected = if a == b {
                int((table.group_order() / table.class_sizes()[a]) as i64)
            } else {
                int(0)
            };
            assert_eq!(acc.to_rational(), Some(expected), "columns {a}, {b}");
        }
    }
}

#[test]
fn trivial_group() {
    let (group, classes) = build(&[], 3);
    assert_eq!(group.order(), 1);
    let table = character_table(&group, &classes).unwrap();
    assert_eq!(table.len(), 1);
    assert_eq!(table.row(0), [Cyclotomic::rational(int(1))]);
}

#[test]
fn cyclic_of_order_two() {
    let (group, classes) = build(&gens::cyclic(2), 2);
    let table = character_table(&group, &classes).unwrap();
    let v: Vec<Vec<Option<Rational>>> = table
        .rows()
        .iter()
        .map(|r| r.iter().map(Cyclotomic::to_rational).collect())
        .collect();
    assert_eq!(v, [[Some(int(1)), Some(int(1))], [Some(int(1)), Some(int(-1))]]);
}

#[test]
fn tetrahedral_monomial_group() {
    let (group, classes) = build(&gens::delta_3n2(2), 3);
    assert_eq!(group.order(), 12);
    let mut sizes = classes.sizes();
    sizes.sort();
    assert_eq!(sizes, [1, 3, 4, 4]);
    let table = character_table(&group, &classes).unwrap();
    assert_eq!(table.degrees(), [1, 1, 1, 3]);
    assert_column_orthogonality(&table);
    let chi = natural_character(&group, &classes);
    let mult = table.decompose(&chi).unwrap();
    assert_eq!(mult, [0, 0, 0, 1]);
}

#[test]
fn binary_icosahedral() {
    let (group, classes) = build(&gens::binary_icosahedral(), 2);
    assert_eq!(group.order(), 120);
    assert_eq!(classes.len(), 9);
    assert_eq!(group.exponent(), 60);
    let table = character_table(&group, &classes).unwrap();
    assert_eq!(table.degrees(), [1, 2, 2, 3, 3, 4, 4, 5, 6]);
    assert_column_orthogonality(&table);
}

#[test]
fn sl2_group_orders() {
    let cases: Vec<(Vec<GroupElement>, usize, usize)> = vec![
        (gens::cyclic(7), 7, 7),
        (gens::binary_dihedral(3), 12, 6),
        (gens::binary_tetrahedral(), 24, 7),
        (gens::binary_octahedral(), 48, 8),
    ];
    for (g, order, nclasses) in cases {
        let (group, classes) = build(&g, 2);
        assert_eq!(group.order(), order);
        assert_eq!(classes.len(), nclasses);
        let mut s = classes.sizes();
        let mut oracle = brute_force_class_sizes(&group);
        s.sort();
        oracle.sort();
        assert_eq!(s, oracle);
        let table = character_table(&group, &classes).unwrap();
        assert_column_orthogonality(&table);
    }
}

#[test]
fn sl3_group_orders() {
    let cases: Vec<(Vec<GroupElement>, usize)> = vec![
        (gens::delta_3n2(4), 48),
        (gens::delta_6n2(2), 24),
        (gens::delta_6n2(3), 54),
        (gens::hessian_108(), 108),
        (gens::icosahedral_60(), 60),
        (gens::klein_168(), 168),
    ];
    for (g, order) in cases {
        let (group, classes) = build(&g, 3);
        assert_eq!(group.order(), order);
        let mut s = classes.sizes();
        let mut oracle = brute_force_class_sizes(&group);
        s.sort();
        oracle.sort();
        assert_eq!(s, oracle);
        let table = character_table(&group, &classes).unwrap();
        let chi = natural_character(&group, &classes);
        // the defining representations are irreducible
        assert_eq!(table.decompose(&chi).unwrap().iter().sum::<u64>(), 1);
    }
}

#[test]
fn identity_class_first_and_elements_closed() {
    let (group, classes) = build(&gens::binary_tetrahedral(), 2);
    assert!(group.element(0).is_identity());
    assert_eq!(classes.members(0), [0]);
    for x in 0..group.order() {
        assert_eq!(group.mul(x, group.inv(x)), 0);
        let direct = group.element(x).mul(group.element(7));
        assert_eq!(&direct, group.element(group.mul(x, 7)));
    }
}

#[test]
fn infinite_group_is_rejected() {
    let f = crate::arith::CycloField::new(1);
    let n = |v: i64| f.from_integer(v);
    let g = GroupElement::new(vec![vec![n(1), n(1)], vec![n(0), n(1)]]).unwrap();
    assert!(matches!(generate_group(&[g], 2, 100), Err(Error::NotFinite(100))));
}

#[test]
fn determinant_must_be_one() {
    let g = GroupElement::new(vec![
        vec![Cyclotomic::rational(int(-1)), Cyclotomic::rational(int(0))],
        vec![Cyclotomic::rational(int(0)), Cyclotomic::rational(int(1))],
    ])
    .unwrap();
    assert!(matches!(generate_group(&[g], 2, 10), Err(Error::InvalidGenerator(_))));
}

#[test]
fn generator_order_does_not_change_the_element_set() {
    let mut g = gens::binary_octahedral();
    let a = generate_group(&g, 2, 100).unwrap();
    g.reverse();
    let b = generate_group(&g, 2, 100).unwrap();
    let mut ka: Vec<_> = a.elements().iter().map(GroupElement::key).collect();
    let mut kb: Vec<_> = b.elements().iter().map(GroupElement::key).collect();
    ka.sort();
    kb.sort();
    assert_eq!(ka, kb);
}

#[test]
fn large_sl3_groups() {
    let cases = [
        (gens::hessian_216(), 216, 16),
        (gens::hessian_648(), 648, 24),
        (gens::klein_504(), 504, 18),
        (gens::valentiner_1080(), 1080, 17),
    ];
    for (g, order, nclasses) in cases {
        let (group, classes) = build(&g, 3);
        assert_eq!(group.order(), order);
        assert_eq!(classes.len(), nclasses);
        let table = character_table(&group, &classes).unwrap();
        let chi = natural_character(&group, &classes);
        assert_eq!(table.decompose(&chi).unwrap().iter().sum::<u64>(), 1);
    }
}
