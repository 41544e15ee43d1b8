use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::GroupElement;
use crate::arith::{lcm_u64, CycloField, Rational};
use crate::{Error, Result};

/// A finite matrix group, fully enumerated.
///
/// Elements are numbered in breadth-first order from the identity (index
/// 0). Every element carries a word in the generators, so products and
/// inverses reduce to permutation lookups once the group is built.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    dim: usize,
    field: Arc<CycloField>,
    elements: Vec<GroupElement>,
    /// `right[s][x]` = index of `x·gₛ`.
    right: Vec<Vec<u32>>,
    /// `right_inv[s][x]` = index of `x·gₛ⁻¹`.
    right_inv: Vec<Vec<u32>>,
    words: Vec<Vec<u16>>,
}

/// Enumerates the group generated by `generators`.
///
/// All generators must be square of one dimension with determinant 1;
/// entries are lifted to the least common cyclotomic field. Fails with
/// [`Error::NotFinite`] once more than `order_bound` elements appear. An
/// empty generator list requires `dim` and yields the trivial group.
pub fn generate_group(
    generators: &[GroupElement],
    dim: usize,
    order_bound: usize,
) -> Result<MatrixGroup> {
    if let Some(g) = generators.iter().find(|g| g.dim() != dim) {
        return Err(Error::Dimension(format!(
            "generator of size {} in a group of degree {}",
            g.dim(),
            dim
        )));
    }
    let conductor = generators
        .iter()
        .fold(1u64, |l, g| lcm_u64(l, g.conductor() as u64)) as u32;
    let field = CycloField::new(conductor);
    let gens: Vec<GroupElement> = generators.iter().map(|g| g.lift(&field)).collect();
    for (i, g) in gens.iter().enumerate() {
        if g.det() != field.one() {
            return Err(Error::InvalidGenerator(format!(
                "generator {} has determinant {}, expected 1",
                i,
                g.det()
            )));
        }
    }

    let identity = GroupElement::identity(&field, dim);
    let mut index: BTreeMap<Vec<Rational>, u32> = BTreeMap::new();
    index.insert(identity.key(), 0);
    let mut elements = vec![identity];
    let mut words: Vec<Vec<u16>> = vec![Vec::new()];
    let mut right: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (s, g) in gens.iter().enumerate() {
            let y = elements[x].mul(g);
            let key = y.key();
            let j = match index.get(&key) {
                Some(&j) => j,
                None => {
                    let j = elements.len() as u32;
                    if elements.len() >= order_bound {
                        return Err(Error::NotFinite(order_bound));
                    }
                    index.insert(key, j);
                    let mut w = words[x].clone();
                    w.push(s as u16);
                    words.push(w);
                    elements.push(y);
                    queue.push_back(j as usize);
                    j
                }
            };
            right[s].push(j);
        }
    }
    // Elements are processed in index order, so right[s][x] lines up with x.
    let right_inv = right
        .iter()
        .map(|perm| {
            let mut inv = vec![0u32; perm.len()];
            for (x, &y) in perm.iter().enumerate() {
                inv[y as usize] = x as u32;
            }
            inv
        })
        .collect();
    Ok(MatrixGroup {
        dim,
        field,
        elements,
        right,
        right_inv,
        words,
    })
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The cyclotomic field holding every matrix entry.
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    /// Index of `elements[x] · elements[y]`.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.words[y]
            .iter()
            .fold(x as u32, |acc, &s| self.right[s as usize][acc as usize]) as usize
    }

    pub fn inv(&self, x: usize) -> usize {
        self.words[x]
            .iter()
            .rev()
            .fold(0u32, |acc, &s| self.right_inv[s as usize][acc as usize]) as usize
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    /// Index of `g⁻¹·x·g` for the `s`-th generator `g`.
    fn conjugate_by_generator(&self, x: usize, s: usize) -> usize {
        let y = self.words[x]
            .iter()
            .fold(self.right_inv[s][0], |acc, &t| self.right[t as usize][acc as usize]);
        self.right[s][y as usize] as usize
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1, |l, x| lcm_u64(l, self.element_order(x)))
    }

    /// Conjugacy classes, each represented by its least element index; the
    /// identity class comes first.
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.order();
        let gens = self.right.len();
        let mut class_of = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = members.len();
            class_of[x] = c;
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                for s in 0..gens {
                    let z = self.conjugate_by_generator(y, s);
                    if class_of[z] == usize::MAX {
                        class_of[z] = c;
                        orbit.push(z);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        let orders = members.iter().map(|m| self.element_order(m[0])).collect();
        let inverse = members.iter().map(|m| class_of[self.inv(m[0])]).collect();
        ConjugacyClasses {
            class_of,
            members,
            orders,
            inverse,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    orders: Vec<u64>,
    inverse: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.members[c][0]
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.members.iter().map(|m| m[0]).collect()
    }

    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Order of the elements in class `c`.
    pub fn element_order(&self, c: usize) -> u64 {
        self.orders[c]
    }

    /// Class of the inverses of the elements of class `c`.
    pub fn inverse(&self, c: usize) -> usize {
        self.inverse[c]
    }

    /// Class of `gᵏ` for `g` in class `c`.
    pub fn power(&self, group: &MatrixGroup, c: usize, k: u64) -> usize {
        self.class_of[group.pow(self.representative(c), k % self.orders[c])]
    }
}
