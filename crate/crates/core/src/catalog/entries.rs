use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::generators as g;
use super::{CatalogEntry, FactorSpec, SingularityKind, TheoremCase, WeightSystem};
use crate::coxeter::{AdeLabel, Variant};
use crate::groups::GroupElement;

struct Sl3 {
    id: &'static str,
    name: &'static str,
    generators: Vec<GroupElement>,
    order: u64,
    degrees: &'static [u64],
    c_g: u64,
    weights: (&'static [u64], &'static [u64]),
    dolgachev: &'static [usize],
    singularity: &'static str,
    normal_form: &'static str,
    kind: SingularityKind,
    m0: FactorSpec,
    m: FactorSpec,
    theorem: TheoremCase,
}

impl From<Sl3> for CatalogEntry {
    fn from(e: Sl3) -> Self {
        CatalogEntry {
            id: e.id.into(),
            name: e.name.into(),
            dim: 3,
            generators: e.generators,
            order: e.order,
            invariant_degrees: e.degrees.to_vec(),
            c_g: e.c_g,
            weights: WeightSystem::new(e.weights.0, e.weights.1),
            dolgachev: e.dolgachev.to_vec(),
            singularity: e.singularity.into(),
            normal_form: e.normal_form.into(),
            kind: e.kind,
            m0_spec: Some(e.m0),
            m_spec: Some(e.m),
            theorem: Some(e.theorem),
            ade: None,
            sl2_mckay_applicable: false,
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn sl2(
    id: String,
    name: String,
    generators: Vec<GroupElement>,
    order: u64,
    degrees: Vec<u64>,
    weights: WeightSystem,
    dolgachev: Vec<usize>,
    ade: AdeLabel,
    normal_form: String,
    applicable: bool,
) -> CatalogEntry {
    let c_g = degrees.iter().fold(0, |a, &b| num_integer::Integer::gcd(&a, &b));
    CatalogEntry {
        id,
        name,
        dim: 2,
        generators,
        order,
        invariant_degrees: degrees,
        c_g,
        weights,
        dolgachev,
        singularity: ade.to_string(),
        normal_form,
        kind: if applicable { SingularityKind::Kleinian } else { SingularityKind::Excluded },
        m0_spec: None,
        m_spec: None,
        theorem: None,
        ade: Some(ade),
        sl2_mckay_applicable: applicable,
    }
}

fn spec(factors: &[(u32, i32)], variant: Variant, alphas: &[usize], power: usize) -> FactorSpec {
    FactorSpec::new(factors, variant, alphas, power)
}

use Variant::{Minus, Plain, Plus};

fn sl3_entries() -> Vec<CatalogEntry> {
    let rows = vec![
        Sl3 {
            id: "T",
            name: "T = Delta(3*2^2)",
            generators: g::delta_3n2(2),
            order: 12,
            degrees: &[2, 3, 4, 6],
            c_g: 1,
            weights: (&[3, 4, 6], &[12]),
            dolgachev: &[2, 3, 3],
            singularity: "E6",
            normal_form: "z^2 + y^3 + x^4",
            kind: SingularityKind::Kleinian,
            m0: spec(&[(1, 3)], Minus, &[2, 3, 3], 1),
            m: spec(&[(1, 4)], Plain, &[2, 2, 3, 3], 1),
            theorem: TheoremCase::Kleinian { a: 3, b: 0 },
        },
        Sl3 {
            id: "Delta3x4",
            name: "Delta(3*4^2)",
            generators: g::delta_3n2(4),
            order: 48,
            degrees: &[4, 3, 8, 12],
            c_g: 1,
            weights: (&[3, 8, 12], &[24]),
            dolgachev: &[3, 3, 4],
            singularity: "E14",
            normal_form: "z^2 + y^3 + x^8",
            kind: SingularityKind::Fuchsian,
            m0: spec(&[(1, 3), (4, 2)], Plus, &[3, 3, 4], 1),
            m: spec(&[(1, 4), (4, 2)], Plain, &[3, 3, 4, 4], 1),
            theorem: TheoremCase::QuarticShift { a: 3, b: 2 },
        },
        Sl3 {
            id: "O",
            name: "O = Delta(6*2^2)",
            generators: g::delta_6n2(2),
            order: 24,
            degrees: &[2, 4, 6, 9],
            c_g: 1,
            weights: (&[4, 6, 9], &[18]),
            dolgachev: &[2, 3, 4],
            singularity: "E7",
            normal_form: "z^2 + y^3 + y x^3",
            kind: SingularityKind::Kleinian,
            m0: spec(&[(1, 3), (2, 1)], Minus, &[2, 3, 4], 1),
            m: spec(&[(1, 4), (2, 1)], Plain, &[2, 2, 3, 4], 1),
            theorem: TheoremCase::Kleinian { a: 3, b: 1 },
        },
        Sl3 {
            id: "Delta6x3",
            name: "Delta(6*3^2)",
            generators: g::delta_6n2(3),
            order: 54,
            degrees: &[6, 6, 6, 6, 9],
            c_g: 3,
            weights: (&[2, 2, 2, 3], &[4, 6]),
            dolgachev: &[2, 2, 2, 2, 2, 2],
            singularity: "delta1",
            normal_form: "{ x y + z^2, x^3 + y^3 + z^3 + w^2 }",
            kind: SingularityKind::Fuchsian,
            m0: spec(&[(3, 10), (6, -3)], Plus, &[2, 2, 2, 2, 2, 2], 3),
            m: spec(&[(3, 9), (6, -3)], Plain, &[2, 2, 2, 2, 2], 3),
            theorem: TheoremCase::SixArms,
        },
        Sl3 {
            id: "Delta6x4",
            name: "Delta(6*4^2)",
            generators: g::delta_6n2(4),
            order: 96,
            degrees: &[4, 6, 8, 15],
            c_g: 1,
            weights: (&[6, 8, 15], &[30]),
            dolgachev: &[2, 3, 8],
            singularity: "Z11",
            normal_form: "z^2 + x y^3 + x^5",
            kind: SingularityKind::Fuchsian,
            m0: spec(&[(1, 2), (4, 3)], Plus, &[2, 3, 8], 1),
            m: spec(&[(1, 3), (4, 3)], Plain, &[2, 3, 4, 8], 1),
            theorem: TheoremCase::QuarticShift { a: 2, b: 3 },
        },
        Sl3 {
            id: "Delta6x6",
            name: "Delta(6*6^2)",
            generators: g::delta_6n2(6),
            order: 216,
            degrees: &[6, 6, 12, 21],
            c_g: 3,
            weights: (&[2, 4, 7], &[14]),
            dolgachev: &[2, 2, 2, 4],
            singularity: "Z1,0",
            normal_form: "z^2 + x y^3 + x^7",
            kind: SingularityKind::Fuchsian,
            m0: spec(&[(3, 7), (6, 1)], Plus, &[2, 2, 2, 4], 3),
            m: spec(&[(3, 8), (6, 1)], Plain, &[2, 2, 2, 2, 4], 3),
            theorem: TheoremCase::CubicArgument { a: 7, b: 1 },
        },
        Sl3 {
            id: "E",
            name: "(E), Hessian group of order 108",
            generators: g::hessian_108(),
            order: 108,
            degrees: &[6, 6, 9, 12, 12],
            c_g: 3,
            weights: (&[2, 3, 4, 4], &[6, 8]),
            dolgachev: &[2, 2, 4, 4],
            singularity: "K'1,0",
            normal_form: "{ x u + y^2, a x^4 + x y^2 + z^2 + u^2 }, a != 0, 1/4",
            kind: SingularityKind::Fuchsian,
            m0: spec(&[(3, 8), (6, -3)], Plus, &[2, 2, 4, 4], 3),
            m: spec(&[(3, 9), (6, -3)], Plain, &[2, 2, 2, 4, 4], 3),
            theorem: TheoremCase::CubicArgument { a: 8, b: -3 },
        },
        Sl3 {
            id: "F",
            name: "(F), Hessian group of order 216",
            generators: g::hessian_216(),
            order: 216,
            degrees: &[6, 9, 12, 12],
            c_g: 3,
            weights: (&[3, 4, 4], &[12]),
            dolgachev: &[4, 4, 4],
            singularity: "U12",
            normal_form: "z^3 + y^3 + x^4",
            kind: SingularityKind::Fuchsian,
            m0: spec(&[(3, 7), (6, -2)], Plus, &[4, 4, 4], 3),
            m: spec(&[(3, 8), (6, -2)], Plain, &[2, 4, 4, 4], 3),
            theorem: TheoremCase::CubicArgument { a: 7, b: -2 },
        },
        Sl3 {
            id: "G",
            name: "(G), Hessian group of order 648",
            generators: g::hessian_648(),
            order: 648,
            degrees: &[9, 12, 18, 18],
            c_g: 6,
            weights: (&[2, 3, 3], &[9]),
            dolgachev: &[2, 3, 3, 3],
            singularity: "U1,0",
            normal_form: "z^3 + y z^2 + x^3 y",
            kind: SingularityKind::Fuchsian,
            m0: spec(&[(3, 4), (6, 1), (9, 1), (18, -1)], Plus, &[2, 3, 3, 3], 6),
            m: spec(&[(3, 4), (6, 1), (9, 2), (18, -1)], Plain, &[2, 3, 3, 3], 6),
            theorem: TheoremCase::SexticArgument,
        },
        Sl3 {
            id: "I",
            name: "(H) = I, icosahedral group of order 60",
            generators: g::icosahedral_60(),
            order: 60,
            degrees: &[2, 6, 10, 15],
            c_g: 1,
            weights: (&[6, 10, 15], &[30]),
            dolgachev: &[2, 3, 5],
            singularity: "E8",
            normal_form: "z^2 + y^3 + x^5",
            kind: SingularityKind::Kleinian,
            m0: spec(&[(1, 4)], Minus, &[2, 3, 5], 1),
            m: spec(&[(1, 5)], Plain, &[2, 2, 3, 5], 1),
            theorem: TheoremCase::Kleinian { a: 4, b: 0 },
        },
        Sl3 {
            id: "I168",
            name: "(I), Klein group of order 168",
            generators: g::klein_168(),
            order: 168,
            degrees: &[4, 6, 14, 21],
            c_g: 1,
            weights: (&[6, 14, 21], &[42]),
            dolgachev: &[2, 3, 7],
            singularity: "E12",
            normal_form: "z^2 + y^3 + x^7",
            kind: SingularityKind::Fuchsian,
            m0: spec(&[(1, 3)], Plus, &[2, 3, 7], 1),
            m: spec(&[(1, 4)], Plain, &[2, 3, 4, 7], 1),
            theorem: TheoremCase::QuarticShift { a: 3, b: 0 },
        },
        Sl3 {
            id: "J",
            name: "(J), order 180",
            generators: g::icosahedral_180(),
            order: 180,
            degrees: &[6, 6, 12, 15],
            c_g: 3,
            weights: (&[2, 4, 5], &[12]),
            dolgachev: &[2, 2, 2, 5],
            singularity: "Q2,0",
            normal_form: "x z^2 + y^3 + x^4 y",
            kind: SingularityKind::Fuchsian,
            m0: spec(&[(3, 8), (6, -2)], Plus, &[2, 2, 2, 5], 3),
            m: spec(&[(3, 9), (6, -2)], Plain, &[2, 2, 2, 2, 5], 3),
            theorem: TheoremCase::CubicArgument { a: 8, b: -2 },
        },
        Sl3 {
            id: "K",
            name: "(K), order 504",
            generators: g::klein_504(),
            order: 504,
            degrees: &[6, 12, 18, 21],
            c_g: 3,
            weights: (&[4, 6, 7], &[18]),
            dolgachev: &[2, 4, 7],
            singularity: "Q11",
            normal_form: "x z^2 + y^3 + y x^3",
            kind: SingularityKind::Fuchsian,
            m0: spec(&[(3, 6), (6, -1)], Plus, &[2, 4, 7], 3),
            m: spec(&[(3, 7), (6, -1)], Plain, &[2, 2, 4, 7], 3),
            theorem: TheoremCase::CubicArgument { a: 6, b: -1 },
        },
        Sl3 {
            id: "L",
            name: "(L), Valentiner group of order 1080",
            generators: g::valentiner_1080(),
            order: 1080,
            degrees: &[6, 12, 30, 45],
            c_g: 3,
            weights: (&[4, 10, 15], &[30]),
            dolgachev: &[2, 4, 5],
            singularity: "E13",
            normal_form: "z^2 + y^3 + x^5 y",
            kind: SingularityKind::Fuchsian,
            m0: spec(&[(3, 7), (6, -1)], Plus, &[2, 4, 5], 3),
            m: spec(&[(3, 8), (6, -1)], Plain, &[2, 2, 4, 5], 3),
            theorem: TheoremCase::CubicArgument { a: 7, b: -1 },
        },
    ];
    rows.into_iter().map(CatalogEntry::from).collect()
}

fn sl2_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for l in 2..=12u64 {
        let (weights, dolgachev, normal_form, applicable) = if l % 2 == 0 {
            let n = l / 2;
            (
                WeightSystem::new(&[1, n, n], &[2 * n]),
                vec![n as usize, n as usize],
                format!("x^{l} + y^2 + z^2"),
                true,
            )
        } else {
            (
                WeightSystem::new(&[2, l, l], &[2 * l]),
                vec![l as usize - 1],
                format!("x^{l} + y^2 + z^2"),
                false,
            )
        };
        out.push(sl2(
            format!("C{l}"),
            format!("cyclic group of order {l}"),
            g::cyclic(l as u32),
            l,
            vec![2, l, l],
            weights,
            dolgachev,
            AdeLabel::A(l as usize - 1),
            normal_form,
            applicable,
        ));
    }
    for n in 2..=5u64 {
        out.push(sl2(
            format!("BD{n}"),
            format!("binary dihedral group of order {}", 4 * n),
            g::binary_dihedral(n as u32),
            4 * n,
            vec![4, 2 * n, 2 * n + 2],
            WeightSystem::new(&[2, n, n + 1], &[2 * n + 2]),
            vec![2, 2, n as usize],
            AdeLabel::D(n as usize + 2),
            format!("x^{} + x y^2 + z^2", n + 1),
            true,
        ));
    }
    let exceptional = [
        ("BT", "binary tetrahedral group", g::binary_tetrahedral(), 24, [6, 8, 12], [3, 4, 6, 12], [2, 3, 3], AdeLabel::E6, "x^4 + y^3 + z^2"),
        ("BO", "binary octahedral group", g::binary_octahedral(), 48, [8, 12, 18], [4, 6, 9, 18], [2, 3, 4], AdeLabel::E7, "x^3 y + y^3 + z^2"),
        ("BI", "binary icosahedral group", g::binary_icosahedral(), 120, [12, 20, 30], [6, 10, 15, 30], [2, 3, 5], AdeLabel::E8, "x^5 + y^3 + z^2"),
    ];
    for (id, name, gens, order, degrees, w, dolgachev, ade, nf) in exceptional {
        out.push(sl2(
            id.into(),
            name.into(),
            gens,
            order,
            degrees.to_vec(),
            WeightSystem::new(&w[..3], &w[3..]),
            dolgachev.to_vec(),
            ade,
            nf.into(),
            true,
        ));
    }
    out
}

/// All catalog entries: the SL(2) families at small parameters, then the
/// fourteen SL(3) groups.
pub fn builtin() -> Vec<CatalogEntry> {
    let mut v = sl2_entries();
    v.extend(sl3_entries());
    v
}
