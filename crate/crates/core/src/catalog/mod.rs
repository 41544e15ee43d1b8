//! The catalog of finite subgroups of SL(2) and SL(3): generators, invariant
//! degrees, weight systems, Dolgachev numbers and the expected factorized
//! determinants of `M₀(t)` and `M(t)`.

pub mod generators;
mod entries;

pub use entries::builtin;

use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::arith::{IntPolynomial, RationalFunction};
use crate::coxeter::{closed_form_delta, AdeLabel, Variant};
use crate::groups::GroupElement;
use crate::{Error, Result};

/// `(w₁, …, w_n; d₁, …, d_k)`: weights of the variables and degrees of the
/// defining equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub weights: Vec<u64>,
    pub degrees: Vec<u64>,
}

impl WeightSystem {
    pub fn new(weights: &[u64], degrees: &[u64]) -> Self {
        WeightSystem {
            weights: weights.to_vec(),
            degrees: degrees.to_vec(),
        }
    }

    /// gcd of all weights and degrees.
    pub fn c_w(&self) -> u64 {
        self.weights.iter().chain(&self.degrees).fold(0, |g, &x| g.gcd(&x))
    }

    pub fn is_reduced(&self) -> bool {
        self.c_w() == 1
    }
}

/// `∏(1−t^{dᵢ}) / ∏(1−t^{wⱼ})`.
pub fn poincare_from_weights(w: &WeightSystem) -> RationalFunction {
    let prod = |xs: &[u64]| -> IntPolynomial {
        xs.iter().map(|&x| IntPolynomial::one_minus_t_pow(x as usize)).product()
    };
    RationalFunction::new(prod(&w.degrees), prod(&w.weights)).expect("nonzero denominator")
}

/// `∏ (1−t^{eᵢ})^{bᵢ} · Δ_{variant, alphas}(t^{argument_power})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSpec {
    pub factors: Vec<(u32, i32)>,
    pub variant: Variant,
    pub alphas: Vec<usize>,
    pub argument_power: usize,
}

impl FactorSpec {
    pub fn new(factors: &[(u32, i32)], variant: Variant, alphas: &[usize], argument_power: usize) -> Self {
        FactorSpec {
            factors: factors.iter().copied().filter(|&(_, b)| b != 0).collect(),
            variant,
            alphas: alphas.to_vec(),
            argument_power,
        }
    }
}

pub fn expected_det_expression(spec: &FactorSpec) -> Result<RationalFunction> {
    let delta = closed_form_delta(spec.variant, &spec.alphas)?.substitute_power(spec.argument_power);
    Ok(spec
        .factors
        .iter()
        .fold(RationalFunction::from_poly(delta), |acc, &(e, b)| {
            acc.mul(&RationalFunction::one_minus_t_pow(e as usize, b))
        }))
}

/// Which form of the singularity identity applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularityKind {
    /// `p_f = Δ_{T⁻}/Δ_T`
    Kleinian,
    /// `p_f = Δ_{T⁺}/Δ_T`
    Fuchsian,
    Excluded,
}

impl SingularityKind {
    pub fn name(self) -> &'static str {
        match self {
            SingularityKind::Kleinian => "kleinian",
            SingularityKind::Fuchsian => "fuchsian",
            SingularityKind::Excluded => "excluded",
        }
    }
}

impl core::str::FromStr for SingularityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kleinian" => Ok(SingularityKind::Kleinian),
            "fuchsian" => Ok(SingularityKind::Fuchsian),
            "excluded" => Ok(SingularityKind::Excluded),
            _ => Err(Error::InvalidDiagram(alloc::format!("unknown singularity kind {s:?}"))),
        }
    }
}

/// The five shapes of the SL(3) determinant formulas, with the integer
/// parameters of `q^{(e)}_{a,b}(t) = (1−t)^a (1−t^e)^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremCase {
    /// `q⁽²⁾_{a,b}(t)·Δ_{T⁻_α}(t)` and `(1−t)·q⁽²⁾_{a,b}(t)·Δ_{T_{2,α}}(t)`
    Kleinian { a: i32, b: i32 },
    /// `q⁽⁴⁾_{a,b}(t)·Δ_{T⁺_α}(t)` and `(1−t)·q⁽⁴⁾_{a,b}(t)·Δ_{T_{4,α}}(t)`
    QuarticShift { a: i32, b: i32 },
    /// `q⁽²⁾_{a,b}(t³)·Δ_{T⁺_α}(t³)` and `(1−t³)·q⁽²⁾_{a,b}(t³)·Δ_{T_{2,α}}(t³)`
    CubicArgument { a: i32, b: i32 },
    /// Six arms of length 2: the first arm moves from `M` to `M₀`.
    SixArms,
    /// `c_G = 6`, argument `t⁶`.
    SexticArgument,
}

impl TheoremCase {
    /// `(m0_spec, m_spec)` as the theorem states them for arm lengths `alphas`.
    pub fn specs(self, alphas: &[usize]) -> (FactorSpec, FactorSpec) {
        let with = |first: usize| {
            let mut v = alloc::vec![first];
            v.extend_from_slice(alphas);
            v
        };
        match self {
            TheoremCase::Kleinian { a, b } => (
                FactorSpec::new(&[(1, a), (2, b)], Variant::Minus, alphas, 1),
                FactorSpec::new(&[(1, a + 1), (2, b)], Variant::Plain, &with(2), 1),
            ),
            TheoremCase::QuarticShift { a, b } => (
                FactorSpec::new(&[(1, a), (4, b)], Variant::Plus, alphas, 1),
                FactorSpec::new(&[(1, a + 1), (4, b)], Variant::Plain, &with(4), 1),
            ),
            TheoremCase::CubicArgument { a, b } => (
                FactorSpec::new(&[(3, a), (6, b)], Variant::Plus, alphas, 3),
                FactorSpec::new(&[(3, a + 1), (6, b)], Variant::Plain, &with(2), 3),
            ),
            TheoremCase::SixArms => {
                let mut m0_arms = alloc::vec![2];
                m0_arms.extend_from_slice(&alphas[1..]);
                (
                    FactorSpec::new(&[(3, 10), (6, -3)], Variant::Plus, &m0_arms, 3),
                    FactorSpec::new(&[(3, 9), (6, -3)], Variant::Plain, &alphas[1..], 3),
                )
            }
            TheoremCase::SexticArgument => (
                FactorSpec::new(&[(3, 4), (6, 1), (9, 1), (18, -1)], Variant::Plus, alphas, 6),
                FactorSpec::new(&[(3, 4), (6, 1), (9, 2), (18, -1)], Variant::Plain, alphas, 6),
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    /// Human-readable group name.
    pub name: String,
    pub dim: usize,
    pub generators: Vec<GroupElement>,
    pub order: u64,
    /// Degrees of the invariant generators; for SL(3) the first is `deg w`.
    pub invariant_degrees: Vec<u64>,
    pub c_g: u64,
    /// Reduced weight system of the associated surface singularity.
    pub weights: WeightSystem,
    pub dolgachev: Vec<usize>,
    pub singularity: String,
    pub normal_form: String,
    pub kind: SingularityKind,
    /// Expected `det M₀` and `det M` (SL(3) only).
    pub m0_spec: Option<FactorSpec>,
    pub m_spec: Option<FactorSpec>,
    pub theorem: Option<TheoremCase>,
    /// ADE type of an SL(2) group.
    pub ade: Option<AdeLabel>,
    pub sl2_mckay_applicable: bool,
}

impl CatalogEntry {
    /// gcd of the invariant degrees, excluding `deg w` in dimension 3.
    pub fn c_g_from_degrees(&self) -> u64 {
        let skip = usize::from(self.dim == 3);
        self.invariant_degrees[skip..].iter().fold(0, |g, &x| g.gcd(&x))
    }

    pub fn deg_w(&self) -> Option<u64> {
        (self.dim == 3).then(|| self.invariant_degrees[0])
    }
}

/// `p_f(t^{c_G})`, divided by `1 − t^{deg w}` in dimension 3.
pub fn expected_pg(entry: &CatalogEntry) -> RationalFunction {
    let pf = poincare_from_weights(&entry.weights).substitute_power(entry.c_g as usize);
    match entry.deg_w() {
        Some(w) => pf.mul(&RationalFunction::one_minus_t_pow(w as usize, -1)),
        None => pf,
    }
}
