//! On-disk catalog format: one JSON document per group.
//!
//! Cyclotomic matrix entries are sparse in the power basis of `ℚ(ζ_N)`:
//! `{"n": N, "terms": [[k, "p/q"], ...]}` stands for `Σ (p/q)·ζ_N^k`.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use mckay_core::arith::{CycloField, Cyclotomic, Rational};
use mckay_core::catalog::{CatalogEntry, FactorSpec, SingularityKind, TheoremCase, WeightSystem};
use mckay_core::coxeter::{AdeLabel, Variant};
use mckay_core::groups::GroupElement;
use serde::{Deserialize, Serialize};

use crate::CatalogError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloJson {
    pub n: u32,
    pub terms: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsJson {
    pub weights: Vec<u64>,
    pub degrees: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpecJson {
    /// `(e, b)` pairs for `(1−t^e)^b`.
    pub factors: Vec<(u32, i32)>,
    pub variant: String,
    pub alphas: Vec<usize>,
    pub argument_power: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum TheoremJson {
    Kleinian { a: i32, b: i32 },
    QuarticShift { a: i32, b: i32 },
    CubicArgument { a: i32, b: i32 },
    SixArms,
    SexticArgument,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub schema_version: u32,
    pub id: String,
    pub name: String,
    pub dim: usize,
    pub order: u64,
    pub generators: Vec<Vec<Vec<CycloJson>>>,
    pub invariant_degrees: Vec<u64>,
    pub c_g: u64,
    pub weights: WeightsJson,
    pub dolgachev: Vec<usize>,
    pub singularity: String,
    pub normal_form: String,
    pub kind: String,
    pub m0_spec: Option<FactorSpecJson>,
    pub m_spec: Option<FactorSpecJson>,
    pub theorem: Option<TheoremJson>,
    pub ade: Option<String>,
    pub sl2_mckay_applicable: bool,
}

fn cyclo_to_json(c: &Cyclotomic) -> CycloJson {
    let zero = Rational::from_integer(0.into());
    let terms = c
        .coefficients()
        .iter()
        .enumerate()
        .filter(|(_, q)| **q != zero)
        .map(|(k, q)| (k, q.to_string()))
        .collect();
    CycloJson { n: c.conductor(), terms }
}

fn spec_to_json(s: &FactorSpec) -> FactorSpecJson {
    FactorSpecJson {
        factors: s.factors.clone(),
        variant: s.variant.name().into(),
        alphas: s.alphas.clone(),
        argument_power: s.argument_power,
    }
}

fn theorem_to_json(t: TheoremCase) -> TheoremJson {
    match t {
        TheoremCase::Kleinian { a, b } => TheoremJson::Kleinian { a, b },
        TheoremCase::QuarticShift { a, b } => TheoremJson::QuarticShift { a, b },
        TheoremCase::CubicArgument { a, b } => TheoremJson::CubicArgument { a, b },
        TheoremCase::SixArms => TheoremJson::SixArms,
        TheoremCase::SexticArgument => TheoremJson::SexticArgument,
    }
}

fn theorem_from_json(t: &TheoremJson) -> TheoremCase {
    match *t {
        TheoremJson::Kleinian { a, b } => TheoremCase::Kleinian { a, b },
        TheoremJson::QuarticShift { a, b } => TheoremCase::QuarticShift { a, b },
        TheoremJson::CubicArgument { a, b } => TheoremCase::CubicArgument { a, b },
        TheoremJson::SixArms => TheoremCase::SixArms,
        TheoremJson::SexticArgument => TheoremCase::SexticArgument,
    }
}

impl From<&CatalogEntry> for EntryJson {
    fn from(e: &CatalogEntry) -> Self {
        EntryJson {
            schema_version: SCHEMA_VERSION,
            id: e.id.clone(),
            name: e.name.clone(),
            dim: e.dim,
            order: e.order,
            generators: e
                .generators
                .iter()
                .map(|g| g.rows().iter().map(|r| r.iter().map(cyclo_to_json).collect()).collect())
                .collect(),
            invariant_degrees: e.invariant_degrees.clone(),
            c_g: e.c_g,
            weights: WeightsJson { weights: e.weights.weights.clone(), degrees: e.weights.degrees.clone() },
            dolgachev: e.dolgachev.clone(),
            singularity: e.singularity.clone(),
            normal_form: e.normal_form.clone(),
            kind: e.kind.name().into(),
            m0_spec: e.m0_spec.as_ref().map(spec_to_json),
            m_spec: e.m_spec.as_ref().map(spec_to_json),
            theorem: e.theorem.map(theorem_to_json),
            ade: e.ade.map(|a| a.to_string()),
            sl2_mckay_applicable: e.sl2_mckay_applicable,
        }
    }
}

/// Caches one field per conductor so that every entry of a matrix shares it.
#[derive(Default)]
struct Fields(HashMap<u32, Arc<CycloField>>);

impl Fields {
    fn get(&mut self, n: u32) -> Arc<CycloField> {
        self.0.entry(n).or_insert_with(|| CycloField::new(n)).clone()
    }
}

fn invalid(id: &str, msg: impl std::fmt::Display) -> CatalogError {
    CatalogError::Invalid { id: id.to_string(), msg: msg.to_string() }
}

fn cyclo_from_json(id: &str, c: &CycloJson, fields: &mut Fields) -> Result<Cyclotomic, CatalogError> {
    if c.n == 0 {
        return Err(invalid(id, "conductor must be positive"));
    }
    let field = fields.get(c.n);
    let mut coeffs = vec![Rational::from_integer(0.into()); field.degree()];
    for (k, q) in &c.terms {
        let slot = coeffs
            .get_mut(*k)
            .ok_or_else(|| invalid(id, format!("power {k} outside the basis of Q(zeta_{})", c.n)))?;
        *slot = q.parse::<Rational>().map_err(|e| invalid(id, format!("bad rational {q:?}: {e}")))?;
    }
    field.element(coeffs).map_err(|e| invalid(id, e))
}

fn spec_from_json(id: &str, s: &FactorSpecJson) -> Result<FactorSpec, CatalogError> {
    let variant: Variant = s.variant.parse().map_err(|e| invalid(id, e))?;
    Ok(FactorSpec::new(&s.factors, variant, &s.alphas, s.argument_power))
}

impl EntryJson {
    pub fn to_entry(&self) -> Result<CatalogEntry, CatalogError> {
        let id = self.id.as_str();
        if self.schema_version != SCHEMA_VERSION {
            return Err(invalid(id, format!("unsupported schema version {}", self.schema_version)));
        }
        let mut fields = Fields::default();
        let mut generators = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let rows = g
                .iter()
                .map(|r| r.iter().map(|c| cyclo_from_json(id, c, &mut fields)).collect())
                .collect::<Result<Vec<Vec<_>>, _>>()?;
            let el = GroupElement::new(rows).map_err(|e| invalid(id, e))?;
            if el.dim() != self.dim {
                return Err(invalid(id, format!("generator of size {} in dimension {}", el.dim(), self.dim)));
            }
            generators.push(el);
        }
        let kind: SingularityKind = self.kind.parse().map_err(|e| invalid(id, e))?;
        let ade = self
            .ade
            .as_deref()
            .map(str::parse::<AdeLabel>)
            .transpose()
            .map_err(|e| invalid(id, e))?;
        Ok(CatalogEntry {
            id: self.id.clone(),
            name: self.name.clone(),
            dim: self.dim,
            generators,
            order: self.order,
            invariant_degrees: self.invariant_degrees.clone(),
            c_g: self.c_g,
            weights: WeightSystem::new(&self.weights.weights, &self.weights.degrees),
            dolgachev: self.dolgachev.clone(),
            singularity: self.singularity.clone(),
            normal_form: self.normal_form.clone(),
            kind,
            m0_spec: self.m0_spec.as_ref().map(|s| spec_from_json(id, s)).transpose()?,
            m_spec: self.m_spec.as_ref().map(|s| spec_from_json(id, s)).transpose()?,
            theorem: self.theorem.as_ref().map(theorem_from_json),
            ade,
            sl2_mckay_applicable: self.sl2_mckay_applicable,
        })
    }
}

/// One field per line, one matrix row per line.
pub fn to_json_string(e: &CatalogEntry) -> String {
    let raw = EntryJson::from(e);
    let value = serde_json::to_value(&raw).expect("catalog entries serialize");
    let compact = |v: &serde_json::Value| serde_json::to_string(v).expect("json values serialize");
    let mut fields = Vec::new();
    for (key, v) in value.as_object().expect("entries serialize to objects") {
        let body = match (key.as_str(), v) {
            ("generators", serde_json::Value::Array(mats)) if !mats.is_empty() => {
                let mats: Vec<String> = mats
                    .iter()
                    .map(|m| {
                        let rows: Vec<String> = m
                            .as_array()
                            .expect("matrices are arrays")
                            .iter()
                            .map(|r| format!("      {}", compact(r)))
                            .collect();
                        format!("    [\n{}\n    ]", rows.join(",\n"))
                    })
                    .collect();
                format!("[\n{}\n  ]", mats.join(",\n"))
            }
            _ => compact(v),
        };
        fields.push(format!("  {}: {body}", compact(&serde_json::Value::String(key.clone()))));
    }
    format!("{{\n{}\n}}\n", fields.join(",\n"))
}

pub fn parse_entry(text: &str, origin: &str) -> Result<CatalogEntry, CatalogError> {
    let raw: EntryJson =
        serde_json::from_str(text).map_err(|e| CatalogError::Parse { origin: origin.into(), msg: e.to_string() })?;
    raw.to_entry()
}

/// Reads every `*.json` file of a directory. Entries are sorted by id.
pub fn load_dir(dir: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let io = |e: std::io::Error| CatalogError::Io { path: dir.to_path_buf(), msg: e.to_string() };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|d| d.ok().map(|d| d.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut out = Vec::with_capacity(paths.len());
    for p in paths {
        let text = fs::read_to_string(&p).map_err(|e| CatalogError::Io { path: p.clone(), msg: e.to_string() })?;
        out.push(parse_entry(&text, &p.display().to_string())?);
    }
    sort_and_dedup(out)
}

pub(crate) fn sort_and_dedup(mut v: Vec<CatalogEntry>) -> Result<Vec<CatalogEntry>, CatalogError> {
    v.sort_by(|a, b| a.id.cmp(&b.id));
    if let Some(w) = v.windows(2).find(|w| w[0].id == w[1].id) {
        return Err(CatalogError::Duplicate(w[0].id.clone()));
    }
    Ok(v)
}

/// Writes one file per entry, named `<id>.json`.
pub fn write_dir(dir: &Path, entries: &[CatalogEntry]) -> Result<(), CatalogError> {
    fs::create_dir_all(dir).map_err(|e| CatalogError::Io { path: dir.to_path_buf(), msg: e.to_string() })?;
    for e in entries {
        let p = dir.join(format!("{}.json", e.id));
        fs::write(&p, to_json_string(e)).map_err(|err| CatalogError::Io { path: p.clone(), msg: err.to_string() })?;
    }
    Ok(())
}
