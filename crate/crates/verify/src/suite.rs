use std::fmt::Write as _;

use mckay_core::catalog::CatalogEntry;
use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{verify_entry, CheckResult};
use crate::schema::SCHEMA_VERSION;
use crate::CatalogError;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub checks: Vec<CheckResult>,
}

impl EntryReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub entries: usize,
    pub entries_passed: usize,
    pub checks: usize,
    pub checks_passed: usize,
    pub checks_failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: u32,
    pub schema_version: u32,
    pub order: usize,
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.summary.checks_failed == 0
    }

    pub fn entry(&self, id: &str) -> Option<&EntryReport> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let _ = writeln!(s, "{} [{}]", e.id, if e.pass() { "PASS" } else { "FAIL" });
            for c in &e.checks {
                let mark = if c.pass { "ok  " } else { "FAIL" };
                if c.pass {
                    let _ = writeln!(s, "  {mark} {}", c.name);
                } else {
                    let _ = writeln!(s, "  {mark} {}\n       lhs: {}\n       rhs: {}", c.name, c.lhs, c.rhs);
                }
            }
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "{} of {} entries pass; {} of {} checks pass, {} fail",
            m.entries_passed, m.entries, m.checks_passed, m.checks, m.checks_failed
        );
        s
    }
}

/// Resolves a comma-separated id list, or `all`, against the catalog.
/// Unknown ids and empty selections are rejected before any computation.
pub fn select<'a>(catalog: &'a [CatalogEntry], selection: &str) -> Result<Vec<&'a CatalogEntry>, CatalogError> {
    let ids: Vec<&str> = selection.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if ids.is_empty() {
        return Err(CatalogError::EmptySelection);
    }
    if ids == ["all"] {
        return Ok(catalog.iter().collect());
    }
    let mut out = Vec::with_capacity(ids.len());
    for id in ids {
        let e = catalog.iter().find(|e| e.id == id).ok_or_else(|| CatalogError::UnknownId(id.into()))?;
        if !out.iter().any(|x: &&CatalogEntry| x.id == e.id) {
            out.push(e);
        }
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

pub fn run_suite(
    catalog: &[CatalogEntry],
    selection: &str,
    order: usize,
    timings: bool,
) -> Result<Report, CatalogError> {
    let chosen = select(catalog, selection)?;
    let mut entries: Vec<EntryReport> = chosen
        .par_iter()
        .map(|e| EntryReport { id: e.id.clone(), checks: verify_entry(e, order, timings) })
        .collect();
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    let checks = entries.iter().map(|e| e.checks.len()).sum();
    let checks_passed = entries.iter().flat_map(|e| &e.checks).filter(|c| c.pass).count();
    let summary = Summary {
        entries: entries.len(),
        entries_passed: entries.iter().filter(|e| e.pass()).count(),
        checks,
        checks_passed,
        checks_failed: checks - checks_passed,
    };
    Ok(Report { version: REPORT_VERSION, schema_version: SCHEMA_VERSION, order, entries, summary })
}
