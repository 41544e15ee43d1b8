//! Plain-text renderings used by the CLI.

use std::fmt::Write as _;

use mckay_core::arith::{cyclotomic_polynomial, rational_eq, IntPolynomial, RationalFunction};
use mckay_core::catalog::{expected_det_expression, CatalogEntry, FactorSpec};
use mckay_core::coxeter::CoxeterDiagram;
use mckay_core::mckay::m_determinants;
use serde::Serialize;

use crate::checks::Prepared;

fn power(base: &str, e: i64) -> String {
    match e {
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn one_minus(e: u32) -> String {
    if e == 1 {
        "(1-t)".into()
    } else {
        format!("(1-t^{e})")
    }
}

/// `(1-t)^3 (1-t^2) D[minus 2,3,3](t)`.
pub fn describe_spec(s: &FactorSpec) -> String {
    let mut parts: Vec<String> = s.factors.iter().map(|&(e, b)| power(&one_minus(e), b.into())).collect();
    let arg = if s.argument_power == 1 { "t".to_string() } else { format!("t^{}", s.argument_power) };
    let alphas: Vec<String> = s.alphas.iter().map(usize::to_string).collect();
    parts.push(format!("D[{} {}]({arg})", s.variant.name(), alphas.join(",")));
    parts.join(" ")
}

/// Writes `p` as `±∏ Φ_d^{e_d}` times whatever is left, e.g.
/// `Phi1^5 Phi4 Phi6`.
pub fn cyclotomic_factorization(p: &IntPolynomial) -> String {
    let Some(deg) = p.degree() else { return "0".into() };
    let mut rest = p.clone();
    let mut parts = Vec::new();
    let mut d = 1u32;
    while rest.degree().unwrap_or(0) > 0 && (d as usize) <= 2 * deg * deg + 2 {
        if totient(d) as usize > rest.degree().unwrap_or(0) {
            d += 1;
            continue;
        }
        let phi = cyclotomic_polynomial(d);
        let mut e = 0;
        while let Some(q) = rest.div_exact(&phi) {
            rest = q;
            e += 1;
        }
        if e > 0 {
            parts.push(power(&format!("Phi{d}"), e));
        }
        d += 1;
    }
    let sign = match rest.coeffs() {
        [c] if c == &(-1).into() => "-",
        [c] if c == &1.into() => "",
        _ => {
            parts.push(format!("({rest})"));
            ""
        }
    };
    if parts.is_empty() {
        parts.push("1".into());
    }
    format!("{sign}{}", parts.join(" "))
}

fn totient(mut n: u32) -> u32 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Table4Row {
    pub id: String,
    pub which: &'static str,
    pub expected: String,
    pub computed: String,
    pub factored: String,
    pub pass: bool,
}

/// Computed `det M₀`, `det M` against the catalog formulas.
pub fn table4_rows(p: &Prepared) -> mckay_core::Result<Vec<Table4Row>> {
    let e = &p.entry;
    let (dm, dm0) = m_determinants(&p.mm, e.dim)?;
    let mut out = Vec::new();
    for (which, spec, det) in [("det M0", &e.m0_spec, dm0), ("det M", &e.m_spec, dm)] {
        let Some(spec) = spec else { continue };
        let expected = expected_det_expression(spec)?;
        out.push(Table4Row {
            id: e.id.clone(),
            which,
            expected: describe_spec(spec),
            factored: cyclotomic_factorization(&det),
            pass: rational_eq(&RationalFunction::from_poly(det.clone()), &expected),
            computed: det.to_string(),
        });
    }
    Ok(out)
}

pub fn table4_text(rows: &[Table4Row]) -> String {
    let w_id = rows.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let w_exp = rows.iter().map(|r| r.expected.len()).max().unwrap_or(8).max(8);
    let mut s = String::new();
    let _ = writeln!(s, "{:w_id$}  {:6}  {:w_exp$}  {:4}  computed", "id", "", "expected", "");
    for r in rows {
        let mark = if r.pass { "ok" } else { "FAIL" };
        let _ = writeln!(s, "{:w_id$}  {:6}  {:w_exp$}  {:4}  {}", r.id, r.which, r.expected, mark, r.factored);
    }
    s
}

pub fn int_matrix(m: &[Vec<impl std::fmt::Display>]) -> String {
    let cells: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    for r in &cells {
        let line: Vec<String> = r.iter().map(|c| format!("{c:>w$}")).collect();
        let _ = writeln!(s, "  [{}]", line.join(" "));
    }
    s
}

pub fn group_info(p: &Prepared) -> String {
    let e: &CatalogEntry = &p.entry;
    let mut s = String::new();
    let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    let _ = writeln!(s, "{}: {}", e.id, e.name);
    let _ = writeln!(s, "  dimension          {}", e.dim);
    let _ = writeln!(s, "  order              {} (catalog {})", p.group.order(), e.order);
    let _ = writeln!(s, "  exponent           {}", p.group.exponent());
    let sizes: Vec<u64> = p.classes.sizes().into_iter().map(|x| x as u64).collect();
    let _ = writeln!(s, "  classes            {} [{}]", p.classes.len(), list(&sizes));
    let _ = writeln!(s, "  irreducible dims   [{}]", list(p.table.degrees()));
    let _ = writeln!(s, "  invariant degrees  [{}]", list(&e.invariant_degrees));
    let _ = writeln!(s, "  c_G                {}", e.c_g);
    let _ = writeln!(
        s,
        "  weights            ({}; {})",
        list(&e.weights.weights),
        list(&e.weights.degrees)
    );
    let dol: Vec<u64> = e.dolgachev.iter().map(|&x| x as u64).collect();
    let _ = writeln!(s, "  Dolgachev numbers  ({})", list(&dol));
    let _ = writeln!(s, "  singularity        {} ({})", e.singularity, e.kind.name());
    let _ = writeln!(s, "  normal form        {}", e.normal_form);
    let _ = write!(s, "  B =\n{}", int_matrix(&p.mm.b));
    s
}

pub fn character_table_text(p: &Prepared) -> String {
    let t = &p.table;
    let mut s = String::new();
    let sizes: Vec<String> = t.class_sizes().iter().map(u64::to_string).collect();
    let orders: Vec<String> = (0..p.classes.len()).map(|c| p.classes.element_order(c).to_string()).collect();
    let _ = writeln!(s, "{}: |G| = {}, z{} = exp(2 pi i/{})", p.entry.id, t.group_order(), t.field().conductor(), t.field().conductor());
    let _ = writeln!(s, "class sizes    [{}]", sizes.join(", "));
    let _ = writeln!(s, "element orders [{}]", orders.join(", "));
    for (i, row) in t.rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "chi{i:<3} [{}]", cells.join(", "));
    }
    s
}

pub fn diagram_text(d: &CoxeterDiagram) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "vertices: {}", d.vertices.join(" "));
    let _ = write!(s, "Gram matrix:\n{}", int_matrix(&d.gram));
    s
}
