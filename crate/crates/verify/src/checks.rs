//! Per-entry verification.
//!
//! Verification is staged: [`prepare`] computes the group, its character
//! table and the McKay matrices once, and [`run_checks`] evaluates every
//! identity from that data. Tests perturb a [`Prepared`] value between the
//! two stages to confirm that the checks can fail.

use std::time::Instant;

use mckay_core::arith::{rational_eq, Cyclotomic, IntPolynomial, Rational, RationalFunction};
use mckay_core::catalog::{expected_det_expression, expected_pg, poincare_from_weights, CatalogEntry, SingularityKind};
use mckay_core::coxeter::{
    build_ade, build_diagram, char_poly_at_t_squared, char_poly_coxeter, coxeter_element, AdeLabel, Variant,
};
use mckay_core::groups::{
    character_table, generate_group, natural_character, CharacterTable, ConjugacyClasses, MatrixGroup,
};
use mckay_core::mckay::{
    check_cg_recursion, check_dimension_counts, det_m_class_product, m_determinants, mckay_matrices, molien_series,
    solve_p_by_linear_system, symmetric_power_vector, McKayMatrices,
};
use num_bigint::Sign;
use serde::Serialize;

/// Upper bound on group orders accepted during closure.
pub const ORDER_BOUND: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    pub ms: u64,
}

pub struct Prepared {
    pub entry: CatalogEntry,
    pub group: MatrixGroup,
    pub classes: ConjugacyClasses,
    pub table: CharacterTable,
    pub chi: Vec<Cyclotomic>,
    pub mm: McKayMatrices,
}

pub fn prepare(entry: &CatalogEntry) -> mckay_core::Result<Prepared> {
    let group = generate_group(&entry.generators, entry.dim, ORDER_BOUND)?;
    let classes = group.conjugacy_classes();
    let table = character_table(&group, &classes)?;
    let chi = natural_character(&group, &classes);
    let mm = mckay_matrices(&table, &chi)?;
    Ok(Prepared { entry: entry.clone(), group, classes, table, chi, mm })
}

struct Recorder {
    out: Vec<CheckResult>,
    timings: bool,
}

impl Recorder {
    fn run(&mut self, name: &str, f: impl FnOnce() -> mckay_core::Result<(bool, String, String)>) {
        let start = Instant::now();
        let (pass, lhs, rhs) = match f() {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}"), String::new()),
        };
        let ms = if self.timings { start.elapsed().as_millis() as u64 } else { 0 };
        self.out.push(CheckResult { name: name.into(), pass, lhs, rhs, ms });
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, name: &str, f: impl FnOnce() -> mckay_core::Result<(T, T)>) {
        self.run(name, || f().map(|(a, b)| (a == b, a.to_string(), b.to_string())));
    }

    fn rat(&mut self, name: &str, f: impl FnOnce() -> mckay_core::Result<(RationalFunction, RationalFunction)>) {
        self.run(name, || f().map(|(a, b)| (rational_eq(&a, &b), a.to_string(), b.to_string())));
    }
}

fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Row orthonormality, `Σ d² = |G|` and column orthogonality.
fn table_invariants(table: &CharacterTable) -> (bool, String) {
    let k = table.len();
    let rows = table.rows();
    for i in 0..k {
        for j in 0..k {
            let ip = table.inner_product(&rows[i], &rows[j]).to_rational();
            if ip != Some(rational(i64::from(i == j))) {
                return (false, format!("<chi_{i}, chi_{j}> = {ip:?}"));
            }
        }
    }
    let sum_sq: u64 = table.degrees().iter().map(|d| d * d).sum();
    if sum_sq != table.group_order() {
        return (false, format!("sum of squared degrees {sum_sq}"));
    }
    for a in 0..k {
        for b in 0..k {
            let acc = rows.iter().fold(Cyclotomic::rational(rational(0)), |acc, r| &acc + &(&r[a] * &r[b].conj()));
            let expected = if a == b { (table.group_order() / table.class_sizes()[a]) as i64 } else { 0 };
            if acc.to_rational() != Some(rational(expected)) {
                return (false, format!("columns {a}, {b} not orthogonal"));
            }
        }
    }
    (true, format!("{k} irreducibles, orthonormal, sum d^2 = {sum_sq}"))
}

fn coxeter_delta(variant: Variant, alphas: &[usize]) -> mckay_core::Result<IntPolynomial> {
    char_poly_coxeter(&coxeter_element(&build_diagram(variant, alphas)?)?)
}

fn coxeter_at_t_squared(label: AdeLabel, affine: bool) -> mckay_core::Result<IntPolynomial> {
    char_poly_at_t_squared(&coxeter_element(&build_ade(label, affine)?)?)
}

/// Evaluates every applicable identity on prepared data. `order` is the
/// truncation order of the Clebsch–Gordan checks.
pub fn run_checks(p: &Prepared, order: usize, timings: bool) -> Vec<CheckResult> {
    let e = &p.entry;
    let n = e.dim;
    let mut r = Recorder { out: Vec::new(), timings };

    r.eq("order", || Ok((p.group.order() as u64, e.order)));
    r.run("character_table", || {
        let (pass, msg) = table_invariants(&p.table);
        Ok((pass, msg, "orthonormal".into()))
    });
    r.run("bstar_transpose", || Ok((p.mm.bstar_is_transpose(), format!("{:?}", p.mm.bstar), format!("{:?}", p.mm.b))));
    if n == 2 {
        r.run("b_symmetric", || Ok((p.mm.b_is_symmetric(), format!("{:?}", p.mm.b), "symmetric".into())));
    }

    let dets = m_determinants(&p.mm, n);
    r.eq("det_m_class_product", || {
        let (dm, _) = dets.clone()?;
        Ok((dm, det_m_class_product(&p.group, &p.classes)?))
    });
    r.eq("det_m_degree", || {
        let (dm, _) = dets.clone()?;
        Ok((dm.degree().unwrap_or(0), n * p.table.len()))
    });

    if let (Some(m0), Some(m)) = (&e.m0_spec, &e.m_spec) {
        r.rat("det_m0_table4", || {
            let (_, dm0) = dets.clone()?;
            Ok((RationalFunction::from_poly(dm0), expected_det_expression(m0)?))
        });
        r.rat("det_m_table4", || {
            let (dm, _) = dets.clone()?;
            Ok((RationalFunction::from_poly(dm), expected_det_expression(m)?))
        });
        if let Some(case) = e.theorem {
            r.run("theorem_consistency", || {
                let (t0, t) = case.specs(&e.dolgachev);
                let pass = rational_eq(&expected_det_expression(&t0)?, &expected_det_expression(m0)?)
                    && rational_eq(&expected_det_expression(&t)?, &expected_det_expression(m)?);
                Ok((pass, format!("{t0:?} | {t:?}"), format!("{m0:?} | {m:?}")))
            });
        }
    }

    let molien = molien_series(&p.group, &p.classes);
    r.rat("cramer_molien", || {
        let (dm, dm0) = dets.clone()?;
        Ok((RationalFunction::new(dm0, dm)?, molien.clone()?))
    });
    r.rat("molien_expected_pg", || Ok((molien.clone()?, expected_pg(e))));

    let variant = match e.kind {
        SingularityKind::Kleinian => Some(Variant::Minus),
        SingularityKind::Fuchsian => Some(Variant::Plus),
        SingularityKind::Excluded => None,
    };
    if let Some(v) = variant {
        r.rat("singularity_poincare", || {
            let num = coxeter_delta(v, &e.dolgachev)?;
            let den = coxeter_delta(Variant::Plain, &e.dolgachev)?;
            Ok((poincare_from_weights(&e.weights), RationalFunction::new(num, den)?))
        });
    }

    r.run("clebsch_gordan", || {
        let v = symmetric_power_vector(&p.group, &p.classes, &p.table, order)?;
        let lin = solve_p_by_linear_system(&p.mm, n, order)?;
        let nonneg = (0..=order).all(|m| v.at(m).iter().all(|x| x.sign() != Sign::Minus));
        let rec = check_cg_recursion(&v, &p.mm, n);
        let dims = check_dimension_counts(&v, p.table.degrees(), n);
        let same = v == lin;
        Ok((
            rec && dims && same && nonneg,
            format!("recursion {rec}, dimension counts {dims}, linear system agrees {same}, non-negative {nonneg}"),
            format!("order {order}"),
        ))
    });

    if n == 2 {
        match e.ade {
            Some(AdeLabel::A(_)) => {
                r.eq("cyclic_det_m", || {
                    let (dm, _) = dets.clone()?;
                    Ok((dm, IntPolynomial::one_minus_t_pow(e.order as usize).pow(2)))
                });
            }
            Some(label) => {
                r.eq("sl2_coxeter_m0", || {
                    let (_, dm0) = dets.clone()?;
                    Ok((dm0, coxeter_at_t_squared(label, false)?))
                });
                r.eq("sl2_coxeter_m", || {
                    let (dm, _) = dets.clone()?;
                    Ok((dm, coxeter_at_t_squared(label, true)?))
                });
            }
            None => {}
        }
    }
    r.out
}

/// Prepares and checks one entry; a failure during preparation becomes a
/// single failed `prepare` check.
pub fn verify_entry(entry: &CatalogEntry, order: usize, timings: bool) -> Vec<CheckResult> {
    let start = Instant::now();
    match prepare(entry) {
        Ok(p) => run_checks(&p, order, timings),
        Err(err) => vec![CheckResult {
            name: "prepare".into(),
            pass: false,
            lhs: format!("error: {err}"),
            rhs: String::new(),
            ms: if timings { start.elapsed().as_millis() as u64 } else { 0 },
        }],
    }
}
