use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mckay_core::arith::series_expand;
use mckay_core::coxeter::{
    build_ade, build_diagram, char_poly_at_t_squared, char_poly_coxeter, closed_form_delta, coxeter_element,
    AdeLabel, CoxeterDiagram, Variant,
};
use mckay_core::mckay::{molien_series, symmetric_power_vector};
use mckay_verify::render::{self, Table4Row};
use mckay_verify::{load_catalog, prepare, run_suite, schema, select};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "mckay", version, about = "Verify McKay-correspondence identities for finite subgroups of SL(2) and SL(3)")]
struct Cli {
    /// Directory of catalog JSON files; defaults to $MCKAY_CATALOG, then the built-in catalog.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Series truncation order.
    #[arg(long, global = true, default_value_t = 50)]
    order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Comma-separated entry ids, or `all`.
    #[arg(long, global = true, default_value = "all")]
    entries: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run every applicable check; exit status 1 if any fails.
    Verify {
        /// Record per-check wall time in milliseconds.
        #[arg(long)]
        timings: bool,
    },
    /// Order, classes, irreducible degrees, invariants and the McKay matrix.
    GroupInfo,
    /// Character tables.
    Chartable,
    /// Coxeter element of a star-shaped graph or an ADE diagram.
    Coxeter {
        /// `minus`, `plain` or `plus`.
        #[arg(long, conflicts_with = "ade")]
        variant: Option<Variant>,
        /// Arm lengths, e.g. `2,3,7`.
        #[arg(long, value_delimiter = ',', requires = "variant")]
        alphas: Vec<usize>,
        /// ADE label such as `E8` or `D5`.
        #[arg(long)]
        ade: Option<AdeLabel>,
        /// Use the extended diagram.
        #[arg(long, requires = "ade")]
        affine: bool,
    },
    /// Molien series and the per-irreducible series.
    Molien,
    /// Computed det M0(t), det M(t) beside the tabulated factorizations.
    Table4,
    /// Write the built-in catalog as JSON files into a directory.
    ExportCatalog { dir: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Command::ExportCatalog { dir } = &cli.command {
        let entries = mckay_core::catalog::builtin();
        schema::write_dir(dir, &entries)?;
        println!("wrote {} entries to {}", entries.len(), dir.display());
        return Ok(ExitCode::SUCCESS);
    }
    if let Command::Coxeter { variant, alphas, ade, affine } = &cli.command {
        print!("{}", coxeter(*variant, alphas, *ade, *affine, cli.format)?);
        return Ok(ExitCode::SUCCESS);
    }

    let catalog = load_catalog(cli.catalog.as_deref()).context("loading catalog")?;
    match cli.command {
        Command::Verify { timings } => {
            let report = run_suite(&catalog, &cli.entries, cli.order, timings)?;
            match cli.format {
                Format::Json => print!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(if report.pass() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::GroupInfo | Command::Chartable | Command::Molien => {
            let chosen = select(&catalog, &cli.entries)?;
            let texts = chosen
                .par_iter()
                .map(|e| {
                    let p = prepare(e).with_context(|| format!("entry {}", e.id))?;
                    Ok(match cli.command {
                        Command::GroupInfo => render::group_info(&p),
                        Command::Chartable => render::character_table_text(&p),
                        _ => molien_text(&p, cli.order)?,
                    })
                })
                .collect::<Result<Vec<String>>>()?;
            print!("{}", texts.join("\n"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Table4 => {
            let chosen: Vec<_> = select(&catalog, &cli.entries)?.into_iter().filter(|e| e.m_spec.is_some()).collect();
            if chosen.is_empty() {
                bail!("no selected entry carries determinant formulas");
            }
            let rows = chosen
                .par_iter()
                .map(|e| {
                    let p = prepare(e).with_context(|| format!("entry {}", e.id))?;
                    Ok(render::table4_rows(&p)?)
                })
                .collect::<Result<Vec<Vec<Table4Row>>>>()?
                .concat();
            match cli.format {
                Format::Json => print!("{}", json(&rows)?),
                Format::Text => print!("{}", render::table4_text(&rows)),
            }
            Ok(if rows.iter().all(|r| r.pass) { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Coxeter { .. } | Command::ExportCatalog { .. } => unreachable!(),
    }
}

fn molien_text(p: &mckay_verify::Prepared, order: usize) -> Result<String> {
    let molien = molien_series(&p.group, &p.classes)?;
    let v = symmetric_power_vector(&p.group, &p.classes, &p.table, order)?;
    let series = series_expand(&molien, order)?;
    let coeffs: Vec<String> = series.coeffs().iter().map(ToString::to_string).collect();
    let mut s = format!("{}: P_G(t) = {molien}\n  series: {}\n", p.entry.id, coeffs.join(" "));
    for i in 0..v.components() {
        let c: Vec<String> = v.component(i).iter().map(ToString::to_string).collect();
        s += &format!("  chi{i} (dim {}): {}\n", p.table.degrees()[i], c.join(" "));
    }
    Ok(s)
}

fn coxeter(
    variant: Option<Variant>,
    alphas: &[usize],
    ade: Option<AdeLabel>,
    affine: bool,
    format: Format,
) -> Result<String> {
    let diagram: CoxeterDiagram = match (variant, ade) {
        (Some(v), None) => build_diagram(v, alphas)?,
        (None, Some(l)) => build_ade(l, affine)?,
        _ => bail!("pass either --variant with --alphas, or --ade"),
    };
    let tau = coxeter_element(&diagram)?;
    let delta = char_poly_coxeter(&tau)?;
    let at_t2 = char_poly_at_t_squared(&tau)?;
    let closed = variant.map(|v| closed_form_delta(v, alphas)).transpose()?;
    if format == Format::Json {
        let v = serde_json::json!({
            "vertices": diagram.vertices,
            "gram": diagram.gram,
            "coxeter_element": tau.matrix.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "delta": delta.to_string(),
            "closed_form": closed.as_ref().map(ToString::to_string),
            "det_t2_minus_tau": at_t2.to_string(),
        });
        return json(&v);
    }
    let mut s = render::diagram_text(&diagram);
    s += &format!("Coxeter element:\n{}", render::int_matrix(&tau.matrix));
    s += &format!("det(1 - t tau)   = {delta}\n");
    s += &format!("                 = {}\n", render::cyclotomic_factorization(&delta));
    if let Some(c) = closed {
        let mark = if c == delta { "agrees" } else { "DIFFERS" };
        s += &format!("closed form      = {c} ({mark})\n");
    }
    s += &format!("det(t^2 - tau)   = {at_t2}\n");
    Ok(s)
}
