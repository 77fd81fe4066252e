//! Command implementations behind the `lensknot` binary. Each `cmd_*`
//! function returns the full report as a string in the requested format.

pub mod args;
pub mod svg;
pub mod sweep;

use std::fmt::{self, Write as _};
use std::path::Path;

use lensknot::legendrian::{self, MountainRange, PeakRotation, RotationCertificate, UtStructure};
use lensknot::tightcount::{count_tight_solid_torus, count_ut_lens};
use lensknot::topology::{self, LensSpace, TorusKnot};
use lensknot::{arith, Int, Rational, RotationMode, Sign};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::args::{Cli, Command, ContactArgs, Format, KnotArgs, PairArgs};

pub const SCHEMA: u32 = 1;

#[derive(Debug)]
pub enum CliError {
    Compute(lensknot::Error),
    Usage(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Compute(e) => write!(f, "{e}"),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<lensknot::Error> for CliError {
    fn from(e: lensknot::Error) -> Self {
        CliError::Compute(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> Result<String> {
    let format = cli.output.format();
    match &cli.command {
        Command::Info(k) => cmd_info(k, format),
        Command::Legendrian { knot, contact, depth } => cmd_legendrian(knot, contact, *depth, format),
        Command::Check { knot, contact, tb, rot } => cmd_check(knot, contact, tb, rot, format),
        Command::Transverse { knot, contact } => cmd_transverse(knot, contact, format),
        Command::TightCount { p, q } => cmd_tight_count(p, q, format),
        Command::Isotopic(pair) => cmd_isotopic(pair, format),
        Command::GroupIso(pair) => cmd_group_iso(pair, format),
        Command::Sweep { max_p, max_a, max_b, contact } => {
            let bounds = sweep::Bounds { max_p: *max_p, max_a: *max_a, max_b: *max_b };
            cmd_sweep(&bounds, contact, format)
        }
        Command::Plot { knot, contact, depth } => cmd_plot(knot, contact, *depth, format),
    }
}

pub fn write_output(path: Option<&Path>, report: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, report)
            .map_err(|e| CliError::Io(std::io::Error::new(e.kind(), format!("cannot write {}: {e}", path.display())))),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(report.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

/// JSON number when it fits in `i64`, decimal string otherwise.
pub fn int_json(n: &Int) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

pub fn rat_json(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn knot_json(k: &TorusKnot) -> Value {
    json!([int_json(k.a()), int_json(k.b())])
}

fn lens_json(l: &LensSpace) -> Value {
    json!({ "p": int_json(l.p()), "q": int_json(l.q()) })
}

fn sign_label(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "plus",
        Sign::Minus => "minus",
    }
}

fn mode_label(m: RotationMode) -> &'static str {
    match m {
        RotationMode::ProofEnum => "proof-enum",
        RotationMode::ClosedForm => "closed-form",
    }
}

fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        writeln!(out, "{k:<width$}  {v}").unwrap();
    }
    out
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn no_csv(format: Format, command: &str) -> Result<()> {
    if format == Format::Csv {
        return Err(CliError::Usage(format!("--csv is not supported by `{command}`")));
    }
    Ok(())
}

fn lens_knot(k: &KnotArgs) -> Result<(LensSpace, TorusKnot)> {
    Ok((LensSpace::new(k.p.clone(), k.q.clone())?, TorusKnot::new(k.a.clone(), k.b.clone())?))
}

fn structure(lens: &LensSpace, c: &ContactArgs) -> Result<UtStructure> {
    Ok(UtStructure::new(lens.clone(), c.structure.into())?)
}

pub fn cmd_info(k: &KnotArgs, format: Format) -> Result<String> {
    no_csv(format, "info")?;
    let (lens, knot) = lens_knot(k)?;
    let sd = topology::seifert_data(&lens, &knot);
    let group = topology::knot_group(&lens, &knot);
    let class = topology::isotopy_class(&lens, &knot);
    let cands = topology::iso_group_candidates(&lens, &knot);
    let null_homologous = topology::is_null_homologous(&lens, &knot);
    let mcg = topology::diffeotopy_group(&lens).label();
    if format == Format::Json {
        return Ok(to_json_string(&json!({
            "schema": SCHEMA,
            "command": "info",
            "lens": lens_json(&lens),
            "knot": knot_json(&knot),
            "order": int_json(&sd.order),
            "null_homologous": null_homologous,
            "m": int_json(&sd.m),
            "l": int_json(&sd.l),
            "chi": rat_json(&sd.chi),
            "knot_group": { "exp_u": int_json(&group.exp_u), "exp_v": int_json(&group.exp_v) },
            "isotopy_class": class.iter().map(knot_json).collect::<Vec<_>>(),
            "group_iso_candidates": cands.iter().map(knot_json).collect::<Vec<_>>(),
            "diffeotopy_group": mcg,
        })));
    }
    Ok(table(&[
        ("lens space", lens.to_string()),
        ("knot", knot.to_string()),
        ("order", sd.order.to_string()),
        ("null-homologous", null_homologous.to_string()),
        ("(m, l)", format!("({}, {})", sd.m, sd.l)),
        ("chi", sd.chi.to_string()),
        ("knot group", group.to_string()),
        ("isotopy class", join(&class, " ")),
        ("same group as", join(&cands, " ")),
        ("diffeotopy group", mcg.to_string()),
    ]))
}

fn flags_json(mr: &MountainRange) -> Value {
    json!({
        "orientation_reversed": mr.frame.reversed,
        "degenerate_decomposition": mr.frame.degenerate_decomposition,
        "boundary_slope_minus_one": mr.frame.boundary_minus_one,
    })
}

fn flags_text(mr: &MountainRange) -> String {
    let mut set = Vec::new();
    if mr.frame.reversed {
        set.push("orientation-reversed");
    }
    if mr.frame.degenerate_decomposition {
        set.push("degenerate-decomposition");
    }
    if mr.frame.boundary_minus_one {
        set.push("boundary-slope-minus-one");
    }
    if set.is_empty() { "none".into() } else { set.join(", ") }
}

fn certificate_json(pk: &PeakRotation) -> Value {
    let RotationCertificate { f_mu1, f_mu2, f_tn_mu1p, branch } = &pk.certificate;
    json!({
        "rot": rat_json(&pk.rot),
        "f_mu1": int_json(f_mu1),
        "f_mu2": int_json(f_mu2),
        "f_tn_mu1p": f_tn_mu1p.as_ref().map_or(Value::Null, int_json),
        "branch": match branch {
            legendrian::Branch::Plus => "plus",
            legendrian::Branch::Minus => "minus",
        },
    })
}

fn compute_range(k: &KnotArgs, c: &ContactArgs) -> Result<(LensSpace, TorusKnot, MountainRange)> {
    let (lens, knot) = lens_knot(k)?;
    let xi = structure(&lens, c)?;
    let mr = legendrian::mountain_range(&xi, &knot, c.mode.into())?;
    Ok((lens, knot, mr))
}

pub fn cmd_legendrian(k: &KnotArgs, c: &ContactArgs, depth: u32, format: Format) -> Result<String> {
    let (lens, knot, mr) = compute_range(k, c)?;
    let lattice = mr.lattice(depth);
    match format {
        Format::Json => {
            let decomposition = mr.frame.decomposition.as_ref().map_or(Value::Null, |d| {
                json!({ "n": int_json(&d.n), "e": int_json(&d.e) })
            });
            Ok(to_json_string(&json!({
                "schema": SCHEMA,
                "command": "legendrian",
                "lens": lens_json(&lens),
                "knot": knot_json(&knot),
                "structure": sign_label(mr.sign),
                "mode": mode_label(mr.mode),
                "case": mr.case().label(),
                "order": int_json(mr.frame.order()),
                "max_tb": rat_json(&mr.max_tb),
                "peaks": mr.peak_pairs().iter().map(|(t, r)| json!([rat_json(t), rat_json(r)])).collect::<Vec<_>>(),
                "certificates": mr.peaks.iter().map(certificate_json).collect::<Vec<_>>(),
                "decomposition": decomposition,
                "flags": flags_json(&mr),
                "depth": depth,
                "lattice": lattice.iter().map(|(t, r)| json!([rat_json(t), rat_json(r)])).collect::<Vec<_>>(),
            })))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["tb", "rot", "peak"]).map_err(csv_err)?;
            for (tb, rot) in &lattice {
                let peak = (*tb == mr.max_tb).to_string();
                w.write_record([tb.to_string(), rot.to_string(), peak]).map_err(csv_err)?;
            }
            csv_finish(w)
        }
        Format::Text => {
            let mut out = table(&[
                ("lens space", lens.to_string()),
                ("knot", knot.to_string()),
                ("structure", sign_label(mr.sign).into()),
                ("mode", mode_label(mr.mode).into()),
                ("case", mr.case().label().into()),
                ("order", mr.frame.order().to_string()),
                ("max tb", mr.max_tb.to_string()),
                ("peak rot", join(mr.peak_rots(), " ")),
                ("flags", flags_text(&mr)),
            ]);
            writeln!(out, "lattice (depth {depth}):").unwrap();
            let mut row: Vec<&Rational> = Vec::new();
            let mut current: Option<&Rational> = None;
            for (tb, rot) in &lattice {
                if current.is_some_and(|c| c != tb) {
                    writeln!(out, "  tb {}: {}", current.unwrap(), join(&row, " ")).unwrap();
                    row.clear();
                }
                current = Some(tb);
                row.push(rot);
            }
            if let Some(c) = current {
                writeln!(out, "  tb {c}: {}", join(&row, " ")).unwrap();
            }
            Ok(out)
        }
    }
}

pub(crate) fn csv_err(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

pub(crate) fn csv_finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn cmd_check(k: &KnotArgs, c: &ContactArgs, tb: &Rational, rot: &Rational, format: Format) -> Result<String> {
    no_csv(format, "check")?;
    let (lens, knot, mr) = compute_range(k, c)?;
    let realizable = mr.is_realizable(tb, rot);
    if format == Format::Json {
        let r = mr.frame.order();
        return Ok(to_json_string(&json!({
            "schema": SCHEMA,
            "command": "check",
            "lens": lens_json(&lens),
            "knot": knot_json(&knot),
            "structure": sign_label(mr.sign),
            "mode": mode_label(mr.mode),
            "tb": rat_json(tb),
            "rot": rat_json(rot),
            "on_lattice": tb.scale(r).is_integer() && rot.scale(r).is_integer(),
            "max_tb": rat_json(&mr.max_tb),
            "realizable": realizable,
        })));
    }
    Ok(format!("realizable: {realizable}\n"))
}

pub fn cmd_transverse(k: &KnotArgs, c: &ContactArgs, format: Format) -> Result<String> {
    no_csv(format, "transverse")?;
    let (lens, knot, mr) = compute_range(k, c)?;
    let t = mr.transverse();
    if format == Format::Json {
        return Ok(to_json_string(&json!({
            "schema": SCHEMA,
            "command": "transverse",
            "lens": lens_json(&lens),
            "knot": knot_json(&knot),
            "structure": sign_label(mr.sign),
            "mode": mode_label(mr.mode),
            "sl_max": rat_json(&t.sl_max),
            "generators": t.generators.iter().map(rat_json).collect::<Vec<_>>(),
        })));
    }
    Ok(table(&[("sl_max", t.sl_max.to_string()), ("generators", join(&t.generators, " "))]))
}

pub fn cmd_tight_count(p: &Int, q: &Int, format: Format) -> Result<String> {
    no_csv(format, "tight-count")?;
    let lens = LensSpace::new(p.clone(), q.clone())?;
    let solid = count_tight_solid_torus(p.clone(), q.clone())?;
    let ut = count_ut_lens(&lens);
    let cf = arith::neg_cf(p.clone(), q.clone())?;
    if format == Format::Json {
        return Ok(to_json_string(&json!({
            "schema": SCHEMA,
            "command": "tight-count",
            "lens": lens_json(&lens),
            "continued_fraction": cf.coeffs().iter().map(int_json).collect::<Vec<_>>(),
            "solid_torus": int_json(&solid),
            "universally_tight": ut,
        })));
    }
    Ok(table(&[
        ("continued fraction", format!("[{}]", join(cf.coeffs(), ", "))),
        ("solid-torus", solid.to_string()),
        ("universally-tight", ut.to_string()),
    ]))
}

fn pair(p: &PairArgs) -> Result<(LensSpace, TorusKnot, TorusKnot)> {
    let (lens, k1) = lens_knot(&p.knot)?;
    let k2 = TorusKnot::new(p.a2.clone(), p.b2.clone())?;
    Ok((lens, k1, k2))
}

pub fn cmd_isotopic(p: &PairArgs, format: Format) -> Result<String> {
    no_csv(format, "isotopic")?;
    let (lens, k1, k2) = pair(p)?;
    let iso = topology::are_isotopic(&lens, &k1, &k2);
    if format == Format::Json {
        return Ok(to_json_string(&json!({
            "schema": SCHEMA,
            "command": "isotopic",
            "lens": lens_json(&lens),
            "knots": [knot_json(&k1), knot_json(&k2)],
            "isotopic": iso,
            "isotopy_class": topology::isotopy_class(&lens, &k1).iter().map(knot_json).collect::<Vec<_>>(),
        })));
    }
    Ok(format!("isotopic: {iso}\n"))
}

pub fn cmd_group_iso(p: &PairArgs, format: Format) -> Result<String> {
    no_csv(format, "group-iso")?;
    let (lens, k1, k2) = pair(p)?;
    let iso = topology::groups_isomorphic(&lens, &k1, &k2);
    if format == Format::Json {
        return Ok(to_json_string(&json!({
            "schema": SCHEMA,
            "command": "group-iso",
            "lens": lens_json(&lens),
            "knots": [knot_json(&k1), knot_json(&k2)],
            "group_isomorphic": iso,
            "candidates": topology::iso_group_candidates(&lens, &k1).iter().map(knot_json).collect::<Vec<_>>(),
        })));
    }
    Ok(format!("group-isomorphic: {iso}\n"))
}

pub fn cmd_sweep(bounds: &sweep::Bounds, c: &ContactArgs, format: Format) -> Result<String> {
    let rows = sweep::sweep(bounds, c.structure.into(), c.mode.into())?;
    match format {
        Format::Json => Ok(to_json_string(&json!({
            "schema": SCHEMA,
            "command": "sweep",
            "structure": sign_label(c.structure.into()),
            "mode": mode_label(c.mode.into()),
            "rows": rows.iter().map(sweep::Row::to_json).collect::<Vec<_>>(),
        }))),
        Format::Csv | Format::Text => sweep::to_csv(&rows),
    }
}

pub fn cmd_plot(k: &KnotArgs, c: &ContactArgs, depth: u32, format: Format) -> Result<String> {
    if format != Format::Text {
        return Err(CliError::Usage("`plot` only emits SVG".into()));
    }
    let (lens, knot, mr) = compute_range(k, c)?;
    svg::render(&lens, &knot, &mr, depth)
}
