//! Atlas sweeps: every coprime `(p,q)` with `p <= max_p` and every torus knot
//! with `|a| <= max_a`, `|b| <= max_b`.

use lensknot::legendrian::{self, KnotFrame, UtStructure};
use lensknot::topology::{seifert_data, LensSpace, TorusKnot};
use lensknot::{Error, Int, Rational, RotationMode, Sign};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{csv_err, csv_finish, int_json, rat_json, CliError, Result};

pub const HEADER: [&str; 10] = ["p", "q", "a", "b", "order", "chi", "case", "max_tb", "peak_rots", "sl_max"];

#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_p: u32,
    pub max_a: u32,
    pub max_b: u32,
}

/// Peak rotations, or why there are none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Peaks {
    Listed(Vec<Rational>),
    Degenerate,
    TooMany,
    Unavailable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub p: i64,
    pub q: i64,
    pub a: i64,
    pub b: i64,
    pub order: Int,
    pub chi: Rational,
    pub case: &'static str,
    pub max_tb: Rational,
    pub peaks: Peaks,
}

impl Row {
    pub fn sl_max(&self) -> Option<Rational> {
        match &self.peaks {
            Peaks::Listed(rots) => rots.iter().map(|r| &self.max_tb - r).max(),
            _ => None,
        }
    }

    fn peaks_field(&self) -> String {
        match &self.peaks {
            Peaks::Listed(rots) => rots.iter().map(ToString::to_string).collect::<Vec<_>>().join(";"),
            Peaks::Degenerate => "degenerate".into(),
            Peaks::TooMany => "too-many".into(),
            Peaks::Unavailable => "unavailable".into(),
        }
    }

    pub fn fields(&self) -> [String; 10] {
        [
            self.p.to_string(),
            self.q.to_string(),
            self.a.to_string(),
            self.b.to_string(),
            self.order.to_string(),
            self.chi.to_string(),
            self.case.to_string(),
            self.max_tb.to_string(),
            self.peaks_field(),
            self.sl_max().map_or_else(String::new, |s| s.to_string()),
        ]
    }

    pub fn to_json(&self) -> Value {
        let peaks = match &self.peaks {
            Peaks::Listed(rots) => Value::Array(rots.iter().map(rat_json).collect()),
            _ => Value::String(self.peaks_field()),
        };
        json!({
            "p": self.p,
            "q": self.q,
            "a": self.a,
            "b": self.b,
            "order": int_json(&self.order),
            "chi": rat_json(&self.chi),
            "case": self.case,
            "max_tb": rat_json(&self.max_tb),
            "peak_rots": peaks,
            "sl_max": self.sl_max().as_ref().map_or(Value::Null, rat_json),
        })
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn lens_rows(p: i64, q: i64, bounds: &Bounds, sign: Sign, mode: RotationMode) -> Vec<Row> {
    let lens = LensSpace::new(p, q).expect("coprime by construction");
    let plus = UtStructure::new(lens.clone(), Sign::Plus).expect("plus always exists");
    let xi = UtStructure::new(lens.clone(), sign).ok();
    let (ma, mb) = (i64::from(bounds.max_a), i64::from(bounds.max_b));
    let mut rows = Vec::new();
    for a in -ma..=ma {
        for b in -mb..=mb {
            if gcd(a, b) != 1 {
                continue;
            }
            let knot = TorusKnot::new(a, b).expect("coprime");
            let sd = seifert_data(&lens, &knot);
            let frame = KnotFrame::new(&lens, &knot).expect("genuine lens spaces have case frames");
            let max_tb = legendrian::max_tb(&plus, &knot).expect("genuine lens spaces have case frames");
            let peaks = match &xi {
                None => Peaks::Unavailable,
                Some(xi) => match legendrian::peak_rotations(xi, &knot, mode) {
                    Ok(pks) => Peaks::Listed(pks.into_iter().map(|pk| pk.rot).collect()),
                    Err(Error::TooManyPeaks(_)) => Peaks::TooMany,
                    Err(_) => Peaks::Degenerate,
                },
            };
            rows.push(Row { p, q, a, b, order: sd.order, chi: sd.chi, case: frame.case.label(), max_tb, peaks });
        }
    }
    rows
}

/// Rows sorted by `(p, q, a, b)`.
pub fn sweep(bounds: &Bounds, sign: Sign, mode: RotationMode) -> Result<Vec<Row>> {
    if bounds.max_p < 2 {
        return Err(CliError::Usage(format!("--max-p must be at least 2, got {}", bounds.max_p)));
    }
    let lenses: Vec<(i64, i64)> = (2..=i64::from(bounds.max_p))
        .flat_map(|p| (1..p).filter(move |&q| gcd(p, q) == 1).map(move |q| (p, q)))
        .collect();
    let rows: Vec<Vec<Row>> = lenses.par_iter().map(|&(p, q)| lens_rows(p, q, bounds, sign, mode)).collect();
    Ok(rows.into_iter().flatten().collect())
}

pub fn to_csv(rows: &[Row]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER).map_err(csv_err)?;
    for row in rows {
        w.write_record(row.fields()).map_err(csv_err)?;
    }
    csv_finish(w)
}
