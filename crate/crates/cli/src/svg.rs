//! Static SVG 1.1 mountain-range diagrams: rot to the right, tb upward.
//!
//! Coordinates are computed from the integers `r rot` and `r tb`, so every
//! lattice point lands on an exact integer pixel.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use lensknot::legendrian::MountainRange;
use lensknot::topology::{LensSpace, TorusKnot};
use lensknot::{Int, Rational, Sign};
use num_traits::ToPrimitive;

use crate::{CliError, Result};

const LEFT: i64 = 90;
const RIGHT: i64 = 50;
const TOP: i64 = 60;
const BOTTOM: i64 = 70;
const PEAK_FILL: &str = "#c0392b";
const CLASS_FILL: &str = "#2c3e50";
const CONE_FILL: &str = "#5dade2";

fn scaled(x: &Rational, r: &Int) -> Result<i64> {
    x.scale(r)
        .to_integer()
        .and_then(|v| v.to_i64())
        .ok_or_else(|| CliError::Usage(format!("{x} is too large to plot")))
}

struct Frame {
    step: i64,
    x_min: i64,
    y_max: i64,
}

impl Frame {
    fn px(&self, x: i64) -> i64 {
        LEFT + (x - self.x_min) * self.step
    }

    fn py(&self, y: i64) -> i64 {
        TOP + (self.y_max - y) * self.step
    }
}

pub fn render(lens: &LensSpace, knot: &TorusKnot, mr: &MountainRange, depth: u32) -> Result<String> {
    let r = mr.frame.order().clone();
    let ri = r.to_i64().filter(|&v| v <= 1 << 20).ok_or_else(|| CliError::Usage("order too large to plot".into()))?;
    let lattice = mr.lattice(depth);
    let mut points = Vec::with_capacity(lattice.len());
    for (tb, rot) in &lattice {
        points.push((scaled(rot, &r)?, scaled(tb, &r)?, tb, rot));
    }
    let x_min = points.iter().map(|p| p.0).min().expect("lattice is nonempty");
    let x_max = points.iter().map(|p| p.0).max().expect("lattice is nonempty");
    let y_max = scaled(&mr.max_tb, &r)?;
    let y_min = y_max - ri * i64::from(depth);
    let f = Frame { step: (48 / ri).max(4), x_min, y_max };
    let width = f.px(x_max) + RIGHT;
    let height = f.py(y_min) + BOTTOM;
    let sign = match mr.sign {
        Sign::Plus => "+",
        Sign::Minus => "-",
    };

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="12">"#
    )
    .unwrap();
    let title = format!("{knot} in {lens}, universally tight ({sign}), {}", mr.case());
    writeln!(s, "<title>{title}</title>").unwrap();
    writeln!(s, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#).unwrap();
    writeln!(s, r#"<text x="{LEFT}" y="24" font-size="14">{title}</text>"#).unwrap();

    writeln!(s, r#"<g id="cones" fill="{CONE_FILL}" fill-opacity="0.2" stroke="{CONE_FILL}" stroke-opacity="0.5">"#).unwrap();
    let spread = ri * i64::from(depth);
    for pk in &mr.peaks {
        let x = scaled(&pk.rot, &r)?;
        writeln!(
            s,
            r#"<polygon points="{},{} {},{} {},{}"/>"#,
            f.px(x),
            f.py(y_max),
            f.px(x - spread),
            f.py(y_max - spread),
            f.px(x + spread),
            f.py(y_max - spread)
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();

    // axes: rot along the bottom edge, tb along the left edge
    let (x0, x1, y0, y1) = (f.px(x_min) - 20, f.px(x_max) + 20, f.py(y_max) - 20, f.py(y_min) + 20);
    writeln!(s, r##"<g id="axes" stroke="#7f8c8d">"##).unwrap();
    writeln!(s, r#"<line x1="{x0}" y1="{y1}" x2="{x1}" y2="{y1}"/>"#).unwrap();
    writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>"#).unwrap();
    if x_min <= 0 && 0 <= x_max {
        writeln!(s, r#"<line x1="{0}" y1="{y0}" x2="{0}" y2="{y1}" stroke-dasharray="4 4"/>"#, f.px(0)).unwrap();
    }
    writeln!(s, "</g>").unwrap();

    writeln!(s, r#"<g id="labels" fill="black">"#).unwrap();
    writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">rot</text>"#, (x0 + x1) / 2, y1 + 40).unwrap();
    writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">tb</text>"#, x0 - 10, y0 - 6).unwrap();
    let mut tbs: Vec<(i64, &Rational)> = points.iter().map(|p| (p.1, p.2)).collect();
    tbs.dedup();
    for (y, tb) in tbs {
        writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">{tb}</text>"#, x0 - 10, f.py(y) + 4).unwrap();
    }
    let mut rots: BTreeSet<(i64, &Rational)> = BTreeSet::new();
    for pk in &mr.peaks {
        rots.insert((scaled(&pk.rot, &r)?, &pk.rot));
    }
    for (x, _, _, rot) in &points {
        if *x == x_min || *x == x_max {
            rots.insert((*x, *rot));
        }
    }
    for (x, rot) in rots {
        writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">{rot}</text>"#, f.px(x), y1 + 18).unwrap();
    }
    writeln!(s, "</g>").unwrap();

    writeln!(s, r#"<g id="classes" fill="{CLASS_FILL}">"#).unwrap();
    for (x, y, tb, rot) in &points {
        if *y != y_max {
            writeln!(s, r#"<circle cx="{}" cy="{}" r="3" data-tb="{tb}" data-rot="{rot}"/>"#, f.px(*x), f.py(*y)).unwrap();
        }
    }
    writeln!(s, "</g>").unwrap();

    writeln!(s, r#"<g id="peaks" fill="{PEAK_FILL}">"#).unwrap();
    for pk in &mr.peaks {
        let x = scaled(&pk.rot, &r)?;
        writeln!(
            s,
            r#"<circle class="peak" cx="{}" cy="{}" r="6" data-tb="{}" data-rot="{}"/>"#,
            f.px(x),
            f.py(y_max),
            mr.max_tb,
            pk.rot
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}
