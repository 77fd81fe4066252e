//! Golden-file cases shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// `(file name, arguments)`; the file holds the exact stdout of the run.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("info_2_1_1_1.json", &["info", "2", "1", "1", "1", "--json"]),
    ("info_3_1_1_3.txt", &["info", "3", "1", "1", "3"]),
    ("legendrian_2_1_1_1.json", &["legendrian", "2", "1", "1", "1", "--json"]),
    ("legendrian_5_2_1_-3.json", &["legendrian", "5", "2", "1", "-3", "--json"]),
    ("legendrian_5_2_2_-3.json", &["legendrian", "5", "2", "2", "-3", "--json"]),
    ("legendrian_5_2_2_-3_minus.json", &["legendrian", "5", "2", "2", "-3", "--structure", "minus", "--json"]),
    ("legendrian_5_2_5_-2.json", &["legendrian", "5", "2", "5", "-2", "--mode", "proof-enum", "--depth", "1", "--json"]),
    ("legendrian_5_2_5_-2.csv", &["legendrian", "5", "2", "5", "-2", "--depth", "1", "--csv"]),
    ("check_2_1_1_1.txt", &["check", "2", "1", "1", "1", "--tb", "-3/2", "--rot", "1"]),
    ("transverse_5_2_2_-3.json", &["transverse", "5", "2", "2", "-3", "--json"]),
    ("tight_count_5_2.json", &["tight-count", "5", "2", "--json"]),
    ("sweep_p5_a3_b3.csv", &["sweep", "--max-p", "5", "--max-a", "3", "--max-b", "3"]),
    ("plot_2_1_1_1.svg", &["plot", "2", "1", "1", "1"]),
    ("plot_5_2_5_-2.svg", &["plot", "5", "2", "5", "-2", "--depth", "2"]),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn lensknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lensknot")).args(args).output().expect("binary runs")
}

/// Compares every golden case; with `LENSKNOT_UPDATE_GOLDEN=1` rewrites them instead.
pub fn check_goldens() -> Result<(), String> {
    let update = std::env::var_os("LENSKNOT_UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for (name, args) in GOLDEN {
        let out = lensknot(args);
        if !out.status.success() || !out.stderr.is_empty() {
            failures.push(format!("{name}: exit {:?}, stderr {:?}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
            continue;
        }
        let path = golden_dir().join(name);
        if update {
            std::fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
            continue;
        }
        match std::fs::read(&path) {
            Ok(want) if want == out.stdout => {}
            Ok(_) => failures.push(format!("{name}: output differs from golden file")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if failures.is_empty() { Ok(()) } else { Err(failures.join("; ")) }
}
