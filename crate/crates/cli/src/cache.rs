//! On-disk cache for Smith normal forms.
//!
//! Key: the board's canonical serialization plus the boundary dimension.
//! Value: the invariant factors, decimal, newline-separated (the rank is
//! their count).  Purely an acceleration; contents are bit-exact
//! reproducible, and unreadable entries are recomputed.

use std::fs;
use std::path::{Path, PathBuf};

use ferrers_core::homology::SnfResult;
use num_bigint::BigUint;

fn entry_path(dir: &Path, board_key: &str, k: i64) -> PathBuf {
    dir.join(format!("snf_{board_key}_d{k}.txt"))
}

pub fn load(dir: &Path, board_key: &str, k: i64) -> Option<SnfResult> {
    let text = fs::read_to_string(entry_path(dir, board_key, k)).ok()?;
    let mut factors = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        factors.push(line.parse::<BigUint>().ok()?);
    }
    Some(SnfResult { rank: factors.len(), factors })
}

pub fn store(dir: &Path, board_key: &str, k: i64, snf: &SnfResult) {
    if fs::create_dir_all(dir).is_err() {
        return;
    }
    let mut text = String::new();
    for f in &snf.factors {
        text.push_str(&f.to_string());
        text.push('\n');
    }
    // Ignore write failures; the cache is best-effort.
    let _ = fs::write(entry_path(dir, board_key, k), text);
}
