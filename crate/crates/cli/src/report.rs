//! Report envelope and output formats.
//!
//! Reports serialize deterministically: struct fields keep declaration order,
//! maps are ordered, and big integers are decimal strings.  The timing field
//! is suppressed by `--no-timing` so byte-identical golden runs are possible.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub board: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical: Option<String>,
    pub version: &'static str,
    pub payload: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &'static str, payload: T) -> Self {
        Report {
            command,
            board: None,
            canonical: None,
            version: env!("CARGO_PKG_VERSION"),
            payload,
            timing_ms: None,
        }
    }

    pub fn with_board(mut self, spec: &str, canonical: String) -> Self {
        self.board = Some(spec.to_string());
        self.canonical = Some(canonical);
        self
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }
}

/// A flat CSV table: header row plus rows of comma-free tokens.
pub struct Table {
    pub header: &'static [&'static str],
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            debug_assert_eq!(row.len(), self.header.len());
            debug_assert!(row.iter().all(|cell| !cell.contains(',')), "CSV cells must be comma-free");
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// CSV token for a placement: squares as `col.row` joined by `+`; `-` when empty.
pub fn placement_token(squares: &[ferrers_core::Square]) -> String {
    if squares.is_empty() {
        return "-".to_string();
    }
    squares.iter().map(|s| format!("{}.{}", s.col, s.row)).collect::<Vec<_>>().join("+")
}

/// Placement as a JSON-friendly list of `[col, row]` pairs.
pub fn placement_pairs(squares: &[ferrers_core::Square]) -> Vec<[u32; 2]> {
    squares.iter().map(|s| [s.col, s.row]).collect()
}

pub type StringMap = BTreeMap<u64, String>;
