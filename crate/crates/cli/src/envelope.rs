//! The machine-readable output envelope shared by every subcommand.
//!
//! Rows are kept as strings aligned with an explicit column list, so the
//! markdown, CSV and JSON renderings all derive from the same data and
//! byte-identical reruns are automatic.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OutputEnvelope {
    pub schema_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub summary: BTreeMap<String, String>,
    pub checks: Vec<CheckLine>,
}

impl OutputEnvelope {
    pub fn new(command: &str) -> Self {
        OutputEnvelope {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            parameters: BTreeMap::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            summary: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn summarize(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.summary.insert(key.to_string(), value.to_string());
        self
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: impl ToString) -> &mut Self {
        self.checks.push(CheckLine {
            name: name.to_string(),
            pass,
            detail: detail.to_string(),
        });
        self
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&csv_row(&self.columns));
        for row in &self.rows {
            out.push_str(&csv_row(row));
        }
        out
    }

    /// A pipe table plus summary and check lines. Commands with a
    /// line-oriented contract render their own markdown instead.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        if !self.columns.is_empty() {
            let widths: Vec<usize> = self
                .columns
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    self.rows
                        .iter()
                        .map(|r| r[i].len())
                        .chain(std::iter::once(c.len()))
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let fmt_row = |cells: &[String]| -> String {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                format!("| {} |\n", padded.join(" | "))
            };
            out.push_str(&fmt_row(&self.columns));
            let dashes: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            out.push_str(&format!("|-{}-|\n", dashes.join("-|-")));
            for row in &self.rows {
                out.push_str(&fmt_row(row));
            }
        }
        for (key, value) in &self.summary {
            out.push_str(&format!("{key} {value}\n"));
        }
        for check in &self.checks {
            let status = if check.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{status}] {}", check.name));
            if !check.detail.is_empty() {
                out.push_str(&format!(": {}", check.detail));
            }
            out.push('\n');
        }
        out
    }
}

fn csv_row(cells: &[String]) -> String {
    let quoted: Vec<String> = cells
        .iter()
        .map(|c| {
            if c.contains(',') || c.contains('"') || c.contains('\n') {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.clone()
            }
        })
        .collect();
    format!("{}\n", quoted.join(","))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Md,
    Csv,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s.to_ascii_lowercase().as_str() {
            "md" | "markdown" => Some(Format::Md),
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}
