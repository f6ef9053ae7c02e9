//! Report rendering. JSON is canonical; CSV and markdown are flat projections of the same rows.

use serde::Serialize;
use serde_json::Value;

use crate::config::Format;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Serialize)]
pub struct Envelope<T: Serialize> {
    pub command: &'static str,
    pub passed: bool,
    pub rows: Vec<T>,
}

/// A rendered command result: the canonical JSON payload plus its flat projection.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub columns: Vec<&'static str>,
    pub cells: Vec<Vec<String>>,
    pub passed: bool,
}

impl Report {
    pub fn new<T: Serialize>(
        command: &'static str,
        passed: bool,
        rows: Vec<T>,
        columns: Vec<&'static str>,
        cells: Vec<Vec<String>>,
    ) -> CliResult<Self> {
        let json = serde_json::to_value(Envelope { command, passed, rows }).map_err(|e| CliError::Output(e.to_string()))?;
        Ok(Report {
            json,
            columns,
            cells,
            passed,
        })
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).map_err(|e| CliError::Output(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.csv(),
            Format::Md => Ok(self.markdown()),
        }
    }

    fn csv(&self) -> CliResult<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).map_err(|e| CliError::Output(e.to_string()))?;
        for row in &self.cells {
            w.write_record(row).map_err(|e| CliError::Output(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
    }

    fn markdown(&self) -> String {
        let escape = |s: &str| s.replace('|', "\\|");
        let mut out = String::new();
        out.push_str(&format!("| {} |\n", self.columns.join(" | ")));
        out.push_str(&format!("|{}\n", "---|".repeat(self.columns.len())));
        for row in &self.cells {
            let cells: Vec<String> = row.iter().map(|c| escape(c)).collect();
            out.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        out
    }
}
