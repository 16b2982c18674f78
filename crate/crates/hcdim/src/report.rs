//! Byte-stable CSV and JSON renderings of a [`FamilyReport`].

use std::fs;
use std::path::Path;

use clap::ValueEnum;

use crate::family::FamilyReport;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
}

pub const CSV_HEADER: [&str; 7] = ["a", "n", "dimension_or_profile", "witness", "lower", "upper", "exact"];

/// One CSV line per parameter and level. JSON keys come out sorted.
pub fn render_report(report: &FamilyReport, format: ReportFormat) -> Result<String, Error> {
    match format {
        ReportFormat::Json => {
            let value = serde_json::to_value(report).map_err(Error::Serialize)?;
            let mut s = serde_json::to_string_pretty(&value).map_err(Error::Serialize)?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            for row in &report.rows {
                let witness = row.witness.as_ref().map_or("none", |w| w.description.as_str());
                for level in &row.profile.levels {
                    w.write_record([
                        row.a.as_str(),
                        &level.n.to_string(),
                        &level.value.cell(),
                        witness,
                        &row.verdict.lower.to_string(),
                        &row.verdict.upper.to_string(),
                        &row.verdict.exact.to_string(),
                    ])?;
                }
            }
            let bytes = w.into_inner().map_err(|e| Error::Shape(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Shape(e.to_string()))
        }
    }
}

/// Writes the report to `path`, or to stdout when `path` is `None`.
pub fn emit_report(report: &FamilyReport, format: ReportFormat, path: Option<&Path>) -> Result<(), Error> {
    let text = render_report(report, format)?;
    match path {
        Some(p) => fs::write(p, text).map_err(|source| Error::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn parse_json_report(text: &str) -> Result<FamilyReport, Error> {
    serde_json::from_str(text).map_err(|e| Error::Json {
        path: "<report>".into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}
