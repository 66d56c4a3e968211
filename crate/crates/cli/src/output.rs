//! Rendering of command results. Every command produces a [`Report`] that
//! carries a JSON document, a table for CSV and a human readable text.

use std::fmt::Write;
use std::str::FromStr;

use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Human,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "human" | "text" => Ok(Format::Human),
            other => Err(format!("unknown format {other:?} (json, csv, human)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Text for the human format; an aligned table when absent.
    pub human: Option<String>,
    /// Preformatted JSON, for documents whose key order is fixed.
    pub raw_json: Option<String>,
}

impl Report {
    pub fn table(json: Value, columns: &[&str], rows: Vec<Vec<String>>) -> Self {
        Report {
            json,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows,
            human: None,
            raw_json: None,
        }
    }

    pub fn with_human(mut self, text: String) -> Self {
        self.human = Some(text);
        self
    }

    pub fn with_raw_json(mut self, text: String) -> Self {
        self.raw_json = Some(text);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json if self.raw_json.is_some() => self.raw_json.clone().expect("checked"),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).expect("csv to memory");
                for r in &self.rows {
                    w.write_record(r).expect("csv to memory");
                }
                String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8")
            }
            Format::Human => match &self.human {
                Some(h) => h.clone(),
                None => aligned(&self.columns, &self.rows),
            },
        }
    }
}

fn aligned(columns: &[String], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        writeln!(out, "{}", padded.join("  ").trim_end()).expect("write to string");
    };
    line(columns);
    for r in rows {
        line(r);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn empty_reports_are_valid_documents() {
        let r = Report::table(json!([]), &["a", "b"], Vec::new());
        assert_eq!(r.render(Format::Json), "[]\n");
        assert_eq!(r.render(Format::Csv), "a,b\n");
        assert_eq!(r.render(Format::Human), "a  b\n");
    }

    #[test]
    fn csv_quotes_cells() {
        let r = Report::table(json!(null), &["x"], vec![vec!["1,2".into()]]);
        assert_eq!(r.render(Format::Csv), "x\n\"1,2\"\n");
    }
}
