//! Reports: a title and ordered key/value pairs, printed either for people
//! or as `key=value` lines.

use std::fmt::Display;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportStyle {
    Human,
    Kv,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub entries: Vec<(String, String)>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn add(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.entries.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|e| e.0 == key)
            .map(|e| e.1.as_str())
    }

    pub fn render(&self, style: ReportStyle) -> String {
        match style {
            ReportStyle::Kv => {
                let mut out = format!("report={}\n", self.title);
                for (k, v) in &self.entries {
                    out.push_str(&format!("{k}={v}\n"));
                }
                out
            }
            ReportStyle::Human => {
                let width = self.entries.iter().map(|e| e.0.len()).max().unwrap_or(0);
                let mut out = format!("{}\n", self.title);
                for (k, v) in &self.entries {
                    out.push_str(&format!("  {k:<width$}  {v}\n"));
                }
                out
            }
        }
    }
}

/// Parses `key=value` output back into pairs, skipping other lines.
pub fn parse_kv(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}
