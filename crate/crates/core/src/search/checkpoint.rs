//! Append-only text checkpoints for long searches.
//!
//! ```text
//! snake-checkpoint/1 <search header>
//! unit <index> <best cells> <solution count>
//! <cell index> <cell index> ...      (one line per solution)
//! ```
//!
//! A unit block that was cut short by a crash is ignored on reload.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{invalid, Result};
use crate::search::snake::UnitResult;

const MAGIC: &str = "snake-checkpoint/1";

pub(crate) struct Checkpoint {
    file: File,
    completed: BTreeMap<usize, UnitResult>,
}

impl Checkpoint {
    pub fn open(path: &Path, header: &str) -> Result<Self> {
        let io = |e: std::io::Error| invalid(format!("checkpoint {}: {e}", path.display()));
        let mut completed = BTreeMap::new();
        let exists = path.exists() && std::fs::metadata(path).map_err(io)?.len() > 0;
        if exists {
            let lines: Vec<String> = BufReader::new(File::open(path).map_err(io)?)
                .lines()
                .collect::<std::io::Result<_>>()
                .map_err(io)?;
            let expected = format!("{MAGIC} {header}");
            if lines.first().map(String::as_str) != Some(expected.as_str()) {
                return Err(invalid(format!(
                    "checkpoint {} belongs to a different search",
                    path.display()
                )));
            }
            completed = parse_units(&lines[1..]);
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(io)?;
        if !exists {
            writeln!(file, "{MAGIC} {header}").map_err(io)?;
        }
        Ok(Checkpoint { file, completed })
    }

    pub fn completed(&self) -> &BTreeMap<usize, UnitResult> {
        &self.completed
    }

    pub fn record(&mut self, index: usize, r: &UnitResult) -> Result<()> {
        let mut block = format!("unit {index} {} {}\n", r.best, r.solutions.len());
        for s in &r.solutions {
            let line: Vec<String> = s.iter().map(|i| i.to_string()).collect();
            block.push_str(&line.join(" "));
            block.push('\n');
        }
        self.file
            .write_all(block.as_bytes())
            .and_then(|_| self.file.flush())
            .map_err(|e| invalid(format!("checkpoint write: {e}")))?;
        self.completed.insert(index, r.clone());
        Ok(())
    }
}

fn parse_units(lines: &[String]) -> BTreeMap<usize, UnitResult> {
    let mut out = BTreeMap::new();
    let mut i = 0;
    while i < lines.len() {
        let parts: Vec<&str> = lines[i].split_whitespace().collect();
        let parsed = match parts.as_slice() {
            ["unit", a, b, c] => a
                .parse::<usize>()
                .ok()
                .zip(b.parse::<usize>().ok())
                .zip(c.parse::<usize>().ok()),
            _ => None,
        };
        let Some(((index, best), count)) = parsed else {
            break;
        };
        if i + 1 + count > lines.len() {
            break;
        }
        let solutions: Option<Vec<Vec<usize>>> = lines[i + 1..i + 1 + count]
            .iter()
            .map(|l| l.split_whitespace().map(|t| t.parse().ok()).collect())
            .collect();
        let Some(solutions) = solutions else { break };
        out.insert(index, UnitResult { best, solutions });
        i += 1 + count;
    }
    out
}
