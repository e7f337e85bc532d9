//! Poset and weight-vector input formats.
//!
//! Posets are given as `grid:MxN`, `young:a,b,c` or a path to a JSON file
//! `{"labels": [...], "covers": [[lower, upper], ...]}`. Weight vectors are
//! JSON arrays aligned with vertex order whose entries are numbers or
//! `"p/q"` strings.

use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{LppError, Result};
use crate::poset::Poset;
use crate::scalar::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub labels: Vec<String>,
    pub covers: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetSpec {
    Grid(usize, usize),
    Young(Vec<usize>),
    File(PathBuf),
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| LppError::Parse(format!("bad {what} {s:?}")))
}

impl FromStr for PosetSpec {
    type Err = LppError;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(dims) = s.strip_prefix("grid:") {
            let (m, n) = dims
                .split_once(['x', 'X'])
                .ok_or_else(|| LppError::Parse(format!("expected grid:MxN, got {s:?}")))?;
            return Ok(PosetSpec::Grid(parse_usize(m, "grid width")?, parse_usize(n, "grid height")?));
        }
        if let Some(parts) = s.strip_prefix("young:") {
            let shape = parts
                .split(',')
                .map(|p| parse_usize(p, "row length"))
                .collect::<Result<_>>()?;
            return Ok(PosetSpec::Young(shape));
        }
        if s.is_empty() {
            return Err(LppError::Parse("empty poset spec".into()));
        }
        Ok(PosetSpec::File(PathBuf::from(s)))
    }
}

impl std::fmt::Display for PosetSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PosetSpec::Grid(m, n) => write!(f, "grid:{m}x{n}"),
            PosetSpec::Young(shape) => {
                let parts: Vec<String> = shape.iter().map(usize::to_string).collect();
                write!(f, "young:{}", parts.join(","))
            }
            PosetSpec::File(p) => write!(f, "{}", p.display()),
        }
    }
}

impl PosetSpec {
    pub fn load(&self) -> Result<Poset> {
        match self {
            PosetSpec::Grid(m, n) => Poset::grid(*m, *n),
            PosetSpec::Young(shape) => Poset::young(shape),
            PosetSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| LppError::Parse(format!("{}: {e}", path.display())))?;
                poset_from_json(&text)
            }
        }
    }
}

pub fn poset_from_json(text: &str) -> Result<Poset> {
    let file: PosetFile = serde_json::from_str(text).map_err(|e| LppError::Parse(format!("poset file: {e}")))?;
    Poset::from_covers(&file.labels, &file.covers)
}

pub fn poset_to_file(poset: &Poset) -> PosetFile {
    PosetFile {
        labels: poset.labels().to_vec(),
        covers: poset
            .covers()
            .iter()
            .map(|&(u, v)| (poset.label(u).to_string(), poset.label(v).to_string()))
            .collect(),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Number(serde_json::Number),
    Text(String),
}

/// Parses a JSON weight array of length `n`. Decimal numbers are read
/// exactly.
pub fn parse_weights_json(text: &str, n: usize) -> Result<Vec<Rational>> {
    let entries: Vec<Entry> = serde_json::from_str(text).map_err(|e| LppError::Parse(format!("weights: {e}")))?;
    if entries.len() != n {
        return Err(LppError::DimensionMismatch {
            expected: n,
            actual: entries.len(),
        });
    }
    entries
        .into_iter()
        .map(|e| match e {
            Entry::Number(x) => parse_rational(&x.to_string()),
            Entry::Text(s) => parse_rational(&s),
        })
        .collect()
}
