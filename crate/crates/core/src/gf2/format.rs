//! Generator-matrix text format and JSON records.
//!
//! Text: first line `n k`, then k lines of n characters from {0,1}. Blank lines
//! and lines starting with `#` are ignored.

use super::code::{CodeType, LinearCode};
use super::enumerate::WeightDistribution;
use super::word::Word;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub fn parse_generator_matrix(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header `n k`".into() })?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let bad_header = || Error::Parse { line: hline, msg: format!("expected `n k`, found {header:?}") };
    if nums.len() != 2 {
        return Err(bad_header());
    }
    let n: usize = nums[0].parse().map_err(|_| bad_header())?;
    let k: usize = nums[1].parse().map_err(|_| bad_header())?;
    if n == 0 || n > 128 || k > n {
        return Err(Error::Parse { line: hline, msg: format!("need 1 ≤ n ≤ 128 and k ≤ n, got n={n} k={k}") });
    }
    let mut rows = Vec::with_capacity(k);
    for (line, l) in lines {
        if rows.len() == k {
            return Err(Error::Parse { line, msg: "more rows than declared".into() });
        }
        if l.len() != n {
            return Err(Error::Parse { line, msg: format!("row has {} characters, expected {n}", l.len()) });
        }
        let w: Word = l.parse().map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line, msg },
            other => other,
        })?;
        rows.push(w);
    }
    if rows.len() != k {
        return Err(Error::Parse { line: text.lines().count(), msg: format!("expected {k} rows, found {}", rows.len()) });
    }
    LinearCode::from_basis(n, &rows)
}

pub fn render_generator_matrix(code: &LinearCode) -> String {
    let mut s = format!("{} {}\n", code.length(), code.dimension());
    for g in code.generators() {
        s.push_str(&g.to_string());
        s.push('\n');
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub length: usize,
    pub dimension: usize,
    pub generators: Vec<String>,
}

impl From<&LinearCode> for CodeRecord {
    fn from(c: &LinearCode) -> Self {
        CodeRecord {
            length: c.length(),
            dimension: c.dimension(),
            generators: c.generators().iter().map(|g| g.to_string()).collect(),
        }
    }
}

impl TryFrom<&CodeRecord> for LinearCode {
    type Error = Error;

    fn try_from(r: &CodeRecord) -> Result<Self> {
        let words = r.generators.iter().map(|g| g.parse()).collect::<Result<Vec<Word>>>()?;
        let c = LinearCode::from_basis(r.length, &words)?;
        if c.dimension() != r.dimension {
            return Err(Error::Precondition(format!("record dimension {} but rank {}", r.dimension, c.dimension())));
        }
        Ok(c)
    }
}

/// Summary of a code as exported by `code info`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub length: usize,
    pub dimension: usize,
    #[serde(rename = "type")]
    pub code_type: CodeType,
    pub min_weight: Option<usize>,
    pub distribution: WeightDistribution,
}
