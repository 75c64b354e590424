//! Cayley table text format.
//!
//! ```text
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! # C3
//! ```
//!
//! The first line is the order `n`, followed by `n` rows of `n` space-separated
//! indices. An optional final line `# name` carries the group name.

use std::fmt::Write as _;
use std::path::Path;

use super::{validate_group_with_relabel, FiniteGroup};
use crate::error::{Error, Result};

pub fn write_cayley(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = String::with_capacity(n * n * 4 + 16);
    writeln!(out, "{n}").unwrap();
    for a in 0..n {
        let mut first = true;
        for x in g.row(a) {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{x}").unwrap();
        }
        out.push('\n');
    }
    if !g.name().is_empty() {
        writeln!(out, "# {}", g.name()).unwrap();
    }
    out
}

/// Parses and validates a table. Also returns the identity relabeling applied.
pub fn parse_cayley_with_relabel(text: &str) -> Result<(FiniteGroup, Vec<usize>)> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad order line {header:?}")))?;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {i}")))?;
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?} in row {i}")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let mut name = String::new();
    for line in lines {
        if let Some(rest) = line.strip_prefix('#') {
            name = rest.strip_prefix(' ').unwrap_or(rest).to_string();
        } else if !line.trim().is_empty() {
            return Err(Error::Parse(format!("unexpected trailing line {line:?}")));
        }
    }
    let (g, relabel) = validate_group_with_relabel(&rows)?;
    Ok((g.with_name(&name), relabel))
}

pub fn parse_cayley(text: &str) -> Result<FiniteGroup> {
    parse_cayley_with_relabel(text).map(|(g, _)| g)
}

pub fn read_cayley(path: &Path) -> Result<FiniteGroup> {
    parse_cayley(&std::fs::read_to_string(path)?)
}

pub fn read_cayley_with_relabel(path: &Path) -> Result<(FiniteGroup, Vec<usize>)> {
    parse_cayley_with_relabel(&std::fs::read_to_string(path)?)
}
