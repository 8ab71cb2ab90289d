//! Plain-text group files.
//!
//! ```text
//! # the symmetric group on four points
//! degree 4
//! (0 1)
//! (0 1 2 3)
//! ```

use std::path::Path;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// Parses a group file: a `degree N` line followed by one generator per line.
pub fn parse(text: &str) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| Error::Parse(format!("line {}: expected `degree N`", lineno + 1)))?;
                let n = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad degree {:?}", lineno + 1, rest.trim())))?;
                degree = Some(n);
            }
            Some(n) => {
                let p = Perm::parse(line, n).map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
                gens.push(p);
            }
        }
    }
    let degree = degree.ok_or_else(|| Error::Parse("missing `degree N` line".into()))?;
    PermGroup::new(degree, gens)
}

pub fn read(path: impl AsRef<Path>) -> Result<PermGroup> {
    parse(&std::fs::read_to_string(path)?)
}

/// Prints `group` in the format accepted by [`parse`].
pub fn format(group: &PermGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
