//! The group definition file format: comment lines start with '#', one
//! `degree N` line, then one `gen <cycles>` line per generator with 1-based
//! parenthesized cycles, e.g. `gen (1 2 3)(4 5)`.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

pub fn parse_group_text(text: &str, bound: usize) -> Result<FiniteGroup> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let at = |msg: &str| Error::Parse {
            line: lineno + 1,
            msg: msg.to_string(),
        };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("degree") {
            if degree.is_some() {
                return Err(at("duplicate degree line"));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| at("degree must be a positive integer"))?;
            if n == 0 {
                return Err(at("degree must be positive"));
            }
            degree = Some(n);
        } else if let Some(rest) = line.strip_prefix("gen") {
            let d = degree.ok_or_else(|| at("gen line before degree line"))?;
            let p = Permutation::parse_cycles(d, rest.trim()).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse {
                    line: lineno + 1,
                    msg,
                },
                other => other,
            })?;
            gens.push(p);
        } else {
            return Err(at("expected a comment, 'degree N', or 'gen <cycles>'"));
        }
    }
    let degree = degree.ok_or(Error::Parse {
        line: 0,
        msg: "missing degree line".to_string(),
    })?;
    if gens.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "empty generator list".to_string(),
        });
    }
    FiniteGroup::from_generators_bounded(degree, gens, bound)
}

pub fn parse_group_file(path: &std::path::Path, bound: usize) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_group_text(&text, bound)
}

/// Renders a group back into the file format.
pub fn render_group(group: &FiniteGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&format!("gen {g}\n"));
    }
    out
}
