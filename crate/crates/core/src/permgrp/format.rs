//! Group files: `degree N`, then one generator per line in disjoint-cycle notation.
//! `#` starts a comment; `()` is the identity.

use super::group::PermGroup;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::limits;

/// Parses a group file into its degree and generator list (identity lines kept).
pub fn parse_generators(text: &str) -> Result<(usize, Vec<Perm>)> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let perr = |msg: String| Error::Parse { line: line_no, msg };
        match degree {
            None => {
                let rest = line.strip_prefix("degree").ok_or_else(|| perr("expected `degree N`".into()))?;
                let n: usize = rest.trim().parse().map_err(|_| perr(format!("bad degree `{}`", rest.trim())))?;
                if n > limits::MAX_DEGREE {
                    return Err(Error::scale("MAX_DEGREE", limits::MAX_DEGREE, n));
                }
                degree = Some(n);
            }
            Some(n) => gens.push(parse_cycles(line, n).map_err(|e| match e {
                Error::Invalid(m) => perr(m),
                other => other,
            })?),
        }
    }
    let n = degree.ok_or(Error::Parse { line: 0, msg: "missing `degree N` line".into() })?;
    Ok((n, gens))
}

/// Parses `(a b c)(d e)` on `n` points.
pub fn parse_cycles(s: &str, n: usize) -> Result<Perm> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body_end = rest.find(')').ok_or_else(|| Error::invalid(format!("unclosed cycle in `{s}`")))?;
        let body = rest.strip_prefix('(').ok_or_else(|| Error::invalid(format!("expected `(` in `{s}`")))?;
        let inner = &body[..body_end - 1];
        let pts = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::invalid(format!("bad point `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        if pts.len() > 1 {
            cycles.push(pts);
        }
        rest = rest[body_end + 1..].trim_start();
    }
    Perm::from_cycles(n, &cycles)
}

/// Canonical text: header, then each generator's cycles.
pub fn write_generators(degree: usize, gens: &[Perm]) -> String {
    let mut out = format!("degree {degree}\n");
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_group(text: &str) -> Result<PermGroup> {
    let (n, gens) = parse_generators(text)?;
    PermGroup::new(n, gens)
}

pub fn write_group(g: &PermGroup) -> String {
    write_generators(g.degree(), g.generators())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "degree 5\n(0 1 2)(3 4)\n()\n(0 4)\n";
        let (n, gens) = parse_generators(text).unwrap();
        assert_eq!(write_generators(n, &gens), text);
        let g = parse_group("# S4\ndegree 4\n(0 1 2 3)\n(0 1) # transposition\n").unwrap();
        assert_eq!(g.size().unwrap(), 24);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_generators("degree 3\n(0 1\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 2, msg: "unclosed cycle in `(0 1`".into() });
        assert!(matches!(parse_generators("(0 1)"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_generators("degree 3\n(0 5)"), Err(Error::Parse { line: 2, .. })));
    }
}
