//! Spec files: `key = value` lines, then one `[layer]` section per layer.
//!
//! ```text
//! name = example
//! p = 2
//! n = 4
//! h = gamma            # gamma | gamma0 | galois | trivial | custom
//! mult_order = 15      # custom only
//! galois = 0:1         # custom only: multiplier-log:frobenius-power, comma separated
//! [layer]
//! exponent = 1
//! theta_degree = 1
//! theta_count = 1      # optional
//! copies = 1           # optional
//! ```

use std::collections::BTreeMap;

use super::spec::{CliffordSpec, LayerSpec};
use crate::error::{Error, Result};
use crate::semilin::{field_table, SemilinearGroup};

type Section = (usize, BTreeMap<String, (usize, String)>);

/// Splits `key = value` text into a header and `[name]` sections.
pub(crate) fn sections(text: &str) -> Result<(Section, Vec<(String, Section)>)> {
    let mut header: Section = (1, BTreeMap::new());
    let mut out: Vec<(String, Section)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            out.push((name.trim().to_string(), (ln, BTreeMap::new())));
            continue;
        }
        let (k, v) = line.split_once('=').ok_or(Error::Parse { line: ln, msg: format!("expected `key = value`, got `{line}`") })?;
        let target = match out.last_mut() {
            Some((_, s)) => &mut s.1,
            None => &mut header.1,
        };
        if target.insert(k.trim().to_string(), (ln, v.trim().to_string())).is_some() {
            return Err(Error::Parse { line: ln, msg: format!("duplicate key `{}`", k.trim()) });
        }
    }
    Ok((header, out))
}

pub(crate) fn get<T: std::str::FromStr>(s: &Section, key: &str) -> Result<Option<T>> {
    match s.1.get(key) {
        None => Ok(None),
        Some((ln, v)) => v.parse().map(Some).map_err(|_| Error::Parse { line: *ln, msg: format!("bad value `{v}` for `{key}`") }),
    }
}

pub(crate) fn require<T: std::str::FromStr>(s: &Section, key: &str) -> Result<T> {
    get(s, key)?.ok_or(Error::Parse { line: s.0, msg: format!("missing key `{key}`") })
}

pub(crate) fn check_keys(s: &Section, allowed: &[&str]) -> Result<()> {
    for (k, (ln, _)) in &s.1 {
        if !allowed.contains(&k.as_str()) {
            return Err(Error::Parse { line: *ln, msg: format!("unknown key `{k}`") });
        }
    }
    Ok(())
}

/// H from `h`, `mult_order`, `galois` keys over GF(p^n).
pub(crate) fn semilinear_from(s: &Section, p: u64, n: u32) -> Result<SemilinearGroup> {
    let t = field_table(p, n)?;
    let kind: String = get(s, "h")?.unwrap_or_else(|| "gamma".into());
    let line = s.1.get("h").map(|x| x.0).unwrap_or(s.0);
    match kind.as_str() {
        "gamma" => SemilinearGroup::gamma(t),
        "gamma0" => SemilinearGroup::gamma0(t),
        "galois" => SemilinearGroup::galois(t),
        "trivial" => SemilinearGroup::new(t, 1, &[]),
        "custom" => {
            let m: u64 = require(s, "mult_order")?;
            let galois: String = get(s, "galois")?.unwrap_or_default();
            let gl = s.1.get("galois").map(|x| x.0).unwrap_or(s.0);
            let mut gens = Vec::new();
            for part in galois.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                let (a, k) = part.split_once(':').ok_or(Error::Parse { line: gl, msg: format!("expected a:k, got `{part}`") })?;
                let a = a.trim().parse().map_err(|_| Error::Parse { line: gl, msg: format!("bad multiplier `{a}`") })?;
                let k = k.trim().parse().map_err(|_| Error::Parse { line: gl, msg: format!("bad power `{k}`") })?;
                gens.push((a, k));
            }
            SemilinearGroup::new(t, m, &gens)
        }
        other => Err(Error::Parse { line, msg: format!("unknown group `{other}`") }),
    }
}

pub fn parse_spec(text: &str) -> Result<CliffordSpec> {
    let (header, secs) = sections(text)?;
    check_keys(&header, &["name", "p", "n", "h", "mult_order", "galois"])?;
    let name: String = get(&header, "name")?.unwrap_or_else(|| "spec".into());
    let p: u64 = require(&header, "p")?;
    let n: u32 = require(&header, "n")?;
    let h = semilinear_from(&header, p, n)?;
    let mut layers = Vec::new();
    for (sname, s) in &secs {
        if sname != "layer" {
            return Err(Error::Parse { line: s.0, msg: format!("unknown section `[{sname}]`") });
        }
        check_keys(s, &["exponent", "theta_degree", "theta_count", "copies"])?;
        layers.push(LayerSpec {
            exponent: require(s, "exponent")?,
            theta_degree: get(s, "theta_degree")?.unwrap_or(1),
            theta_count: get(s, "theta_count")?.unwrap_or(1),
            copies: get(s, "copies")?.unwrap_or(1),
        });
    }
    CliffordSpec::new(name, h, layers)
}

pub fn write_spec(spec: &CliffordSpec) -> String {
    let h = &spec.h;
    let galois: Vec<String> = h.galois_part().iter().map(|(a, k)| format!("{a}:{k}")).collect();
    let mut out = format!(
        "name = {}\np = {}\nn = {}\nh = custom\nmult_order = {}\ngalois = {}\n",
        spec.name,
        h.p(),
        h.n(),
        h.mult_order(),
        galois.join(",")
    );
    for l in &spec.layers {
        out.push_str(&format!(
            "[layer]\nexponent = {}\ntheta_degree = {}\ntheta_count = {}\ncopies = {}\n",
            l.exponent, l.theta_degree, l.theta_count, l.copies
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_errors() {
        let text = "name = h4\np = 2\nn = 2\nh = gamma0\n[layer]\nexponent = 1\ncopies = 2\n[layer]\nexponent = 2\ntheta_degree = 4\n";
        let s = parse_spec(text).unwrap();
        assert_eq!(s.group_order().unwrap(), 192);
        let again = parse_spec(&write_spec(&s)).unwrap();
        assert_eq!(again.layers, s.layers);
        assert_eq!(again.h.order(), 3);
        match parse_spec("p = 2\nn = 2\n[layer]\nexponent = x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_spec("p = 2\n[layer]\n"), Err(Error::Parse { .. })));
    }
}
