//! Recipe files and the bundled corpus manifest.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::groups::{affine_semilinear, central_product, extraspecial, heisenberg_pairing, ExtraspecialVariant};
use super::{affine_spec, named_group, pairing_spec, semilinear_by_name};
use crate::cliffordcd::format::{check_keys, get, require, sections};
use crate::cliffordcd::CliffordSpec;
use crate::error::{Error, Result};
use crate::permgrp::PermGroup;

/// The bundled corpus.
pub const CORPUS_MANIFEST: &str = include_str!("../../data/corpus.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecipeKind {
    Extraspecial,
    AffineSemilinear,
    HeisenbergPairing,
    CentralProduct,
    Named,
}

impl std::str::FromStr for RecipeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "extraspecial" => RecipeKind::Extraspecial,
            "affine_semilinear" => RecipeKind::AffineSemilinear,
            "heisenberg_pairing" => RecipeKind::HeisenbergPairing,
            "central_product" => RecipeKind::CentralProduct,
            "named" => RecipeKind::Named,
            other => return Err(Error::invalid(format!("unknown recipe kind `{other}`"))),
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub order: Option<u128>,
    /// Nilpotency class.
    pub class: Option<usize>,
    pub center: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionRecipe {
    pub name: String,
    pub kind: RecipeKind,
    pub params: BTreeMap<String, String>,
    pub role: Option<String>,
    pub expected: Expected,
}

/// A constructed recipe. `degree` is recorded for reproducibility.
#[derive(Clone, Debug)]
pub struct Built {
    pub recipe: ConstructionRecipe,
    pub group: PermGroup,
    pub degree: usize,
    pub spec: Option<CliffordSpec>,
}

const KEYS: [&str; 14] =
    ["name", "kind", "id", "p", "m", "n", "h", "variant", "a", "b", "role", "expect.order", "expect.class", "expect.center"];

type Section = (usize, BTreeMap<String, (usize, String)>);

fn recipe_from(name: String, s: &Section) -> Result<ConstructionRecipe> {
    check_keys(s, &KEYS)?;
    let kind: String = require(s, "kind")?;
    let kind = kind.parse().map_err(|e: Error| Error::Parse { line: s.1["kind"].0, msg: e.to_string() })?;
    let params = s
        .1
        .iter()
        .filter(|(k, _)| !k.starts_with("expect.") && !matches!(k.as_str(), "name" | "kind" | "role"))
        .map(|(k, (_, v))| (k.clone(), v.clone()))
        .collect();
    let expected = Expected { order: get(s, "expect.order")?, class: get(s, "expect.class")?, center: get(s, "expect.center")? };
    let r = ConstructionRecipe { name, kind, params, role: get(s, "role")?, expected };
    r.validate().map_err(|e| match e {
        Error::Invalid(msg) => Error::Parse { line: s.0, msg },
        other => other,
    })?;
    Ok(r)
}

/// One recipe, either bare `key = value` lines or a single `[name]` section.
pub fn parse_recipe(text: &str) -> Result<ConstructionRecipe> {
    let (header, secs) = sections(text)?;
    match secs.len() {
        0 => {
            let name: String = get(&header, "name")?.unwrap_or_else(|| "recipe".into());
            recipe_from(name, &header)
        }
        1 => {
            check_keys(&header, &[])?;
            recipe_from(secs[0].0.clone(), &secs[0].1)
        }
        _ => Err(Error::Parse { line: secs[1].1 .0, msg: "a recipe file holds one recipe; use a manifest for several".into() }),
    }
}

/// A manifest: `version = 1`, then one `[name]` section per recipe.
pub fn parse_manifest(text: &str) -> Result<Vec<ConstructionRecipe>> {
    let (header, secs) = sections(text)?;
    check_keys(&header, &["version"])?;
    let version: u32 = require(&header, "version")?;
    if version != 1 {
        return Err(Error::Parse { line: header.1["version"].0, msg: format!("unsupported manifest version {version}") });
    }
    let mut out: Vec<ConstructionRecipe> = Vec::new();
    for (name, s) in &secs {
        if out.iter().any(|r| &r.name == name) {
            return Err(Error::Parse { line: s.0, msg: format!("duplicate recipe `{name}`") });
        }
        out.push(recipe_from(name.clone(), s)?);
    }
    Ok(out)
}

impl ConstructionRecipe {
    fn param<T: std::str::FromStr>(&self, key: &str) -> Result<T> {
        let v = self.params.get(key).ok_or_else(|| Error::invalid(format!("recipe `{}` needs `{key}`", self.name)))?;
        v.parse().map_err(|_| Error::invalid(format!("recipe `{}`: bad `{key}` value `{v}`", self.name)))
    }

    fn allowed(&self) -> &'static [&'static str] {
        match self.kind {
            RecipeKind::Extraspecial => &["p", "m", "variant"],
            RecipeKind::AffineSemilinear | RecipeKind::HeisenbergPairing => &["p", "n", "h"],
            RecipeKind::CentralProduct => &["a", "b"],
            RecipeKind::Named => &["id"],
        }
    }

    /// Checks that the kind-specific parameters are present and parse.
    pub fn validate(&self) -> Result<()> {
        for k in self.params.keys() {
            if !self.allowed().contains(&k.as_str()) {
                return Err(Error::invalid(format!("recipe `{}`: key `{k}` does not apply to this kind", self.name)));
            }
        }
        match self.kind {
            RecipeKind::Extraspecial => {
                self.param::<u64>("p")?;
                self.param::<u32>("m")?;
                self.param::<ExtraspecialVariant>("variant")?;
            }
            RecipeKind::AffineSemilinear | RecipeKind::HeisenbergPairing => {
                self.param::<u64>("p")?;
                self.param::<u32>("n")?;
            }
            RecipeKind::CentralProduct => {
                self.param::<String>("a")?;
                self.param::<String>("b")?;
            }
            RecipeKind::Named => {
                self.param::<String>("id")?;
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Built> {
        let (group, spec) = match self.kind {
            RecipeKind::Extraspecial => (extraspecial(self.param("p")?, self.param("m")?, self.param("variant")?)?, None),
            RecipeKind::AffineSemilinear | RecipeKind::HeisenbergPairing => {
                let which = self.params.get("h").map(String::as_str).unwrap_or("gamma");
                let h = semilinear_by_name(self.param("p")?, self.param("n")?, which)?;
                if self.kind == RecipeKind::AffineSemilinear {
                    (affine_semilinear(&h)?, affine_spec(&h).ok())
                } else {
                    (heisenberg_pairing(&h)?, pairing_spec(&h).ok())
                }
            }
            RecipeKind::CentralProduct => {
                let a = named_group(&self.param::<String>("a")?)?.group;
                let b = named_group(&self.param::<String>("b")?)?.group;
                (central_product(&a, &b)?, None)
            }
            RecipeKind::Named => {
                let ng = named_group(&self.param::<String>("id")?)?;
                (ng.group, ng.spec)
            }
        };
        self.check_expected(&group)?;
        Ok(Built { recipe: self.clone(), degree: group.degree(), group, spec })
    }

    fn check_expected(&self, g: &PermGroup) -> Result<()> {
        let e = &self.expected;
        if let Some(o) = e.order {
            let got = g.order_u128()?;
            if got != o {
                return Err(Error::invariant(format!("recipe `{}`: order {got}, expected {o}", self.name)));
            }
        }
        if let Some(c) = e.class {
            let got = g.nilpotency_class();
            if got != Some(c) {
                return Err(Error::invariant(format!("recipe `{}`: nilpotency class {got:?}, expected {c}", self.name)));
            }
        }
        if let Some(z) = e.center {
            let got = g.center()?.size()?;
            if got != z {
                return Err(Error::invariant(format!("recipe `{}`: center of order {got}, expected {z}", self.name)));
            }
        }
        Ok(())
    }
}

/// Builds every recipe of the bundled manifest, in manifest order.
pub fn default_corpus() -> Result<Vec<Built>> {
    let recipes = parse_manifest(CORPUS_MANIFEST)?;
    recipes.par_iter().map(|r| r.build()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recipe_files() {
        let r = parse_recipe("name = e\nkind = extraspecial\np = 2\nm = 2\nvariant = qd\nexpect.order = 32\nexpect.center = 2\n").unwrap();
        let b = r.build().unwrap();
        assert_eq!(b.group.size().unwrap(), 32);
        let bad = parse_recipe("kind = extraspecial\np = 2\n");
        assert!(matches!(bad, Err(Error::Parse { .. })));
        let wrong = parse_recipe("kind = named\nid = s3\nexpect.order = 7\n").unwrap();
        assert!(matches!(wrong.build(), Err(Error::Invariant(_))));
        assert!(matches!(parse_recipe("kind = named\nid = s3\nq = 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn manifest_parses() {
        let m = parse_manifest(CORPUS_MANIFEST).unwrap();
        assert!(m.len() >= 25);
    }
}
