//! Loading of named ids, group files, recipes, specs and corpus manifests.

use std::path::{Path, PathBuf};

use cdgraph_core::cliffordcd::{parse_spec, CliffordSpec};
use cdgraph_core::constructions::{named_group, named_ids, parse_manifest, parse_recipe, Built, CORPUS_MANIFEST};
use cdgraph_core::constructions::{named, Named};
use cdgraph_core::permgrp::format::parse_group;
use cdgraph_core::permgrp::PermGroup;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug)]
pub enum Source {
    Named(String),
    Group(PathBuf),
    Recipe(PathBuf),
    Spec(PathBuf),
}

#[derive(Clone, Debug)]
pub enum Subject {
    Group { group: PermGroup, spec: Option<CliffordSpec> },
    Spec(CliffordSpec),
}

/// Identity of the input as recorded in reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InputId {
    pub kind: &'static str,
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug)]
pub struct Loaded {
    pub id: InputId,
    pub subject: Subject,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "input".into())
}

fn in_file<T>(path: &Path, r: cdgraph_core::Result<T>) -> CliResult<T> {
    r.map_err(|source| CliError::Input { path: path.display().to_string(), source })
}

pub fn load(source: &Source) -> CliResult<Loaded> {
    match source {
        Source::Named(id) => {
            let subject = match named(id)? {
                Named::Spec(s) => Subject::Spec(s),
                Named::Group(_) => {
                    let ng = named_group(id)?;
                    Subject::Group { group: ng.group, spec: ng.spec }
                }
            };
            Ok(Loaded { id: InputId { kind: "named", name: id.clone(), sha256: sha256_hex(format!("named:{id}").as_bytes()) }, subject })
        }
        Source::Group(path) => {
            let text = read_file(path)?;
            let group = in_file(path, parse_group(&text))?;
            Ok(Loaded { id: InputId { kind: "group", name: stem(path), sha256: sha256_hex(text.as_bytes()) }, subject: Subject::Group { group, spec: None } })
        }
        Source::Recipe(path) => {
            let text = read_file(path)?;
            let recipe = in_file(path, parse_recipe(&text))?;
            let built = in_file(path, recipe.build())?;
            Ok(Loaded {
                id: InputId { kind: "recipe", name: recipe.name.clone(), sha256: sha256_hex(text.as_bytes()) },
                subject: Subject::Group { group: built.group, spec: built.spec },
            })
        }
        Source::Spec(path) => {
            let text = read_file(path)?;
            let spec = in_file(path, parse_spec(&text))?;
            Ok(Loaded { id: InputId { kind: "spec", name: stem(path), sha256: sha256_hex(text.as_bytes()) }, subject: Subject::Spec(spec) })
        }
    }
}

/// A built corpus, sorted by recipe name.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub id: InputId,
    pub entries: Vec<Built>,
}

/// `default` selects the bundled manifest; anything else is a manifest path.
pub fn load_corpus(which: &str) -> CliResult<Corpus> {
    let (text, name, path) = if which == "default" {
        (CORPUS_MANIFEST.to_string(), "default".to_string(), None)
    } else {
        let p = PathBuf::from(which);
        (read_file(&p)?, stem(&p), Some(p))
    };
    let wrap = |r: cdgraph_core::Result<Vec<Built>>| match &path {
        Some(p) => in_file(p, r),
        None => r.map_err(CliError::from),
    };
    let recipes = match &path {
        Some(p) => in_file(p, parse_manifest(&text))?,
        None => parse_manifest(&text)?,
    };
    let mut entries = wrap(recipes.par_iter().map(|r| r.build()).collect())?;
    entries.sort_by(|a, b| a.recipe.name.cmp(&b.recipe.name));
    Ok(Corpus { id: InputId { kind: "corpus", name, sha256: sha256_hex(text.as_bytes()) }, entries })
}

pub fn known_named() -> Vec<&'static str> {
    let mut ids = named_ids();
    ids.sort_unstable();
    ids
}
