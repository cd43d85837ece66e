//! Optional on-disk cache of oracle degree multisets, keyed by the digest of
//! the canonical group text. Enabled only through `CDGRAPH_CACHE_DIR`.

use std::path::PathBuf;

use cdgraph_core::characters::DegreeMultiset;
use cdgraph_core::permgrp::format::write_group;
use cdgraph_core::permgrp::PermGroup;

use crate::error::{CliError, CliResult};
use crate::inputs::sha256_hex;

pub const CACHE_ENV: &str = "CDGRAPH_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> CliResult<Cache> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
        Ok(Cache { dir })
    }

    pub fn from_env() -> CliResult<Option<Cache>> {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Cache::new(d).map(Some),
            _ => Ok(None),
        }
    }

    fn path(&self, g: &PermGroup) -> PathBuf {
        self.dir.join(format!("{}.cd.json", sha256_hex(write_group(g).as_bytes())))
    }

    /// Unreadable or invalid entries count as misses.
    pub fn get(&self, g: &PermGroup) -> Option<DegreeMultiset> {
        let text = std::fs::read_to_string(self.path(g)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn put(&self, g: &PermGroup, cd: &DegreeMultiset) -> CliResult<()> {
        let path = self.path(g);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let body = serde_json::to_string(cd).expect("serializable");
        std::fs::write(&tmp, body).map_err(|e| CliError::io(&tmp, e))?;
        std::fs::rename(&tmp, &path).map_err(|e| CliError::io(&path, e))
    }
}
