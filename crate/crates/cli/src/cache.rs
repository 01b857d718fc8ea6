//! On-disk cache of computed polynomials, enabled by `PARHIGGS_CACHE_DIR`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use parhiggs_core::{LaurentPoly, VERSION};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};
use crate::render::{poly_from_terms, poly_terms};

pub const CACHE_ENV: &str = "PARHIGGS_CACHE_DIR";

/// Named polynomials produced by one computation, in a fixed order.
pub type Entry = Vec<(String, LaurentPoly)>;

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from);
        Cache { dir }
    }

    /// Hash of the subcommand, its canonical parameters and the version.
    pub fn key(subcommand: &str, params: &Value) -> String {
        let canonical = json!({ "subcommand": subcommand, "params": params, "version": VERSION });
        let digest = Sha256::digest(canonical.to_string().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn get_or_compute(
        &self,
        subcommand: &str,
        params: &Value,
        compute: impl FnOnce() -> CliResult<Entry>,
    ) -> CliResult<Entry> {
        let Some(dir) = &self.dir else {
            return compute();
        };
        let key = Self::key(subcommand, params);
        let path = dir.join(format!("{key}.json"));
        match read_entry(&path) {
            Ok(Some(entry)) => return Ok(entry),
            Ok(None) => {}
            Err(e) => eprintln!("warning: ignoring corrupt cache entry {}: {e}", path.display()),
        }
        let entry = compute()?;
        if let Err(e) = write_entry(dir, &path, subcommand, params, &entry) {
            eprintln!("warning: could not write cache entry {}: {e}", path.display());
        }
        Ok(entry)
    }
}

fn read_entry(path: &Path) -> CliResult<Option<Entry>> {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(CliError::Io(e.to_string())),
    };
    let doc: Value = serde_json::from_slice(&bytes).map_err(|e| CliError::Io(e.to_string()))?;
    if doc.get("version").and_then(Value::as_str) != Some(VERSION) {
        return Ok(None);
    }
    let results = doc
        .get("results")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Io("missing results".into()))?;
    let mut entry = Vec::with_capacity(results.len());
    for r in results {
        let name = r
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| CliError::Io("missing result name".into()))?;
        entry.push((name.to_string(), poly_from_terms(&r["poincare"])?));
    }
    Ok(Some(entry))
}

fn write_entry(dir: &Path, path: &Path, subcommand: &str, params: &Value, entry: &Entry) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let results: Vec<Value> = entry
        .iter()
        .map(|(name, p)| {
            let mut m = Map::new();
            m.insert("name".into(), Value::String(name.clone()));
            m.insert("poincare".into(), poly_terms(p));
            Value::Object(m)
        })
        .collect();
    let doc = json!({ "subcommand": subcommand, "params": params, "version": VERSION, "results": results });
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(serde_json::to_string(&doc)?.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
