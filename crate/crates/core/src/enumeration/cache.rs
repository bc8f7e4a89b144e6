//! On-disk cache of enumeration results.
//!
//! Layout: `<dir>/n<N>/<hash>.g6` holds one graph6 string per line and
//! `<dir>/n<N>/<hash>.json` is the manifest `{n, constraints, count, checksum}`.
//! `<hash>` identifies the constraints and `checksum` is the SHA-256 of the
//! payload. Writes go through a temporary file and a rename, so readers never
//! see a half-written payload.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{enumerate_parallel, EnumConstraints};
use crate::error::{Error, Result};
use crate::graph::{decode_graph6, encode_graph6, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheManifest {
    pub n: usize,
    pub constraints: EnumConstraints,
    pub count: usize,
    pub checksum: String,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().fold(String::with_capacity(2 * bytes.len()), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn sha256_hex(data: &[u8]) -> String {
    hex(&Sha256::digest(data))
}

fn constraints_hash(c: &EnumConstraints) -> String {
    let json = serde_json::to_string(c).expect("constraints serialize");
    sha256_hex(json.as_bytes())[..16].to_string()
}

/// Payload path for `constraints` under `dir`; the manifest sits next to it.
pub fn cache_path(dir: &Path, constraints: &EnumConstraints) -> PathBuf {
    dir.join(format!("n{}", constraints.n)).join(format!("{}.g6", constraints_hash(constraints)))
}

fn write_atomic(path: &Path, data: &[u8]) -> Result<()> {
    let tmp = path.with_extension(format!(
        "{}.tmp{}",
        path.extension().and_then(|e| e.to_str()).unwrap_or(""),
        std::process::id()
    ));
    fs::write(&tmp, data)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn cache_store(
    dir: &Path,
    constraints: &EnumConstraints,
    graphs: impl IntoIterator<Item = Graph>,
) -> Result<CacheManifest> {
    let path = cache_path(dir, constraints);
    fs::create_dir_all(path.parent().expect("cache path has a parent"))?;
    let mut payload = String::new();
    let mut count = 0;
    for g in graphs {
        payload.push_str(&encode_graph6(&g));
        payload.push('\n');
        count += 1;
    }
    let manifest = CacheManifest {
        n: constraints.n,
        constraints: constraints.clone(),
        count,
        checksum: sha256_hex(payload.as_bytes()),
    };
    write_atomic(&path, payload.as_bytes())?;
    write_atomic(&path.with_extension("json"), serde_json::to_string_pretty(&manifest)?.as_bytes())?;
    Ok(manifest)
}

/// `Ok(None)` when nothing is cached; [`Error::CorruptCache`] when the payload
/// does not match its manifest.
pub fn cache_load(dir: &Path, constraints: &EnumConstraints) -> Result<Option<Vec<Graph>>> {
    let path = cache_path(dir, constraints);
    let manifest_path = path.with_extension("json");
    if !path.exists() || !manifest_path.exists() {
        return Ok(None);
    }
    let corrupt = |reason: String| Error::CorruptCache { path: path.display().to_string(), reason };
    let manifest: CacheManifest = serde_json::from_slice(&fs::read(&manifest_path)?)
        .map_err(|e| corrupt(format!("unreadable manifest: {e}")))?;
    if manifest.constraints != *constraints {
        return Err(corrupt("manifest describes different constraints".into()));
    }
    let payload = fs::read(&path)?;
    let actual = sha256_hex(&payload);
    if actual != manifest.checksum {
        return Err(corrupt(format!("checksum {actual} != manifest {}", manifest.checksum)));
    }
    let graphs = payload
        .split(|&b| b == b'\n')
        .filter(|line| !line.is_empty())
        .map(decode_graph6)
        .collect::<Result<Vec<_>>>()
        .map_err(|e| corrupt(e.to_string()))?;
    if graphs.len() != manifest.count {
        return Err(corrupt(format!("{} graphs, manifest says {}", graphs.len(), manifest.count)));
    }
    Ok(Some(graphs))
}

/// Loads from the cache when possible, otherwise enumerates and stores.
/// A corrupt entry is reported and regenerated.
pub fn enumerate_cached(
    constraints: &EnumConstraints,
    dir: Option<&Path>,
    workers: usize,
) -> Result<Vec<Graph>> {
    let Some(dir) = dir else {
        return enumerate_parallel(constraints, workers);
    };
    match cache_load(dir, constraints) {
        Ok(Some(graphs)) => return Ok(graphs),
        Ok(None) => {}
        Err(e @ Error::CorruptCache { .. }) => log::warn!("{e}; enumerating again"),
        Err(e) => return Err(e),
    }
    let graphs = enumerate_parallel(constraints, workers)?;
    cache_store(dir, constraints, graphs.iter().copied())?;
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let c = EnumConstraints::connected(5);
        let graphs: Vec<Graph> = enumerate(&c).unwrap().collect();
        assert_eq!(graphs.len(), 21);
        let manifest = cache_store(dir.path(), &c, graphs.iter().copied()).unwrap();
        assert_eq!(manifest.count, 21);
        assert_eq!(cache_load(dir.path(), &c).unwrap().unwrap(), graphs);
        assert!(cache_load(dir.path(), &EnumConstraints::all(5)).unwrap().is_none());
    }

    #[test]
    fn single_empty_graph() {
        let dir = tempfile::tempdir().unwrap();
        let c = EnumConstraints::all(2).with_edges(0);
        let graphs = enumerate_cached(&c, Some(dir.path()), 1).unwrap();
        assert_eq!(graphs, vec![Graph::empty(2).unwrap()]);
        assert_eq!(cache_load(dir.path(), &c).unwrap().unwrap(), graphs);
    }

    #[test]
    fn checksum_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let c = EnumConstraints::all(4);
        cache_store(dir.path(), &c, enumerate(&c).unwrap()).unwrap();
        let manifest_path = cache_path(dir.path(), &c).with_extension("json");
        let mut manifest: CacheManifest =
            serde_json::from_slice(&fs::read(&manifest_path).unwrap()).unwrap();
        manifest.checksum = "0".repeat(64);
        fs::write(&manifest_path, serde_json::to_string(&manifest).unwrap()).unwrap();
        assert!(matches!(cache_load(dir.path(), &c), Err(Error::CorruptCache { .. })));
        // the cached wrapper regenerates instead of reusing
        assert_eq!(enumerate_cached(&c, Some(dir.path()), 2).unwrap().len(), 11);
        assert_eq!(cache_load(dir.path(), &c).unwrap().unwrap().len(), 11);
    }

    #[test]
    fn tampered_payload() {
        let dir = tempfile::tempdir().unwrap();
        let c = EnumConstraints::all(3);
        cache_store(dir.path(), &c, enumerate(&c).unwrap()).unwrap();
        let path = cache_path(dir.path(), &c);
        let mut payload = fs::read(&path).unwrap();
        payload.extend_from_slice(b"Bw\n");
        fs::write(&path, payload).unwrap();
        assert!(matches!(cache_load(dir.path(), &c), Err(Error::CorruptCache { .. })));
    }
}
