//! On-disk [`BasisStore`]: one gzip-compressed JSON document per key,
//! carrying a SHA-256 checksum of its payload.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use flate2::read::GzDecoder;
use flate2::write::GzEncoder;
use flate2::Compression;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::exactla::ReducedBasis;
use crate::store::{BasisStore, CacheKey};

const SUFFIX: &str = ".json.gz";

#[derive(Serialize, Deserialize)]
struct Payload {
    key: CacheKey,
    basis: ReducedBasis,
}

#[derive(Serialize, Deserialize)]
struct Document {
    payload: Payload,
    checksum: String,
}

fn checksum(p: &Payload) -> String {
    let bytes = serde_json::to_vec(p).expect("serializable");
    hex::encode(Sha256::digest(&bytes))
}

/// A cache directory holding reduced bases.
#[derive(Clone, Debug)]
pub struct FileStore {
    dir: PathBuf,
}

impl FileStore {
    pub fn new(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(FileStore { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}{SUFFIX}", key.file_stem()))
    }

    /// Cache files currently present, sorted by name.
    pub fn entries(&self) -> std::io::Result<Vec<PathBuf>> {
        let mut out: Vec<PathBuf> = fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.file_name().and_then(|n| n.to_str()).is_some_and(|n| n.ends_with(SUFFIX)))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Removes every cache file; returns how many were removed.
    pub fn clear(&self) -> std::io::Result<usize> {
        let entries = self.entries()?;
        for p in &entries {
            fs::remove_file(p)?;
        }
        Ok(entries.len())
    }

    fn read(&self, key: &CacheKey) -> Result<Option<ReducedBasis>, String> {
        let path = self.path_for(key);
        let file = match fs::File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.to_string()),
        };
        let mut text = String::new();
        GzDecoder::new(file).read_to_string(&mut text).map_err(|e| e.to_string())?;
        let doc: Document = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        if doc.payload.key != *key {
            return Err("key mismatch".into());
        }
        if checksum(&doc.payload) != doc.checksum {
            return Err("checksum mismatch".into());
        }
        Ok(Some(doc.payload.basis))
    }

    fn write(&self, key: &CacheKey, basis: &ReducedBasis) -> std::io::Result<()> {
        let payload = Payload { key: key.clone(), basis: basis.clone() };
        let doc = Document { checksum: checksum(&payload), payload };
        let path = self.path_for(key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut enc = GzEncoder::new(fs::File::create(&tmp)?, Compression::default());
            serde_json::to_writer(&mut enc, &doc)?;
            enc.finish()?.flush()?;
        }
        fs::rename(tmp, path)
    }
}

impl BasisStore for FileStore {
    fn load(&self, key: &CacheKey) -> Option<ReducedBasis> {
        match self.read(key) {
            Ok(b) => b,
            Err(why) => {
                log::warn!("discarding cache entry {key}: {why}");
                let _ = fs::remove_file(self.path_for(key));
                None
            }
        }
    }

    fn store(&self, key: &CacheKey, basis: &ReducedBasis) {
        if let Err(e) = self.write(key, basis) {
            log::warn!("could not write cache entry {key}: {e}");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{reduce, Rational, SparseVector};

    fn sample() -> ReducedBasis {
        let rows = [
            SparseVector::from_entries(vec![(0, Rational::new(3, 2)), (2, Rational::from_integer(-1))]),
            SparseVector::from_entries(vec![(1, Rational::ONE), (2, Rational::new(1, 7))]),
        ];
        reduce(rows.iter())
    }

    #[test]
    fn roundtrip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let store = FileStore::new(dir.path()).unwrap();
        let key = CacheKey::new("ideal", 3, None, None, 2);
        assert!(store.load(&key).is_none());
        store.store(&key, &sample());
        assert_eq!(store.load(&key), Some(sample()));
        assert_eq!(store.entries().unwrap().len(), 1);

        let other = CacheKey { version: key.version + 1, ..key.clone() };
        assert!(store.load(&other).is_none());

        fs::write(store.path_for(&key), b"not gzip").unwrap();
        assert!(store.load(&key).is_none());
        assert!(!store.path_for(&key).exists());

        store.store(&key, &sample());
        assert_eq!(store.clear().unwrap(), 1);
        assert!(store.entries().unwrap().is_empty());
    }

    #[test]
    fn tampered_payload_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let store = FileStore::new(dir.path()).unwrap();
        let key = CacheKey::new("module", 3, None, Some(&[2, 1]), 1);
        store.store(&key, &sample());
        let mut text = String::new();
        GzDecoder::new(fs::File::open(store.path_for(&key)).unwrap()).read_to_string(&mut text).unwrap();
        let tampered = text.replacen("-2/3", "-5/3", 1);
        assert_ne!(tampered, text);
        let mut enc = GzEncoder::new(fs::File::create(store.path_for(&key)).unwrap(), Compression::default());
        enc.write_all(tampered.as_bytes()).unwrap();
        enc.finish().unwrap();
        assert!(store.load(&key).is_none());
    }
}
