//! On-disk memo of `ulrich classify` documents, one file `gr_<k>_<n>.json`
//! per Grassmannian.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::document::{render, OutputDocument};

pub struct ClassifyCache {
    dir: PathBuf,
}

impl ClassifyCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ClassifyCache { dir: dir.into() }
    }

    fn path(&self, k: usize, n: usize) -> PathBuf {
        self.dir.join(format!("gr_{k}_{n}.json"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// A prior document for `(k, n)` produced with the same `brute_force`
    /// setting. Unreadable or foreign files are reported and skipped.
    pub fn load(&self, k: usize, n: usize, brute_force: bool) -> Option<OutputDocument> {
        let path = self.path(k, n);
        let text = fs::read_to_string(&path).ok()?;
        let doc = serde_json::from_str::<Value>(&text)
            .ok()
            .and_then(|v| OutputDocument::from_value(&v));
        let Some(doc) = doc else {
            eprintln!("warning: ignoring corrupt cache file {}", path.display());
            return None;
        };
        let inputs = &doc.inputs;
        let matches = doc.command == "ulrich classify"
            && inputs.get("k").and_then(Value::as_u64) == Some(k as u64)
            && inputs.get("n").and_then(Value::as_u64) == Some(n as u64)
            && inputs.get("brute_force").and_then(Value::as_bool) == Some(brute_force);
        matches.then_some(doc)
    }

    pub fn store(&self, k: usize, n: usize, doc: &OutputDocument) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        fs::write(self.path(k, n), render(&doc.to_value()))
    }
}
