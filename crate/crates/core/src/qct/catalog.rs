use std::fmt;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Mutex;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{QctError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    Classical,
    Quantum,
    Report,
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntryKind::Classical => "classical",
            EntryKind::Quantum => "quantum",
            EntryKind::Report => "report",
        })
    }
}

impl FromStr for EntryKind {
    type Err = QctError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(EntryKind::Classical),
            "quantum" => Ok(EntryKind::Quantum),
            "report" => Ok(EntryKind::Report),
            _ => Err(QctError::InvalidParameters(format!(
                "unknown entry kind {s:?} (classical, quantum, report)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// Hex SHA-256 of the compact JSON serialization of `payload`.
    pub id: String,
    pub kind: EntryKind,
    pub payload: Value,
    /// Seconds since the Unix epoch.
    pub created: u64,
    #[serde(default)]
    pub inputs: Vec<String>,
}

/// Predicates for [`Catalog::search`]. Unset fields match everything.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Query {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub q: Option<u32>,
    pub dz_min: Option<usize>,
    pub dx_min: Option<usize>,
}

/// Parameters a query can look at, read from quantum and classical payloads.
fn payload_params(kind: EntryKind, v: &Value) -> Option<(usize, usize, u32, usize, usize)> {
    let int = |v: &Value, key: &str| v.get(key)?.as_u64();
    match kind {
        EntryKind::Quantum => Some((
            int(v, "n")? as usize,
            int(v, "k")? as usize,
            int(v, "q")? as u32,
            int(v, "dz")? as usize,
            int(v, "dx")? as usize,
        )),
        EntryKind::Classical => {
            let field = v.get("field")?;
            let q = (int(field, "p")? as u32).checked_pow(int(field, "e")? as u32)?;
            let d = v.get("distance").and_then(|d| int(d, "value")).unwrap_or(0) as usize;
            Some((int(v, "n")? as usize, int(v, "k")? as usize, q, d, d))
        }
        EntryKind::Report => None,
    }
}

impl Query {
    pub fn is_empty(&self) -> bool {
        *self == Query::default()
    }

    pub fn matches(&self, entry: &CatalogEntry) -> bool {
        let Some((n, k, q, dz, dx)) = payload_params(entry.kind, &entry.payload) else {
            return self.is_empty();
        };
        self.n.is_none_or(|v| v == n)
            && self.k.is_none_or(|v| v == k)
            && self.q.is_none_or(|v| v == q)
            && self.dz_min.is_none_or(|v| dz >= v)
            && self.dx_min.is_none_or(|v| dx >= v)
    }
}

pub fn content_id(payload: &Value) -> String {
    let bytes = serde_json::to_vec(payload).expect("Value always serializes");
    hex::encode(Sha256::digest(&bytes))
}

/// An append-only JSON-lines file of entries.
pub struct Catalog {
    path: PathBuf,
    appender: Mutex<()>,
}

impl Catalog {
    /// Opens (without creating) the catalog at `path`; a missing file reads
    /// as empty.
    pub fn open(path: impl Into<PathBuf>) -> Catalog {
        Catalog {
            path: path.into(),
            appender: Mutex::new(()),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn list(&self) -> Result<Vec<CatalogEntry>> {
        let file = match fs::File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(QctError::io(&self.path, e)),
        };
        let mut entries = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| QctError::io(&self.path, e))?;
            if line.trim().is_empty() {
                continue;
            }
            let entry: CatalogEntry = serde_json::from_str(&line).map_err(|e| {
                QctError::MalformedRecord(format!("{}:{}: {e}", self.path.display(), i + 1))
            })?;
            entries.push(entry);
        }
        Ok(entries)
    }

    /// Looks an entry up by id or by a unique id prefix.
    pub fn get(&self, id: &str) -> Result<CatalogEntry> {
        let mut hits = self
            .list()?
            .into_iter()
            .filter(|e| !id.is_empty() && e.id.starts_with(id));
        match (hits.next(), hits.next()) {
            (Some(e), None) => Ok(e),
            (Some(_), Some(_)) => Err(QctError::InvalidParameters(format!(
                "id prefix {id} is ambiguous"
            ))),
            (None, _) => Err(QctError::NotFound(id.to_string())),
        }
    }

    pub fn search(&self, query: &Query) -> Result<Vec<CatalogEntry>> {
        Ok(self
            .list()?
            .into_iter()
            .filter(|e| query.matches(e))
            .collect())
    }

    /// Stores `payload` unless an entry with the same id exists. Returns the
    /// stored (or existing) entry and whether it was newly written.
    pub fn put(
        &self,
        kind: EntryKind,
        payload: Value,
        inputs: Vec<String>,
    ) -> Result<(CatalogEntry, bool)> {
        let _guard = self.appender.lock().unwrap_or_else(|p| p.into_inner());
        let existing = self.list()?;
        let id = content_id(&payload);
        if let Some(e) = existing.iter().find(|e| e.id == id) {
            return Ok((e.clone(), false));
        }
        let mut resolved = Vec::with_capacity(inputs.len());
        for input in &inputs {
            match existing.iter().find(|e| &e.id == input) {
                Some(e) => resolved.push(e.id.clone()),
                None => return Err(QctError::NotFound(format!("input {input}"))),
            }
        }
        let created = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let entry = CatalogEntry {
            id,
            kind,
            payload,
            created,
            inputs: resolved,
        };
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|e| QctError::io(dir, e))?;
        }
        let mut line = serde_json::to_string(&entry)?;
        line.push('\n');
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| QctError::io(&self.path, e))?;
        file.write_all(line.as_bytes())
            .map_err(|e| QctError::io(&self.path, e))?;
        Ok((entry, true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn put_is_idempotent_and_checks_inputs() {
        let dir = tempfile::tempdir().unwrap();
        let cat = Catalog::open(dir.path().join("c.jsonl"));
        let rec = json!({"n": 7, "k": 3, "q": 2, "dz": 3, "dx": 2});
        let (a, new_a) = cat.put(EntryKind::Quantum, rec.clone(), vec![]).unwrap();
        let (b, new_b) = cat.put(EntryKind::Quantum, rec, vec![]).unwrap();
        assert!(new_a && !new_b);
        assert_eq!(a.id, b.id);
        assert_eq!(cat.list().unwrap().len(), 1);
        assert!(matches!(
            cat.put(EntryKind::Report, json!({}), vec!["feed".into()]),
            Err(QctError::NotFound(_))
        ));
        let (r, _) = cat
            .put(EntryKind::Report, json!({}), vec![a.id.clone()])
            .unwrap();
        assert_eq!(r.inputs, vec![a.id.clone()]);
        assert_eq!(cat.get(&a.id[..10]).unwrap().id, a.id);
        assert!(matches!(cat.get("nope"), Err(QctError::NotFound(_))));
    }

    #[test]
    fn search_predicates() {
        let dir = tempfile::tempdir().unwrap();
        let cat = Catalog::open(dir.path().join("c.jsonl"));
        for (n, dz) in [(45, 6), (45, 20), (186, 4)] {
            cat.put(
                EntryKind::Quantum,
                json!({"n": n, "k": 10, "q": 4, "dz": dz, "dx": 2}),
                vec![],
            )
            .unwrap();
        }
        let q = |n, dz_min| Query {
            n,
            q: Some(4),
            dz_min,
            ..Query::default()
        };
        assert_eq!(cat.search(&q(Some(45), None)).unwrap().len(), 2);
        assert_eq!(cat.search(&q(Some(45), Some(10))).unwrap().len(), 1);
        assert_eq!(cat.search(&q(None, None)).unwrap().len(), 3);
    }

    #[test]
    fn id_depends_only_on_payload() {
        let a = content_id(&json!({"b": 1, "a": [1, 2]}));
        let b = content_id(&json!({"a": [1, 2], "b": 1}));
        assert_eq!(a, b);
        assert_eq!(a.len(), 64);
    }
}
