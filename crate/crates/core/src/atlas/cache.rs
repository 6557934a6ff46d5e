use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::domains::{FeasibleSet, SupResult, SupValue};

/// One memoised supremum. Floats are stored as shortest round-trip decimal
/// strings so a load reproduces the stored bits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupRecord {
    pub n: u32,
    pub q: String,
    pub set: String,
    pub sup: String,
    pub argmax_y: Option<String>,
    pub attained: bool,
    pub grid_cells_feasible: usize,
    pub tol: String,
}

fn set_label(set: FeasibleSet) -> &'static str {
    set.label()
}

fn parse_set(s: &str) -> Option<FeasibleSet> {
    match s {
        "L" => Some(FeasibleSet::D),
        "H" => Some(FeasibleSet::E),
        _ => None,
    }
}

impl SupRecord {
    pub fn new(n: u32, q: f64, set: FeasibleSet, tol: f64, r: &SupResult) -> SupRecord {
        SupRecord {
            n,
            q: q.to_string(),
            set: set_label(set).into(),
            sup: match r.value {
                SupValue::Finite(v) => v.to_string(),
                SupValue::PosInf => "inf".into(),
                SupValue::NegInf => "-inf".into(),
            },
            argmax_y: r.argmax_y.map(|y| y.to_string()),
            attained: r.attained,
            grid_cells_feasible: r.grid_cells_feasible,
            tol: tol.to_string(),
        }
    }

    fn key(&self) -> Option<(u32, u64, FeasibleSet)> {
        Some((self.n, self.q.parse::<f64>().ok()?.to_bits(), parse_set(&self.set)?))
    }

    pub fn tol(&self) -> Option<f64> {
        self.tol.parse().ok()
    }

    pub fn result(&self) -> Option<SupResult> {
        let value = match self.sup.as_str() {
            "inf" => SupValue::PosInf,
            "-inf" => SupValue::NegInf,
            s => SupValue::Finite(s.parse().ok()?),
        };
        let argmax_y = match &self.argmax_y {
            Some(s) => Some(s.parse().ok()?),
            None => None,
        };
        Some(SupResult { value, argmax_y, attained: self.attained, grid_cells_feasible: self.grid_cells_feasible })
    }

    fn is_valid(&self) -> bool {
        self.key().is_some() && self.tol().is_some() && self.result().is_some()
    }
}

/// Parses JSON lines, skipping (and logging) lines that do not decode.
/// Returns the records and the number of skipped lines.
pub fn parse_records(text: &str) -> (Vec<SupRecord>, usize) {
    let mut out = Vec::new();
    let mut skipped = 0;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<SupRecord>(line) {
            Ok(r) if r.is_valid() => out.push(r),
            Ok(_) => {
                log::warn!("cache line {}: invalid field values, skipped", i + 1);
                skipped += 1;
            }
            Err(e) => {
                log::warn!("cache line {}: {e}, skipped", i + 1);
                skipped += 1;
            }
        }
    }
    (out, skipped)
}

pub fn write_records(path: &Path, records: &[SupRecord], append: bool) -> io::Result<()> {
    let mut f = OpenOptions::new().create(true).write(true).append(append).truncate(!append).open(path)?;
    let mut buf = String::new();
    for r in records {
        buf.push_str(&serde_json::to_string(r).expect("record serializes"));
        buf.push('\n');
    }
    f.write_all(buf.as_bytes())
}

/// Stores the records at `path`, then loads them back.
pub fn cache_roundtrip(path: &Path, records: &[SupRecord]) -> io::Result<Vec<SupRecord>> {
    write_records(path, records, false)?;
    Ok(parse_records(&fs::read_to_string(path)?).0)
}

/// File-backed memo of suprema keyed by `(n, q, set)`.
#[derive(Debug, Default)]
pub struct SupCache {
    path: Option<PathBuf>,
    map: HashMap<(u32, u64, FeasibleSet), SupRecord>,
    pending: Vec<SupRecord>,
    pub skipped_lines: usize,
}

impl SupCache {
    pub fn in_memory() -> SupCache {
        SupCache::default()
    }

    /// Opens the cache at `path`; a missing file is an empty cache.
    pub fn open(path: &Path) -> io::Result<SupCache> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => String::new(),
            Err(e) => return Err(e),
        };
        let (records, skipped_lines) = parse_records(&text);
        let mut cache = SupCache { path: Some(path.to_path_buf()), skipped_lines, ..SupCache::default() };
        for r in records {
            cache.put(r);
        }
        Ok(cache)
    }

    fn put(&mut self, r: SupRecord) {
        let key = r.key().expect("validated record");
        // keep the tightest tolerance seen
        let keep = match self.map.get(&key) {
            Some(old) => r.tol() <= old.tol(),
            None => true,
        };
        if keep {
            self.map.insert(key, r);
        }
    }

    /// Cached result, unless it was computed with a looser tolerance.
    pub fn get(&self, n: u32, q: f64, set: FeasibleSet, tol: f64) -> Option<SupResult> {
        let r = self.map.get(&(n, q.to_bits(), set))?;
        if r.tol()? > tol {
            return None;
        }
        r.result()
    }

    pub fn insert(&mut self, rec: SupRecord) {
        self.pending.push(rec.clone());
        self.put(rec);
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Appends new records to the backing file.
    pub fn flush(&mut self) -> io::Result<()> {
        if let Some(path) = &self.path {
            if !self.pending.is_empty() {
                if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                    fs::create_dir_all(dir)?;
                }
                write_records(path, &self.pending, true)?;
            }
        }
        self.pending.clear();
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::sup_phi;

    fn sample(q: f64) -> SupRecord {
        let r = sup_phi(FeasibleSet::D, 6, q, 1e-9).unwrap();
        SupRecord::new(6, q, FeasibleSet::D, 1e-9, &r)
    }

    #[test]
    fn roundtrip_one_record() {
        let dir = tempfile::tempdir().unwrap();
        let rec = sample(1.2);
        let back = cache_roundtrip(&dir.path().join("c.jsonl"), std::slice::from_ref(&rec)).unwrap();
        assert_eq!(back, vec![rec.clone()]);
        let orig = sup_phi(FeasibleSet::D, 6, 1.2, 1e-9).unwrap();
        assert_eq!(back[0].result().unwrap(), orig);
    }

    #[test]
    fn empty_cache() {
        let dir = tempfile::tempdir().unwrap();
        assert!(cache_roundtrip(&dir.path().join("c.jsonl"), &[]).unwrap().is_empty());
        assert!(SupCache::open(&dir.path().join("missing.jsonl")).unwrap().is_empty());
    }

    #[test]
    fn corrupt_line_is_skipped() {
        let mut text = String::new();
        for i in 0..10 {
            if i == 4 {
                text.push_str("{\"n\": 6, \"q\": broken\n");
            } else {
                text.push_str(&serde_json::to_string(&sample(1.0 + i as f64 * 0.01)).unwrap());
                text.push('\n');
            }
        }
        let (recs, skipped) = parse_records(&text);
        assert_eq!((recs.len(), skipped), (9, 1));
    }

    #[test]
    fn looser_tolerance_is_bypassed() {
        let mut c = SupCache::in_memory();
        let r = sup_phi(FeasibleSet::D, 6, 1.2, 1e-4).unwrap();
        c.insert(SupRecord::new(6, 1.2, FeasibleSet::D, 1e-4, &r));
        assert!(c.get(6, 1.2, FeasibleSet::D, 1e-9).is_none());
        assert_eq!(c.get(6, 1.2, FeasibleSet::D, 1e-3), Some(r));
    }

    #[test]
    fn flush_appends() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sub/c.jsonl");
        let mut c = SupCache::open(&path).unwrap();
        c.insert(sample(1.1));
        c.flush().unwrap();
        let mut c = SupCache::open(&path).unwrap();
        assert_eq!(c.len(), 1);
        c.insert(sample(1.3));
        c.flush().unwrap();
        assert_eq!(SupCache::open(&path).unwrap().len(), 2);
    }
}
