//! Append-only JSON-lines cache of reduction records.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::record::{ReductionRecord, RecordOptions, ValueKind};
use crate::Failure;

#[derive(Serialize, Deserialize)]
struct Line {
    key: Key,
    record: ReductionRecord,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
struct Key {
    kind: ValueKind,
    args: Vec<i64>,
    digits: usize,
    trace: bool,
}

pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Cache { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn key(kind: ValueKind, args: &[i64], opts: RecordOptions) -> Key {
        Key { kind, args: args.to_vec(), digits: opts.digits, trace: opts.trace }
    }

    /// First cached record for the key; unreadable lines are skipped.
    pub fn get(&self, kind: ValueKind, args: &[i64], opts: RecordOptions) -> Result<Option<ReductionRecord>, Failure> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let want = Self::key(kind, args, opts);
        for line in BufReader::new(file).lines() {
            if let Ok(l) = serde_json::from_str::<Line>(&line?) {
                if l.key == want {
                    return Ok(Some(l.record));
                }
            }
        }
        Ok(None)
    }

    pub fn put(&self, record: &ReductionRecord, opts: RecordOptions) -> Result<(), Failure> {
        let line = Line { key: Self::key(record.kind, &record.args, opts), record: record.clone() };
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let text = serde_json::to_string(&line).map_err(|e| Failure::Internal(e.to_string()))?;
        writeln!(f, "{text}")?;
        Ok(())
    }

    /// Cached record, or a fresh one that is then appended.
    pub fn get_or_build(&self, kind: ValueKind, args: &[i64], opts: RecordOptions) -> Result<ReductionRecord, Failure> {
        if let Some(r) = self.get(kind, args, opts)? {
            return Ok(r);
        }
        let r = crate::record::build(kind, args, opts)?;
        self.put(&r, opts)?;
        Ok(r)
    }
}
