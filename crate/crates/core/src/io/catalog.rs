//! Append-only catalog of invariant reports, one JSON record per line.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Seek, SeekFrom, Write};
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use num_rational::Ratio;
use serde::Serialize;
use serde_json::Value;

use crate::invariants::InvariantReport;

use super::gemfile::{digest, GemFile};
use super::IoError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogRecord {
    pub name: Option<String>,
    pub digest: String,
    /// Unix seconds.
    pub added_at: u64,
    #[serde(flatten)]
    pub report: InvariantReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AddOutcome {
    Added { digest: String },
    Duplicate { digest: String, line: usize },
}

/// Lines that parsed, and those that did not.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct ScanResult {
    pub records: Vec<Value>,
    pub corrupt: Vec<StoreProblem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StoreProblem {
    pub line: usize,
    pub message: String,
}

impl From<&StoreProblem> for IoError {
    fn from(p: &StoreProblem) -> Self {
        IoError::StoreCorrupt {
            line: p.line,
            message: p.message.clone(),
        }
    }
}

fn read_records(file: &File) -> Result<ScanResult, std::io::Error> {
    let mut result = ScanResult::default();
    for (k, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<Value>(&line) {
            Ok(v) if v.is_object() => result.records.push(v),
            Ok(_) => result.corrupt.push(StoreProblem {
                line: k + 1,
                message: "record is not a JSON object".into(),
            }),
            Err(e) => result.corrupt.push(StoreProblem {
                line: k + 1,
                message: e.to_string(),
            }),
        }
    }
    Ok(result)
}

/// Computes the report for `gem` and appends it unless a record with the same
/// digest exists. The store is created if missing and held under an exclusive
/// lock for the duration.
pub fn catalog_add(store: impl AsRef<Path>, gem: &GemFile) -> Result<AddOutcome, IoError> {
    let store = store.as_ref();
    let graph = gem.to_graph()?;
    let digest = digest(gem);
    let io = |e| IoError::io(store, e);
    let mut file = OpenOptions::new()
        .read(true)
        .append(true)
        .create(true)
        .open(store)
        .map_err(io)?;
    file.lock().map_err(io)?;
    file.seek(SeekFrom::Start(0)).map_err(io)?;
    for (k, line) in BufReader::new(&file).lines().enumerate() {
        let line = line.map_err(io)?;
        let existing = serde_json::from_str::<Value>(&line).ok();
        if existing
            .as_ref()
            .and_then(|v| v.get("digest"))
            .and_then(Value::as_str)
            == Some(&digest)
        {
            return Ok(AddOutcome::Duplicate {
                digest,
                line: k + 1,
            });
        }
    }
    let record = CatalogRecord {
        name: gem.name.clone(),
        digest: digest.clone(),
        added_at: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        report: InvariantReport::compute(&graph)?,
    };
    let mut line = serde_json::to_string(&record).expect("serializable");
    line.push('\n');
    file.write_all(line.as_bytes()).map_err(io)?;
    file.flush().map_err(io)?;
    Ok(AddOutcome::Added { digest })
}

/// Records matching every filter. Corrupt lines are listed in the result and
/// do not stop the scan.
pub fn catalog_scan(store: impl AsRef<Path>, filters: &[Filter]) -> Result<ScanResult, IoError> {
    let store = store.as_ref();
    let io = |e| IoError::io(store, e);
    let file = File::open(store).map_err(io)?;
    file.lock_shared().map_err(io)?;
    let mut result = read_records(&file).map_err(io)?;
    result
        .records
        .retain(|r| filters.iter().all(|f| f.matches(r)));
    Ok(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

/// `FIELD OP VALUE`, e.g. `rho_min=0` or `omega_g<=12`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filter {
    pub field: String,
    pub op: Op,
    pub value: String,
}

fn as_rational(s: &str) -> Option<Ratio<i64>> {
    s.trim().parse().ok()
}

impl Filter {
    pub fn parse(text: &str) -> Result<Filter, IoError> {
        const OPS: [(&str, Op); 6] = [
            ("<=", Op::Le),
            (">=", Op::Ge),
            ("!=", Op::Ne),
            ("=", Op::Eq),
            ("<", Op::Lt),
            (">", Op::Gt),
        ];
        for (sym, op) in OPS {
            if let Some((field, value)) = text.split_once(sym) {
                let (field, value) = (field.trim(), value.trim());
                if field.is_empty() || value.is_empty() {
                    break;
                }
                return Ok(Filter {
                    field: field.to_string(),
                    op,
                    value: value.to_string(),
                });
            }
        }
        Err(IoError::Filter(text.to_string()))
    }

    pub fn matches(&self, record: &Value) -> bool {
        let Some(field) = record.get(&self.field) else {
            return false;
        };
        let found = match field {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::Null => "null".to_string(),
            _ => return false,
        };
        let ordering = match (as_rational(&found), as_rational(&self.value)) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => found.as_str().cmp(self.value.as_str()),
        };
        use std::cmp::Ordering::*;
        match self.op {
            Op::Eq => ordering == Equal,
            Op::Ne => ordering != Equal,
            Op::Lt => ordering == Less,
            Op::Le => ordering != Greater,
            Op::Gt => ordering == Greater,
            Op::Ge => ordering != Less,
        }
    }
}
