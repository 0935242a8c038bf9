//! Geometric input for the catalog that is not h-vector arithmetic: `δ`
//! values, `μ̃` lower bounds for curves with small linear systems, `ν̃` for
//! curves outside the closed form, the listed curves with their status, and
//! footnote letters. Every value that can also be computed is cross-checked.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hvector::HVector;

/// Environment variable naming an alternative data file.
pub const DATA_ENV: &str = "GORLINK_DATA";

const EMBEDDED: &str = include_str!("../../data/table_data.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MhkStatus {
    /// The general member of `PGor(h)` is of the form `mH - K` on this curve.
    Yes,
    No,
    Unknown,
}

impl fmt::Display for MhkStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MhkStatus::Yes => "yes",
            MhkStatus::No => "no",
            MhkStatus::Unknown => "?",
        })
    }
}

/// `B` as written in the table: `"35"` or `"<=44"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum BValue {
    Exact(i64),
    AtMost(i64),
}

impl BValue {
    pub fn value(self) -> i64 {
        match self {
            BValue::Exact(v) | BValue::AtMost(v) => v,
        }
    }

    pub fn is_upper(self) -> bool {
        matches!(self, BValue::AtMost(_))
    }
}

impl TryFrom<String> for BValue {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad B value {s:?}: {e}"))
        };
        match s.strip_prefix("<=") {
            Some(rest) => parse(rest).map(BValue::AtMost),
            None => parse(&s).map(BValue::Exact),
        }
    }
}

impl From<BValue> for String {
    fn from(b: BValue) -> String {
        b.to_string()
    }
}

impl fmt::Display for BValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BValue::Exact(v) => write!(f, "{v}"),
            BValue::AtMost(v) => write!(f, "<={v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowData {
    pub h: HVector,
    #[serde(rename = "A")]
    pub a: Option<i64>,
    pub m: Option<i64>,
    pub mu_lo: Option<i64>,
    pub mu_hi: Option<i64>,
    #[serde(default)]
    pub footnotes: Vec<String>,
    /// Keys are the curves listed for this row.
    pub mhk_status: BTreeMap<HVector, MhkStatus>,
    #[serde(default)]
    pub dg: BTreeMap<HVector, (i64, i64)>,
    #[serde(default, rename = "B")]
    pub b: BTreeMap<HVector, BValue>,
    #[serde(default)]
    pub delta: BTreeMap<HVector, i64>,
    #[serde(default)]
    pub nu_tilde: BTreeMap<HVector, i64>,
    #[serde(default)]
    pub mu_tilde: BTreeMap<HVector, (Option<i64>, Option<i64>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableData {
    pub version: u32,
    pub rows: Vec<RowData>,
}

pub const FOOTNOTE_LETTERS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

impl TableData {
    pub fn parse(json: &str) -> Result<Self> {
        let data: TableData = serde_json::from_str(json).map_err(|e| Error::Data(e.to_string()))?;
        if data.version != 1 {
            return Err(Error::Data(format!("unsupported version {}", data.version)));
        }
        let mut seen = std::collections::BTreeSet::new();
        for row in &data.rows {
            if !seen.insert(&row.h) {
                return Err(Error::Data(format!("duplicate row {}", row.h)));
            }
            if let Some(f) = row
                .footnotes
                .iter()
                .find(|f| !FOOTNOTE_LETTERS.contains(&f.as_str()))
            {
                return Err(Error::Data(format!(
                    "unknown footnote {f:?} in row {}",
                    row.h
                )));
            }
            let listed = |key: &HVector, field: &str| -> Result<()> {
                if row.mhk_status.contains_key(key) {
                    Ok(())
                } else {
                    Err(Error::Data(format!(
                        "{field} entry {key} in row {} is not a listed curve",
                        row.h
                    )))
                }
            };
            for k in row.dg.keys() {
                listed(k, "dg")?;
            }
            for k in row.b.keys() {
                listed(k, "B")?;
            }
            for k in row.delta.keys() {
                listed(k, "delta")?;
            }
            for k in row.nu_tilde.keys() {
                listed(k, "nu_tilde")?;
            }
            for k in row.mu_tilde.keys() {
                listed(k, "mu_tilde")?;
            }
        }
        Ok(data)
    }

    /// The shipped data file.
    pub fn embedded() -> Self {
        Self::parse(EMBEDDED).expect("embedded table data is valid")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The file named by `GORLINK_DATA` if set, otherwise the shipped data.
    pub fn load() -> Result<Self> {
        match std::env::var_os(DATA_ENV) {
            Some(path) => Self::from_path(Path::new(&path)),
            None => Ok(Self::embedded()),
        }
    }

    pub fn row(&self, h: &HVector) -> Option<&RowData> {
        self.rows.iter().find(|r| &r.h == h)
    }
}
