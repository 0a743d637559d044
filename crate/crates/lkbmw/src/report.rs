//! Pass/fail report structures shared by the verification suites and the CLI.

use serde::Serialize;

/// One named check instance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckEntry {
    /// Human-readable instance name, e.g. `"(12) e1 e2 e1 = e1"`.
    pub name: String,
    /// Whether the exact identity held.
    pub pass: bool,
    /// Optional context (counterexample location, computed value, ...).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A titled list of check instances.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    /// What the suite verified.
    pub title: String,
    /// Every instance, in deterministic order.
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    /// An empty report with the given title.
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    /// Records one instance.
    pub fn push(&mut self, name: impl Into<String>, pass: bool) {
        self.entries.push(CheckEntry {
            name: name.into(),
            pass,
            detail: None,
        });
    }

    /// Records one instance with extra context.
    pub fn push_detail(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.entries.push(CheckEntry {
            name: name.into(),
            pass,
            detail: Some(detail.into()),
        });
    }

    /// Appends all entries of another report.
    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// True when every instance passed.
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    /// The failing instances.
    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

/// One parameter point of a reducibility scan.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    /// Strand count.
    pub n: usize,
    /// The probed `l` value, as an exact fraction string.
    pub l: String,
    /// The `r` value, as an exact fraction string.
    pub r: String,
    /// Whether the scan ran the conjugate representation.
    pub conjugate: bool,
    /// Computed dimension of `K(n)`.
    pub k_dim: usize,
    /// Computed verdict: `K(n)` nonzero.
    pub reducible: bool,
    /// The verdict predicted by the exceptional-value list.
    pub predicted: bool,
    /// Whether computation and prediction agree.
    pub agree: bool,
}

/// A full scan over exceptional and probe values of `l`.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    /// One row per probed point, in input order.
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    /// True when every row agrees with the prediction.
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }
}
