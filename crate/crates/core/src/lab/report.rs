use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path as FsPath;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{GraphFile, SimpleGraph};

/// Outcome of one theorem check on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub claim: String,
    pub instance: String,
    /// Reproducer.
    pub graph: GraphFile,
    pub hypotheses_met: bool,
    /// Why the hypotheses failed, when they did.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypothesis_failure: Option<String>,
    /// `None` when the hypotheses fail or the claim asserts nothing.
    pub conclusion: Option<bool>,
    /// Total Betti numbers by label (`G`, `G/p`, ...).
    #[serde(default)]
    pub tables: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(claim: &str, instance: impl Into<String>, g: &SimpleGraph) -> Self {
        Self {
            claim: claim.to_string(),
            instance: instance.into(),
            graph: GraphFile::from(g),
            hypotheses_met: true,
            hypothesis_failure: None,
            conclusion: None,
            tables: BTreeMap::new(),
            seed: None,
            notes: Vec::new(),
        }
    }

    pub fn unmet(mut self, why: impl Into<String>) -> Self {
        self.hypotheses_met = false;
        self.hypothesis_failure = Some(why.into());
        self.conclusion = None;
        self
    }

    /// Hypotheses hold and the conclusion does not.
    pub fn is_counterexample(&self) -> bool {
        self.hypotheses_met && self.conclusion == Some(false)
    }

    pub fn status(&self) -> &'static str {
        match (self.hypotheses_met, self.conclusion) {
            (false, _) => "hypotheses not met",
            (true, None) => "recorded",
            (true, Some(true)) => "holds",
            (true, Some(false)) => "COUNTEREXAMPLE",
        }
    }
}

/// Serialized JSON-lines writer shared by concurrent producers.
pub struct ReportSink {
    out: Mutex<BufWriter<File>>,
}

impl ReportSink {
    pub fn create(path: impl AsRef<FsPath>) -> Result<Self> {
        Ok(Self { out: Mutex::new(BufWriter::new(File::create(path)?)) })
    }

    pub fn write(&self, report: &CheckReport) -> Result<()> {
        let line = serde_json::to_string(report)?;
        let mut out = self.out.lock().expect("report sink poisoned");
        writeln!(out, "{line}")?;
        Ok(())
    }

    pub fn flush(&self) -> Result<()> {
        self.out.lock().expect("report sink poisoned").flush()?;
        Ok(())
    }
}

pub fn read_reports(path: impl AsRef<FsPath>) -> Result<Vec<CheckReport>> {
    let text = std::fs::read_to_string(path)?;
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| Ok(serde_json::from_str(l)?)).collect()
}

/// Saves the graph of every counterexample as `<dir>/<claim>-<k>.json`.
pub fn persist_counterexamples(reports: &[CheckReport], dir: impl AsRef<FsPath>) -> Result<Vec<std::path::PathBuf>> {
    let dir = dir.as_ref();
    let mut written = Vec::new();
    for (k, r) in reports.iter().filter(|r| r.is_counterexample()).enumerate() {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{}-{k}.json", r.claim));
        std::fs::write(&path, serde_json::to_string_pretty(&r.graph)? + "\n")?;
        written.push(path);
    }
    Ok(written)
}
