//! GNATprove invocation and diagnostic parsing.
//!
//! Two backends share one interface: `subprocess` runs the real toolchain in
//! an isolated scratch copy of the project; `replay` serves recorded reports
//! from a cassette keyed by a digest of (sources + overlay + settings), so
//! the whole pipeline is testable on machines without the toolchain. Replay
//! fails loudly on a cassette miss — it never fabricates a report.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::sync::LazyLock;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::benchgen::SparkProject;
use crate::digest::KeyDigest;

/// Severity tag of one GNATprove output line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Error,
    Medium,
    Warning,
    Info,
}

impl Severity {
    fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "error" => Some(Self::Error),
            "medium" => Some(Self::Medium),
            "warning" => Some(Self::Warning),
            "info" => Some(Self::Info),
            _ => None,
        }
    }
}

/// One finding, as printed: `<path>:<line>:<col>: <severity>: <message>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    /// Path exactly as printed by the tool.
    pub file: String,
    pub line: u32,
    pub column: u32,
    pub message: String,
    /// Indented continuation lines following a medium (counterexamples),
    /// kept opaque and verbatim.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// Parsed result of one prover run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProofReport {
    pub diagnostics: Vec<Diagnostic>,
    pub exit_status: i32,
    pub raw_output: String,
    pub duration_secs: f64,
    /// No errors, no mediums, and normal tool completion.
    pub verified: bool,
}

impl ProofReport {
    pub fn from_raw(raw_output: String, exit_status: i32, duration_secs: f64) -> Self {
        let diagnostics = parse_diagnostics(&raw_output);
        let verified = exit_status == 0
            && !diagnostics
                .iter()
                .any(|d| matches!(d.severity, Severity::Error | Severity::Medium));
        Self { diagnostics, exit_status, raw_output, duration_secs, verified }
    }

    pub fn count(&self, severity: Severity) -> usize {
        self.diagnostics.iter().filter(|d| d.severity == severity).count()
    }

    pub fn mediums(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(|d| d.severity == Severity::Medium)
    }
}

static DIAG_LINE: LazyLock<regex::Regex> = LazyLock::new(|| {
    regex::Regex::new(r"^([^:\s][^:]*):(\d+):(\d+): (error|medium|warning|info): (.*)$")
        .expect("diagnostic line regex")
});

/// Parse tool output into diagnostics. Total: lines that do not match the
/// grammar are ignored, so arbitrary text yields an empty (or partial) list
/// rather than an error.
pub fn parse_diagnostics(raw: &str) -> Vec<Diagnostic> {
    let mut out: Vec<Diagnostic> = Vec::new();
    // Index of the medium that indented continuation lines attach to.
    let mut attach: Option<usize> = None;

    for line in raw.lines() {
        if line.starts_with(' ') || line.starts_with('\t') {
            if let Some(i) = attach {
                match &mut out[i].counterexample {
                    Some(text) => {
                        text.push('\n');
                        text.push_str(line);
                    }
                    slot @ None => *slot = Some(line.to_string()),
                }
            }
            continue;
        }
        if let Some(caps) = DIAG_LINE.captures(line) {
            let (Ok(line_no), Ok(col_no)) = (caps[2].parse::<u32>(), caps[3].parse::<u32>())
            else {
                attach = None;
                continue;
            };
            let severity = Severity::from_tag(&caps[4]).expect("regex restricts the tag");
            attach = (severity == Severity::Medium).then_some(out.len());
            out.push(Diagnostic {
                severity,
                file: caps[1].to_string(),
                line: line_no,
                column: col_no,
                message: caps[5].to_string(),
                counterexample: None,
            });
        } else {
            attach = None;
        }
    }
    out
}

/// Invocation settings. All fields are part of the cassette request key, so
/// changed settings can never silently replay stale reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProverSettings {
    /// Executable name or path.
    pub tool: String,
    /// `--mode=` value; `all` covers the check/flow/proof stages.
    pub mode: String,
    /// Wall-clock limit for one run; exceeding it is an unresolved outcome,
    /// not an unverified one.
    pub timeout_secs: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_args: Vec<String>,
}

impl Default for ProverSettings {
    fn default() -> Self {
        Self {
            tool: "gnatprove".to_string(),
            mode: "all".to_string(),
            timeout_secs: 300,
            steps: None,
            level: None,
            extra_args: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProverBackend {
    Subprocess,
    Replay,
}

/// Handle to a prover backend.
///
/// - `Replay` requires a cassette and reads from it.
/// - `Subprocess` runs the tool; with a cassette attached it also records
///   every completed run.
#[derive(Debug, Clone)]
pub struct ProverHandle {
    pub backend: ProverBackend,
    pub settings: ProverSettings,
    pub cassette: Option<PathBuf>,
}

impl ProverHandle {
    pub fn replay(cassette: impl Into<PathBuf>, settings: ProverSettings) -> Self {
        Self { backend: ProverBackend::Replay, settings, cassette: Some(cassette.into()) }
    }

    pub fn subprocess(settings: ProverSettings) -> Self {
        Self { backend: ProverBackend::Subprocess, settings, cassette: None }
    }

    pub fn recording(cassette: impl Into<PathBuf>, settings: ProverSettings) -> Self {
        Self { backend: ProverBackend::Subprocess, settings, cassette: Some(cassette.into()) }
    }

    /// Run the prover over the project with `overlay` files substituted in.
    ///
    /// Overlay keys are project-relative paths and must name existing
    /// project files. The subprocess backend materializes project + overlay
    /// into a private scratch directory, runs the tool there, and removes
    /// the scratch afterwards.
    pub fn run(
        &self,
        project: &SparkProject,
        overlay: &BTreeMap<String, String>,
    ) -> Result<ProofReport, ProverError> {
        let sources = effective_sources(project, overlay)?;
        let key = request_key(&sources, &self.settings);
        match self.backend {
            ProverBackend::Replay => {
                let path = self.cassette.as_ref().ok_or(ProverError::MissingCassette)?;
                let cassette = ProverCassette::load(path)?;
                let entry = cassette
                    .get(&key)
                    .ok_or_else(|| ProverError::CassetteMiss { key: key.clone() })?;
                Ok(ProofReport::from_raw(
                    entry.raw_output.clone(),
                    entry.exit_status,
                    entry.duration_secs,
                ))
            }
            ProverBackend::Subprocess => {
                let report = self.run_subprocess(project, &sources)?;
                if let Some(path) = &self.cassette {
                    let mut cassette = if path.exists() {
                        ProverCassette::load(path)?
                    } else {
                        ProverCassette::default()
                    };
                    cassette.insert(key, &report);
                    cassette.save(path)?;
                }
                Ok(report)
            }
        }
    }

    fn run_subprocess(
        &self,
        project: &SparkProject,
        sources: &BTreeMap<String, String>,
    ) -> Result<ProofReport, ProverError> {
        let scratch = tempfile::tempdir()?;
        for (rel, content) in sources {
            let dest = scratch.path().join(rel);
            if let Some(parent) = dest.parent() {
                fs::create_dir_all(parent)?;
            }
            fs::write(dest, content)?;
        }

        let gpr = scratch.path().join(project.project_file());
        let mut cmd = Command::new(&self.settings.tool);
        cmd.arg("-P")
            .arg(&gpr)
            .arg(format!("--mode={}", self.settings.mode))
            .current_dir(scratch.path())
            .stdin(Stdio::null())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped());
        if let Some(steps) = self.settings.steps {
            cmd.arg(format!("--steps={steps}"));
        }
        if let Some(level) = self.settings.level {
            cmd.arg(format!("--level={level}"));
        }
        cmd.args(&self.settings.extra_args);

        let start = Instant::now();
        let mut child = cmd.spawn().map_err(|e| {
            if e.kind() == std::io::ErrorKind::NotFound {
                ProverError::ToolNotFound { tool: self.settings.tool.clone() }
            } else {
                ProverError::Io(e)
            }
        })?;

        // Drain pipes on threads so a chatty tool cannot deadlock the
        // timeout poll below.
        let mut stdout = child.stdout.take().expect("stdout piped");
        let mut stderr = child.stderr.take().expect("stderr piped");
        let out_thread = std::thread::spawn(move || {
            let mut buf = String::new();
            let _ = stdout.read_to_string(&mut buf);
            buf
        });
        let err_thread = std::thread::spawn(move || {
            let mut buf = String::new();
            let _ = stderr.read_to_string(&mut buf);
            buf
        });

        let deadline = start + Duration::from_secs(self.settings.timeout_secs);
        let status = loop {
            if let Some(status) = child.try_wait()? {
                break status;
            }
            if Instant::now() >= deadline {
                let _ = child.kill();
                let _ = child.wait();
                return Err(ProverError::Timeout { seconds: self.settings.timeout_secs });
            }
            std::thread::sleep(Duration::from_millis(10));
        };

        let mut raw = out_thread.join().unwrap_or_default();
        raw.push_str(&err_thread.join().unwrap_or_default());
        let duration = start.elapsed().as_secs_f64();
        Ok(ProofReport::from_raw(raw, status.code().unwrap_or(-1), duration))
    }
}

/// Project sources with the overlay applied. Every overlay key must name a
/// project file.
fn effective_sources(
    project: &SparkProject,
    overlay: &BTreeMap<String, String>,
) -> Result<BTreeMap<String, String>, ProverError> {
    let mut sources = project.read_sources()?;
    for (path, content) in overlay {
        if !sources.contains_key(path) {
            return Err(ProverError::OverlayOutsideProject { path: path.clone() });
        }
        sources.insert(path.clone(), content.clone());
    }
    Ok(sources)
}

/// Digest of (effective sources + settings); the replay cassette key.
fn request_key(sources: &BTreeMap<String, String>, settings: &ProverSettings) -> String {
    let mut digest = KeyDigest::new();
    for (path, content) in sources {
        digest.field("file", path);
        digest.field("content", content);
    }
    digest.field("settings", &serde_json::to_string(settings).expect("settings serialize"));
    digest.finish()
}

/// Compute the cassette key for a prospective run without executing it.
pub fn request_key_for(
    project: &SparkProject,
    overlay: &BTreeMap<String, String>,
    settings: &ProverSettings,
) -> Result<String, ProverError> {
    Ok(request_key(&effective_sources(project, overlay)?, settings))
}

/// One recorded prover interaction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CassetteEntry {
    pub raw_output: String,
    pub exit_status: i32,
    pub duration_secs: f64,
}

/// Digest-keyed record of prover runs; a committed cassette makes runs
/// hermetic on machines without the toolchain.
#[derive(Debug, Default, Serialize, Deserialize)]
pub struct ProverCassette {
    #[serde(default)]
    pub entries: BTreeMap<String, CassetteEntry>,
}

impl ProverCassette {
    pub fn load(path: &Path) -> Result<Self, ProverError> {
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|source| ProverError::CassetteFormat {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn save(&self, path: &Path) -> Result<(), ProverError> {
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        let mut text = serde_json::to_string_pretty(self).expect("cassette serialize");
        text.push('\n');
        fs::write(path, text)?;
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&CassetteEntry> {
        self.entries.get(key)
    }

    pub fn insert(&mut self, key: String, report: &ProofReport) {
        self.entries.insert(
            key,
            CassetteEntry {
                raw_output: report.raw_output.clone(),
                exit_status: report.exit_status,
                duration_secs: report.duration_secs,
            },
        );
    }

    /// Record a raw interaction directly (used by fixture builders).
    pub fn insert_raw(&mut self, key: String, entry: CassetteEntry) {
        self.entries.insert(key, entry);
    }
}

#[derive(Debug, Error)]
pub enum ProverError {
    #[error("prover tool `{tool}` not found on PATH")]
    ToolNotFound { tool: String },

    #[error("prover run exceeded {seconds} s wall clock; outcome unresolved")]
    Timeout { seconds: u64 },

    #[error("replay cassette has no entry for request {key}; refusing to fabricate a report")]
    CassetteMiss { key: String },

    #[error("replay backend requires a cassette path")]
    MissingCassette,

    #[error("overlay path `{path}` is not part of the project")]
    OverlayOutsideProject { path: String },

    #[error("cassette {path} is not valid: {source}")]
    CassetteFormat {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
