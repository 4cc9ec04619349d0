//! Benchmark generation: apply the five pragma-removal schemata to verified
//! SPARK projects, keep only mutants the prover actually complains about
//! (at least one medium, no errors), and persist everything as a manifest.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ada_lex::{remove_sites, scan_structure, PragmaKind, PragmaSite, ScanError};
use crate::digest::sha256_hex;
use crate::prover::{ProofReport, ProverHandle, Severity};

/// A SPARK project on disk: one `.gpr` build file, specification files
/// (`.ads`), implementation files (`.adb`), and the single body under
/// mutation. Relative paths use `/` separators; `file_digests` pins the
/// content each path had when the project was scanned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparkProject {
    pub root: PathBuf,
    pub project_file: String,
    pub spec_files: Vec<String>,
    pub body_files: Vec<String>,
    pub target_body: String,
    pub file_digests: BTreeMap<String, String>,
}

impl SparkProject {
    /// Scan a directory for a SPARK project. Requires exactly one `.gpr`;
    /// the target body defaults to the sole `.adb`.
    pub fn discover(root: &Path) -> Result<Self, BenchError> {
        let root = root
            .canonicalize()
            .map_err(|_| BenchError::MissingProjectFile { root: root.to_path_buf() })?;
        let mut gpr = Vec::new();
        let mut spec_files = Vec::new();
        let mut body_files = Vec::new();
        for entry in walkdir::WalkDir::new(&root).sort_by_file_name() {
            let entry = entry.map_err(|e| BenchError::Io(e.into()))?;
            if !entry.file_type().is_file() {
                continue;
            }
            let rel = entry
                .path()
                .strip_prefix(&root)
                .expect("walkdir stays under root")
                .to_string_lossy()
                .into_owned();
            match entry.path().extension().and_then(|e| e.to_str()) {
                Some("gpr") => gpr.push(rel),
                Some("ads") => spec_files.push(rel),
                Some("adb") => body_files.push(rel),
                _ => {}
            }
        }
        let project_file = match gpr.len() {
            0 => return Err(BenchError::MissingProjectFile { root }),
            1 => gpr.remove(0),
            _ => return Err(BenchError::AmbiguousProjectFile { root }),
        };
        if body_files.is_empty() {
            return Err(BenchError::MissingBody { root });
        }
        if body_files.len() > 1 {
            return Err(BenchError::AmbiguousBody { root, count: body_files.len() });
        }
        let target_body = body_files[0].clone();

        let mut project = Self {
            root,
            project_file,
            spec_files,
            body_files,
            target_body,
            file_digests: BTreeMap::new(),
        };
        for rel in project.files() {
            let content = project.read_file(&rel)?;
            project.file_digests.insert(rel, sha256_hex(content.as_bytes()));
        }
        Ok(project)
    }

    /// Program name: the root directory's file name.
    pub fn name(&self) -> String {
        self.root
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| "project".to_string())
    }

    /// All project-relative file paths: the build file, then specs, then
    /// bodies, each group sorted.
    pub fn files(&self) -> Vec<String> {
        let mut out = vec![self.project_file.clone()];
        out.extend(self.spec_files.iter().cloned());
        out.extend(self.body_files.iter().cloned());
        out
    }

    pub fn project_file(&self) -> &str {
        &self.project_file
    }

    pub fn read_file(&self, rel: &str) -> Result<String, BenchError> {
        fs::read_to_string(self.root.join(rel)).map_err(BenchError::Io)
    }

    pub fn read_sources(&self) -> std::io::Result<BTreeMap<String, String>> {
        let mut out = BTreeMap::new();
        for rel in self.files() {
            out.insert(rel.clone(), fs::read_to_string(self.root.join(&rel))?);
        }
        Ok(out)
    }

    /// Recompute content digests and compare with the recorded ones.
    pub fn verify_digests(&self) -> Result<(), BenchError> {
        for (rel, digest) in &self.file_digests {
            let content = self.read_file(rel)?;
            if sha256_hex(content.as_bytes()) != *digest {
                return Err(BenchError::DigestMismatch {
                    path: self.root.join(rel),
                });
            }
        }
        Ok(())
    }
}

/// The five removal schemata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Schema {
    /// Every `Loop_Invariant`, `Loop_Variant` and `Assert` pragma goes.
    AllPragmas,
    /// The last invariant of every loop that has one.
    LastInvariantAllLoops,
    /// For each loop with two or more invariants: every pragma in that loop.
    AllPragmasOneLoop,
    /// For each loop with an invariant: that loop's last invariant.
    LastInvariantOneLoop,
    /// One case per `Assert` site.
    OneAssert,
}

impl Schema {
    pub const ALL: [Schema; 5] = [
        Schema::AllPragmas,
        Schema::LastInvariantAllLoops,
        Schema::AllPragmasOneLoop,
        Schema::LastInvariantOneLoop,
        Schema::OneAssert,
    ];

    /// Identifier used in case ids and CLI flags.
    pub fn slug(&self) -> &'static str {
        match self {
            Schema::AllPragmas => "all_pragmas",
            Schema::LastInvariantAllLoops => "last_invariant_all_loops",
            Schema::AllPragmasOneLoop => "all_pragmas_one_loop",
            Schema::LastInvariantOneLoop => "last_invariant_one_loop",
            Schema::OneAssert => "one_assert",
        }
    }

    /// Human-readable benchmark name, as used in result tables.
    pub fn display_name(&self) -> &'static str {
        match self {
            Schema::AllPragmas => "All pragmas",
            Schema::LastInvariantAllLoops => "Last invariant all loops",
            Schema::AllPragmasOneLoop => "All pragmas one loop",
            Schema::LastInvariantOneLoop => "Last invariant one loop",
            Schema::OneAssert => "One assert",
        }
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for Schema {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Schema::ALL
            .iter()
            .find(|schema| schema.slug() == s)
            .copied()
            .ok_or_else(|| format!("unknown schema `{s}`"))
    }
}

/// A benchmark case before its baseline prover run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseDraft {
    pub case_id: String,
    pub project: SparkProject,
    pub schema: Schema,
    /// The oracle annotations, with spans in the original body.
    pub removed_sites: Vec<PragmaSite>,
    pub mutated_body: String,
}

/// A benchmark case that passed the inclusion filter: its baseline run has
/// at least one medium and no errors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkCase {
    pub case_id: String,
    pub project: SparkProject,
    pub schema: Schema,
    pub removed_sites: Vec<PragmaSite>,
    pub mutated_body: String,
    pub baseline: ProofReport,
}

impl BenchmarkCase {
    /// The original (verified) target body from disk.
    pub fn original_body(&self) -> Result<String, BenchError> {
        self.project.read_file(&self.project.target_body)
    }

    /// Overlay mapping the target body to the mutated text.
    pub fn overlay(&self) -> BTreeMap<String, String> {
        [(self.project.target_body.clone(), self.mutated_body.clone())]
            .into_iter()
            .collect()
    }
}

fn is_target_kind(kind: PragmaKind) -> bool {
    matches!(kind, PragmaKind::LoopInvariant | PragmaKind::LoopVariant | PragmaKind::Assert)
}

/// Enumerate the removal cases a schema produces for one project.
///
/// Multiplicity: `AllPragmas` and `LastInvariantAllLoops` yield at most one
/// case per program; `AllPragmasOneLoop`, `LastInvariantOneLoop` and
/// `OneAssert` yield one case per qualifying loop or assert occurrence.
pub fn enumerate_cases(project: &SparkProject, schema: Schema) -> Result<Vec<CaseDraft>, BenchError> {
    let original = project.read_file(&project.target_body)?;
    let map = scan_structure(&original)?;

    let removal_sets: Vec<Vec<PragmaSite>> = match schema {
        Schema::AllPragmas => {
            let sites: Vec<PragmaSite> =
                map.sites.iter().filter(|s| is_target_kind(s.kind)).cloned().collect();
            if sites.is_empty() {
                Vec::new()
            } else {
                vec![sites]
            }
        }
        Schema::LastInvariantAllLoops => {
            let mut sites = Vec::new();
            for region in &map.loops {
                if let Some(last) = map.invariants_directly_in(region.index).last() {
                    sites.push((*last).clone());
                }
            }
            if sites.is_empty() {
                Vec::new()
            } else {
                vec![sites]
            }
        }
        Schema::AllPragmasOneLoop => map
            .loops
            .iter()
            .filter(|region| region.invariant_count >= 2)
            .map(|region| {
                map.sites
                    .iter()
                    .filter(|s| is_target_kind(s.kind) && region.span.contains(&s.span))
                    .cloned()
                    .collect()
            })
            .collect(),
        Schema::LastInvariantOneLoop => map
            .loops
            .iter()
            .filter_map(|region| {
                map.invariants_directly_in(region.index)
                    .last()
                    .map(|site| vec![(*site).clone()])
            })
            .collect(),
        Schema::OneAssert => map
            .sites
            .iter()
            .filter(|s| s.kind == PragmaKind::Assert)
            .map(|s| vec![s.clone()])
            .collect(),
    };

    removal_sets
        .into_iter()
        .enumerate()
        .map(|(occurrence, sites)| {
            let mutation = remove_sites(&original, &map, &sites)?;
            Ok(CaseDraft {
                case_id: format!("{}__{}__{occurrence}", project.name(), schema.slug()),
                project: project.clone(),
                schema,
                removed_sites: sites,
                mutated_body: mutation.text,
            })
        })
        .collect()
}

/// Result of the inclusion filter for one draft.
#[derive(Debug)]
pub enum FilterOutcome {
    Accepted(Box<BenchmarkCase>),
    /// The mutant does not belong in the benchmark.
    Rejected { case_id: String, reason: String },
    /// The prover failed (crash, timeout, cassette miss); the case is
    /// reported, never silently dropped.
    Unresolved { case_id: String, error: String },
}

/// Run the baseline prover on a draft's mutated sources and apply the
/// inclusion rule: at least one medium and zero errors.
pub fn filter_case(draft: CaseDraft, prover: &ProverHandle) -> FilterOutcome {
    let overlay: BTreeMap<String, String> =
        [(draft.project.target_body.clone(), draft.mutated_body.clone())]
            .into_iter()
            .collect();
    match prover.run(&draft.project, &overlay) {
        Ok(baseline) => {
            if baseline.count(Severity::Error) > 0 {
                FilterOutcome::Rejected { case_id: draft.case_id, reason: "baseline errors".into() }
            } else if baseline.count(Severity::Medium) == 0 {
                FilterOutcome::Rejected {
                    case_id: draft.case_id,
                    reason: "already fully verified".into(),
                }
            } else {
                FilterOutcome::Accepted(Box::new(BenchmarkCase {
                    case_id: draft.case_id,
                    project: draft.project,
                    schema: draft.schema,
                    removed_sites: draft.removed_sites,
                    mutated_body: draft.mutated_body,
                    baseline,
                }))
            }
        }
        Err(e) => FilterOutcome::Unresolved { case_id: draft.case_id, error: e.to_string() },
    }
}

pub const MANIFEST_VERSION: u32 = 1;

/// The persisted benchmark: a self-describing JSON document with mutated
/// bodies inline, so a run is reproducible even if the source tree drifts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub version: u32,
    pub cases: Vec<BenchmarkCase>,
}

impl Manifest {
    /// Validate and write a manifest.
    pub fn emit(cases: Vec<BenchmarkCase>, out: &Path) -> Result<Manifest, BenchError> {
        let manifest = Manifest { version: MANIFEST_VERSION, cases };
        manifest.validate()?;
        if let Some(parent) = out.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)?;
            }
        }
        let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serialize");
        text.push('\n');
        fs::write(out, text)?;
        Ok(manifest)
    }

    /// Load a manifest and verify the digests of every referenced file.
    pub fn load(path: &Path) -> Result<Manifest, BenchError> {
        let text = fs::read_to_string(path)?;
        let manifest: Manifest = serde_json::from_str(&text)
            .map_err(|source| BenchError::ManifestFormat { path: path.to_path_buf(), source })?;
        manifest.validate()?;
        for case in &manifest.cases {
            case.project.verify_digests()?;
        }
        Ok(manifest)
    }

    pub fn case(&self, case_id: &str) -> Option<&BenchmarkCase> {
        self.cases.iter().find(|c| c.case_id == case_id)
    }

    /// Case counts per schema, in schema declaration order.
    pub fn counts_by_schema(&self) -> BTreeMap<Schema, usize> {
        let mut out = BTreeMap::new();
        for case in &self.cases {
            *out.entry(case.schema).or_insert(0) += 1;
        }
        out
    }

    fn validate(&self) -> Result<(), BenchError> {
        let mut seen = std::collections::BTreeSet::new();
        for case in &self.cases {
            if !seen.insert(&case.case_id) {
                return Err(BenchError::DuplicateCaseId { case_id: case.case_id.clone() });
            }
            let mediums = case.baseline.count(Severity::Medium);
            let errors = case.baseline.count(Severity::Error);
            if mediums == 0 || errors > 0 {
                return Err(BenchError::InclusionRule {
                    case_id: case.case_id.clone(),
                    mediums,
                    errors,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("no .gpr project file under {root}")]
    MissingProjectFile { root: PathBuf },

    #[error("more than one .gpr project file under {root}")]
    AmbiguousProjectFile { root: PathBuf },

    #[error("no .adb implementation file under {root}")]
    MissingBody { root: PathBuf },

    #[error("{count} .adb files under {root}; a single target body is required")]
    AmbiguousBody { root: PathBuf, count: usize },

    #[error("{path} changed since it was scanned (digest mismatch)")]
    DigestMismatch { path: PathBuf },

    #[error("duplicate case id `{case_id}`")]
    DuplicateCaseId { case_id: String },

    #[error("case `{case_id}` violates the inclusion rule ({mediums} mediums, {errors} errors)")]
    InclusionRule { case_id: String, mediums: usize, errors: usize },

    #[error("manifest {path} is not valid: {source}")]
    ManifestFormat {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error(transparent)]
    Scan(#[from] ScanError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prover::{CassetteEntry, ProverCassette, ProverSettings};

    fn corpus() -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/corpus")
    }

    fn double_number() -> SparkProject {
        SparkProject::discover(&corpus().join("double_number")).unwrap()
    }

    #[test]
    fn discover_finds_all_files() {
        let p = double_number();
        assert_eq!(p.project_file, "double_number.gpr");
        assert_eq!(p.spec_files, vec!["double_number.ads"]);
        assert_eq!(p.body_files, vec!["double_number.adb"]);
        assert_eq!(p.target_body, "double_number.adb");
        assert_eq!(p.file_digests.len(), 3);
        p.verify_digests().unwrap();
    }

    #[test]
    fn double_number_schema_multiplicity() {
        let p = double_number();

        let all = enumerate_cases(&p, Schema::AllPragmas).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].removed_sites.len(), 2);

        let last_one = enumerate_cases(&p, Schema::LastInvariantOneLoop).unwrap();
        assert_eq!(last_one.len(), 1);
        assert_eq!(last_one[0].removed_sites.len(), 1);
        let original = p.read_file("double_number.adb").unwrap();
        let site = &last_one[0].removed_sites[0];
        assert_eq!(
            &original[site.span.start..site.span.end],
            "pragma Loop_Invariant (Count < X);"
        );

        assert!(enumerate_cases(&p, Schema::OneAssert).unwrap().is_empty());

        let one_loop = enumerate_cases(&p, Schema::AllPragmasOneLoop).unwrap();
        assert_eq!(one_loop.len(), 1);
        assert_eq!(one_loop[0].removed_sites.len(), 2);

        let all_loops = enumerate_cases(&p, Schema::LastInvariantAllLoops).unwrap();
        assert_eq!(all_loops.len(), 1);
        assert_eq!(all_loops[0].removed_sites.len(), 1);
    }

    #[test]
    fn matrix_sum_schema_multiplicity() {
        let p = SparkProject::discover(&corpus().join("matrix_sum")).unwrap();

        let all = enumerate_cases(&p, Schema::AllPragmas).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].removed_sites.len(), 5);

        let all_loops = enumerate_cases(&p, Schema::LastInvariantAllLoops).unwrap();
        assert_eq!(all_loops.len(), 1);
        assert_eq!(all_loops[0].removed_sites.len(), 2);

        // only the inner loop has two or more invariants; its removal takes
        // the variant with it but leaves the outer invariant alone
        let one_loop = enumerate_cases(&p, Schema::AllPragmasOneLoop).unwrap();
        assert_eq!(one_loop.len(), 1);
        assert_eq!(one_loop[0].removed_sites.len(), 3);
        assert!(one_loop[0]
            .removed_sites
            .iter()
            .any(|s| s.kind == PragmaKind::LoopVariant));

        let last_one = enumerate_cases(&p, Schema::LastInvariantOneLoop).unwrap();
        assert_eq!(last_one.len(), 2);

        let asserts = enumerate_cases(&p, Schema::OneAssert).unwrap();
        assert_eq!(asserts.len(), 1);
    }

    #[test]
    fn linear_search_schema_multiplicity() {
        let p = SparkProject::discover(&corpus().join("linear_search")).unwrap();
        assert_eq!(
            p.spec_files,
            vec!["linear_search.ads".to_string(), "search_types.ads".to_string()]
        );

        assert_eq!(enumerate_cases(&p, Schema::AllPragmas).unwrap().len(), 1);
        assert_eq!(enumerate_cases(&p, Schema::LastInvariantAllLoops).unwrap()[0].removed_sites.len(), 2);
        assert_eq!(enumerate_cases(&p, Schema::AllPragmasOneLoop).unwrap().len(), 1);
        assert_eq!(enumerate_cases(&p, Schema::LastInvariantOneLoop).unwrap().len(), 2);
        assert_eq!(enumerate_cases(&p, Schema::OneAssert).unwrap().len(), 2);
    }

    #[test]
    fn mutated_body_restores_to_original() {
        for name in ["double_number", "matrix_sum", "linear_search"] {
            let p = SparkProject::discover(&corpus().join(name)).unwrap();
            let original = p.read_file(&p.target_body).unwrap();
            let map = scan_structure(&original).unwrap();
            for schema in Schema::ALL {
                for draft in enumerate_cases(&p, schema).unwrap() {
                    let again = remove_sites(&original, &map, &draft.removed_sites).unwrap();
                    assert_eq!(again.text, draft.mutated_body, "{}", draft.case_id);
                    assert_eq!(
                        crate::ada_lex::restore(&again.text, &again.deletions),
                        original,
                        "{}",
                        draft.case_id
                    );
                }
            }
        }
    }

    fn cassette_with(draft: &CaseDraft, raw: &str, dir: &Path) -> ProverHandle {
        let settings = ProverSettings::default();
        let overlay: BTreeMap<String, String> =
            [(draft.project.target_body.clone(), draft.mutated_body.clone())]
                .into_iter()
                .collect();
        let key = crate::prover::request_key_for(&draft.project, &overlay, &settings).unwrap();
        let mut cassette = ProverCassette::default();
        cassette.insert_raw(
            key,
            CassetteEntry { raw_output: raw.to_string(), exit_status: 0, duration_secs: 0.2 },
        );
        let path = dir.join("cassette.json");
        cassette.save(&path).unwrap();
        ProverHandle::replay(path, settings)
    }

    #[test]
    fn filter_accepts_mediums_without_errors() {
        let dir = tempfile::tempdir().unwrap();
        let draft = enumerate_cases(&double_number(), Schema::AllPragmas).unwrap().remove(0);
        let raw = "double_number.adb:6:25: medium: overflow check might fail\n\
                   double_number.ads:5:13: medium: postcondition might fail\n";
        let prover = cassette_with(&draft, raw, dir.path());
        match filter_case(draft, &prover) {
            FilterOutcome::Accepted(case) => {
                assert_eq!(case.baseline.count(Severity::Medium), 2);
            }
            other => panic!("expected acceptance, got {other:?}"),
        }
    }

    #[test]
    fn filter_rejects_fully_verified_mutants() {
        let dir = tempfile::tempdir().unwrap();
        let draft = enumerate_cases(&double_number(), Schema::AllPragmas).unwrap().remove(0);
        let prover = cassette_with(&draft, "double_number.adb:5:10: info: all proved\n", dir.path());
        match filter_case(draft, &prover) {
            FilterOutcome::Rejected { reason, .. } => {
                assert_eq!(reason, "already fully verified");
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn filter_rejects_baselines_with_errors() {
        let dir = tempfile::tempdir().unwrap();
        let draft = enumerate_cases(&double_number(), Schema::AllPragmas).unwrap().remove(0);
        let raw = "double_number.adb:2:4: error: \"Counts\" is undefined\n\
                   double_number.adb:6:25: medium: overflow check might fail\n";
        let prover = cassette_with(&draft, raw, dir.path());
        match filter_case(draft, &prover) {
            FilterOutcome::Rejected { reason, .. } => assert_eq!(reason, "baseline errors"),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn filter_marks_prover_failures_unresolved() {
        let dir = tempfile::tempdir().unwrap();
        let empty = dir.path().join("empty.json");
        ProverCassette::default().save(&empty).unwrap();
        let prover = ProverHandle::replay(empty, ProverSettings::default());
        let draft = enumerate_cases(&double_number(), Schema::AllPragmas).unwrap().remove(0);
        match filter_case(draft, &prover) {
            FilterOutcome::Unresolved { error, .. } => {
                assert!(error.contains("no entry"), "{error}");
            }
            other => panic!("expected unresolved, got {other:?}"),
        }
    }

    #[test]
    fn manifest_roundtrip_and_validation() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("manifest.json");

        // empty manifest is valid
        let empty = Manifest::emit(Vec::new(), &out).unwrap();
        assert_eq!(Manifest::load(&out).unwrap(), empty);

        // a real case round-trips structurally
        let draft = enumerate_cases(&double_number(), Schema::AllPragmas).unwrap().remove(0);
        let baseline = ProofReport::from_raw(
            "double_number.adb:6:25: medium: overflow check might fail\n".into(),
            0,
            0.1,
        );
        let case = BenchmarkCase {
            case_id: draft.case_id.clone(),
            project: draft.project.clone(),
            schema: draft.schema,
            removed_sites: draft.removed_sites.clone(),
            mutated_body: draft.mutated_body.clone(),
            baseline,
        };
        let emitted = Manifest::emit(vec![case.clone()], &out).unwrap();
        let loaded = Manifest::load(&out).unwrap();
        assert_eq!(emitted, loaded);

        // duplicate ids are rejected
        let err = Manifest::emit(vec![case.clone(), case.clone()], &out).unwrap_err();
        assert!(matches!(err, BenchError::DuplicateCaseId { .. }));

        // the inclusion rule is enforced on write
        let mut bad = case;
        bad.baseline = ProofReport::from_raw("fine\n".into(), 0, 0.1);
        let err = Manifest::emit(vec![bad], &out).unwrap_err();
        assert!(matches!(err, BenchError::InclusionRule { .. }));
    }

    #[test]
    fn schema_slug_roundtrip() {
        for schema in Schema::ALL {
            assert_eq!(schema.slug().parse::<Schema>().unwrap(), schema);
        }
        assert!("not_a_schema".parse::<Schema>().is_err());
    }
}
