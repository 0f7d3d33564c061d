use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{abelianization, AbelianInvariants};
use crate::alexander::{alexander_polynomial, LaurentPoly};
use crate::derived::{derived_series_cached, NoCache, SeriesLimits, StageCache};
use crate::fpgroup::{parse_presentation, GroupPresentation};
use crate::zoo::{classify_seifert, make, SeifertBranch, SeifertData};

/// What a corpus entry is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CorpusInput {
    Presentation(String),
    Zoo(ZooRef),
    Seifert(SeifertRef),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZooRef {
    pub zoo: String,
    #[serde(default)]
    pub params: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeifertRef {
    pub seifert: SeifertData,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abelianization: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub doa: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seifert_branch: Option<SeifertBranch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub input: CorpusInput,
    pub expect: Expectations,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path} is not a JSON array: {source}")]
    NotAnArray { path: String, source: serde_json::Error },
    #[error("schema violations:\n{}", .0.join("\n"))]
    Schema(Vec<String>),
}

/// Reads and validates a corpus file. Every malformed entry is reported by
/// name (or position, if it has no name).
pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: display.clone(), source })?;
    parse_corpus(&text).map_err(|e| match e {
        CorpusError::NotAnArray { source, .. } => CorpusError::NotAnArray { path: display, source },
        other => other,
    })
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let raw: Vec<serde_json::Value> =
        serde_json::from_str(text).map_err(|source| CorpusError::NotAnArray { path: "<corpus>".into(), source })?;
    let mut entries = Vec::new();
    let mut problems = Vec::new();
    for (i, v) in raw.into_iter().enumerate() {
        let label = v.get("name").and_then(|n| n.as_str()).map_or(format!("#{i}"), str::to_string);
        match serde_json::from_value::<CorpusEntry>(v) {
            Ok(e) => match e.check_shape() {
                Ok(()) => entries.push(e),
                Err(msg) => problems.push(format!("{label}: {msg}")),
            },
            Err(err) => problems.push(format!("{label}: {err}")),
        }
    }
    if problems.is_empty() {
        Ok(entries)
    } else {
        Err(CorpusError::Schema(problems))
    }
}

impl CorpusEntry {
    fn check_shape(&self) -> Result<(), String> {
        let e = &self.expect;
        let group_keys = e.abelianization.is_some() || e.verdict.is_some() || e.doa.is_some() || e.alexander.is_some();
        match &self.input {
            CorpusInput::Seifert(_) if group_keys => Err("Seifert inputs only support `seifert_branch`".into()),
            CorpusInput::Seifert(_) if e.seifert_branch.is_none() => Err("no expectations".into()),
            CorpusInput::Seifert(_) => Ok(()),
            _ if e.seifert_branch.is_some() => Err("`seifert_branch` needs a Seifert input".into()),
            _ if !group_keys => Err("no expectations".into()),
            _ => {
                if let Some(a) = &e.abelianization {
                    a.parse::<AbelianInvariants>().map_err(|err| err.to_string())?;
                }
                if let Some(a) = &e.alexander {
                    a.parse::<LaurentPoly>().map_err(|err| err.to_string())?;
                }
                Ok(())
            }
        }
    }
}

impl CorpusInput {
    pub fn presentation(&self) -> Result<GroupPresentation, String> {
        match self {
            CorpusInput::Presentation(s) => parse_presentation(s).map_err(|e| e.to_string()),
            CorpusInput::Zoo(z) => make(&z.zoo, &z.params).map_err(|e| e.to_string()),
            CorpusInput::Seifert(_) => Err("Seifert input has no presentation".into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryOutcome {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
    pub elapsed_ms: u64,
}

/// Checks one entry against its expectations.
pub fn verify_entry(entry: &CorpusEntry, lim: &SeriesLimits, cache: &(dyn StageCache + Sync)) -> EntryOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let e = &entry.expect;
    let mut mismatch = |what: &str, expected: &dyn std::fmt::Display, got: &dyn std::fmt::Display| {
        failures.push(format!("{what}: expected {expected}, got {got}"));
    };
    match &entry.input {
        CorpusInput::Seifert(s) => match classify_seifert(&s.seifert) {
            Ok(c) => {
                let want = e.seifert_branch.expect("checked on load");
                if c.branch != want {
                    mismatch("seifert_branch", &format!("{want:?}"), &format!("{:?}", c.branch));
                }
            }
            Err(err) => failures.push(err.to_string()),
        },
        input => match input.presentation() {
            Err(err) => failures.push(err),
            Ok(p) => {
                if let Some(want) = &e.abelianization {
                    let want: AbelianInvariants = want.parse().expect("checked on load");
                    let got = abelianization(&p);
                    if got != want {
                        mismatch("abelianization", &want, &got);
                    }
                }
                if e.verdict.is_some() || e.doa.is_some() {
                    let run = derived_series_cached(&p, lim, cache);
                    if let Some(want) = &e.verdict {
                        if run.verdict.kind() != want {
                            mismatch("verdict", want, &run.verdict.kind());
                        }
                    }
                    if let Some(want) = e.doa {
                        if run.verdict.doa() != Some(want) {
                            let got = run.verdict.doa().map_or("unknown".to_string(), |d| d.to_string());
                            mismatch("doa", &want, &got);
                        }
                    }
                }
                if let Some(want) = &e.alexander {
                    let want: LaurentPoly = want.parse().expect("checked on load");
                    match alexander_polynomial(&p) {
                        Ok(got) if got == want.normalized() => {}
                        Ok(got) => mismatch("alexander", &want, &got),
                        Err(err) => failures.push(format!("alexander: {err}")),
                    }
                }
            }
        },
    }
    EntryOutcome {
        name: entry.name.clone(),
        passed: failures.is_empty(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Verifies all entries in parallel; outcomes keep the corpus order.
pub fn verify_corpus(entries: &[CorpusEntry], lim: &SeriesLimits, cache: Option<&(dyn StageCache + Sync)>) -> Vec<EntryOutcome> {
    let cache = cache.unwrap_or(&NoCache);
    entries.par_iter().map(|e| verify_entry(e, lim, cache)).collect()
}
