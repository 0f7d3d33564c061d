//! Command-line interface: `abelianize`, `series`, `alexander`,
//! `classify-seifert`, `zoo` and `verify-corpus`.
//!
//! Exit codes: 0 on success, 1 when a corpus entry fails, 2 on invalid
//! input, 3 for an inconclusive series under `--strict`.

mod cache;
mod corpus;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::abelian::abelianization;
use crate::alexander::knot_adorability_report;
use crate::cosets::EnumerationCaps;
use crate::derived::{derived_series_cached, NoCache, SeriesLimits, SeriesVerdict, StageCache, StageReport};
use crate::fpgroup::{parse_presentation, GroupPresentation, SimplificationCaps};
use crate::zoo::{classify_seifert, make, SeifertBranch, SeifertData, FAMILIES};

pub use cache::DirCache;
pub use corpus::{
    load_corpus, parse_corpus, verify_corpus, verify_entry, CorpusEntry, CorpusError, CorpusInput, EntryOutcome,
    Expectations, SeifertRef, ZooRef,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "adorn", version, about = "Derived series and adorability of finitely presented groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print G/[G,G] as Z^r ⊕ Z/d1 ⊕ …
    Abelianize {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run the derived series and report a verdict.
    Series {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        json: bool,
        /// Exit with status 3 when the verdict is inconclusive.
        #[arg(long)]
        strict: bool,
    },
    /// Alexander polynomial and knot-group adorability.
    Alexander {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Classify a Seifert fibered space from its base orbifold.
    ClassifySeifert {
        #[arg(long)]
        genus: usize,
        /// Comma-separated cone indices.
        #[arg(long, value_delimiter = ',')]
        cones: Vec<usize>,
        #[arg(long)]
        boundary: bool,
        #[arg(long)]
        nonorientable: bool,
        #[arg(long)]
        json: bool,
    },
    /// List families, or print one family member.
    Zoo {
        family: Option<String>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Check corpus files against their expected values.
    VerifyCorpus {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Presentation such as '< a, b | a^2, b^3 >'.
    presentation: Option<String>,
    /// Family name from the zoo.
    #[arg(long, conflicts_with_all = ["presentation", "file"])]
    zoo: Option<String>,
    /// Comma-separated zoo parameters.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, requires = "zoo")]
    params: Vec<i64>,
    /// Read the presentation from a file.
    #[arg(long, conflicts_with = "presentation")]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LimitArgs {
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    max_depth: u64,
    #[arg(long, default_value_t = 20_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_cosets: u64,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    max_gens: u64,
    #[arg(long, default_value_t = 65_536, value_parser = clap::value_parser!(u64).range(1..))]
    max_length: u64,
    /// Wall-clock budget in seconds.
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    timeout: u64,
}

impl LimitArgs {
    fn limits(&self) -> SeriesLimits {
        let d = SeriesLimits::default();
        SeriesLimits {
            max_depth: self.max_depth as usize,
            enumeration: EnumerationCaps { max_cosets: self.max_cosets as usize, ..d.enumeration },
            simplification: SimplificationCaps {
                max_generators: self.max_gens as usize,
                max_total_relator_length: self.max_length as usize,
                ..d.simplification
            },
            timeout_secs: self.timeout,
        }
    }
}

/// Machine-readable report printed by `--json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub command: String,
    pub limits: Option<SeriesLimits>,
    pub stages: Vec<StageReport>,
    pub verdict: VerdictSummary,
    pub timings_ms: Timings,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictSummary {
    pub kind: String,
    pub detail: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub total: u64,
    pub stages: Vec<u64>,
}

struct Resolved {
    label: String,
    presentation: GroupPresentation,
}

fn resolve(input: &InputArgs) -> Result<Resolved, String> {
    if let Some(name) = &input.zoo {
        let p = make(name, &input.params).map_err(|e| e.to_string())?;
        return Ok(Resolved { label: format!("zoo:{}", p.name()), presentation: p });
    }
    let text = match (&input.presentation, &input.file) {
        (Some(t), None) => t.clone(),
        (None, Some(path)) => {
            std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
        }
        _ => return Err("give a presentation, --file or --zoo".into()),
    };
    let p = parse_presentation(&text).map_err(|e| match e.position() {
        Some(pos) => format!("{e}\n  {}\n  {}^", text.trim_end(), " ".repeat(pos)),
        None => e.to_string(),
    })?;
    Ok(Resolved { label: text.trim().to_string(), presentation: p })
}

/// Runs the CLI on `args` (including the program name), writing to `out`
/// and `err`, and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

enum Failure {
    Invalid(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn invalid(msg: impl ToString) -> Failure {
    Failure::Invalid(msg.to_string())
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.into()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn elapsed(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let start = Instant::now();
    match cmd {
        Command::Abelianize { input, json } => {
            let r = resolve(&input).map_err(invalid)?;
            let inv = abelianization(&r.presentation);
            if json {
                print_json(out, &Report {
                    input: r.label,
                    command: "abelianize".into(),
                    limits: None,
                    stages: vec![],
                    verdict: VerdictSummary {
                        kind: "Abelianization".into(),
                        detail: serde_json::json!({ "invariants": inv.to_string(), "rank": inv.rank, "torsion": inv }),
                    },
                    timings_ms: Timings { total: elapsed(start), stages: vec![] },
                })?;
            } else {
                writeln!(out, "{inv}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Series { input, limits, json, strict } => {
            let r = resolve(&input).map_err(invalid)?;
            let lim = limits.limits();
            let dir = DirCache::from_env();
            let cache: &dyn StageCache = match &dir {
                Some(d) => d,
                None => &NoCache,
            };
            let run = derived_series_cached(&r.presentation, &lim, cache);
            if json {
                print_json(out, &Report {
                    input: r.label,
                    command: "series".into(),
                    limits: Some(lim),
                    stages: run.stages.clone(),
                    verdict: summarize_verdict(&run.verdict),
                    timings_ms: Timings { total: elapsed(start), stages: run.stage_timings_ms.clone() },
                })?;
            } else {
                for s in &run.stages {
                    let st = &s.presentation_stats;
                    let flags: Vec<String> = s.flags.iter().map(|f| format!("{f:?}")).collect();
                    writeln!(
                        out,
                        "stage {}: {:<20} gens={} rels={} len={}{}",
                        s.depth,
                        s.invariants.to_string(),
                        st.n_generators,
                        st.n_relators,
                        st.total_length,
                        if flags.is_empty() { String::new() } else { format!("  [{}]", flags.join(", ")) }
                    )?;
                }
                writeln!(out, "verdict: {}", describe_verdict(&run.verdict))?;
            }
            let inconclusive = matches!(run.verdict, SeriesVerdict::Inconclusive { .. });
            Ok(if strict && inconclusive { EXIT_INCONCLUSIVE } else { EXIT_OK })
        }
        Command::Alexander { input, json } => {
            let r = resolve(&input).map_err(invalid)?;
            let report = knot_adorability_report(&r.presentation).map_err(invalid)?;
            if json {
                print_json(out, &Report {
                    input: r.label,
                    command: "alexander".into(),
                    limits: None,
                    stages: vec![],
                    verdict: VerdictSummary {
                        kind: format!("{:?}", report.verdict),
                        detail: serde_json::to_value(&report).expect("report serializes"),
                    },
                    timings_ms: Timings { total: elapsed(start), stages: vec![] },
                })?;
            } else {
                writeln!(out, "Δ = {}, {:?}", report.alexander, report.verdict)?;
                writeln!(out, "rank H¹/H² = {} (cited)", report.derived_quotient_rank)?;
                for line in report.diagnostics.iter().chain(&report.notes) {
                    writeln!(out, "note: {line}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::ClassifySeifert { genus, cones, boundary, nonorientable, json } => {
            let data = SeifertData { base_genus: genus, orientable_base: !nonorientable, cone_indices: cones, has_boundary: boundary };
            let c = classify_seifert(&data).map_err(invalid)?;
            if json {
                print_json(out, &Report {
                    input: serde_json::to_string(&data).expect("serializes"),
                    command: "classify-seifert".into(),
                    limits: None,
                    stages: vec![],
                    verdict: VerdictSummary {
                        kind: format!("{:?}", c.branch),
                        detail: serde_json::to_value(&c).expect("serializes"),
                    },
                    timings_ms: Timings { total: elapsed(start), stages: vec![] },
                })?;
            } else {
                writeln!(out, "{:?} ({})", c.branch, branch_gloss(c.branch))?;
                for step in &c.trace {
                    writeln!(out, "  - {step}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Zoo { family: None, json, .. } => {
            if json {
                let list: Vec<_> = FAMILIES
                    .iter()
                    .map(|f| serde_json::json!({ "name": f.name, "params": f.params, "summary": f.summary }))
                    .collect();
                print_json(out, &list)?;
            } else {
                for f in FAMILIES {
                    let sig = if f.params.is_empty() { f.name.to_string() } else { format!("{}({})", f.name, f.params) };
                    writeln!(out, "{sig:<28} {}", f.summary)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Zoo { family: Some(name), params, json } => {
            let p = make(&name, &params).map_err(invalid)?;
            if json {
                print_json(out, &p)?;
            } else {
                writeln!(out, "{p}")?;
            }
            Ok(EXIT_OK)
        }
        Command::VerifyCorpus { paths, limits, json } => {
            let lim = limits.limits();
            let mut entries = Vec::new();
            for path in &paths {
                entries.extend(load_corpus(path).map_err(invalid)?);
            }
            let dir = DirCache::from_env();
            let outcomes = verify_corpus(&entries, &lim, dir.as_ref().map(|d| d as &(dyn StageCache + Sync)));
            let passed = outcomes.iter().filter(|o| o.passed).count();
            if json {
                print_json(out, &outcomes)?;
            } else {
                for o in &outcomes {
                    let status = if o.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{status}  {:<36} {:>6} ms", o.name, o.elapsed_ms)?;
                    for f in &o.failures {
                        writeln!(out, "      {f}")?;
                    }
                }
                writeln!(out, "{passed}/{} entries passed", outcomes.len())?;
            }
            Ok(if passed == outcomes.len() { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

fn summarize_verdict(v: &SeriesVerdict) -> VerdictSummary {
    let mut detail = serde_json::to_value(v).expect("verdict serializes");
    if let Some(obj) = detail.as_object_mut() {
        obj.remove("kind");
    }
    VerdictSummary { kind: v.kind().into(), detail }
}

fn describe_verdict(v: &SeriesVerdict) -> String {
    use crate::derived::NonAdorableReason;
    match v {
        SeriesVerdict::AdorableCertified { doa } => format!("AdorableCertified doa={doa}"),
        SeriesVerdict::NonAdorableCertified(NonAdorableReason::FreeRankAtLeast2 { stage, rank }) => {
            format!("NonAdorableCertified (stage {stage} is free of rank {rank})")
        }
        SeriesVerdict::NonAdorableCertified(NonAdorableReason::StructuralPredicate { name }) => {
            format!("NonAdorableCertified ({name})")
        }
        SeriesVerdict::HaltedInfiniteAbelianization { depth, rank } => {
            format!("HaltedInfiniteAbelianization at depth {depth} (free rank {rank})")
        }
        SeriesVerdict::Inconclusive { depth, limits_hit } => format!("Inconclusive at depth {depth} (limits hit: {limits_hit:?})"),
    }
}

fn branch_gloss(b: SeifertBranch) -> &'static str {
    match b {
        SeifertBranch::FiniteDerived => "G^i is finite for some i ≤ 2",
        SeifertBranch::Solvable => "solvable",
        SeifertBranch::NonAdorable => "not adorable",
        SeifertBranch::Perfect => "homology sphere case",
        SeifertBranch::ReaderCase => "undecided five-cone case",
    }
}
