//! Argument parsing and subcommand dispatch.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use cdgraph_core::analysis::Analysis;
use cdgraph_core::characters::degree_oracle;
use cdgraph_core::cliffordcd::{clifford_degrees, write_spec};
use cdgraph_core::graphkit::build_graph;
use cdgraph_core::limits;
use cdgraph_core::permgrp::format::write_group;
use cdgraph_core::report::Verdict;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::cache::Cache;
use crate::error::{CliError, CliResult};
use crate::inputs::{known_named, load, load_corpus, sha256_hex, InputId, Source, Subject};
use crate::report::{Envelope, SCHEMA_VERSION, TOOL_VERSION};
use crate::suites::{self, analyze_loaded, uses_corpus, Ctx, Params, SuiteOutcome};

#[derive(Debug, Parser)]
#[command(name = "cdgraph", version, about = "Character degree graphs of finite solvable groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degrees, prime graph, metrics and applicable checks for one input.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        /// Also write the prime graph in DOT format.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite (or `all`).
    Verify {
        /// Suite id: zsigmondy, palfy, diameter, lemmas, classification, clifford,
        /// ramification, semilinear0, semilinear1, ppd, modules, lewis, minimal, all.
        suite: String,
        /// `default` for the bundled corpus, or a manifest path.
        #[arg(long, default_value = "default")]
        corpus: String,
        #[arg(long, default_value_t = 50)]
        a_max: u64,
        #[arg(long, default_value_t = 24)]
        n_max: u32,
        #[arg(long, default_value_t = 4096)]
        qm_max: u64,
        /// Field orders swept exhaustively by semilinear0.
        #[arg(long, value_delimiter = ',')]
        fields: Option<Vec<u64>>,
        /// Field orders sampled by semilinear0.
        #[arg(long, value_delimiter = ',')]
        sample_fields: Option<Vec<u64>>,
        /// Sampled subgroups per stabilizer shape.
        #[arg(long, default_value_t = 2)]
        per_shape: usize,
        /// Field orders swept by semilinear1 and ppd.
        #[arg(long, value_delimiter = ',')]
        small_fields: Option<Vec<u64>>,
        #[arg(long, default_value_t = 15)]
        bound_log_min: u32,
        #[arg(long, default_value_t = 60)]
        bound_log_max: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Build a named group or recipe and write it as a group file (specs as spec files).
    Construct {
        #[command(flatten)]
        source: BuildArgs,
        #[arg(long, short, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Print every named scale bound.
    Limits {
        #[arg(long, short, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Write the prime graph of an input in DOT format.
    ExportDot {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, short, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// Bundled example id.
    #[arg(long, value_name = "ID")]
    named: Option<String>,
    /// Group file: `degree N`, then one generator per line in cycle notation.
    #[arg(long, value_name = "FILE")]
    group: Option<PathBuf>,
    /// Construction recipe file.
    #[arg(long, value_name = "FILE")]
    recipe: Option<PathBuf>,
    /// Clifford spec file.
    #[arg(long, value_name = "FILE")]
    spec: Option<PathBuf>,
}

impl SourceArgs {
    fn source(&self) -> Source {
        match (&self.named, &self.group, &self.recipe, &self.spec) {
            (Some(n), ..) => Source::Named(n.clone()),
            (_, Some(g), ..) => Source::Group(g.clone()),
            (_, _, Some(r), _) => Source::Recipe(r.clone()),
            (.., Some(s)) => Source::Spec(s.clone()),
            _ => unreachable!("clap enforces one source"),
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct BuildArgs {
    #[arg(long, value_name = "ID")]
    named: Option<String>,
    #[arg(long, value_name = "FILE")]
    recipe: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Seed for randomized searches.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for corpus-level parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Include per-stage timings (makes reports run-dependent).
    #[arg(long)]
    timings: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(long, short, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// Result of `analyze`.
#[derive(Debug, Serialize)]
pub struct AnalyzeResult {
    #[serde(flatten)]
    pub analysis: Analysis,
}

#[derive(Debug, Serialize)]
pub struct VerifyResult {
    pub params: Params,
    pub suites: Vec<SuiteOutcome>,
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(fail) => ExitCode::from(u8::from(fail)),
        Err(e) => {
            eprintln!("cdgraph: error: {e}");
            if let CliError::Core(cdgraph_core::Error::Unknown(_)) = e {
                eprintln!("known ids: {}", known_named().join(", "));
            }
            ExitCode::from(2)
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn set_jobs(jobs: Option<usize>) -> CliResult<()> {
    if let Some(n) = jobs {
        if n == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

/// Returns whether any verdict failed.
pub fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Analyze { source, dot, common } => {
            set_jobs(common.jobs)?;
            let cache = Cache::from_env()?;
            let loaded = load(&source.source())?;
            let (analysis, timings) = analyze_loaded(&loaded, cache.as_ref())?;
            if let Some(path) = &dot {
                std::fs::write(path, analysis.graph.to_dot(&loaded.id.name)).map_err(|e| CliError::io(path, e))?;
            }
            let verdict = analysis.verdict;
            let env = Envelope::new("analyze", loaded.id, common.seed, verdict, AnalyzeResult { analysis }).with_timings(common.timings.then_some(timings));
            emit(common.out.as_ref(), &env.render())?;
            Ok(verdict.is_fail())
        }
        Command::Verify { suite, corpus, a_max, n_max, qm_max, fields, sample_fields, per_shape, small_fields, bound_log_min, bound_log_max, common } => {
            set_jobs(common.jobs)?;
            let defaults = Params::default();
            let params = Params {
                a_max,
                n_max,
                qm_max,
                fields: fields.unwrap_or(defaults.fields),
                sample_fields: sample_fields.unwrap_or(defaults.sample_fields),
                per_shape,
                small_fields: small_fields.unwrap_or(defaults.small_fields),
                bound_log_min,
                bound_log_max,
            };
            if suite != "all" && !suites::SUITES.contains(&suite.as_str()) {
                return Err(CliError::UnknownSuite(suite, format!("{}, all", suites::SUITES.join(", "))));
            }
            let cache = Cache::from_env()?;
            let corpus = if uses_corpus(&suite) { Some(load_corpus(&corpus)?) } else { None };
            let params_json = serde_json::to_string(&params).expect("serializable");
            let input = match &corpus {
                Some(c) => InputId { kind: "corpus", name: c.id.name.clone(), sha256: sha256_hex(format!("{}\n{params_json}", c.id.sha256).as_bytes()) },
                None => InputId { kind: "params", name: suite.clone(), sha256: sha256_hex(params_json.as_bytes()) },
            };
            let ctx = Ctx::new(params, common.seed, corpus.as_ref(), cache.as_ref());
            let (outcomes, timings) = suites::run(&suite, &ctx)?;
            let verdict = Verdict::combine(outcomes.iter().map(|o| o.verdict));
            let env = Envelope::new(&format!("verify {suite}"), input, common.seed, verdict, VerifyResult { params: ctx.params.clone(), suites: outcomes })
                .with_timings(common.timings.then_some(timings));
            emit(common.out.as_ref(), &env.render())?;
            Ok(verdict.is_fail())
        }
        Command::Construct { source, out } => {
            let src = match (source.named, source.recipe) {
                (Some(n), _) => Source::Named(n),
                (_, Some(r)) => Source::Recipe(r),
                _ => unreachable!("clap enforces one source"),
            };
            let loaded = load(&src)?;
            let text = match &loaded.subject {
                Subject::Group { group, .. } => {
                    format!("# {} (order {})\n{}", loaded.id.name, group.size()?, write_group(group))
                }
                Subject::Spec(s) => write_spec(s),
            };
            emit(out.as_ref(), &text)?;
            Ok(false)
        }
        Command::Limits { out } => {
            let items: Vec<_> = limits::all().into_iter().map(|(name, value, description)| json!({"name": name, "value": value.to_string(), "description": description})).collect();
            let body = json!({"schema_version": SCHEMA_VERSION, "tool": "cdgraph", "tool_version": TOOL_VERSION, "limits": items});
            emit(out.as_ref(), &format!("{}\n", serde_json::to_string_pretty(&body).expect("serializable")))?;
            Ok(false)
        }
        Command::ExportDot { source, out } => {
            let loaded = load(&source.source())?;
            let cache = Cache::from_env()?;
            let cd = match &loaded.subject {
                Subject::Spec(s) => clifford_degrees(s)?,
                Subject::Group { group, .. } => match cache.as_ref().and_then(|c| c.get(group)) {
                    Some(cd) => cd,
                    None => {
                        let cd = degree_oracle(group)?;
                        if let Some(c) = &cache {
                            c.put(group, &cd)?;
                        }
                        cd
                    }
                },
            };
            let graph = build_graph(&cd);
            emit(out.as_ref(), &graph.to_dot(&loaded.id.name))?;
            Ok(false)
        }
    }
}
