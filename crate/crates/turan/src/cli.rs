//! Argument parsing and command dispatch.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use turan_core::bounds::{bounds_report, default_omega0, ratio_floors, ratio_trend, ParamTriple};
use turan_core::counting::{count_cliques, count_copies_rooted};
use turan_core::freeness::{check_constraints, ConstraintSet};
use turan_core::localization::localized_report;
use turan_core::search::{ExtremalJob, SearchLimits};
use turan_core::{Graph, PatternSpec, VertexSet};

use crate::error::{Error, Result};
use crate::examples::reproduce_examples;
use crate::family::{self, Family};
use crate::io::{read_g6_file, write_file, write_g6_file};
use crate::manifest::{hash_inputs, manifest_path, sha256_hex, ReplayReport, RunManifest};
use crate::parallel::{par_count, par_search, pool};
use crate::report::{
    to_json, BoundsJson, CliqueCount, ConstructReport, CountReport, FreeReport, GraphSummary, LocalJson, Omega0Json,
    Render, SearchJson,
};
use crate::verify::{verify_criterion, verify_suite, Level, Suite, VerifyReport, DEFAULT_SEED};

#[derive(Parser, Debug, Clone)]
#[command(
    name = "turan",
    version,
    about = "Generalized Turán numbers with bounded clique number and bounded common neighbourhoods"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to FILE and a replay manifest to FILE.manifest.json.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Worker threads (default: one per core). Results do not depend on it.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    /// Seed for random graphs and corpora.
    #[arg(long, global = true, value_name = "S", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Read host graphs from a graph6 file instead of --graph.
    #[arg(long, global = true, value_name = "FILE")]
    pub g6: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Build a graph from a description such as `T4(6)`, `6*CT4(17,5)` or `L(1,5,4)`.
    Construct { family: String },
    /// Count copies of a pattern and cliques of each size.
    Count {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, visible_alias = "H")]
        pattern: Option<String>,
        /// Only report k^t for this t.
        #[arg(long, value_name = "t")]
        cliques: Option<usize>,
        /// Count copies in which every listed vertex is dominating.
        #[arg(long, value_delimiter = ',', value_name = "c")]
        rooted: Option<Vec<usize>>,
    },
    /// Check membership in {K_u ∨ I_{Δ+1}, K_{ω+1}}-free graphs.
    VerifyFree {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, default_value_t = 1)]
        u: usize,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        omega: Option<usize>,
    },
    /// Lower and upper bounds on the density of a pattern per u-clique.
    Bounds {
        #[arg(long = "H", visible_alias = "pattern")]
        h: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        omega: usize,
        /// Every ω in u+1..=OMEGA and Δ in ω..=DELTA.
        #[arg(long)]
        grid: bool,
        /// Add the lower/upper trend for Δ up to this value.
        #[arg(long, value_name = "DMAX")]
        trend: Option<usize>,
    },
    /// Evaluate the localized weight inequality on a host graph.
    Localize {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long = "H", visible_alias = "pattern")]
        h: String,
        #[arg(long)]
        u: usize,
        /// Hypothesis parameter; defaults to 1 for complete or edgeless patterns, 300·v(H)^9 otherwise.
        #[arg(long)]
        omega0: Option<u128>,
        /// Include the per-copy weight table.
        #[arg(long)]
        per_copy: bool,
    },
    /// Exhaustive extremal search over non-isomorphic graphs.
    Search {
        /// Fix the number of vertices.
        #[arg(long, conflicts_with = "p", required_unless_present = "p")]
        n: Option<usize>,
        /// Fix the number of u-cliques.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 1)]
        u: usize,
        #[arg(long = "H", visible_alias = "pattern")]
        h: String,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        omega: Option<usize>,
        /// Vertex cap when --p is given.
        #[arg(long)]
        ncap: Option<usize>,
        /// Largest order the generator may reach.
        #[arg(long, default_value_t = turan_core::search::DEFAULT_CAP)]
        cap: usize,
        /// Write the extremal graphs to a graph6 file.
        #[arg(long, value_name = "FILE")]
        dump: Option<PathBuf>,
    },
    /// Rebuild the 42-vertex crossover example.
    ReproduceExamples,
    /// Run the verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
        /// Run one criterion only.
        #[arg(long, value_name = "ID")]
        criterion: Option<u8>,
    },
    /// Re-run the command recorded in a manifest and compare its output.
    Replay { manifest: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Construct { .. } => "construct",
            Command::Count { .. } => "count",
            Command::VerifyFree { .. } => "verify-free",
            Command::Bounds { .. } => "bounds",
            Command::Localize { .. } => "localize",
            Command::Search { .. } => "search",
            Command::ReproduceExamples => "reproduce-examples",
            Command::Verify { .. } => "verify",
            Command::Replay { .. } => "replay",
        }
    }
}

/// A finished command: both renderings plus what the manifest needs.
pub struct Output {
    pub command: &'static str,
    pub parameters: Value,
    pub json: String,
    pub text: String,
    pub inputs: Vec<PathBuf>,
    /// `false` when a check failed; the process exits with status 1.
    pub ok: bool,
    /// Extra graph6 file requested by the command.
    pub dump: Option<(PathBuf, Vec<Graph>)>,
}

impl Output {
    fn new<T: Serialize + Render>(command: &'static str, parameters: Value, result: &T) -> Result<Output> {
        Ok(Output {
            command,
            json: to_json(command, &parameters, result)?,
            text: result.render(),
            parameters,
            inputs: Vec::new(),
            ok: true,
            dump: None,
        })
    }

    fn list<T: Serialize + Render>(command: &'static str, parameters: Value, items: &[T]) -> Result<Output> {
        let text = items.iter().map(Render::render).collect::<Vec<_>>().join("\n");
        Ok(Output {
            command,
            json: to_json(command, &parameters, &items)?,
            text,
            parameters,
            inputs: Vec::new(),
            ok: true,
            dump: None,
        })
    }

    pub fn bytes(&self, json: bool) -> &[u8] {
        if json {
            self.json.as_bytes()
        } else {
            self.text.as_bytes()
        }
    }
}

struct Resolved {
    graphs: Vec<(String, Graph)>,
    parameter: Value,
    inputs: Vec<PathBuf>,
}

fn file_input(f: &Family) -> Vec<PathBuf> {
    match f {
        Family::File { path } => vec![PathBuf::from(path)],
        Family::Copies { of, .. } => file_input(of),
        Family::Union { parts } => parts.iter().flat_map(file_input).collect(),
        Family::Join { left, right } => [file_input(left), file_input(right)].concat(),
        _ => Vec::new(),
    }
}

fn one(description: &str, seed: u64) -> Result<Resolved> {
    let fam = family::parse(description)?;
    let g = fam.build(seed)?;
    Ok(Resolved {
        graphs: vec![(fam.to_string(), g)],
        parameter: serde_json::to_value(&fam)?,
        inputs: file_input(&fam),
    })
}

fn hosts(global: &Global, graph: &Option<String>) -> Result<Resolved> {
    match (&global.g6, graph) {
        (Some(_), Some(_)) => Err(Error::Usage("give either --graph or --g6, not both".into())),
        (None, None) => Err(Error::Usage("a host graph is required (--graph or --g6)".into())),
        (None, Some(d)) => one(d, global.seed),
        (Some(path), None) => {
            let graphs = read_g6_file(path)?;
            let name = path.display().to_string();
            Ok(Resolved {
                graphs: graphs.into_iter().enumerate().map(|(i, g)| (format!("{name}#{i}"), g)).collect(),
                parameter: json!({ "g6_file": name }),
                inputs: vec![path.clone()],
            })
        }
    }
}

fn pattern(description: &str, seed: u64) -> Result<(String, PatternSpec, Value, Vec<PathBuf>)> {
    let mut r = one(description, seed)?;
    let (name, g) = r.graphs.pop().expect("one graph");
    Ok((name, PatternSpec::new(g), r.parameter, r.inputs))
}

fn no_g6(global: &Global, command: &str) -> Result<()> {
    match global.g6 {
        Some(_) => Err(Error::Usage(format!("{command} does not read --g6"))),
        None => Ok(()),
    }
}

/// Runs `cli` on a pool sized by `--threads`.
pub fn execute(cli: &Cli) -> Result<Output> {
    pool(cli.global.threads)?.install(|| dispatch(cli))
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    let name = cli.command.name();
    match &cli.command {
        Command::Construct { family: d } => {
            no_g6(g, name)?;
            let r = one(d, g.seed)?;
            let (desc, graph) = &r.graphs[0];
            let params = json!({ "family": r.parameter, "seed": g.seed.to_string() });
            let mut out = Output::new(name, params, &ConstructReport::new(desc, graph))?;
            out.inputs = r.inputs;
            Ok(out)
        }
        Command::Count { graph, pattern: pat, cliques, rooted } => {
            let r = hosts(g, graph)?;
            let mut inputs = r.inputs;
            let pat = match pat {
                Some(d) => {
                    let p = pattern(d, g.seed)?;
                    inputs.extend(p.3.iter().cloned());
                    Some(p)
                }
                None => None,
            };
            if rooted.is_some() && pat.is_none() {
                return Err(Error::Usage("--rooted needs --pattern".into()));
            }
            let mut items = Vec::new();
            for (desc, host) in &r.graphs {
                let copies = match (&pat, rooted) {
                    (Some((_, h, _, _)), Some(c)) => {
                        let set: VertexSet = c.iter().copied().collect();
                        Some(count_copies_rooted(h, host, &set, c.len())?)
                    }
                    (Some((_, h, _, _)), None) => Some(par_count(h, host)),
                    (None, _) => None,
                };
                let sizes: Vec<usize> = match cliques {
                    Some(t) => vec![*t],
                    None => (0..=turan_core::freeness::clique_number(host)).collect(),
                };
                items.push(CountReport {
                    host: GraphSummary::new(desc, host),
                    pattern: pat.as_ref().map(|(n, h, _, _)| GraphSummary::new(n, h.pattern())),
                    copies: copies.map(|c| c.to_string()),
                    cliques: sizes
                        .into_iter()
                        .map(|t| CliqueCount { size: t, count: count_cliques(host, t).to_string() })
                        .collect(),
                });
            }
            let params = json!({
                "graph": r.parameter,
                "pattern": pat.as_ref().map(|p| p.2.clone()),
                "cliques": cliques,
                "rooted": rooted,
                "seed": g.seed.to_string(),
            });
            let mut out = Output::list(name, params, &items)?;
            out.inputs = inputs;
            Ok(out)
        }
        Command::VerifyFree { graph, u, delta, omega } => {
            let r = hosts(g, graph)?;
            let cs = ConstraintSet::new(*u, *delta, *omega);
            let items: Vec<FreeReport> = r
                .graphs
                .iter()
                .map(|(desc, host)| {
                    FreeReport::new(GraphSummary::new(desc, host), *u, *delta, *omega, &check_constraints(host, &cs))
                })
                .collect();
            let params = json!({
                "graph": r.parameter, "u": u, "delta": delta, "omega": omega, "seed": g.seed.to_string(),
            });
            let mut out = Output::list(name, params, &items)?;
            out.inputs = r.inputs;
            Ok(out)
        }
        Command::Bounds { h, u, delta, omega, grid, trend } => {
            no_g6(g, name)?;
            let (pname, spec, pparam, inputs) = pattern(h, g.seed)?;
            let triples: Vec<(usize, usize)> = if *grid {
                (*u + 1..=*omega).flat_map(|w| (w..=*delta).map(move |d| (w, d))).collect()
            } else {
                vec![(*omega, *delta)]
            };
            let o0 = Omega0Json::from_default(&default_omega0(spec.pattern()));
            let mut items = Vec::new();
            for (w, d) in triples {
                let params = ParamTriple::new(*u, d, w)?;
                let report = bounds_report(&spec, &params)?;
                let (exact, product) = ratio_floors(&spec, &params)?;
                let points = match trend {
                    Some(dmax) => ratio_trend(&spec, *u, w, *dmax)?,
                    None => Vec::new(),
                };
                items.push(BoundsJson::new(
                    GraphSummary::new(&pname, spec.pattern()),
                    &report,
                    (exact.as_ref(), &product),
                    o0.clone(),
                    &points,
                ));
            }
            let params = json!({
                "pattern": pparam, "u": u, "delta": delta, "omega": omega, "grid": grid, "trend": trend,
            });
            let mut out = Output::list(name, params, &items)?;
            out.inputs = inputs;
            Ok(out)
        }
        Command::Localize { graph, h, u, omega0, per_copy } => {
            let r = hosts(g, graph)?;
            let (pname, spec, pparam, pinputs) = pattern(h, g.seed)?;
            let omega0_value = omega0.unwrap_or_else(|| default_omega0(spec.pattern()).value);
            let mut items = Vec::new();
            for (desc, host) in &r.graphs {
                let report = localized_report(host, &spec, *u, omega0_value)?;
                let mut j = LocalJson::new(
                    GraphSummary::new(desc, host),
                    GraphSummary::new(&pname, spec.pattern()),
                    *u,
                    &report,
                );
                if !per_copy {
                    j.copies.clear();
                }
                items.push(j);
            }
            let params = json!({
                "graph": r.parameter,
                "pattern": pparam,
                "u": u,
                "omega0": omega0_value.to_string(),
                "per_copy": per_copy,
                "seed": g.seed.to_string(),
            });
            let mut out = Output::list(name, params, &items)?;
            out.inputs = [r.inputs, pinputs].concat();
            Ok(out)
        }
        Command::Search { n, p, u, h, delta, omega, ncap, cap, dump } => {
            no_g6(g, name)?;
            let (pname, spec, pparam, inputs) = pattern(h, g.seed)?;
            let cs = ConstraintSet::new(*u, *delta, *omega);
            let limits = SearchLimits::with_cap(*cap)?;
            let job = match (n, p) {
                (Some(n), None) => ExtremalJob::order(*n, &spec, &cs),
                (None, Some(p)) => ExtremalJob::cliques(*p, *u, &spec, &cs, *ncap)?,
                _ => return Err(Error::Usage("give exactly one of --n and --p".into())),
            };
            let outcome = par_search(&job, &limits)?;
            let report = SearchJson::new(GraphSummary::new(&pname, spec.pattern()), &outcome);
            let params = json!({
                "pattern": pparam, "n": n, "p": p, "u": u, "delta": delta, "omega": omega,
                "ncap": ncap, "cap": cap,
            });
            let mut out = Output::new(name, params, &report)?;
            out.inputs = inputs;
            if let Some(path) = dump {
                let graphs = outcome
                    .argmax
                    .iter()
                    .map(|s| turan_core::graph6::decode(s))
                    .collect::<turan_core::Result<Vec<_>>>()?;
                out.dump = Some((path.clone(), graphs));
            }
            Ok(out)
        }
        Command::ReproduceExamples => {
            no_g6(g, name)?;
            let report = reproduce_examples()?;
            let mut out = Output::new(name, json!({}), &report)?;
            out.ok = report.passed;
            Ok(out)
        }
        Command::Verify { level, criterion } => {
            no_g6(g, name)?;
            let suite = Suite { seed: g.seed, ..Suite::new(*level) };
            let report = match criterion {
                Some(id) => {
                    let c = verify_criterion(&suite, *id)
                        .ok_or_else(|| Error::Usage(format!("no criterion {id}; criteria are numbered 1 to 10")))?;
                    VerifyReport { level: *level, seed: g.seed.to_string(), passed: c.passed, criteria: vec![c] }
                }
                None => verify_suite(&suite),
            };
            let params = json!({ "level": level, "criterion": criterion, "seed": g.seed.to_string() });
            let mut out = Output::new(name, params, &report)?;
            out.ok = report.passed;
            Ok(out)
        }
        Command::Replay { manifest } => replay(manifest),
    }
}

fn replay(path: &Path) -> Result<Output> {
    let m = RunManifest::read(path)?;
    let argv = std::iter::once("turan".to_string()).chain(m.argv.iter().cloned());
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::Usage(format!("manifest arguments: {e}")))?;
    if matches!(cli.command, Command::Replay { .. }) {
        return Err(Error::Usage("a manifest cannot record a replay".into()));
    }
    let rerun = execute(&cli)?;
    let changed_inputs =
        hash_inputs(&rerun.inputs)?.into_iter().filter(|now| !m.inputs.contains(now)).map(|now| now.path).collect();
    let actual = sha256_hex(rerun.bytes(cli.global.json));
    let report = ReplayReport {
        manifest: path.display().to_string(),
        command: m.command.clone(),
        code_version_matches: m.code_version == env!("CARGO_PKG_VERSION"),
        changed_inputs,
        identical: actual == m.output_sha256,
        expected_sha256: m.output_sha256.clone(),
        actual_sha256: actual,
    };
    let params = json!({ "manifest": path.display().to_string() });
    let mut out = Output::new("replay", params, &report)?;
    out.ok = report.identical;
    Ok(out)
}

impl Render for ReplayReport {
    fn render(&self) -> String {
        format!(
            "manifest      {}\ncommand       {}\nexpected      {}\nactual        {}\nidentical     {}\nchanged input {:?}\n",
            self.manifest, self.command, self.expected_sha256, self.actual_sha256, self.identical, self.changed_inputs
        )
    }
}

/// Parses `argv` (program name first), runs, and writes output and manifest.
pub fn run<I: IntoIterator<Item = String>>(argv: I) -> ExitCode {
    let argv: Vec<String> = argv.into_iter().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run_parsed(&cli, &argv[1..]) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run_parsed(cli: &Cli, args: &[String]) -> Result<bool> {
    let out = execute(cli)?;
    let bytes = out.bytes(cli.global.json);
    if let Some((path, graphs)) = &out.dump {
        write_g6_file(path, graphs)?;
    }
    match &cli.global.out {
        Some(path) => {
            write_file(path, bytes)?;
            if !matches!(cli.command, Command::Replay { .. }) {
                let manifest = RunManifest::new(
                    out.command,
                    args.to_vec(),
                    out.parameters.clone(),
                    hash_inputs(&out.inputs)?,
                    path,
                    bytes,
                );
                manifest.write(&manifest_path(path))?;
            }
        }
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes).map_err(|e| Error::io("<stdout>", e))?;
        }
    }
    Ok(out.ok)
}
