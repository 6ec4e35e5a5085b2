// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use arl_core::coloring::{find_rainbow_copy, layered_coloring, RainbowOutcome};
use arl_core::constructions::{
    blowup, expansion, minus_family, pendant_minus_family, special_blowup_graph, split_set, splitting_family,
    turan_hypergraph, FamilyOptions,
};
use arl_core::search::{bound_report, exact_anti_ramsey, exact_turan, BoundOptions, Witness};
use arl_core::suite::{run_suite, SuiteVerdict};
use arl_core::{named, Budget, Coloring, Family, Hypergraph, Independence, SearchReport, SolverOptions, SpecialKind};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "arl", version, about = "Anti-Ramsey and Turán numbers of small hypergraphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Search node limit (overrides ARL_DEFAULT_BUDGET).
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit in seconds (overrides ARL_DEFAULT_BUDGET).
    #[arg(long, global = true)]
    budget_secs: Option<f64>,
    /// Solver worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a hypergraph or family.
    #[command(subcommand)]
    Construct(Construct),
    /// Build a coloring.
    #[command(subcommand)]
    Color(Color),
    /// Inspect a coloring.
    #[command(subcommand)]
    Check(Check),
    /// Run an exact solver.
    #[command(subcommand)]
    Solve(Solve),
    /// Evaluate the upper and lower bounds on ar for one instance.
    Bounds {
        /// Number of host vertices.
        #[arg(long)]
        n: usize,
        /// The graph F (descriptor or file).
        #[arg(long)]
        family: String,
        /// Uniformity of the expansion; defaults to that of F.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Run the small-case verification table.
    VerifyPaper,
}

#[derive(Subcommand)]
enum Construct {
    /// H_F^r: pad every edge with fresh vertices.
    Expansion {
        #[arg(long)]
        family: String,
        #[arg(long)]
        r: usize,
    },
    /// F[t]
    Blowup {
        #[arg(long)]
        family: String,
        #[arg(long)]
        t: usize,
    },
    /// F split at an independent set.
    Split {
        #[arg(long)]
        family: String,
        /// Comma-separated vertices.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        #[arg(long)]
        strong: bool,
    },
    /// Split(F), up to isomorphism.
    SplitFamily {
        #[arg(long)]
        family: String,
        #[arg(long)]
        strong: bool,
    },
    /// F_−: single-edge deletions, up to isomorphism.
    Minus {
        #[arg(long)]
        family: String,
    },
    /// F_{k−}: deletions of k-pendant edges, up to isomorphism.
    PendantMinus {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: usize,
    },
    /// T_r(n, l)
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        r: usize,
    },
    /// K_l^{alpha|beta|gamma|plus}[t]
    Special {
        kind: String,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Subcommand)]
enum Color {
    /// Part colors for triples with two vertices in one part, distinct colors
    /// for the transversal triples.
    Layered {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Search a coloring for a rainbow copy of every family member.
    RainbowFree {
        /// Coloring file (text or JSON).
        #[arg(long)]
        coloring: PathBuf,
        /// Forbidden graphs: descriptors or a file.
        #[arg(long)]
        family: String,
    },
}

#[derive(Subcommand)]
enum Solve {
    /// ex(n, family)
    Ex {
        /// Number of host vertices.
        #[arg(long)]
        n: usize,
        /// Forbidden graphs: descriptors like K3,C4 or a file.
        #[arg(long)]
        family: String,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// ar(n, F)
    Ar {
        /// Number of host vertices.
        #[arg(long)]
        n: usize,
        /// Forbidden graphs: descriptors like K3,C4 or a file.
        #[arg(long)]
        family: String,
        #[command(flatten)]
        search: SearchFlags,
    },
}

#[derive(Args)]
struct SearchFlags {
    /// Lex-leader symmetry breaking.
    #[arg(long)]
    orbit_pruning: bool,
    /// Disable the remaining-edges bound.
    #[arg(long)]
    no_bound_pruning: bool,
    /// Exit 0 even when the budget runs out.
    #[arg(long)]
    allow_partial: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(arl_core::Error),
}

impl From<arl_core::Error> for Failure {
    fn from(e: arl_core::Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => match write_output(cli.common.out.as_deref(), &text) {
            Ok(()) => ExitCode::from(code),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_USAGE)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn write_output(out: Option<&Path>, text: &str) -> std::io::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let c = &cli.common;
    match &cli.command {
        Command::Construct(kind) => construct(c, kind),
        Command::Color(Color::Layered { n, ell }) => Ok((coloring_out(c, &layered_coloring(*n, *ell)?), 0)),
        Command::Check(Check::RainbowFree { coloring, family }) => rainbow_free(c, coloring, family),
        Command::Solve(solve) => solve_cmd(c, solve),
        Command::Bounds { n, family, r } => {
            let f = single(load_family(family)?)?;
            let opts = BoundOptions {
                solver: SolverOptions {
                    budget: budget(c)?,
                    threads: c.threads,
                    ..SolverOptions::default()
                },
                ..BoundOptions::default()
            };
            let table = bound_report(*n, &f, r.unwrap_or(f.r()), &opts)?;
            let code = if table.hard_failures().is_empty() { 0 } else { EXIT_FAILED };
            let text = match c.format {
                Format::Text => table.to_text(),
                Format::Json => table.to_json(),
            };
            Ok((text, code))
        }
        Command::VerifyPaper => {
            let checks = run_suite(budget(c)?, c.seed)?;
            let code = if checks.iter().any(|k| k.verdict == SuiteVerdict::Fail) {
                EXIT_FAILED
            } else if checks.iter().any(|k| k.verdict == SuiteVerdict::Indeterminate) {
                EXIT_BUDGET
            } else {
                0
            };
            let text = match c.format {
                Format::Json => serde_json::to_string(&checks).expect("checks serialize"),
                Format::Text => checks
                    .iter()
                    .map(|k| format!("[{:>2}] {:<13} {}  expected {}  got {}", k.criterion, k.verdict, k.name, k.expected, k.got))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            Ok((text, code))
        }
    }
}

fn construct(c: &Common, kind: &Construct) -> Outcome {
    let mode = |strong: bool| if strong { Independence::Strong } else { Independence::Weak };
    let graph = match kind {
        Construct::Expansion { family, r } => expansion(&single(load_family(family)?)?, *r)?,
        Construct::Blowup { family, t } => blowup(&single(load_family(family)?)?, *t)?,
        Construct::Split { family, set, strong } => split_set(&single(load_family(family)?)?, set, mode(*strong))?,
        Construct::Turan { n, ell, r } => turan_hypergraph(*n, *ell, *r)?.0,
        Construct::Special { kind, ell, t } => {
            let kind: SpecialKind = kind.parse()?;
            special_blowup_graph(kind, *ell, *t)?
        }
        Construct::SplitFamily { family, strong } => {
            let opts = FamilyOptions {
                independence: mode(*strong),
                ..FamilyOptions::default()
            };
            return Ok((family_out(c, &splitting_family(&single(load_family(family)?)?, opts)?), 0));
        }
        Construct::Minus { family } => {
            let fam = minus_family(&single(load_family(family)?)?, FamilyOptions::default())?;
            return Ok((family_out(c, &fam), 0));
        }
        Construct::PendantMinus { family, k } => {
            let fam = pendant_minus_family(&single(load_family(family)?)?, *k, FamilyOptions::default())?;
            return Ok((family_out(c, &fam), 0));
        }
    };
    Ok((graph_out(c, &graph), 0))
}

fn rainbow_free(c: &Common, path: &Path, family: &str) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let chi = if text.trim_start().starts_with('{') {
        Coloring::from_json(&text)?
    } else {
        Coloring::from_text(&text)?
    };
    let fam = load_family(family)?;
    let node_budget = budget(c)?.max_nodes;
    let mut found = None;
    let mut undecided = false;
    for (i, f) in fam.members().iter().enumerate() {
        match find_rainbow_copy(&chi, f, node_budget)? {
            RainbowOutcome::Found(w) => {
                found = Some((i, w));
                break;
            }
            RainbowOutcome::Indeterminate => undecided = true,
            RainbowOutcome::Absent => {}
        }
    }
    let (status, code) = match (&found, undecided) {
        (Some(_), _) => ("rainbow_copy", 0),
        (None, true) => ("indeterminate", EXIT_BUDGET),
        (None, false) => ("rainbow_free", 0),
    };
    let text = match c.format {
        Format::Json => serde_json::json!({
            "status": status,
            "member": found.as_ref().map(|(i, _)| i),
            "witness": found.as_ref().map(|(_, w)| w),
        })
        .to_string(),
        Format::Text => {
            let mut out = status.to_string();
            if let Some((i, w)) = &found {
                out += &format!("\nmember {i}");
                for (e, color) in &w.edge_colors {
                    let verts: Vec<String> = e.iter().map(usize::to_string).collect();
                    out += &format!("\n{} color {color}", verts.join(" "));
                }
            }
            out
        }
    };
    Ok((text, code))
}

fn solve_cmd(c: &Common, solve: &Solve) -> Outcome {
    let (report, flags) = match solve {
        Solve::Ex { n, family, search } => {
            let fam = load_family(family)?;
            let r = fam
                .r()
                .ok_or_else(|| Failure::Usage("the family is empty".into()))?;
            (exact_turan(*n, r, &fam, &solver(c, search)?)?, search)
        }
        Solve::Ar { n, family, search } => {
            let f = single(load_family(family)?)?;
            (exact_anti_ramsey(*n, &f, &solver(c, search)?)?, search)
        }
    };
    let code = if report.is_exact() || flags.allow_partial { 0 } else { EXIT_BUDGET };
    let text = match c.format {
        Format::Json => report.to_json(),
        Format::Text => report_text(&report),
    };
    Ok((text, code))
}

fn report_text(report: &SearchReport) -> String {
    let problem = match report.instance.problem {
        arl_core::search::Problem::Turan => "ex",
        arl_core::search::Problem::AntiRamsey => "ar",
    };
    let mut out = format!(
        "{problem}({}) = {}\nstatus {}\nnodes {}\nleaves {}\nelapsed_ms {}\n",
        report.instance.n, report.value, report.status, report.nodes, report.leaves, report.elapsed_ms
    );
    match &report.witness {
        Some(Witness::Hypergraph(h)) => out += &format!("witness\n{}", h.to_text()),
        Some(Witness::Coloring(chi)) => out += &format!("witness\n{}", chi.to_text()),
        None => out += "witness none\n",
    }
    out
}

fn solver(c: &Common, flags: &SearchFlags) -> Result<SolverOptions, Failure> {
    Ok(SolverOptions {
        budget: budget(c)?,
        threads: c.threads,
        bound_pruning: !flags.no_bound_pruning,
        orbit_pruning: flags.orbit_pruning,
    })
}

/// Flags first, then `ARL_DEFAULT_BUDGET` (`<nodes>` or `<nodes>:<secs>`),
/// then the library defaults.
fn budget(c: &Common) -> Result<Budget, Failure> {
    let mut b = Budget::default();
    if let Ok(env) = std::env::var("ARL_DEFAULT_BUDGET") {
        let bad = || Failure::Usage(format!("ARL_DEFAULT_BUDGET must be <nodes> or <nodes>:<secs>, got {env:?}"));
        let (nodes, secs) = match env.split_once(':') {
            Some((n, s)) => (n, Some(s)),
            None => (env.as_str(), None),
        };
        b.max_nodes = Some(nodes.trim().parse().map_err(|_| bad())?);
        if let Some(s) = secs {
            b.max_secs = Some(s.trim().parse().map_err(|_| bad())?);
        }
    }
    if let Some(n) = c.budget_nodes {
        b.max_nodes = Some(n);
    }
    if let Some(s) = c.budget_secs {
        if s.is_nan() || s < 0.0 {
            return Err(Failure::Usage("--budget-secs must be nonnegative".into()));
        }
        b.max_secs = Some(s);
    }
    Ok(b)
}

/// A file path (hypergraph or family, text or JSON) or comma-separated
/// descriptors such as `K3,C4`.
fn load_family(arg: &str) -> Result<Family, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            let value: serde_json::Value =
                serde_json::from_str(trimmed).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
            return Ok(if value.get("members").is_some() {
                Family::from_json(trimmed)?
            } else {
                Family::single(Hypergraph::from_json(trimmed)?)
            });
        }
        return Ok(Family::from_text(&text)?);
    }
    let members = arg
        .split(',')
        .map(named::parse)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(format!("{e} (not a file either)")))?;
    Ok(Family::new(members)?)
}

fn single(fam: Family) -> Result<Hypergraph, Failure> {
    match fam.len() {
        1 => Ok(fam.into_members().remove(0)),
        k => Err(Failure::Usage(format!("expected one graph, got a family of {k}"))),
    }
}

fn graph_out(c: &Common, h: &Hypergraph) -> String {
    match c.format {
        Format::Text => h.to_text(),
        Format::Json => h.to_json(),
    }
}

fn family_out(c: &Common, f: &Family) -> String {
    match c.format {
        Format::Text => f.to_text(),
        Format::Json => f.to_json(),
    }
}

fn coloring_out(c: &Common, chi: &Coloring) -> String {
    match c.format {
        Format::Text => chi.to_text(),
        Format::Json => chi.to_json(),
    }
}
