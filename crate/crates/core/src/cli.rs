//! Command-line front end: argument parsing, orchestration, and reports.
//!
//! Exit codes: 0 success, 1 verification failure (a checked property does
//! not hold), 2 input error (malformed files or arguments).

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::engine::{self, Schedule, Strategy};
use crate::error::Error;
use crate::graph::{ChordalityResult, Graph, DEFAULT_CLIQUE_CAP};
use crate::linalg::{HermitianMatrix, Inertia, PositivityMode, SolutionMethod, Tolerance};
use crate::partial::{format_complex, PartialHermitianMatrix};
use crate::report::{sha256_hex, Report};
use crate::witness::{self, WitnessCertificate};

const WITNESS_GRID_RESOLUTION: usize = 64;

#[derive(Parser)]
#[command(
    name = "cnum",
    version,
    about = "Completion-number toolkit for partial Hermitian matrices over graph patterns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args)]
struct GlobalOpts {
    /// Absolute zero-eigenvalue tolerance (relative part stays at its default).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed for randomized search strategies; never affects numerics.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of maximal cliques to enumerate.
    #[arg(long, global = true)]
    clique_cap: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Pd,
    Psd,
}

#[derive(Subcommand)]
enum Command {
    /// Decide chordality; print a perfect elimination ordering or a hole.
    Chordal { graph: PathBuf },
    /// Enumerate the maximal cliques of a graph.
    Cliques { graph: PathBuf },
    /// Check that a partial matrix is partial positive.
    Check {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Psd)]
        mode: Mode,
    },
    /// Per-maximal-clique inertia profile of a partial matrix.
    Profile { matrix: PathBuf },
    /// Plan an edge-insertion schedule minimizing the final bound.
    Plan {
        graph: PathBuf,
        #[arg(long, default_value = "auto")]
        strategy: String,
    },
    /// Execute a schedule on a partial positive matrix.
    Complete {
        matrix: PathBuf,
        /// Schedule file; planned with the chosen strategy when omitted.
        #[arg(long)]
        schedule: Option<PathBuf>,
        #[arg(long, default_value = "auto")]
        strategy: String,
    },
    /// Completion-number bracket [lower, upper] of a graph.
    Bound {
        graph: PathBuf,
        #[arg(long, default_value = "auto")]
        strategy: String,
    },
    /// Emit witness graph and matrix files.
    Witness {
        #[command(subcommand)]
        family: WitnessFamily,
    },
    /// Verify a lower-bound witness matrix against gadget placements.
    Verify {
        matrix: PathBuf,
        /// Placements as comma-separated vertex lists joined by ';',
        /// e.g. "1,2,3,4;5,6,7,8".
        #[arg(long)]
        placements: String,
    },
}

#[derive(Subcommand)]
enum WitnessFamily {
    /// The n-block family on 4n vertices: one gadget per block, zero
    /// cross-block entries; completion-number lower bound n.
    Gn {
        n: usize,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => return e.exit_code_with_print(),
    };
    let started = Instant::now();
    let code = dispatch(&cli);
    eprintln!("elapsed_ms={}", started.elapsed().as_millis());
    code
}

trait ClapErrorExt {
    fn exit_code_with_print(self) -> i32;
}

impl ClapErrorExt for clap::Error {
    fn exit_code_with_print(self) -> i32 {
        let is_help = matches!(
            self.kind(),
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
        );
        let _ = self.print();
        if is_help {
            0
        } else {
            2
        }
    }
}

fn dispatch(cli: &Cli) -> i32 {
    let tol = match cli.global.tol {
        Some(abs) => Tolerance::with_abs(abs),
        None => Tolerance::default(),
    };
    let cap = cli.global.clique_cap.unwrap_or(DEFAULT_CLIQUE_CAP);
    let outcome = match &cli.command {
        Command::Chordal { graph } => cmd_chordal(graph),
        Command::Cliques { graph } => cmd_cliques(graph, cap),
        Command::Check { matrix, mode } => cmd_check(matrix, *mode, &tol, cap),
        Command::Profile { matrix } => cmd_profile(matrix, &tol, cap),
        Command::Plan { graph, strategy } => cmd_plan(graph, strategy, cap),
        Command::Complete { matrix, schedule, strategy } => {
            cmd_complete(matrix, schedule.as_deref(), strategy, &tol, cap)
        }
        Command::Bound { graph, strategy } => cmd_bound(graph, strategy, &tol, cap),
        Command::Witness { family } => match family {
            WitnessFamily::Gn { n, out } => cmd_witness_gn(*n, out),
        },
        Command::Verify { matrix, placements } => cmd_verify(matrix, placements, &tol),
    };
    match outcome {
        Ok((report, code)) => {
            if cli.global.json {
                print!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

type Outcome = crate::Result<(Report, i32)>;

fn read_input(report: &mut Report, path: &Path) -> crate::Result<String> {
    let text = fs::read_to_string(path)?;
    report.add_input(&path.display().to_string(), text.as_bytes());
    Ok(text)
}

fn parse_strategy(s: &str, g: &Graph) -> crate::Result<Strategy> {
    match s {
        "auto" => Ok(engine::default_strategy(g)),
        "exhaustive" => Ok(Strategy::Exhaustive),
        "greedy" => Ok(Strategy::Greedy),
        _ => {
            if let Some(w) = s.strip_prefix("beam=") {
                let width: usize = w.parse().map_err(|_| {
                    Error::Unsupported(format!("invalid beam width '{w}'"))
                })?;
                if width == 0 {
                    return Err(Error::Unsupported("beam width must be positive".into()));
                }
                Ok(Strategy::Beam(width))
            } else {
                Err(Error::Unsupported(format!(
                    "unknown strategy '{s}' (expected auto, exhaustive, greedy, or beam=N)"
                )))
            }
        }
    }
}

fn join_vertices(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn inertia_json(i: &Inertia) -> Value {
    json!({ "plus": i.plus, "minus": i.minus, "zero": i.zero })
}

fn matrix_rows(m: &HermitianMatrix) -> Vec<Vec<String>> {
    (0..m.n())
        .map(|i| (0..m.n()).map(|j| format_complex(m.get(i, j))).collect())
        .collect()
}

fn cmd_chordal(path: &Path) -> Outcome {
    let mut report = Report::new(format!("chordal {}", path.display()));
    let g = Graph::parse(&read_input(&mut report, path)?)?;
    match g.is_chordal() {
        ChordalityResult::Peo(peo) => {
            report.line("chordal: true");
            report.line(format!("peo: {}", join_vertices(&peo)));
            report.set("chordal", json!(true));
            report.set("peo", json!(peo));
        }
        ChordalityResult::Hole(hole) => {
            report.line("chordal: false");
            report.line(format!("hole: {}", join_vertices(&hole)));
            report.set("chordal", json!(false));
            report.set("hole", json!(hole));
        }
    }
    Ok((report, 0))
}

fn cmd_cliques(path: &Path, cap: usize) -> Outcome {
    let mut report = Report::new(format!("cliques {}", path.display()));
    let g = Graph::parse(&read_input(&mut report, path)?)?;
    let cliques = g.maximal_cliques_capped(cap)?;
    report.line(format!("maximal_cliques: {}", cliques.len()));
    for c in &cliques {
        report.line(format!("clique: {}", join_vertices(c)));
    }
    report.set("maximal_cliques", json!(cliques));
    Ok((report, 0))
}

fn cmd_check(path: &Path, mode: Mode, tol: &Tolerance, cap: usize) -> Outcome {
    let mode_str = match mode {
        Mode::Pd => "pd",
        Mode::Psd => "psd",
    };
    let mut report = Report::new(format!("check {} --mode {}", path.display(), mode_str));
    let a = PartialHermitianMatrix::parse(&read_input(&mut report, path)?)?;
    let positivity = match mode {
        Mode::Pd => PositivityMode::Definite,
        Mode::Psd => PositivityMode::Semidefinite,
    };
    let result = a.check_partial_positive_capped(positivity, tol, cap)?;
    report.line(format!("partial_positive: {}", result.ok));
    report.set("mode", json!(mode_str));
    report.set("partial_positive", json!(result.ok));
    if let Some(clique) = &result.failing_clique {
        report.line(format!("failing_clique: {}", join_vertices(clique)));
        report.set("failing_clique", json!(clique));
    }
    let code = if result.ok { 0 } else { 1 };
    Ok((report, code))
}

fn cmd_profile(path: &Path, tol: &Tolerance, cap: usize) -> Outcome {
    let mut report = Report::new(format!("profile {}", path.display()));
    let a = PartialHermitianMatrix::parse(&read_input(&mut report, path)?)?;
    let profile = a.clique_inertia_profile_capped(tol, cap)?;
    let mut entries = Vec::new();
    for (clique, inertia) in &profile.per_clique {
        report.line(format!(
            "clique {} plus={} minus={} zero={}",
            join_vertices(clique),
            inertia.plus,
            inertia.minus,
            inertia.zero
        ));
        entries.push(json!({ "clique": clique, "inertia": inertia_json(inertia) }));
    }
    report.line(format!("i_minus: {}", profile.i_minus));
    report.line(format!("i_zero_minus: {}", profile.i_zero_minus));
    report.set("per_clique", Value::Array(entries));
    report.set("i_minus", json!(profile.i_minus));
    report.set("i_zero_minus", json!(profile.i_zero_minus));
    Ok((report, 0))
}

fn schedule_into_report(report: &mut Report, schedule: &Schedule, final_bound: u32) {
    report.line(format!("final_bound: {final_bound}"));
    for line in schedule.format().lines() {
        report.line(format!("schedule: {line}"));
    }
    let steps: Vec<Value> = schedule
        .steps
        .iter()
        .map(|step| {
            json!({
                "edge": [step.edge.0, step.edge.1],
                "designated": step.designated,
                "new_cliques": step
                    .new_cliques
                    .iter()
                    .map(|(c, b)| json!({ "clique": c, "bound": b }))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    report.set("final_bound", json!(final_bound));
    report.set("schedule", json!({ "n": schedule.n, "steps": steps }));
}

fn cmd_plan(path: &Path, strategy: &str, cap: usize) -> Outcome {
    let mut report = Report::new(format!("plan {} --strategy {}", path.display(), strategy));
    let g = Graph::parse(&read_input(&mut report, path)?)?;
    let strat = parse_strategy(strategy, &g)?;
    let (schedule, final_bound) = engine::plan_schedule_capped(&g, strat, cap)?;
    schedule_into_report(&mut report, &schedule, final_bound);
    Ok((report, 0))
}

fn cmd_complete(
    path: &Path,
    schedule_path: Option<&Path>,
    strategy: &str,
    tol: &Tolerance,
    cap: usize,
) -> Outcome {
    let mut command = format!("complete {}", path.display());
    if let Some(sp) = schedule_path {
        command.push_str(&format!(" --schedule {}", sp.display()));
    } else {
        command.push_str(&format!(" --strategy {strategy}"));
    }
    let mut report = Report::new(command);
    let a = PartialHermitianMatrix::parse(&read_input(&mut report, path)?)?;
    let (schedule, final_bound) = match schedule_path {
        Some(sp) => {
            let schedule = Schedule::parse(&read_input(&mut report, sp)?)?;
            let bound = schedule.final_bound(a.graph_of())?;
            (schedule, bound)
        }
        None => {
            let strat = parse_strategy(strategy, a.graph_of())?;
            engine::plan_schedule_capped(a.graph_of(), strat, cap)?
        }
    };
    let result = engine::execute_schedule(&a, &schedule, tol)?;
    report.line(format!("final_bound: {final_bound}"));
    report.line(format!(
        "achieved: plus={} minus={} zero={}",
        result.inertia.plus, result.inertia.minus, result.inertia.zero
    ));
    report.line(format!("all_certified: {}", result.all_certified));
    let mut steps = Vec::new();
    for step in &result.steps {
        let method = match step.method {
            SolutionMethod::ClosedForm => "closed_form",
            SolutionMethod::GridScan => "grid_scan",
        };
        report.line(format!(
            "step edge={},{} predicted={} achieved_minus={} method={} certified={}",
            step.edge.0, step.edge.1, step.predicted, step.achieved_minus, method, step.certified
        ));
        steps.push(json!({
            "edge": [step.edge.0, step.edge.1],
            "designated": step.designated,
            "predicted": step.predicted,
            "achieved_minus": step.achieved_minus,
            "target_minus": step.target_minus,
            "method": method,
            "certified": step.certified,
        }));
    }
    let rows = matrix_rows(&result.matrix);
    for (i, row) in rows.iter().enumerate() {
        report.line(format!("row {}: {}", i + 1, row.join(" ")));
    }
    report.set("final_bound", json!(final_bound));
    report.set("achieved_inertia", inertia_json(&result.inertia));
    report.set("all_certified", json!(result.all_certified));
    report.set("steps", Value::Array(steps));
    report.set("completion", json!(rows));
    let code = if result.all_certified { 0 } else { 1 };
    Ok((report, code))
}

fn cmd_bound(path: &Path, strategy: &str, tol: &Tolerance, cap: usize) -> Outcome {
    let mut report = Report::new(format!("bound {} --strategy {}", path.display(), strategy));
    let g = Graph::parse(&read_input(&mut report, path)?)?;
    let strat = parse_strategy(strategy, &g)?;
    let (lower, cert) = witness::completion_number_lower_bound(&g, tol)?;
    let (_, upper) = engine::plan_schedule_capped(&g, strat, cap)?;
    report.line(format!("bracket: [{lower}, {upper}]"));
    report.line(format!(
        "lower_bound: {lower} (gadget placements: {})",
        cert.placements
            .iter()
            .map(|p| join_vertices(p))
            .collect::<Vec<_>>()
            .join("; ")
    ));
    report.line(format!("upper_bound: {upper} (ledger)"));
    report.set("lower_bound", json!(lower));
    report.set("upper_bound", json!(upper));
    report.set("placements", json!(cert.placements));
    Ok((report, 0))
}

fn cmd_witness_gn(n: usize, out: &Path) -> Outcome {
    let mut report = Report::new(format!("witness gn {n} --out {}", out.display()));
    let (g, a) = witness::family_gn(n)?;
    let graph_path = out.join(format!("gn{n}.graph"));
    let matrix_path = out.join(format!("gn{n}.matrix"));
    let graph_text = g.format();
    let matrix_text = a.format();
    fs::write(&graph_path, &graph_text)?;
    fs::write(&matrix_path, &matrix_text)?;
    report.line(format!("wrote: {}", graph_path.display()));
    report.line(format!("wrote: {}", matrix_path.display()));
    report.line(format!("claimed_lower_bound: {n}"));
    report.set(
        "files",
        json!([
            { "path": graph_path.display().to_string(), "sha256": sha256_hex(graph_text.as_bytes()) },
            { "path": matrix_path.display().to_string(), "sha256": sha256_hex(matrix_text.as_bytes()) },
        ]),
    );
    report.set("claimed_lower_bound", json!(n));
    Ok((report, 0))
}

fn parse_placements(s: &str) -> crate::Result<Vec<Vec<usize>>> {
    s.split(';')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            part.trim()
                .split(',')
                .map(|t| {
                    t.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidPlacement(format!("invalid vertex '{t}' in '{part}'"))
                    })
                })
                .collect()
        })
        .collect()
}

fn cmd_verify(path: &Path, placements: &str, tol: &Tolerance) -> Outcome {
    let mut report =
        Report::new(format!("verify {} --placements {}", path.display(), placements));
    let a = PartialHermitianMatrix::parse(&read_input(&mut report, path)?)?;
    let placements = parse_placements(placements)?;
    let cert = WitnessCertificate {
        graph: a.graph_of().clone(),
        matrix: a,
        claimed_lower_bound: placements.len(),
        placements,
        evidence: None,
    };
    let cert = witness::verify_witness_lower_bound(cert, WITNESS_GRID_RESOLUTION, tol)?;
    let evidence = cert.evidence.as_ref().expect("verification fills evidence");
    report.line(format!("claimed_lower_bound: {}", cert.claimed_lower_bound));
    report.line(format!("verified: {}", evidence.verified));
    let mut gadgets = Vec::new();
    for g in &evidence.gadgets {
        report.line(format!(
            "gadget {} forcing={} grid_points={} min_minus_over_grid={}",
            join_vertices(&g.placement),
            g.forcing_ok,
            g.grid_points,
            g.min_minus_over_grid
        ));
        gadgets.push(json!({
            "placement": g.placement,
            "forcing_ok": g.forcing_ok,
            "grid_points": g.grid_points,
            "min_minus_over_grid": g.min_minus_over_grid,
        }));
    }
    report.set("claimed_lower_bound", json!(cert.claimed_lower_bound));
    report.set("verified", json!(evidence.verified));
    report.set("cross_zeros_ok", json!(evidence.cross_zeros_ok));
    report.set("gadgets", Value::Array(gadgets));
    let code = if evidence.verified { 0 } else { 1 };
    Ok((report, code))
}
