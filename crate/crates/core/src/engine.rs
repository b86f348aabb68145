//! Edge-insertion completion engine.
//!
//! A schedule inserts the non-edges of a pattern one at a time. Each step
//! designates one new maximal clique whose single unknown entry is filled
//! by the one-unknown completion step; every other new maximal clique pays
//! the interlacing penalty of one extra negative eigenvalue. The bound
//! ledger tracks, per maximal clique of the intermediate graph, an upper
//! bound on the achievable negative count, so the final ledger value is an
//! upper bound on the completion number of the starting graph.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{
    HermitianMatrix, Inertia, Objective, PositivityMode, SingleUnknownProblem, SolutionMethod,
    Tolerance,
};
use crate::partial::PartialHermitianMatrix;

/// Search strategy over insertion orders and designated cliques.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// All edge orders and designated choices; graphs with <= 8 non-edges.
    Exhaustive,
    /// Per step, the (edge, designated clique) pair minimizing the
    /// resulting maximum ledger value; lexicographic tie-breaks.
    Greedy,
    /// Keeps the best `width` partial ledgers per depth.
    Beam(usize),
}

/// Exhaustive when at most 8 non-edges remain, beam(64) otherwise.
pub fn default_strategy(g: &Graph) -> Strategy {
    if g.non_edges().len() <= 8 {
        Strategy::Exhaustive
    } else {
        Strategy::Beam(64)
    }
}

/// Map from maximal clique of the current intermediate graph to an upper
/// bound on the achievable negative eigenvalue count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundLedger {
    entries: BTreeMap<Vec<usize>, u32>,
}

fn is_subset_sorted(sub: &[usize], sup: &[usize]) -> bool {
    let mut it = sup.iter();
    'outer: for v in sub {
        for w in it.by_ref() {
            if w == v {
                continue 'outer;
            }
            if w > v {
                return false;
            }
        }
        return false;
    }
    true
}

impl BoundLedger {
    pub fn from_cliques(cliques: Vec<Vec<usize>>) -> Self {
        BoundLedger { entries: cliques.into_iter().map(|c| (c, 0)).collect() }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, u32)> {
        self.entries.iter().map(|(c, &b)| (c, b))
    }

    /// Bound of an arbitrary clique: min over the maximal cliques that
    /// contain it. `None` when no ledger clique contains it.
    pub fn bound_of(&self, clique: &[usize]) -> Option<u32> {
        self.entries
            .iter()
            .filter(|(key, _)| is_subset_sorted(clique, key))
            .map(|(_, &b)| b)
            .min()
    }

    /// Maximum over the maximal cliques of the current graph; never
    /// decreases along a schedule.
    pub fn max_value(&self) -> u32 {
        self.entries.values().copied().max().unwrap_or(0)
    }
}

/// One insertion step: the non-edge, its designated maximal clique, and
/// all new maximal cliques with their predicted bounds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScheduleStep {
    pub edge: (usize, usize),
    pub designated: Vec<usize>,
    pub new_cliques: Vec<(Vec<usize>, u32)>,
}

impl ScheduleStep {
    pub fn predicted_bound(&self) -> Option<u32> {
        self.new_cliques
            .iter()
            .find(|(c, _)| *c == self.designated)
            .map(|&(_, b)| b)
    }
}

/// Ordered list of non-edge insertions completing a pattern graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Schedule {
    pub n: usize,
    pub steps: Vec<ScheduleStep>,
}

/// Applies one step to a ledger. The designated clique gets
/// `max(bound(K \ i), bound(K \ j))` (the one-unknown achievability
/// target); every other new maximal clique gets
/// `min(bound(K \ i), bound(K \ j)) + 1` (interlacing penalty). Cliques
/// that remain maximal keep their bounds; absorbed cliques are dropped.
pub fn propagate_bounds(ledger: &BoundLedger, step: &ScheduleStep) -> Result<BoundLedger> {
    let cliques: Vec<Vec<usize>> = step.new_cliques.iter().map(|(c, _)| c.clone()).collect();
    let (next, _) = propagate_core(ledger, step.edge, &step.designated, &cliques)?;
    Ok(next)
}

/// Core propagation; returns the next ledger and the computed bound per
/// new clique (same order as `new_cliques`).
fn propagate_core(
    ledger: &BoundLedger,
    edge: (usize, usize),
    designated: &[usize],
    new_cliques: &[Vec<usize>],
) -> Result<(BoundLedger, Vec<u32>)> {
    let (i, j) = edge;
    if !designated.contains(&i) || !designated.contains(&j) {
        return Err(Error::InvalidSchedule(format!(
            "designated clique {designated:?} does not contain the inserted edge ({i},{j})"
        )));
    }
    if !new_cliques.iter().any(|c| c == designated) {
        return Err(Error::InvalidSchedule(format!(
            "designated clique {designated:?} is not among the step's new maximal cliques"
        )));
    }
    let mut bounds = Vec::with_capacity(new_cliques.len());
    for clique in new_cliques {
        let without = |v: usize| -> Vec<usize> {
            clique.iter().copied().filter(|&u| u != v).collect()
        };
        let parent_i = without(i);
        let parent_j = without(j);
        let b_i = ledger.bound_of(&parent_i).ok_or_else(|| {
            Error::InvalidSchedule(format!("{parent_i:?} is not a clique of the current graph"))
        })?;
        let b_j = ledger.bound_of(&parent_j).ok_or_else(|| {
            Error::InvalidSchedule(format!("{parent_j:?} is not a clique of the current graph"))
        })?;
        bounds.push(if clique == designated {
            b_i.max(b_j)
        } else {
            b_i.min(b_j) + 1
        });
    }
    let mut entries: BTreeMap<Vec<usize>, u32> = ledger
        .entries
        .iter()
        .filter(|(key, _)| !new_cliques.iter().any(|c| is_subset_sorted(key, c)))
        .map(|(k, &b)| (k.clone(), b))
        .collect();
    for (clique, &b) in new_cliques.iter().zip(&bounds) {
        entries.insert(clique.clone(), b);
    }
    Ok((BoundLedger { entries }, bounds))
}

// -------------------------------------------------------------------
// Planning
// -------------------------------------------------------------------

#[derive(Clone)]
struct SearchState {
    graph: Graph,
    ledger: BoundLedger,
    /// (edge, designated clique) choices made so far.
    path: Vec<((usize, usize), Vec<usize>)>,
}

impl SearchState {
    fn initial(g: &Graph, cap: usize) -> Result<Self> {
        Ok(SearchState {
            graph: g.clone(),
            ledger: BoundLedger::from_cliques(g.maximal_cliques_capped(cap)?),
            path: Vec::new(),
        })
    }

    fn apply(&self, edge: (usize, usize), designated: &[usize]) -> Result<SearchState> {
        let new_cliques = self.graph.new_maximal_cliques_after_edge(edge)?;
        let (ledger, _) = propagate_core(&self.ledger, edge, designated, &new_cliques)?;
        let mut path = self.path.clone();
        path.push((edge, designated.to_vec()));
        Ok(SearchState { graph: self.graph.with_edge(edge.0, edge.1)?, ledger, path })
    }

    /// Deterministic canonical encoding of (edge set, ledger) for
    /// deduplication and ordering.
    fn key(&self) -> Vec<u64> {
        let mut key = Vec::new();
        for (i, j) in self.graph.edges() {
            key.push(((i as u64) << 32) | j as u64);
        }
        key.push(u64::MAX);
        for (clique, &b) in self.ledger.entries.iter() {
            for &v in clique {
                key.push(v as u64);
            }
            key.push(u64::MAX - 1);
            key.push(b as u64);
        }
        key
    }

    fn hashed_key(&self) -> (u64, u64) {
        let key = self.key();
        let mut h1 = DefaultHasher::new();
        0xa5a5_a5a5u64.hash(&mut h1);
        key.hash(&mut h1);
        let mut h2 = DefaultHasher::new();
        0x5a5a_5a5au64.hash(&mut h2);
        key.hash(&mut h2);
        (h1.finish(), h2.finish())
    }
}

/// Completes a chordal intermediate state to the full graph. Every
/// non-edge of a chordal graph has a clique common neighborhood, so a
/// chordality-preserving insertion order exists in which each step has a
/// single new maximal clique and the maximum ledger value never grows.
fn chordal_finish(mut state: SearchState) -> Result<SearchState> {
    while !state.graph.is_complete() {
        let mut advanced = false;
        for e in state.graph.non_edges() {
            let extended = state.graph.with_edge(e.0, e.1)?;
            if !extended.is_chordal().is_chordal() {
                continue;
            }
            let new_cliques = state.graph.new_maximal_cliques_after_edge(e)?;
            debug_assert_eq!(new_cliques.len(), 1, "chordal insertion must be unique");
            let designated = new_cliques[0].clone();
            state = state.apply(e, &designated)?;
            advanced = true;
            break;
        }
        if !advanced {
            return Err(Error::InvalidGraph(
                "no chordality-preserving insertion found on a chordal graph".into(),
            ));
        }
    }
    Ok(state)
}

/// Greedy descent; switches to the chordality-preserving completion as
/// soon as the intermediate graph is chordal (at that point the final
/// bound equals the current maximum and greedy choices cannot improve it).
fn greedy_from(mut state: SearchState) -> Result<SearchState> {
    loop {
        if state.graph.is_complete() {
            return Ok(state);
        }
        if state.graph.is_chordal().is_chordal() {
            return chordal_finish(state);
        }
        let mut best: Option<(u32, (usize, usize), Vec<usize>)> = None;
        for e in state.graph.non_edges() {
            let new_cliques = state.graph.new_maximal_cliques_after_edge(e)?;
            for designated in &new_cliques {
                let (ledger, _) = propagate_core(&state.ledger, e, designated, &new_cliques)?;
                let m = ledger.max_value();
                let better = match &best {
                    None => true,
                    Some((bm, be, bd)) => (m, e, designated) < (*bm, *be, bd),
                };
                if better {
                    best = Some((m, e, designated.clone()));
                }
            }
        }
        let (_, e, designated) = best.expect("non-complete graph has a non-edge");
        state = state.apply(e, &designated)?;
    }
}

fn exhaustive(init: SearchState) -> Result<SearchState> {
    let incumbent = greedy_from(init.clone())?;
    let mut best_bound = incumbent.ledger.max_value();
    let mut best_state = incumbent;
    let mut visited: HashSet<(u64, u64)> = HashSet::new();

    fn dfs(
        state: SearchState,
        best_bound: &mut u32,
        best_state: &mut SearchState,
        visited: &mut HashSet<(u64, u64)>,
    ) -> Result<()> {
        // the maximum ledger value never decreases along a schedule
        if state.ledger.max_value() >= *best_bound {
            return Ok(());
        }
        if state.graph.is_complete() {
            *best_bound = state.ledger.max_value();
            *best_state = state;
            return Ok(());
        }
        if state.graph.is_chordal().is_chordal() {
            let finished = chordal_finish(state)?;
            let bound = finished.ledger.max_value();
            if bound < *best_bound {
                *best_bound = bound;
                *best_state = finished;
            }
            return Ok(());
        }
        for e in state.graph.non_edges() {
            let new_cliques = state.graph.new_maximal_cliques_after_edge(e)?;
            for designated in &new_cliques {
                let child = state.apply(e, designated)?;
                if !visited.insert(child.hashed_key()) {
                    continue;
                }
                dfs(child, best_bound, best_state, visited)?;
            }
        }
        Ok(())
    }

    dfs(init, &mut best_bound, &mut best_state, &mut visited)?;
    Ok(best_state)
}

fn beam(init: SearchState, width: usize) -> Result<SearchState> {
    let width = width.max(1);
    let mut best: Option<SearchState> = None;
    let consider = |candidate: SearchState, best: &mut Option<SearchState>| {
        let replace = match best {
            None => true,
            Some(b) => candidate.ledger.max_value() < b.ledger.max_value(),
        };
        if replace {
            *best = Some(candidate);
        }
    };
    let mut frontier = vec![init];
    while !frontier.is_empty() {
        let mut children: Vec<SearchState> = Vec::new();
        let mut seen: HashSet<(u64, u64)> = HashSet::new();
        for state in frontier {
            if state.graph.is_complete() {
                consider(state, &mut best);
                continue;
            }
            if state.graph.is_chordal().is_chordal() {
                consider(chordal_finish(state)?, &mut best);
                continue;
            }
            for e in state.graph.non_edges() {
                let new_cliques = state.graph.new_maximal_cliques_after_edge(e)?;
                for designated in &new_cliques {
                    let child = state.apply(e, designated)?;
                    if seen.insert(child.hashed_key()) {
                        children.push(child);
                    }
                }
            }
        }
        children.sort_by_cached_key(|s| (s.ledger.max_value(), s.key()));
        children.truncate(width);
        frontier = children;
    }
    best.ok_or_else(|| Error::InvalidGraph("beam search produced no completion".into()))
}

/// Plans an insertion schedule minimizing the final ledger value. The
/// returned bound is a valid upper bound on the completion number for
/// every strategy; exhaustive search returns the minimum over all orders
/// and designated choices.
pub fn plan_schedule(g: &Graph, strategy: Strategy) -> Result<(Schedule, u32)> {
    plan_schedule_capped(g, strategy, crate::graph::DEFAULT_CLIQUE_CAP)
}

pub fn plan_schedule_capped(
    g: &Graph,
    strategy: Strategy,
    cap: usize,
) -> Result<(Schedule, u32)> {
    let init = SearchState::initial(g, cap)?;
    let terminal = match strategy {
        Strategy::Exhaustive => {
            if g.non_edges().len() > 8 {
                return Err(Error::Unsupported(format!(
                    "exhaustive planning handles at most 8 non-edges, got {}",
                    g.non_edges().len()
                )));
            }
            if init.graph.is_chordal().is_chordal() {
                chordal_finish(init)?
            } else {
                exhaustive(init)?
            }
        }
        Strategy::Greedy => greedy_from(init)?,
        Strategy::Beam(width) => {
            if init.graph.is_chordal().is_chordal() {
                chordal_finish(init)?
            } else {
                beam(init, width)?
            }
        }
    };
    let schedule = rebuild_schedule(g, &terminal.path, cap)?;
    Ok((schedule, terminal.ledger.max_value()))
}

/// Thin wrapper returning the planned final bound.
pub fn completion_number_upper_bound(g: &Graph, strategy: Strategy) -> Result<u32> {
    Ok(plan_schedule(g, strategy)?.1)
}

/// Replays a path of (edge, designated) choices into a full schedule with
/// predicted bounds, validating as it goes.
fn rebuild_schedule(
    g: &Graph,
    path: &[((usize, usize), Vec<usize>)],
    cap: usize,
) -> Result<Schedule> {
    let mut graph = g.clone();
    let mut ledger = BoundLedger::from_cliques(graph.maximal_cliques_capped(cap)?);
    let mut steps = Vec::with_capacity(path.len());
    for (edge, designated) in path {
        let cliques = graph.new_maximal_cliques_after_edge(*edge)?;
        let (next, bounds) = propagate_core(&ledger, *edge, designated, &cliques)?;
        steps.push(ScheduleStep {
            edge: *edge,
            designated: designated.clone(),
            new_cliques: cliques.into_iter().zip(bounds).collect(),
        });
        ledger = next;
        graph.add_edge(edge.0, edge.1)?;
    }
    if !graph.is_complete() {
        return Err(Error::InvalidSchedule(
            "schedule does not insert every non-edge".into(),
        ));
    }
    Ok(Schedule { n: g.n(), steps })
}

impl Schedule {
    /// Final ledger value after replaying the schedule from `g`.
    pub fn final_bound(&self, g: &Graph) -> Result<u32> {
        let mut graph = g.clone();
        let mut ledger =
            BoundLedger::from_cliques(graph.maximal_cliques_capped(crate::graph::DEFAULT_CLIQUE_CAP)?);
        for step in &self.steps {
            let cliques = graph.new_maximal_cliques_after_edge(step.edge)?;
            let declared: Vec<Vec<usize>> =
                step.new_cliques.iter().map(|(c, _)| c.clone()).collect();
            if cliques != declared {
                return Err(Error::InvalidSchedule(format!(
                    "step {:?}: declared new cliques do not match the graph",
                    step.edge
                )));
            }
            let (next, _) = propagate_core(&ledger, step.edge, &step.designated, &cliques)?;
            ledger = next;
            graph.add_edge(step.edge.0, step.edge.1)?;
        }
        if !graph.is_complete() {
            return Err(Error::InvalidSchedule(
                "schedule does not insert every non-edge".into(),
            ));
        }
        Ok(ledger.max_value())
    }

    // ---------------------------------------------------------------
    // Text format
    // ---------------------------------------------------------------

    pub fn format(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "schedule n={} steps={}", self.n, self.steps.len());
        for step in &self.steps {
            let _ = writeln!(
                s,
                "step edge={},{} designated={}",
                step.edge.0,
                step.edge.1,
                join_vertices(&step.designated)
            );
            for (clique, bound) in &step.new_cliques {
                let _ = writeln!(s, "clique {} bound={}", join_vertices(clique), bound);
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<Schedule> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines
            .next()
            .ok_or(Error::Parse { line: 1, msg: "empty schedule file".into() })?;
        let mut n = None;
        let mut declared_steps = None;
        let mut tokens = header.split_whitespace();
        if tokens.next() != Some("schedule") {
            return Err(Error::Parse { line: hline, msg: "expected 'schedule' header".into() });
        }
        for tok in tokens {
            if let Some(v) = tok.strip_prefix("n=") {
                n = v.parse::<usize>().ok();
            } else if let Some(v) = tok.strip_prefix("steps=") {
                declared_steps = v.parse::<usize>().ok();
            }
        }
        let n = n.ok_or(Error::Parse { line: hline, msg: "missing or invalid n=".into() })?;
        let declared_steps = declared_steps
            .ok_or(Error::Parse { line: hline, msg: "missing or invalid steps=".into() })?;

        let mut steps: Vec<ScheduleStep> = Vec::new();
        for (line_no, line) in lines {
            if let Some(rest) = line.strip_prefix("step ") {
                let mut edge = None;
                let mut designated = None;
                for tok in rest.split_whitespace() {
                    if let Some(v) = tok.strip_prefix("edge=") {
                        let parts: Vec<&str> = v.split(',').collect();
                        if parts.len() == 2 {
                            if let (Ok(i), Ok(j)) =
                                (parts[0].parse::<usize>(), parts[1].parse::<usize>())
                            {
                                edge = Some((i, j));
                            }
                        }
                    } else if let Some(v) = tok.strip_prefix("designated=") {
                        designated = parse_vertices(v);
                    }
                }
                let edge = edge
                    .ok_or(Error::Parse { line: line_no, msg: "missing or invalid edge=".into() })?;
                let designated = designated
                    .ok_or(Error::Parse { line: line_no, msg: "missing or invalid designated=".into() })?;
                steps.push(ScheduleStep { edge, designated, new_cliques: Vec::new() });
            } else if let Some(rest) = line.strip_prefix("clique ") {
                let step = steps.last_mut().ok_or(Error::Parse {
                    line: line_no,
                    msg: "clique line before any step".into(),
                })?;
                let mut parts = rest.split_whitespace();
                let clique = parts
                    .next()
                    .and_then(parse_vertices)
                    .ok_or(Error::Parse { line: line_no, msg: "invalid clique list".into() })?;
                let bound = parts
                    .next()
                    .and_then(|t| t.strip_prefix("bound="))
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or(Error::Parse { line: line_no, msg: "missing or invalid bound=".into() })?;
                step.new_cliques.push((clique, bound));
            } else {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unrecognized schedule line '{line}'"),
                });
            }
        }
        if steps.len() != declared_steps {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header declares {declared_steps} steps, found {}", steps.len()),
            });
        }
        Ok(Schedule { n, steps })
    }
}

fn join_vertices(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_vertices(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|t| t.parse::<usize>().ok()).collect()
}

// -------------------------------------------------------------------
// Execution
// -------------------------------------------------------------------

/// Per-step execution evidence: predicted ledger bound versus the minus
/// count actually achieved on the designated clique.
#[derive(Clone, Debug)]
pub struct StepCertificate {
    pub edge: (usize, usize),
    pub designated: Vec<usize>,
    pub predicted: u32,
    pub achieved_minus: usize,
    pub target_minus: usize,
    pub method: SolutionMethod,
    pub certified: bool,
}

#[derive(Clone, Debug)]
pub struct CompletionResult {
    pub matrix: HermitianMatrix,
    pub inertia: Inertia,
    pub steps: Vec<StepCertificate>,
    pub all_certified: bool,
}

/// Executes a schedule on a partial positive matrix, filling one unknown
/// pair per step on the designated clique. Specified entries are never
/// touched; when every per-step certificate holds, the achieved negative
/// count is at most the schedule's final bound.
pub fn execute_schedule(
    a: &PartialHermitianMatrix,
    schedule: &Schedule,
    tol: &Tolerance,
) -> Result<CompletionResult> {
    if schedule.n != a.n() {
        return Err(Error::InvalidSchedule(format!(
            "schedule is for n={} but the matrix has n={}",
            schedule.n,
            a.n()
        )));
    }
    let report = a.check_partial_positive(PositivityMode::Semidefinite, tol)?;
    if !report.ok {
        return Err(Error::NotPartialPositive(report.failing_clique.unwrap_or_default()));
    }

    let mut graph = a.graph_of().clone();
    let mut working = a.to_dense_with(Complex64::new(0.0, 0.0));
    let mut steps = Vec::with_capacity(schedule.steps.len());
    for step in &schedule.steps {
        let (i, j) = step.edge;
        if graph.has_edge(i, j) {
            return Err(Error::InvalidSchedule(format!(
                "step inserts ({i},{j}) which is already present"
            )));
        }
        // all designated pairs other than the inserted edge must be edges
        for (a_idx, &u) in step.designated.iter().enumerate() {
            if u == 0 || u > graph.n() {
                return Err(Error::InvalidSchedule(format!("vertex {u} out of range")));
            }
            for &v in &step.designated[a_idx + 1..] {
                let is_new_edge = (u.min(v), u.max(v)) == (i.min(j), i.max(j));
                if !is_new_edge && !graph.has_edge(u, v) {
                    return Err(Error::InvalidSchedule(format!(
                        "designated clique {:?} has unspecified pair ({u},{v})",
                        step.designated
                    )));
                }
            }
        }
        let predicted = step.predicted_bound().ok_or_else(|| {
            Error::InvalidSchedule(format!(
                "designated clique {:?} missing from the step's clique list",
                step.designated
            ))
        })?;
        let indices: Vec<usize> = step.designated.iter().map(|&v| v - 1).collect();
        let sub = working.principal_submatrix(&indices);
        let p_pos = step.designated.iter().position(|&v| v == i).ok_or_else(|| {
            Error::InvalidSchedule(format!("designated clique misses endpoint {i}"))
        })?;
        let q_pos = step.designated.iter().position(|&v| v == j).ok_or_else(|| {
            Error::InvalidSchedule(format!("designated clique misses endpoint {j}"))
        })?;
        let prob = SingleUnknownProblem::new(sub, p_pos, q_pos, Objective::MinimizeNegatives)?;
        let sol = prob.solve(tol);
        working.set_sym(j - 1, i - 1, sol.value);
        graph.add_edge(i, j)?;
        let achieved = sol.inertia.minus;
        steps.push(StepCertificate {
            edge: step.edge,
            designated: step.designated.clone(),
            predicted,
            achieved_minus: achieved,
            target_minus: sol.target_minus,
            method: sol.method,
            certified: sol.certified && achieved <= predicted as usize,
        });
    }
    if !graph.is_complete() {
        return Err(Error::InvalidSchedule(
            "schedule does not insert every non-edge of the pattern".into(),
        ));
    }
    // specified entries must be untouched
    for v in 1..=a.n() {
        debug_assert_eq!(working.get(v - 1, v - 1).re, a.diag(v));
    }
    for (i, j) in a.graph_of().edges() {
        debug_assert_eq!(Some(working.get(i - 1, j - 1)), a.get(i, j));
    }
    let inertia = working.inertia(tol);
    let all_certified = steps.iter().all(|s| s.certified);
    Ok(CompletionResult { matrix: working, inertia, steps, all_certified })
}
