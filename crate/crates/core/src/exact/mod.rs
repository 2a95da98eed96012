//! Exponential-time exact solvers for desk-scale instances.
//!
//! Every solver runs one search per candidate start vertex, in increasing
//! order, and reports the lowest start that succeeds. Searches never share
//! state, so running them on several threads gives the same witness and the
//! same stats as running them in order.

mod engine;
mod cover;
mod naive;
mod spaces;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{TemporalGraph, Vertex};
use crate::verify::{verify, ProblemVariant, Repetition, TimeOrder, WalkKind};
use crate::walk::TemporalWalk;

pub use cover::{two_trail_cover_exact, CoverResult, TrailCover, DEFAULT_COVER_BUDGET};
pub use naive::{default_max_steps, naive_oracle, naive_oracle_default, NaiveOutcome};

use engine::Outcome;

pub const DEFAULT_WALK_BUDGET: usize = 24;
/// Budget on `m * lifetime` for the local variants.
pub const DEFAULT_LOCAL_BUDGET: usize = 26;
pub const DEFAULT_TRAIL_BUDGET: usize = 26;
/// Edge sets are `u64` masks.
pub const MAX_EDGES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    Feasible,
    Infeasible,
    BudgetExceeded,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Feasible => "feasible",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SearchStats {
    /// States expanded.
    pub nodes: u64,
    /// Largest visited-state table of a single search.
    pub peak_states: u64,
    /// Start vertices searched.
    pub starts: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: SearchStats) {
        self.nodes += other.nodes;
        self.peak_states = self.peak_states.max(other.peak_states);
        self.starts += other.starts;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub witness: Option<TemporalWalk>,
    pub stats: SearchStats,
}

impl SolveResult {
    pub fn is_feasible(&self) -> bool {
        self.status == SolveStatus::Feasible
    }

    fn budget() -> Self {
        SolveResult { status: SolveStatus::BudgetExceeded, witness: None, stats: SearchStats::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub order: TimeOrder,
    /// Search only from this vertex.
    pub start: Option<Vertex>,
    /// Overrides the per-solver size budget.
    pub budget: Option<usize>,
    /// Per-start cap on expanded states.
    pub max_nodes: Option<u64>,
    pub threads: usize,
    /// Odd-vertex pruning for closed local searches on dynamic-based graphs
    /// with lifetime 2.
    pub odd_vertex_pruning: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            order: TimeOrder::NonDecreasing,
            start: None,
            budget: None,
            max_nodes: None,
            threads: 1,
            odd_vertex_pruning: true,
        }
    }
}

impl SolveOptions {
    pub fn strict() -> Self {
        SolveOptions { order: TimeOrder::Strict, ..Self::default() }
    }

    pub fn pinned(start: Vertex) -> Self {
        SolveOptions { start: Some(start), ..Self::default() }
    }
}

pub fn solve_walk_exact(g: &TemporalGraph, closed: bool, opts: &SolveOptions) -> SolveResult {
    let budget = opts.budget.unwrap_or(DEFAULT_WALK_BUDGET);
    if g.edge_count() > budget.min(MAX_EDGES) {
        return SolveResult::budget();
    }
    let space = spaces::WalkSpace::new(g, closed, opts.order);
    run(g, WalkKind::from_parts(Repetition::Free, closed), opts, |s| space.search(s, opts.max_nodes))
}

pub fn solve_local_trail_exact(g: &TemporalGraph, closed: bool, opts: &SolveOptions) -> SolveResult {
    let budget = opts.budget.unwrap_or(DEFAULT_LOCAL_BUDGET);
    if g.edge_count() > MAX_EDGES || g.edge_count() * g.lifetime() as usize > budget {
        return SolveResult::budget();
    }
    let prune = opts.odd_vertex_pruning
        && closed
        && g.lifetime() == 2
        && g.is_dynamic_based()
        && g.vertex_count() <= 128;
    let space = spaces::LocalSpace::new(g, closed, opts.order, prune);
    run(g, WalkKind::from_parts(Repetition::OncePerSnapshot, closed), opts, |s| {
        space.search(s, opts.max_nodes)
    })
}

pub fn solve_trail_exact(g: &TemporalGraph, closed: bool, opts: &SolveOptions) -> SolveResult {
    let budget = opts.budget.unwrap_or(DEFAULT_TRAIL_BUDGET);
    if g.edge_count() > budget.min(MAX_EDGES) {
        return SolveResult::budget();
    }
    let space = spaces::TrailSpace::new(g, closed, opts.order);
    run(g, WalkKind::from_parts(Repetition::Never, closed), opts, |s| space.search(s, opts.max_nodes))
}

/// Dispatches on `variant.kind`; `variant.order` overrides `opts.order`.
pub fn solve_exact(g: &TemporalGraph, variant: ProblemVariant, opts: &SolveOptions) -> SolveResult {
    let opts = SolveOptions { order: variant.order, ..*opts };
    let closed = variant.kind.is_closed();
    match variant.kind.repetition() {
        Repetition::Free => solve_walk_exact(g, closed, &opts),
        Repetition::OncePerSnapshot => solve_local_trail_exact(g, closed, &opts),
        Repetition::Never => solve_trail_exact(g, closed, &opts),
    }
}

fn candidate_starts(g: &TemporalGraph, pinned: Option<Vertex>) -> Vec<Vertex> {
    match pinned {
        Some(s) if s < g.vertex_count() => vec![s],
        Some(_) => Vec::new(),
        None => (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect(),
    }
}

fn run<F>(g: &TemporalGraph, kind: WalkKind, opts: &SolveOptions, search: F) -> SolveResult
where
    F: Fn(Vertex) -> (Outcome, SearchStats) + Sync,
{
    if g.edge_count() == 0 {
        let start = opts.start.unwrap_or(0);
        let ok = start < g.vertex_count() || (g.vertex_count() == 0 && start == 0);
        return SolveResult {
            status: if ok { SolveStatus::Feasible } else { SolveStatus::Infeasible },
            witness: ok.then(|| TemporalWalk::empty(start)),
            stats: SearchStats::default(),
        };
    }
    let starts = candidate_starts(g, opts.start);
    let outcomes: Vec<(Outcome, SearchStats)> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        pool.install(|| starts.par_iter().map(|&s| search(s)).collect())
    } else {
        let mut out = Vec::new();
        for &s in &starts {
            let r = search(s);
            let found = matches!(r.0, Outcome::Found(_));
            out.push(r);
            if found {
                break;
            }
        }
        out
    };

    let mut stats = SearchStats::default();
    let mut budget_hit = false;
    for (&start, (outcome, s)) in starts.iter().zip(outcomes) {
        stats.absorb(s);
        match outcome {
            Outcome::Found(steps) => {
                let walk = TemporalWalk::new(start, steps);
                let variant = ProblemVariant { kind, order: opts.order };
                assert_eq!(verify(g, &walk, variant), Ok(()), "exact solver produced an invalid witness");
                return SolveResult { status: SolveStatus::Feasible, witness: Some(walk), stats };
            }
            Outcome::Exhausted => {}
            Outcome::Budget => budget_hit = true,
        }
    }
    let status = if budget_hit { SolveStatus::BudgetExceeded } else { SolveStatus::Infeasible };
    SolveResult { status, witness: None, stats }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StaticGraph;
    use crate::walk::Step;

    fn abc(ab: Vec<u32>, bc: Vec<u32>) -> TemporalGraph {
        TemporalGraph::new(3, 2, [(0, 1, ab), (1, 2, bc)]).unwrap()
    }

    #[test]
    fn walk_examples() {
        let g = abc(vec![2], vec![1]);
        let r = solve_walk_exact(&g, false, &SolveOptions::default());
        assert!(r.is_feasible());
        assert_eq!(
            naive_oracle_default(&g, WalkKind::Walk.into()),
            NaiveOutcome::Feasible(TemporalWalk::new(2, vec![Step::new(2, 1, 1), Step::new(1, 0, 2)]))
        );

        let split = TemporalGraph::new(4, 2, [(0, 1, vec![1]), (2, 3, vec![2])]).unwrap();
        let r = solve_walk_exact(&split, false, &SolveOptions::default());
        assert_eq!(r.status, SolveStatus::Infeasible);
        assert!(r.witness.is_none());
    }

    #[test]
    fn strict_order_blocks_same_time_pairs() {
        let g = abc(vec![1], vec![1]);
        assert!(solve_walk_exact(&g, false, &SolveOptions::default()).is_feasible());
        assert!(!solve_walk_exact(&g, false, &SolveOptions::strict()).is_feasible());
    }

    #[test]
    fn local_tour_on_single_edge() {
        let g = TemporalGraph::dynamic(2, 2, [(0, 1)]).unwrap();
        let r = solve_local_trail_exact(&g, true, &SolveOptions::default());
        let w = r.witness.unwrap();
        assert_eq!(w.steps, vec![Step::new(0, 1, 1), Step::new(1, 0, 2)]);
        assert!(!solve_trail_exact(&g, true, &SolveOptions::default()).is_feasible());
    }

    #[test]
    fn trail_examples() {
        let tri = TemporalGraph::new(3, 1, [(0, 1, vec![1]), (1, 2, vec![1]), (0, 2, vec![1])]).unwrap();
        assert!(solve_trail_exact(&tri, true, &SolveOptions::default()).is_feasible());

        // a=0, b=1, c=2: ab:{1}, bc:{2}, ca:{1}
        let g = TemporalGraph::new(3, 2, [(0, 1, vec![1]), (1, 2, vec![2]), (0, 2, vec![1])]).unwrap();
        let r = solve_trail_exact(&g, true, &SolveOptions::default());
        assert!(r.is_feasible());
        assert_eq!(r.witness.unwrap().steps.last().unwrap().time, 2);

        let k4 = TemporalGraph::dynamic(4, 1, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(solve_trail_exact(&k4, false, &SolveOptions::default()).status, SolveStatus::Infeasible);
    }

    #[test]
    fn budgets_and_pins() {
        let path = TemporalGraph::dynamic(3, 1, [(0, 1), (1, 2)]).unwrap();
        let opts = SolveOptions { budget: Some(1), ..SolveOptions::default() };
        assert_eq!(solve_trail_exact(&path, false, &opts).status, SolveStatus::BudgetExceeded);
        assert!(!solve_trail_exact(&path, false, &SolveOptions::pinned(1)).is_feasible());
        let r = solve_trail_exact(&path, false, &SolveOptions::pinned(2));
        assert_eq!(r.witness.unwrap().start, 2);

        let capped = SolveOptions { max_nodes: Some(1), ..SolveOptions::default() };
        let ring = TemporalGraph::dynamic(4, 2, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(solve_local_trail_exact(&ring, true, &capped).status, SolveStatus::BudgetExceeded);
    }

    #[test]
    fn edgeless_graph() {
        let g = TemporalGraph::new(2, 1, std::iter::empty()).unwrap();
        let r = solve_walk_exact(&g, true, &SolveOptions::default());
        assert_eq!(r.witness, Some(TemporalWalk::empty(0)));
        assert_eq!(
            naive_oracle_default(&g, WalkKind::Tour.into()),
            NaiveOutcome::Feasible(TemporalWalk::empty(0))
        );
    }

    #[test]
    fn naive_single_edge_tour() {
        let g = TemporalGraph::dynamic(2, 1, [(0, 1)]).unwrap();
        assert_eq!(naive_oracle_default(&g, WalkKind::Tour.into()), NaiveOutcome::InfeasibleWithinBound);
    }

    #[test]
    fn threads_keep_results() {
        let g = TemporalGraph::new(
            5,
            3,
            [(0, 1, vec![1, 3]), (1, 2, vec![2]), (2, 3, vec![3]), (3, 4, vec![1, 2]), (1, 3, vec![1])],
        )
        .unwrap();
        for closed in [false, true] {
            let a = solve_local_trail_exact(&g, closed, &SolveOptions::default());
            let b = solve_local_trail_exact(&g, closed, &SolveOptions { threads: 3, ..SolveOptions::default() });
            assert_eq!(a, b);
        }
    }

    #[test]
    fn two_trail_cover_stars() {
        let star = |k: usize| StaticGraph::new(k + 1, (1..=k).map(|v| (0, v)).collect());
        let r = two_trail_cover_exact(&star(4), None);
        assert_eq!(r.status, SolveStatus::Feasible);
        assert!(r.cover.unwrap().covers(&star(4)));
        assert_eq!(two_trail_cover_exact(&star(6), None).status, SolveStatus::Infeasible);
        let tri = StaticGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]);
        assert!(two_trail_cover_exact(&tri, None).cover.unwrap().second.is_empty());
    }
}
