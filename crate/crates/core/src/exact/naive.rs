//! Breadth-first enumeration of step sequences with no pruning, used as an
//! independent oracle in tests.

use rustc_hash::FxHashSet;

use crate::graph::{TemporalGraph, Timestamp, Vertex};
use crate::verify::{ProblemVariant, Repetition};
use crate::walk::{Step, TemporalWalk};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NaiveOutcome {
    /// A shortest witness; ties go to the lowest start, then to the first
    /// sequence in neighbour/label order.
    Feasible(TemporalWalk),
    InfeasibleWithinBound,
}

impl NaiveOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, NaiveOutcome::Feasible(_))
    }
}

/// `2*m*tau + tau*n` steps for walks, `m*tau` for local trails, `m` for trails.
pub fn default_max_steps(g: &TemporalGraph, variant: ProblemVariant) -> usize {
    let (n, m, tau) = (g.vertex_count(), g.edge_count(), g.lifetime() as usize);
    match variant.kind.repetition() {
        Repetition::Free => 2 * m * tau + tau * n,
        Repetition::OncePerSnapshot => m * tau,
        Repetition::Never => m,
    }
}

pub fn naive_oracle_default(g: &TemporalGraph, variant: ProblemVariant) -> NaiveOutcome {
    naive_oracle(g, variant, default_max_steps(g, variant))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct State {
    /// Kept only for closed variants; open searches merge starts.
    start: Vertex,
    pos: Vertex,
    time: Timestamp,
    covered: u64,
    /// Edges used at `time` (local trails only).
    current: u64,
}

/// Panics if `g` has more than 64 edges.
pub fn naive_oracle(g: &TemporalGraph, variant: ProblemVariant, max_steps: usize) -> NaiveOutcome {
    let m = g.edge_count();
    assert!(m <= 64, "naive oracle supports at most 64 edges");
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let closed = variant.kind.is_closed();
    let repetition = variant.kind.repetition();
    let accept = |s: &State| s.covered == full && (!closed || s.pos == s.start);
    let key_start = |v: Vertex| if closed { v } else { 0 };

    // (state, real start, parent index, step into it)
    let mut nodes: Vec<(State, Vertex, usize, Option<Step>)> = Vec::new();
    let mut seen = FxHashSet::default();
    let starts: Vec<Vertex> = if g.vertex_count() == 0 { vec![0] } else { (0..g.vertex_count()).collect() };
    for v in starts {
        let s = State { start: key_start(v), pos: v, time: 0, covered: 0, current: 0 };
        if seen.insert(s) {
            nodes.push((s, v, usize::MAX, None));
        }
    }
    let mut level = 0..nodes.len();
    for depth in 0..=max_steps {
        if let Some(i) = level.clone().find(|&i| accept(&nodes[i].0)) {
            return NaiveOutcome::Feasible(rebuild(&nodes, i));
        }
        if depth == max_steps {
            break;
        }
        let begin = nodes.len();
        for i in level.clone() {
            let (s, root) = (nodes[i].0, nodes[i].1);
            for &(w, e) in g.neighbors(s.pos) {
                let bit = 1u64 << e;
                for &t in g.edge(e).labels() {
                    if !variant.order.allows(s.time, t) {
                        continue;
                    }
                    let ok = match repetition {
                        Repetition::Free => true,
                        Repetition::OncePerSnapshot => t != s.time || s.current & bit == 0,
                        Repetition::Never => s.covered & bit == 0,
                    };
                    if !ok {
                        continue;
                    }
                    let current = match repetition {
                        Repetition::OncePerSnapshot if t == s.time => s.current | bit,
                        Repetition::OncePerSnapshot => bit,
                        _ => 0,
                    };
                    let next = State { start: s.start, pos: w, time: t, covered: s.covered | bit, current };
                    if seen.insert(next) {
                        nodes.push((next, root, i, Some(Step::new(s.pos, w, t))));
                    }
                }
            }
        }
        level = begin..nodes.len();
        if level.is_empty() {
            break;
        }
    }
    NaiveOutcome::InfeasibleWithinBound
}

fn rebuild(nodes: &[(State, Vertex, usize, Option<Step>)], mut i: usize) -> TemporalWalk {
    let start = nodes[i].1;
    let mut steps = Vec::new();
    while let Some(step) = nodes[i].3 {
        steps.push(step);
        i = nodes[i].2;
    }
    steps.reverse();
    TemporalWalk::new(start, steps)
}
