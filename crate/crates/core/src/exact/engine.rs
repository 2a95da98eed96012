use std::collections::HashSet;
use std::hash::Hash;

use crate::exact::SearchStats;
use crate::walk::Step;

pub(crate) enum Outcome {
    Found(Vec<Step>),
    Exhausted,
    Budget,
}

/// A finite search space explored depth-first from one initial state.
pub(crate) trait Space {
    type State: Clone + Eq + Hash;

    fn accept(&self, s: &Self::State) -> bool;
    /// True when no completion of `s` can be accepted.
    fn dead(&self, s: &Self::State) -> bool;
    fn successors(&self, s: &Self::State, out: &mut Vec<(Step, Self::State)>);
}

struct Frame<S> {
    succ: Vec<(Step, S)>,
    next: usize,
}

/// Depth-first reachability with a global visited set; the witness is the
/// step sequence on the stack when an accepting state is first reached.
pub(crate) fn dfs<P: Space>(space: &P, init: P::State, max_nodes: Option<u64>) -> (Outcome, SearchStats) {
    let mut stats = SearchStats { starts: 1, ..SearchStats::default() };
    let mut visited: HashSet<P::State> = HashSet::new();
    visited.insert(init.clone());
    if space.accept(&init) {
        stats.peak_states = 1;
        return (Outcome::Found(Vec::new()), stats);
    }
    if space.dead(&init) {
        stats.peak_states = 1;
        return (Outcome::Exhausted, stats);
    }
    let expand = |s: &P::State| {
        let mut succ = Vec::new();
        space.successors(s, &mut succ);
        Frame { succ, next: 0 }
    };
    stats.nodes = 1;
    let mut stack = vec![expand(&init)];
    let mut path: Vec<Step> = Vec::new();
    let outcome = loop {
        let Some(top) = stack.last_mut() else {
            break Outcome::Exhausted;
        };
        if top.next == top.succ.len() {
            stack.pop();
            path.pop();
            continue;
        }
        let (step, state) = top.succ[top.next].clone();
        top.next += 1;
        if visited.contains(&state) {
            continue;
        }
        visited.insert(state.clone());
        path.push(step);
        if space.accept(&state) {
            break Outcome::Found(path);
        }
        if space.dead(&state) {
            path.pop();
            continue;
        }
        if max_nodes.is_some_and(|cap| stats.nodes >= cap) {
            break Outcome::Budget;
        }
        stats.nodes += 1;
        stack.push(expand(&state));
    };
    stats.peak_states = visited.len() as u64;
    (outcome, stats)
}
