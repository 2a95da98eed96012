use std::collections::BTreeSet;

use crate::graph::{Timestamp, Vertex};

/// One timed traversal of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub from: Vertex,
    pub to: Vertex,
    pub time: Timestamp,
}

impl Step {
    pub fn new(from: Vertex, to: Vertex, time: Timestamp) -> Self {
        Step { from, to, time }
    }
}

/// A start vertex plus a sequence of timed traversals. Validity against a
/// graph is checked by [`crate::verify::verify`], not on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TemporalWalk {
    pub start: Vertex,
    pub steps: Vec<Step>,
}

impl TemporalWalk {
    pub fn new(start: Vertex, steps: Vec<Step>) -> Self {
        TemporalWalk { start, steps }
    }

    pub fn empty(start: Vertex) -> Self {
        TemporalWalk { start, steps: Vec::new() }
    }

    /// Final vertex (the start for an empty walk).
    pub fn end(&self) -> Vertex {
        self.steps.last().map_or(self.start, |s| s.to)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Steps taken at time `t`. On a valid walk these form one contiguous run.
    pub fn restrict(&self, t: Timestamp) -> Vec<Step> {
        self.steps.iter().copied().filter(|s| s.time == t).collect()
    }

    /// Vertices touched by the steps at time `t`.
    pub fn vertices_at(&self, t: Timestamp) -> BTreeSet<Vertex> {
        self.steps
            .iter()
            .filter(|s| s.time == t)
            .flat_map(|s| [s.from, s.to])
            .collect()
    }

    /// Distinct timestamps used, ascending.
    pub fn times(&self) -> Vec<Timestamp> {
        let set: BTreeSet<Timestamp> = self.steps.iter().map(|s| s.time).collect();
        set.into_iter().collect()
    }

    /// Appends steps, shifting nothing; callers keep chaining consistent.
    pub fn extend(&mut self, steps: impl IntoIterator<Item = Step>) {
        self.steps.extend(steps);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restrict_selects_one_timestamp() {
        // c=2 -> b=1 @1, b -> a=0 @2
        let w = TemporalWalk::new(2, vec![Step::new(2, 1, 1), Step::new(1, 0, 2)]);
        assert_eq!(w.restrict(1), vec![Step::new(2, 1, 1)]);
        assert!(w.restrict(3).is_empty());
        assert_eq!(w.end(), 0);
        assert_eq!(w.times(), vec![1, 2]);
    }
}
