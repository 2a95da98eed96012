#![allow(dead_code)]

use std::collections::HashSet;

use tempeuler::{TemporalGraph, TemporalWalk, TimeOrder, WalkKind};
use tempeuler::verify::Repetition;

/// Straight-line re-statement of the witness rules, kept free of the
/// library's verifier so the two can be compared.
pub fn reference_valid(g: &TemporalGraph, w: &TemporalWalk, kind: WalkKind, order: TimeOrder) -> bool {
    if w.start >= g.vertex_count().max(1) {
        return false;
    }
    let mut at = w.start;
    let mut last = None;
    let mut used_edges = HashSet::new();
    let mut used_pairs = HashSet::new();
    for s in &w.steps {
        if s.from != at {
            return false;
        }
        let Some(e) = g.edge_id(s.from, s.to) else { return false };
        if !g.edge(e).is_active(s.time) {
            return false;
        }
        if let Some(p) = last {
            let ok = match order {
                TimeOrder::NonDecreasing => s.time >= p,
                TimeOrder::Strict => s.time > p,
            };
            if !ok {
                return false;
            }
        }
        let fresh = match kind.repetition() {
            Repetition::Free => true,
            Repetition::OncePerSnapshot => used_pairs.insert((e, s.time)),
            Repetition::Never => used_edges.insert(e),
        };
        if !fresh {
            return false;
        }
        used_edges.insert(e);
        last = Some(s.time);
        at = s.to;
    }
    if used_edges.len() != g.edge_count() {
        return false;
    }
    !kind.is_closed() || at == w.start
}

/// Exhaustive search over step sequences for the trail-like kinds; feasible
/// when some sequence is a valid witness. Only for tiny graphs.
pub fn brute_force_trail(g: &TemporalGraph, kind: WalkKind, order: TimeOrder) -> bool {
    assert!(kind.repetition() != Repetition::Free);
    if g.edge_count() == 0 {
        return true;
    }
    fn go(
        g: &TemporalGraph,
        kind: WalkKind,
        order: TimeOrder,
        start: usize,
        at: usize,
        last: u32,
        used: &mut Vec<(usize, u32)>,
    ) -> bool {
        let covered: HashSet<usize> = used.iter().map(|&(e, _)| e).collect();
        if covered.len() == g.edge_count() && (!kind.is_closed() || at == start) {
            return true;
        }
        for &(to, e) in g.neighbors(at) {
            for &t in g.edge(e).labels() {
                let ok = match order {
                    TimeOrder::NonDecreasing => t >= last,
                    TimeOrder::Strict => t > last,
                };
                let repeat = match kind.repetition() {
                    Repetition::Never => covered.contains(&e),
                    _ => used.contains(&(e, t)),
                };
                if !ok || repeat {
                    continue;
                }
                used.push((e, t));
                if go(g, kind, order, start, to, t, used) {
                    return true;
                }
                used.pop();
            }
        }
        false
    }
    (0..g.vertex_count()).any(|s| g.degree(s) > 0 && go(g, kind, order, s, s, 0, &mut Vec::new()))
}
