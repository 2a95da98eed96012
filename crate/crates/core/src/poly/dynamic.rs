//! Dynamic-based graphs (every edge always active): walks reduce to
//! connectivity and trails to the static Eulerian-trail condition.

use thiserror::Error;

use crate::graph::{connected_components, TemporalGraph};
use crate::poly::traverse::{doubled_dfs, euler_trail};
use crate::walk::TemporalWalk;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph is not dynamic-based: some edge is inactive at some timestamp")]
pub struct NotDynamicBased;

/// Eulerian walk on a dynamic-based graph: exists iff at most one component
/// carries edges. The witness is a closed doubled DFS at time 1.
pub fn solve_dynamic_walk(g: &TemporalGraph) -> Result<Option<TemporalWalk>, NotDynamicBased> {
    if !g.is_dynamic_based() {
        return Err(NotDynamicBased);
    }
    let base = g.base_graph();
    let mut nontrivial = connected_components(&base).into_iter().filter(|c| !c.is_trivial());
    let Some(comp) = nontrivial.next() else {
        return Ok(Some(TemporalWalk::empty(0)));
    };
    if nontrivial.next().is_some() {
        return Ok(None);
    }
    let entry = comp.vertices[0];
    Ok(Some(TemporalWalk::new(entry, doubled_dfs(&base, entry, 1))))
}

/// Eulerian trail (tour when `closed`) on a dynamic-based graph, built by
/// Hierholzer's algorithm with every step at time 1.
pub fn solve_dynamic_trail(
    g: &TemporalGraph,
    closed: bool,
) -> Result<Option<TemporalWalk>, NotDynamicBased> {
    if !g.is_dynamic_based() {
        return Err(NotDynamicBased);
    }
    Ok(euler_trail(&g.base_graph(), closed, 1).map(|(start, steps)| TemporalWalk::new(start, steps)))
}
