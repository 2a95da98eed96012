//! Eulerian-trail test for dynamic digraphs with integer transit times.
//!
//! The infinite time-expanded digraph has an Eulerian trail exactly when the
//! finite digraph is balanced, its arcs lie in one weakly connected
//! component, and the transit times sum to -1 or 1.

use std::fmt;

use crate::graph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
    pub transit: i64,
}

/// Finite digraph with transit times; parallel arcs and loops are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DynamicDigraph {
    pub vertex_count: usize,
    pub arcs: Vec<Arc>,
}

impl DynamicDigraph {
    pub fn new(vertex_count: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex, i64)>) -> Self {
        let arcs = arcs
            .into_iter()
            .map(|(tail, head, transit)| Arc { tail, head, transit })
            .collect();
        DynamicDigraph { vertex_count, arcs }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrlinFailure {
    /// Condition 1: in-degree differs from out-degree.
    Unbalanced { vertex: Vertex, indegree: usize, outdegree: usize },
    /// Condition 2: arcs are spread over `components` weakly connected
    /// components (0 when there are no arcs).
    Disconnected { components: usize },
    /// Condition 3: transit sum outside {-1, 1}.
    TransitSum { sum: i64 },
}

impl OrlinFailure {
    pub fn condition(&self) -> u8 {
        match self {
            OrlinFailure::Unbalanced { .. } => 1,
            OrlinFailure::Disconnected { .. } => 2,
            OrlinFailure::TransitSum { .. } => 3,
        }
    }
}

impl fmt::Display for OrlinFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrlinFailure::Unbalanced { vertex, indegree, outdegree } => write!(
                f,
                "condition 1: vertex {vertex} has in-degree {indegree} and out-degree {outdegree}"
            ),
            OrlinFailure::Disconnected { components } => {
                write!(f, "condition 2: arcs span {components} weak components")
            }
            OrlinFailure::TransitSum { sum } => {
                write!(f, "condition 3: transit times sum to {sum}")
            }
        }
    }
}

/// Returns the first failed condition, in order 1, 2, 3.
pub fn orlin_check(d: &DynamicDigraph) -> Result<(), OrlinFailure> {
    let n = d.vertex_count;
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for a in &d.arcs {
        outdeg[a.tail] += 1;
        indeg[a.head] += 1;
    }
    if let Some(v) = (0..n).find(|&v| indeg[v] != outdeg[v]) {
        return Err(OrlinFailure::Unbalanced { vertex: v, indegree: indeg[v], outdegree: outdeg[v] });
    }

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for a in &d.arcs {
        let (ra, rb) = (find(&mut parent, a.tail), find(&mut parent, a.head));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut roots: Vec<usize> = d.arcs.iter().map(|a| find(&mut parent, a.tail)).collect();
    roots.sort_unstable();
    roots.dedup();
    if roots.len() != 1 {
        return Err(OrlinFailure::Disconnected { components: roots.len() });
    }

    let sum: i64 = d.arcs.iter().map(|a| a.transit).sum();
    if sum != 1 && sum != -1 {
        return Err(OrlinFailure::TransitSum { sum });
    }
    Ok(())
}
