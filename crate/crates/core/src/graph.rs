//! Temporal graphs, their snapshots, and the static-graph helpers shared by
//! the solvers.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

/// Dense vertex id, `0..n`.
pub type Vertex = usize;
/// Index of an edge in canonical order (sorted by `(min endpoint, max endpoint)`).
pub type EdgeId = usize;
/// Timestamps start at 1.
pub type Timestamp = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge #{index}: self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: Vertex },
    #[error("edge #{index}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { index: usize, u: Vertex, v: Vertex },
    #[error("edge #{index}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { index: usize, vertex: Vertex, n: usize },
    #[error("edge #{index}: empty label set")]
    EmptyLabels { index: usize },
    #[error("edge #{index}: label {label} outside 1..={lifetime}")]
    LabelOutOfRange { index: usize, label: Timestamp, lifetime: Timestamp },
    #[error("lifetime must be at least 1")]
    ZeroLifetime,
    #[error("timestamp {time} outside 1..={lifetime}")]
    TimeOutOfRange { time: Timestamp, lifetime: Timestamp },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TemporalEdge {
    /// Smaller endpoint.
    pub u: Vertex,
    /// Larger endpoint.
    pub v: Vertex,
    labels: Vec<Timestamp>,
}

impl TemporalEdge {
    /// Sorted, deduplicated, non-empty.
    pub fn labels(&self) -> &[Timestamp] {
        &self.labels
    }

    pub fn is_active(&self, t: Timestamp) -> bool {
        self.labels.binary_search(&t).is_ok()
    }

    pub fn max_label(&self) -> Timestamp {
        *self.labels.last().expect("label sets are non-empty")
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// An undirected simple graph whose edges carry sets of activation times.
///
/// Edges are stored in canonical order, so two graphs built from the same
/// edge set (in any order) are identical, ids included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    n: usize,
    lifetime: Timestamp,
    edges: Vec<TemporalEdge>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    index: HashMap<(Vertex, Vertex), EdgeId>,
}

impl TemporalGraph {
    /// Builds a graph from `(u, v, labels)` triples. Errors refer to the
    /// position of the offending triple in the input.
    pub fn new<I>(n: usize, lifetime: Timestamp, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Vec<Timestamp>)>,
    {
        if lifetime == 0 {
            return Err(GraphError::ZeroLifetime);
        }
        let mut list = Vec::new();
        let mut seen = HashMap::new();
        for (index, (a, b, mut labels)) in edges.into_iter().enumerate() {
            if a == b {
                return Err(GraphError::SelfLoop { index, vertex: a });
            }
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { index, vertex: x, n });
                }
            }
            labels.sort_unstable();
            labels.dedup();
            if labels.is_empty() {
                return Err(GraphError::EmptyLabels { index });
            }
            if let Some(&label) = labels.iter().find(|&&t| t == 0 || t > lifetime) {
                return Err(GraphError::LabelOutOfRange { index, label, lifetime });
            }
            let (u, v) = (a.min(b), a.max(b));
            if seen.insert((u, v), index).is_some() {
                return Err(GraphError::DuplicateEdge { index, u, v });
            }
            list.push(TemporalEdge { u, v, labels });
        }
        list.sort_by_key(|e| (e.u, e.v));
        Ok(Self::from_sorted(n, lifetime, list))
    }

    /// Every edge active at every timestamp `1..=lifetime`.
    pub fn dynamic<I>(n: usize, lifetime: Timestamp, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let full: Vec<Timestamp> = (1..=lifetime).collect();
        Self::new(n, lifetime, pairs.into_iter().map(|(u, v)| (u, v, full.clone())))
    }

    fn from_sorted(n: usize, lifetime: Timestamp, edges: Vec<TemporalEdge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut index = HashMap::with_capacity(edges.len());
        for (id, e) in edges.iter().enumerate() {
            adj[e.u].push((e.v, id));
            adj[e.v].push((e.u, id));
            index.insert((e.u, e.v), id);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        TemporalGraph { n, lifetime, edges, adj, index }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn lifetime(&self) -> Timestamp {
        self.lifetime
    }

    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &TemporalEdge {
        &self.edges[id]
    }

    pub fn edge_id(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        self.index.get(&(a.min(b), a.max(b))).copied()
    }

    /// Neighbours of `v` with the connecting edge, in increasing neighbour order.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Largest label actually used, 0 for an edgeless graph.
    pub fn max_label(&self) -> Timestamp {
        self.edges.iter().map(TemporalEdge::max_label).max().unwrap_or(0)
    }

    /// True when every edge is active at every timestamp of the lifetime.
    pub fn is_dynamic_based(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.labels.len() == self.lifetime as usize)
    }

    /// The static graph of edges active at `time`.
    pub fn snapshot(&self, time: Timestamp) -> Result<StaticGraph, GraphError> {
        if time == 0 || time > self.lifetime {
            return Err(GraphError::TimeOutOfRange { time, lifetime: self.lifetime });
        }
        let (pairs, origin) = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_active(time))
            .map(|(id, e)| ((e.u, e.v), id))
            .unzip();
        Ok(StaticGraph::with_origin(self.n, pairs, origin))
    }

    /// The underlying static graph (all edges, ids preserved).
    pub fn base_graph(&self) -> StaticGraph {
        StaticGraph::with_origin(
            self.n,
            self.edges.iter().map(|e| (e.u, e.v)).collect(),
            (0..self.edges.len()).collect(),
        )
    }

    /// Timestamps whose snapshot has at least one edge, ascending.
    pub fn active_times(&self) -> Vec<Timestamp> {
        let mut times: Vec<Timestamp> =
            self.edges.iter().flat_map(|e| e.labels.iter().copied()).collect();
        times.sort_unstable();
        times.dedup();
        times
    }
}

/// A simple undirected graph. Edge ids inside it are local indices; `origin`
/// maps them back to the temporal graph it was cut from (identity otherwise).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    origin: Vec<EdgeId>,
    adj: Vec<Vec<(Vertex, usize)>>,
}

impl StaticGraph {
    /// Panics on self-loops or out-of-range endpoints; use
    /// [`TemporalGraph::new`] for validated input.
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let origin = (0..edges.len()).collect();
        Self::with_origin(n, edges, origin)
    }

    fn with_origin(n: usize, edges: Vec<(Vertex, Vertex)>, origin: Vec<EdgeId>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            assert!(u != v && u < n && v < n, "invalid edge ({u}, {v}) for n = {n}");
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&(w, i)| (i, w));
        }
        StaticGraph { n, edges, origin, adj }
    }

    /// Subgraph on the same vertex set keeping the given local edges.
    pub fn edge_subgraph(&self, keep: &[usize]) -> StaticGraph {
        let edges = keep.iter().map(|&i| self.edges[i]).collect();
        let origin = keep.iter().map(|&i| self.origin[i]).collect();
        StaticGraph::with_origin(self.n, edges, origin)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Id of local edge `i` in the originating temporal graph.
    pub fn origin(&self, i: usize) -> EdgeId {
        self.origin[i]
    }

    /// Incident `(neighbour, local edge)` pairs in increasing edge order.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn contains_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adj[a].iter().any(|&(w, _)| w == b)
    }
}

/// A connected component: sorted vertices and sorted origin edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl Component {
    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Components ordered by smallest vertex; isolated vertices are singletons.
pub fn connected_components(g: &StaticGraph) -> Vec<Component> {
    let labels = component_labels(g);
    let count = labels.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut comps = vec![Component { vertices: Vec::new(), edges: Vec::new() }; count];
    for (v, &c) in labels.iter().enumerate() {
        comps[c].vertices.push(v);
    }
    for (i, &(u, _)) in g.edges.iter().enumerate() {
        comps[labels[u]].edges.push(g.origin[i]);
    }
    for c in &mut comps {
        c.edges.sort_unstable();
    }
    comps
}

/// Component index per vertex; components are numbered by smallest vertex.
pub fn component_labels(g: &StaticGraph) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for s in 0..g.n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &g.adj[x] {
                if label[y] == usize::MAX {
                    label[y] = next;
                    queue.push_back(y);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn odd_degree_vertices(g: &StaticGraph) -> Vec<Vertex> {
    (0..g.n).filter(|&v| g.degree(v) % 2 == 1).collect()
}

/// Number of components that carry at least one edge.
pub fn nontrivial_component_count(g: &StaticGraph) -> usize {
    connected_components(g).iter().filter(|c| !c.is_trivial()).count()
}

/// Static Eulerian-trail condition: one nontrivial component and at most two
/// odd vertices (none when `closed`).
pub fn has_static_euler_trail(g: &StaticGraph, closed: bool) -> bool {
    let odd = odd_degree_vertices(g).len();
    nontrivial_component_count(g) <= 1 && if closed { odd == 0 } else { odd <= 2 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> TemporalGraph {
        // a=0, b=1, c=2
        TemporalGraph::new(3, 2, [(0, 1, vec![1, 2]), (1, 2, vec![2])]).unwrap()
    }

    #[test]
    fn snapshot_keeps_active_edges_only() {
        let g = sample();
        let s1 = g.snapshot(1).unwrap();
        assert_eq!(s1.edges(), &[(0, 1)]);
        assert_eq!(s1.vertex_count(), 3);
        let s2 = g.snapshot(2).unwrap();
        assert_eq!(s2.edge_count(), 2);
        assert!(matches!(g.snapshot(3), Err(GraphError::TimeOutOfRange { .. })));
        assert!(matches!(g.snapshot(0), Err(GraphError::TimeOutOfRange { .. })));
    }

    #[test]
    fn dynamic_snapshots_equal_base() {
        let g = TemporalGraph::dynamic(4, 3, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(g.is_dynamic_based());
        for t in 1..=3 {
            assert_eq!(g.snapshot(t).unwrap().edges(), g.base_graph().edges());
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            TemporalGraph::new(2, 2, [(0, 0, vec![1])]),
            Err(GraphError::SelfLoop { index: 0, vertex: 0 })
        );
        assert_eq!(
            TemporalGraph::new(2, 2, [(0, 1, vec![1]), (1, 0, vec![2])]),
            Err(GraphError::DuplicateEdge { index: 1, u: 0, v: 1 })
        );
        assert!(matches!(
            TemporalGraph::new(2, 2, [(0, 1, vec![3])]),
            Err(GraphError::LabelOutOfRange { label: 3, .. })
        ));
        assert!(matches!(
            TemporalGraph::new(2, 2, [(0, 1, vec![])]),
            Err(GraphError::EmptyLabels { .. })
        ));
        assert!(matches!(
            TemporalGraph::new(2, 2, [(0, 5, vec![1])]),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn canonical_edge_order_ignores_input_order() {
        let a = TemporalGraph::new(3, 1, [(2, 1, vec![1]), (0, 1, vec![1])]).unwrap();
        let b = TemporalGraph::new(3, 1, [(0, 1, vec![1]), (1, 2, vec![1])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_id(2, 1), Some(1));
    }

    #[test]
    fn components_of_small_graphs() {
        let g = StaticGraph::new(3, vec![(0, 1)]);
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vec![0, 1]);
        assert_eq!(comps[1].vertices, vec![2]);
        assert!(comps[1].is_trivial());

        let empty = StaticGraph::new(3, vec![]);
        assert_eq!(connected_components(&empty).len(), 3);

        let path = StaticGraph::new(3, vec![(0, 1), (1, 2)]);
        let comps = connected_components(&path);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].vertices.len(), 3);
        assert_eq!(comps[0].edges.len(), 2);
    }

    #[test]
    fn odd_vertices() {
        let path = StaticGraph::new(3, vec![(0, 1), (1, 2)]);
        assert_eq!(odd_degree_vertices(&path), vec![0, 2]);
        let triangle = StaticGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]);
        assert!(odd_degree_vertices(&triangle).is_empty());
        // forced-edge gadget: u=0, w1..w4 = 1..4, v=5
        let gadget = StaticGraph::new(
            6,
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (2, 4)],
        );
        assert_eq!(odd_degree_vertices(&gadget), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn euler_trail_condition() {
        let path = StaticGraph::new(3, vec![(0, 1), (1, 2)]);
        assert!(has_static_euler_trail(&path, false));
        assert!(!has_static_euler_trail(&path, true));
        let k4 = StaticGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(!has_static_euler_trail(&k4, false));
        let two = StaticGraph::new(4, vec![(0, 1), (2, 3)]);
        assert!(!has_static_euler_trail(&two, false));
    }
}
