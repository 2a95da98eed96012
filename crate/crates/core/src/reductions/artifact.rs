use std::collections::BTreeMap;

use crate::graph::{EdgeId, TemporalGraph, Timestamp, Vertex};
use crate::reductions::cnf::CnfFormula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    SatWalk { forest: bool },
    NaeLocalTour,
    NaeLocalTrail { lifetime: Timestamp, closed: bool, pin: Vertex },
    NaeTrail { lifetime: Timestamp, closed: bool },
    TwoTrailCover,
}

/// A reduced instance plus what is needed to translate witnesses.
///
/// Edges are recorded as vertex pairs `(min, max)` so they stay meaningful
/// when an artifact is extended with new vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub construction: Construction,
    pub formula: CnfFormula,
    pub graph: TemporalGraph,
    pub names: Vec<String>,
    /// Per variable: edges of the positive and negative structure.
    pub var_paths: Vec<[Vec<(Vertex, Vertex)>; 2]>,
    /// Per clause: its marker or gadget edges.
    pub clause_edges: Vec<Vec<(Vertex, Vertex)>>,
    /// Named anchor vertices (`s_1`, `t`, `T`, `u`, ...).
    pub special: BTreeMap<String, Vertex>,
}

impl ReductionArtifact {
    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edge_ids(&self, pairs: &[(Vertex, Vertex)]) -> Vec<EdgeId> {
        pairs
            .iter()
            .map(|&(a, b)| self.graph.edge_id(a, b).expect("artifact edge"))
            .collect()
    }

    /// Edge ids of `P_i` (positive) and `P̄_i` (negative), 1-based `i`.
    pub fn var_path_ids(&self, i: usize) -> [Vec<EdgeId>; 2] {
        let [p, n] = &self.var_paths[i - 1];
        [self.edge_ids(p), self.edge_ids(n)]
    }
}

/// Incremental vertex/edge collection with names.
#[derive(Debug, Default)]
pub(crate) struct Builder {
    pub names: Vec<String>,
    pub edges: Vec<(Vertex, Vertex, Vec<Timestamp>)>,
}

impl Builder {
    pub fn vertex(&mut self, name: impl Into<String>) -> Vertex {
        self.names.push(name.into());
        self.names.len() - 1
    }

    pub fn edge(&mut self, u: Vertex, v: Vertex, labels: Vec<Timestamp>) -> (Vertex, Vertex) {
        self.edges.push((u, v, labels));
        pair(u, v)
    }

    pub fn graph(&self, lifetime: Timestamp) -> TemporalGraph {
        TemporalGraph::new(self.names.len(), lifetime, self.edges.iter().cloned()).expect("construction is simple")
    }
}

pub(crate) fn pair(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

pub(crate) fn literal_name(lit: i32) -> String {
    let (v, positive) = crate::reductions::cnf::var_of(lit);
    if positive {
        format!("x_{v}")
    } else {
        format!("~x_{v}")
    }
}
