//! Eulerian walks for a fixed lifetime via component chains.
//!
//! A walk can sweep an entire component of a snapshot once it stands on one
//! of its vertices, but can never leave that component during the snapshot.
//! Deciding whether an Eulerian walk exists therefore reduces to picking one
//! component per (nonempty) snapshot such that consecutive picks share a
//! vertex and the picks jointly cover every edge.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{component_labels, connected_components, Component, StaticGraph, TemporalGraph, Timestamp, Vertex};
use crate::poly::traverse::{doubled_dfs, shortest_path};
use crate::walk::TemporalWalk;

/// Certificate for an Eulerian walk: one component per nonempty snapshot,
/// consecutive components linked by a handoff vertex.
///
/// `times[i]` is the original timestamp of `components[i]`; empty snapshots
/// are skipped. `handoffs[i]` lies in both `components[i]` and
/// `components[i + 1]`. `entry` is where the walk starts (the first handoff
/// when there is more than one component).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentChain {
    pub entry: Vertex,
    pub times: Vec<Timestamp>,
    pub handoffs: Vec<Vertex>,
    pub components: Vec<Component>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("chain has {components} components but {times} timestamps and {handoffs} handoffs")]
    Shape { components: usize, times: usize, handoffs: usize },
    #[error("timestamps must be strictly increasing and within the lifetime")]
    Times,
    #[error("component {0} is not a component of its snapshot")]
    NotAComponent(usize),
    #[error("handoff {0} is not shared by its neighbouring components")]
    Handoff(usize),
    #[error("entry vertex is not in the first component")]
    Entry,
    #[error("edge {0} is not covered by any component")]
    Uncovered(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainOptions {
    /// Worker threads for the handoff enumeration; 1 runs inline.
    pub threads: usize,
}

impl Default for ChainOptions {
    fn default() -> Self {
        ChainOptions { threads: 1 }
    }
}

struct Layer {
    time: Timestamp,
    comp_of: Vec<usize>,
    comps: Vec<Component>,
    masks: Vec<FixedBitSet>,
}

fn layers(g: &TemporalGraph) -> Vec<Layer> {
    g.active_times()
        .into_iter()
        .map(|time| {
            let snap = g.snapshot(time).expect("active times are in range");
            let comp_of = component_labels(&snap);
            let comps = connected_components(&snap);
            let masks = comps
                .iter()
                .map(|c| {
                    let mut m = FixedBitSet::with_capacity(g.edge_count());
                    for &e in &c.edges {
                        m.insert(e);
                    }
                    m
                })
                .collect();
            Layer { time, comp_of, comps, masks }
        })
        .collect()
}

/// Finds the lexicographically least handoff sequence whose component chain
/// covers every edge, or `None` when the graph has no Eulerian walk.
pub fn solve_walk_fixed_tau(g: &TemporalGraph) -> Option<ComponentChain> {
    solve_walk_fixed_tau_with(g, ChainOptions::default())
}

pub fn solve_walk_fixed_tau_with(g: &TemporalGraph, opts: ChainOptions) -> Option<ComponentChain> {
    let n = g.vertex_count();
    let layers = layers(g);
    let m = g.edge_count();
    if layers.is_empty() {
        return Some(ComponentChain {
            entry: 0,
            times: Vec::new(),
            handoffs: Vec::new(),
            components: Vec::new(),
        });
    }
    let build = |entry: Vertex, handoffs: Vec<Vertex>| {
        let mut components = Vec::with_capacity(layers.len());
        components.push(layers[0].comps[layers[0].comp_of[entry]].clone());
        for (i, layer) in layers.iter().enumerate().skip(1) {
            components.push(layer.comps[layer.comp_of[handoffs[i - 1]]].clone());
        }
        ComponentChain { entry, times: layers.iter().map(|l| l.time).collect(), handoffs, components }
    };
    if layers.len() == 1 {
        let l = &layers[0];
        return (0..n)
            .find(|&v| l.masks[l.comp_of[v]].count_ones(..) == m)
            .map(|v| build(v, Vec::new()));
    }

    let search = |first: Vertex| -> Option<Vec<Vertex>> {
        let mut handoffs = vec![first];
        let acc = &layers[0].masks[layers[0].comp_of[first]];
        extend(&layers, m, &mut handoffs, acc).then_some(handoffs)
    };
    let found = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        pool.install(|| (0..n).into_par_iter().find_map_first(search))
    } else {
        (0..n).find_map(search)
    };
    found.map(|h| build(h[0], h))
}

/// Depth-first over handoffs `v_2, v_3, ...` in increasing order. `handoffs`
/// holds `v_1..v_k`; the component of layer `k` is the one containing `v_k`
/// in layer `k` (0-based), and the next handoff must lie in it.
fn extend(layers: &[Layer], m: usize, handoffs: &mut Vec<Vertex>, acc: &FixedBitSet) -> bool {
    let k = handoffs.len();
    let layer = &layers[k];
    let comp = layer.comp_of[handoffs[k - 1]];
    let mut next = acc.clone();
    next.union_with(&layer.masks[comp]);
    if k + 1 == layers.len() {
        return next.count_ones(..) == m;
    }
    for v in layer.comps[comp].vertices.iter().copied() {
        handoffs.push(v);
        if extend(layers, m, handoffs, &next) {
            return true;
        }
        handoffs.pop();
    }
    false
}

/// Checks every structural property of `chain` against `g`.
pub fn validate_chain(g: &TemporalGraph, chain: &ComponentChain) -> Result<(), ChainError> {
    let k = chain.components.len();
    if chain.times.len() != k || chain.handoffs.len() != k.saturating_sub(1) {
        return Err(ChainError::Shape {
            components: k,
            times: chain.times.len(),
            handoffs: chain.handoffs.len(),
        });
    }
    if chain.times.windows(2).any(|w| w[0] >= w[1])
        || chain.times.iter().any(|&t| t == 0 || t > g.lifetime())
    {
        return Err(ChainError::Times);
    }
    let mut covered = FixedBitSet::with_capacity(g.edge_count());
    for (i, (comp, &t)) in chain.components.iter().zip(&chain.times).enumerate() {
        let snap = g.snapshot(t).map_err(|_| ChainError::Times)?;
        let Some(&v) = comp.vertices.first() else {
            return Err(ChainError::NotAComponent(i));
        };
        if v >= g.vertex_count() || !connected_components(&snap).contains(comp) {
            return Err(ChainError::NotAComponent(i));
        }
        for &e in &comp.edges {
            covered.insert(e);
        }
    }
    if k > 0 && !chain.components[0].contains(chain.entry) {
        return Err(ChainError::Entry);
    }
    for (i, &h) in chain.handoffs.iter().enumerate() {
        if !chain.components[i].contains(h) || !chain.components[i + 1].contains(h) {
            return Err(ChainError::Handoff(i));
        }
    }
    if let Some(e) = (0..g.edge_count()).find(|&e| !covered.contains(e)) {
        return Err(ChainError::Uncovered(e));
    }
    Ok(())
}

/// Turns a valid chain into an Eulerian walk: at each timestamp, a doubled
/// DFS of the component from the entry vertex followed by a shortest path to
/// the next handoff.
pub fn chain_to_walk(g: &TemporalGraph, chain: &ComponentChain) -> Result<TemporalWalk, ChainError> {
    validate_chain(g, chain)?;
    let mut walk = TemporalWalk::empty(chain.entry);
    let mut at = chain.entry;
    for (i, (comp, &t)) in chain.components.iter().zip(&chain.times).enumerate() {
        let snap = g.snapshot(t).expect("validated");
        let keep: Vec<usize> = (0..snap.edge_count())
            .filter(|&j| comp.edges.binary_search(&snap.origin(j)).is_ok())
            .collect();
        let local: StaticGraph = snap.edge_subgraph(&keep);
        walk.extend(doubled_dfs(&local, at, t));
        if let Some(&next) = chain.handoffs.get(i) {
            walk.extend(shortest_path(&local, at, next, t).expect("handoff lies in component"));
            at = next;
        }
    }
    Ok(walk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify, WalkKind};

    #[test]
    fn single_timestamp() {
        let tri = TemporalGraph::dynamic(3, 1, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let chain = solve_walk_fixed_tau(&tri).unwrap();
        assert_eq!(chain.components.len(), 1);
        let w = chain_to_walk(&tri, &chain).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.start, w.end());
        assert_eq!(verify(&tri, &w, WalkKind::ClosedWalk.into()), Ok(()));

        let two = TemporalGraph::dynamic(4, 1, [(0, 1), (2, 3)]).unwrap();
        assert!(solve_walk_fixed_tau(&two).is_none());
    }

    #[test]
    fn disjoint_snapshots_are_infeasible() {
        let g = TemporalGraph::new(4, 2, [(0, 1, vec![1]), (2, 3, vec![2])]).unwrap();
        assert!(solve_walk_fixed_tau(&g).is_none());
    }

    #[test]
    fn empty_snapshots_are_skipped_and_restored() {
        // edges only at 2 and 5
        let g = TemporalGraph::new(3, 5, [(0, 1, vec![2]), (1, 2, vec![5])]).unwrap();
        let chain = solve_walk_fixed_tau(&g).unwrap();
        assert_eq!(chain.times, vec![2, 5]);
        assert_eq!(chain.handoffs, vec![1]);
        let w = chain_to_walk(&g, &chain).unwrap();
        assert_eq!(verify(&g, &w, WalkKind::Walk.into()), Ok(()));
        assert!(w.steps.iter().all(|s| s.time == 2 || s.time == 5));
    }

    #[test]
    fn waiting_component_yields_no_steps() {
        // snapshot 2 only has an edge far away; the walk waits at vertex 1
        // and picks it up again at time 3
        let g = TemporalGraph::new(
            5,
            3,
            [(0, 1, vec![1]), (3, 4, vec![2, 3]), (1, 2, vec![3]), (3, 2, vec![3]), (4, 2, vec![3])],
        )
        .unwrap();
        let chain = solve_walk_fixed_tau(&g).unwrap();
        let w = chain_to_walk(&g, &chain).unwrap();
        assert_eq!(verify(&g, &w, WalkKind::Walk.into()), Ok(()));
    }

    #[test]
    fn chain_validation_errors() {
        let g = TemporalGraph::new(3, 2, [(0, 1, vec![1]), (1, 2, vec![2])]).unwrap();
        let mut chain = solve_walk_fixed_tau(&g).unwrap();
        chain.handoffs[0] = 0;
        assert_eq!(chain_to_walk(&g, &chain), Err(ChainError::Handoff(0)));
        let mut chain = solve_walk_fixed_tau(&g).unwrap();
        chain.components.pop();
        assert!(matches!(chain_to_walk(&g, &chain), Err(ChainError::Shape { .. })));
    }

    #[test]
    fn threads_do_not_change_the_chain() {
        let g = TemporalGraph::new(
            5,
            3,
            [(0, 1, vec![1, 3]), (1, 2, vec![2]), (2, 3, vec![3]), (3, 4, vec![1, 2])],
        )
        .unwrap();
        let a = solve_walk_fixed_tau(&g);
        let b = solve_walk_fixed_tau_with(&g, ChainOptions { threads: 4 });
        assert_eq!(a, b);
    }
}
