//! Covering a static graph with two trails that may share edges.

use crate::exact::{SearchStats, SolveStatus};
use crate::graph::{StaticGraph, Vertex};
use crate::poly::traverse::euler_trail;

pub const DEFAULT_COVER_BUDGET: usize = 22;
/// The search tabulates all `2^m` edge subsets.
const HARD_CAP: usize = 28;

/// Two trails given as vertex sequences; an empty sequence is the empty trail.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrailCover {
    pub first: Vec<Vertex>,
    pub second: Vec<Vertex>,
}

impl TrailCover {
    /// Whether both sequences are trails of `g` and jointly cover every edge.
    pub fn covers(&self, g: &StaticGraph) -> bool {
        let mut covered = vec![false; g.edge_count()];
        for trail in [&self.first, &self.second] {
            let mut used = vec![false; g.edge_count()];
            for w in trail.windows(2) {
                let Some(&(_, e)) = g.incident(w[0]).iter().find(|&&(x, _)| x == w[1]) else {
                    return false;
                };
                if used[e] {
                    return false;
                }
                used[e] = true;
                covered[e] = true;
            }
            if trail.len() == 1 {
                return false;
            }
        }
        covered.into_iter().all(|c| c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverResult {
    pub status: SolveStatus,
    pub cover: Option<TrailCover>,
    pub stats: SearchStats,
}

impl CoverResult {
    pub fn is_feasible(&self) -> bool {
        self.status == SolveStatus::Feasible
    }
}

/// Decides whether two trails cover `g`. An edge set is the edge set of some
/// trail exactly when it spans at most one nontrivial component with at most
/// two odd vertices, so the search tabulates trail edge sets, closes the table
/// under subsets, and pairs each trail with a trail containing its
/// complement. Trails are reported for the lowest such first edge set.
pub fn two_trail_cover_exact(g: &StaticGraph, budget: Option<usize>) -> CoverResult {
    let m = g.edge_count();
    let mut stats = SearchStats { starts: 1, ..SearchStats::default() };
    if m > budget.unwrap_or(DEFAULT_COVER_BUDGET).min(HARD_CAP) {
        return CoverResult { status: SolveStatus::BudgetExceeded, cover: None, stats };
    }
    let full: usize = (1 << m) - 1;
    let trailable: Vec<bool> = (0..=full).map(|mask| is_trail_set(g, mask)).collect();
    stats.nodes = trailable.len() as u64;
    stats.peak_states = trailable.len() as u64;

    if trailable[full] {
        let cover = TrailCover { first: realise(g, full), second: Vec::new() };
        return CoverResult { status: SolveStatus::Feasible, cover: Some(cover), stats };
    }
    let mut has_superset = trailable.clone();
    for bit in 0..m {
        for mask in 0..=full {
            if mask & (1 << bit) == 0 && has_superset[mask | 1 << bit] {
                has_superset[mask] = true;
            }
        }
    }
    for a in 0..=full {
        if !trailable[a] || !has_superset[full & !a] {
            continue;
        }
        let rest = full & !a;
        // lowest trail edge set containing `rest`: rest plus a subset of `a`
        let mut sub = 0usize;
        let b = loop {
            if trailable[rest | sub] {
                break rest | sub;
            }
            sub = (sub.wrapping_sub(a)) & a;
        };
        let cover = TrailCover { first: realise(g, a), second: realise(g, b) };
        return CoverResult { status: SolveStatus::Feasible, cover: Some(cover), stats };
    }
    CoverResult { status: SolveStatus::Infeasible, cover: None, stats }
}

fn is_trail_set(g: &StaticGraph, mask: usize) -> bool {
    if mask == 0 {
        return true;
    }
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut degree = vec![0u32; n];
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut rest = mask;
    let mut root_vertex = 0;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = g.edges()[e];
        degree[u] += 1;
        degree[v] += 1;
        root_vertex = u;
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
        }
    }
    let root = find(&mut parent, root_vertex);
    let mut odd = 0;
    for (v, &d) in degree.iter().enumerate().take(n) {
        if d > 0 {
            if find(&mut parent, v) != root {
                return false;
            }
            odd += d % 2;
        }
    }
    odd <= 2
}

fn realise(g: &StaticGraph, mask: usize) -> Vec<Vertex> {
    if mask == 0 {
        return Vec::new();
    }
    let keep: Vec<usize> = (0..g.edge_count()).filter(|&e| mask >> e & 1 == 1).collect();
    let (start, steps) = euler_trail(&g.edge_subgraph(&keep), false, 1).expect("trail edge set");
    std::iter::once(start).chain(steps.iter().map(|s| s.to)).collect()
}
