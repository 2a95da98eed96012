//! Static traversals emitted as timed steps: doubled DFS, shortest paths and
//! Hierholzer's algorithm.

use std::collections::VecDeque;

use crate::graph::{odd_degree_vertices, StaticGraph, Timestamp, Vertex};
use crate::walk::Step;

/// Closed walk from `entry` that crosses every edge of `entry`'s component
/// exactly twice, once in each direction.
pub fn doubled_dfs(g: &StaticGraph, entry: Vertex, time: Timestamp) -> Vec<Step> {
    let mut steps = Vec::new();
    let mut visited = vec![false; g.vertex_count()];
    let mut used = vec![false; g.edge_count()];
    // (vertex, next incident index, parent to return to)
    let mut stack: Vec<(Vertex, usize, Option<Vertex>)> = vec![(entry, 0, None)];
    visited[entry] = true;
    while let Some(frame) = stack.last_mut() {
        let (u, ref mut next, parent) = *frame;
        let incident = g.incident(u);
        if *next < incident.len() {
            let (w, e) = incident[*next];
            *next += 1;
            if used[e] {
                continue;
            }
            used[e] = true;
            steps.push(Step::new(u, w, time));
            if visited[w] {
                steps.push(Step::new(w, u, time));
            } else {
                visited[w] = true;
                stack.push((w, 0, Some(u)));
            }
        } else {
            stack.pop();
            if let Some(p) = parent {
                steps.push(Step::new(u, p, time));
            }
        }
    }
    steps
}

/// Breadth-first shortest path inside `g`; ties go to the lower edge index.
pub fn shortest_path(g: &StaticGraph, from: Vertex, to: Vertex, time: Timestamp) -> Option<Vec<Step>> {
    if from == to {
        return Some(Vec::new());
    }
    let mut prev = vec![usize::MAX; g.vertex_count()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &(y, _) in g.incident(x) {
            if prev[y] == usize::MAX {
                prev[y] = x;
                if y == to {
                    let mut path = vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path.windows(2).map(|w| Step::new(w[0], w[1], time)).collect());
                }
                queue.push_back(y);
            }
        }
    }
    None
}

/// Hierholzer's algorithm from `start`, always taking the lowest-index unused
/// edge. Returns `None` unless the result uses every edge of `g`; the caller
/// is responsible for the parity condition.
pub fn hierholzer(g: &StaticGraph, start: Vertex, time: Timestamp) -> Option<Vec<Step>> {
    let mut used = vec![false; g.edge_count()];
    let mut ptr = vec![0usize; g.vertex_count()];
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(g.edge_count() + 1);
    while let Some(&v) = stack.last() {
        let incident = g.incident(v);
        while ptr[v] < incident.len() && used[incident[ptr[v]].1] {
            ptr[v] += 1;
        }
        if let Some(&(w, e)) = incident.get(ptr[v]) {
            used[e] = true;
            stack.push(w);
        } else {
            circuit.push(v);
            stack.pop();
        }
    }
    if circuit.len() != g.edge_count() + 1 {
        return None;
    }
    circuit.reverse();
    Some(circuit.windows(2).map(|w| Step::new(w[0], w[1], time)).collect())
}

/// An Eulerian trail (tour when `closed`) of `g` at a single timestamp, or
/// `None` if `g` has none. Starts at the lowest odd vertex, otherwise at the
/// lowest non-isolated vertex. Returns the start alongside the steps.
pub fn euler_trail(g: &StaticGraph, closed: bool, time: Timestamp) -> Option<(Vertex, Vec<Step>)> {
    let odd = odd_degree_vertices(g);
    if odd.len() > 2 || (closed && !odd.is_empty()) {
        return None;
    }
    let start = match odd.first() {
        Some(&v) => v,
        None => match (0..g.vertex_count()).find(|&v| g.degree(v) > 0) {
            Some(v) => v,
            None => return Some((0, Vec::new())),
        },
    };
    hierholzer(g, start, time).map(|steps| (start, steps))
}
