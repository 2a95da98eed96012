//! NAE-3-SAT to Eulerian trail/tour for a fixed lifetime: each forced edge
//! `uv` becomes two 2-edge paths, one active only at time 1 and one only at
//! time 2; a tail from `s_1` uses up the remaining timestamps.

use crate::graph::{Timestamp, Vertex};
use crate::reductions::artifact::{Builder, Construction, ReductionArtifact};
use crate::reductions::cnf::CnfFormula;
use crate::reductions::nae::{trail_through, NaeLayout};
use crate::reductions::{check_length, ReductionError};
use crate::verify::{verify, WalkKind};
use crate::walk::{Step, TemporalWalk};

/// Tail vertices to create and the tail's steps in traversal order from
/// `s_1`, given the first fresh vertex id.
fn tail(s1: Vertex, first: Vertex, tau: Timestamp, closed: bool) -> (Vec<String>, Vec<Step>) {
    let tau_us = tau as usize;
    let (names, seq, times): (Vec<String>, Vec<Vertex>, Vec<Timestamp>) = match (tau, closed) {
        (2, _) => (Vec::new(), Vec::new(), Vec::new()),
        (3, true) => (vec!["v_3".into(), "v_4".into()], vec![s1, first, first + 1, s1], vec![3, 3, 3]),
        (4, true) => (vec!["v_3".into(), "v_4".into()], vec![s1, first, first + 1, s1], vec![3, 4, 4]),
        (_, true) => {
            let names = (3..tau_us).map(|i| format!("v_{i}")).collect();
            let seq = std::iter::once(s1).chain(first..first + tau_us - 3).chain(std::iter::once(s1)).collect();
            (names, seq, (3..=tau).collect())
        }
        (_, false) => {
            let names = (3..=tau_us).map(|i| format!("v_{i}")).collect();
            let seq = std::iter::once(s1).chain(first..first + tau_us - 2).collect();
            (names, seq, (3..=tau).collect())
        }
    };
    let steps = seq.windows(2).zip(times).map(|(w, t)| Step::new(w[0], w[1], t)).collect();
    (names, steps)
}

pub fn reduce_nae3sat_to_trail(formula: &CnfFormula, tau: Timestamp, closed: bool) -> Result<ReductionArtifact, ReductionError> {
    if tau < 2 {
        return Err(ReductionError::Lifetime(tau));
    }
    let layout = NaeLayout::new(formula)?;
    let mut b = Builder { names: layout.names.clone(), edges: Vec::new() };
    for &(u, v) in &layout.normal {
        b.edge(u, v, vec![1, 2]);
    }
    let mut replaced = Vec::with_capacity(layout.forced.len());
    for &(u, v) in &layout.forced {
        let (nu, nv) = (layout.names[u].clone(), layout.names[v].clone());
        let mut edges = Vec::with_capacity(4);
        for t in [1, 2] {
            let mid = b.vertex(format!("P{t}({nu},{nv})"));
            edges.push(b.edge(u, mid, vec![t]));
            edges.push(b.edge(mid, v, vec![t]));
        }
        replaced.push(edges);
    }
    let (tail_names, tail_steps) = tail(layout.s1, b.names.len(), tau, closed);
    let mut special = std::collections::BTreeMap::from([
        ("s_1".to_string(), layout.s1),
        ("s_2".to_string(), layout.s2),
        ("t".to_string(), layout.t),
    ]);
    for name in tail_names {
        let v = b.vertex(name.clone());
        special.insert(name, v);
    }
    for s in &tail_steps {
        b.edge(s.from, s.to, vec![s.time]);
    }

    let skeleton = layout.forced.len() - 3 * layout.clauses.len();
    let clause_edges = layout
        .clauses
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut edges = c.normal_edges();
            for r in &replaced[skeleton + 3 * j..skeleton + 3 * j + 3] {
                edges.extend(r);
            }
            edges
        })
        .collect();

    Ok(ReductionArtifact {
        construction: Construction::NaeTrail { lifetime: tau, closed },
        formula: formula.clone(),
        graph: b.graph(tau),
        names: b.names,
        var_paths: layout.var_paths(),
        clause_edges,
        special,
    })
}

/// The local-tour trails with every forced edge routed through its time-1
/// path in the first trail and its time-2 path in the second, followed by the
/// tail.
pub fn trail_witness_from_nae(art: &ReductionArtifact, assignment: &[bool]) -> Result<TemporalWalk, ReductionError> {
    let Construction::NaeTrail { lifetime: tau, closed } = art.construction else {
        return Err(ReductionError::WrongConstruction);
    };
    check_length(&art.formula, assignment)?;
    if let Some(c) = art.formula.first_nae_violation(assignment) {
        return Err(ReductionError::NotNae(c));
    }
    let layout = NaeLayout::new(&art.formula)?;
    let [mut t1, mut t2] = layout.split(&art.formula, assignment);
    let base = layout.names.len();
    for (k, &(u, v)) in layout.forced.iter().enumerate() {
        let (m1, m2) = (base + 2 * k, base + 2 * k + 1);
        t1.extend([(u.min(m1), u.max(m1)), (m1.min(v), m1.max(v))]);
        t2.extend([(u.min(m2), u.max(m2)), (m2.min(v), m2.max(v))]);
    }
    let n = art.graph.vertex_count();
    let mut steps = trail_through(n, &t1, layout.s1, 1);
    steps.extend(trail_through(n, &t2, layout.s2, 2));
    steps.extend(tail(layout.s1, base + 2 * layout.forced.len(), tau, closed).1);
    let walk = TemporalWalk::new(layout.s1, steps);
    let kind = if closed { WalkKind::Tour } else { WalkKind::Trail };
    verify(&art.graph, &walk, kind.into()).map_err(ReductionError::InvalidWalk)?;
    Ok(walk)
}
