//! 3-SAT to Eulerian walk: each variable owns an odd snapshot holding its two
//! literal trees (with the clause edges), consecutive variables are linked by
//! a hub star, and a final snapshot holds everything but the clause edges.

use std::collections::BTreeMap;

use crate::graph::{connected_components, Timestamp, Vertex};
use crate::poly::chain::{chain_to_walk, ComponentChain};
use crate::reductions::artifact::{Builder, Construction, ReductionArtifact};
use crate::reductions::cnf::{var_of, CnfFormula};
use crate::reductions::{check_length, ReductionError};
use crate::verify::{verify, WalkKind};
use crate::walk::TemporalWalk;

/// Lifetime `2n`.
pub fn reduce_3sat_to_walk(formula: &CnfFormula) -> Result<ReductionArtifact, ReductionError> {
    build(formula, false)
}

/// Forest variant: the variable pattern is played three times (lifetime
/// `6n - 1`) and hub stars link the rounds, so every snapshot is a forest.
/// Clause edges appear only in the first round.
pub fn reduce_3sat_to_walk_forest(formula: &CnfFormula) -> Result<ReductionArtifact, ReductionError> {
    build(formula, true)
}

fn lit_vertex(m: usize, var: usize, positive: bool) -> Vertex {
    2 * m + 2 * (var - 1) + usize::from(!positive)
}

fn build(formula: &CnfFormula, forest: bool) -> Result<ReductionArtifact, ReductionError> {
    formula.validate_for_walk()?;
    let n = formula.variable_count;
    let m = formula.clauses.len();
    let rounds: u32 = if forest { 3 } else { 1 };
    let span = 2 * n as Timestamp;
    let lifetime = if forest { 3 * span - 1 } else { span };

    let mut b = Builder::default();
    for j in 1..=m {
        b.vertex(format!("a_{j}"));
        b.vertex(format!("b_{j}"));
    }
    for i in 1..=n {
        b.vertex(format!("x_{i}"));
        b.vertex(format!("~x_{i}"));
    }
    let hub = b.vertex("T");

    let mut clause_edges = Vec::with_capacity(m);
    for (j, clause) in formula.clauses.iter().enumerate() {
        let mut labels: Vec<Timestamp> = clause.iter().map(|&l| 2 * var_of(l).0 as Timestamp - 1).collect();
        labels.sort_unstable();
        clause_edges.push(vec![b.edge(2 * j, 2 * j + 1, labels)]);
    }

    let mut var_paths = vec![[Vec::new(), Vec::new()]; n];
    for (j, clause) in formula.clauses.iter().enumerate() {
        for &lit in clause {
            let (i, positive) = var_of(lit);
            let odd = 2 * i as Timestamp - 1;
            let labels = if forest {
                (0..rounds).map(|r| r * span + odd).collect()
            } else {
                vec![odd, span]
            };
            let e = b.edge(lit_vertex(m, i, positive), 2 * j, labels);
            var_paths[i - 1][usize::from(!positive)].push(e);
        }
    }

    for k in 1..=n {
        let kt = k as Timestamp;
        let mut labels = Vec::new();
        for r in 0..rounds {
            if k > 1 {
                labels.push(r * span + 2 * kt - 2);
            }
            if k < n {
                labels.push(r * span + 2 * kt);
            }
            if forest && r + 1 < rounds && (k == 1 || k == n) {
                labels.push((r + 1) * span);
            }
        }
        if !forest {
            labels.push(span);
        }
        labels.sort_unstable();
        labels.dedup();
        for positive in [true, false] {
            b.edge(hub, lit_vertex(m, k, positive), labels.clone());
        }
    }

    Ok(ReductionArtifact {
        construction: Construction::SatWalk { forest },
        formula: formula.clone(),
        graph: b.graph(lifetime),
        names: b.names,
        var_paths,
        clause_edges,
        special: BTreeMap::from([("T".to_string(), hub)]),
    })
}

/// Eulerian walk built from a satisfying assignment: in each variable
/// snapshot, sweep the tree of the chosen literal; hop through the hub in the
/// star snapshots; sweep everything in the final snapshot. The forest variant
/// picks the assignment's literals in round 1, positive literals in round 2
/// and negative literals in round 3.
pub fn walk_witness_from_assignment(
    art: &ReductionArtifact,
    assignment: &[bool],
) -> Result<TemporalWalk, ReductionError> {
    let Construction::SatWalk { forest } = art.construction else {
        return Err(ReductionError::WrongConstruction);
    };
    let f = &art.formula;
    check_length(f, assignment)?;
    if let Some(c) = f.first_unsatisfied(assignment) {
        return Err(ReductionError::NotSatisfying(c));
    }
    let (n, m) = (f.variable_count, f.clauses.len());
    let span = 2 * n as Timestamp;
    let choice = |round: Timestamp, i: usize| -> Vertex {
        let positive = match round {
            0 => assignment[i - 1],
            1 => true,
            _ => false,
        };
        lit_vertex(m, i, positive)
    };
    // where the walk is when snapshot `t` begins and ends
    let ends = |t: Timestamp| -> (Vertex, Vertex) {
        let round = (t - 1) / span;
        let local = (t - 1) % span + 1;
        let i = local.div_ceil(2) as usize;
        if local % 2 == 1 {
            (choice(round, i), choice(round, i))
        } else if i < n {
            (choice(round, i), choice(round, i + 1))
        } else if forest && round < 2 {
            (choice(round, n), choice(round + 1, 1))
        } else {
            (choice(round, n), choice(round, n))
        }
    };

    let times = art.graph.active_times();
    let mut components = Vec::with_capacity(times.len());
    let mut handoffs = Vec::new();
    for (k, &t) in times.iter().enumerate() {
        let (entry, exit) = ends(t);
        let snap = art.graph.snapshot(t).expect("active time");
        let comp = connected_components(&snap)
            .into_iter()
            .find(|c| c.contains(entry))
            .expect("every vertex has a component");
        components.push(comp);
        if k + 1 < times.len() {
            handoffs.push(exit);
        }
    }
    let entry = times.first().map_or(lit_vertex(m, 1, assignment[0]), |&t| ends(t).0);
    let chain = ComponentChain { entry, times, handoffs, components };
    chain_to_walk(&art.graph, &chain).map_err(|e| ReductionError::Extraction(e.to_string()))
}

/// Reads `x_i` off the first-round snapshot of variable `i`: true iff the
/// walk moves inside the component of `x_i` there.
pub fn assignment_from_walk(art: &ReductionArtifact, walk: &TemporalWalk) -> Result<Vec<bool>, ReductionError> {
    if !matches!(art.construction, Construction::SatWalk { .. }) {
        return Err(ReductionError::WrongConstruction);
    }
    verify(&art.graph, walk, WalkKind::Walk.into()).map_err(ReductionError::InvalidWalk)?;
    let f = &art.formula;
    let m = f.clauses.len();
    let mut assignment = Vec::with_capacity(f.variable_count);
    for i in 1..=f.variable_count {
        let t = 2 * i as Timestamp - 1;
        let steps = walk.restrict(t);
        let value = match steps.first() {
            None => false,
            Some(s) => {
                let snap = art.graph.snapshot(t).expect("in range");
                connected_components(&snap)
                    .into_iter()
                    .find(|c| c.contains(lit_vertex(m, i, true)))
                    .is_some_and(|c| c.contains(s.from))
            }
        };
        assignment.push(value);
    }
    if let Some(c) = f.first_unsatisfied(&assignment) {
        return Err(ReductionError::Extraction(format!(
            "assignment read from the walk leaves clause {} unsatisfied",
            c + 1
        )));
    }
    Ok(assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StaticGraph;
    use crate::poly::solve_walk_fixed_tau;

    fn two_variable_formula() -> CnfFormula {
        CnfFormula::new(2, vec![vec![1, 2], vec![1, -2], vec![-1, 2], vec![-1, -2]])
    }

    fn is_forest(g: &StaticGraph) -> bool {
        let tree_edges: usize = connected_components(g).iter().map(|c| c.vertices.len() - 1).sum();
        tree_edges == g.edge_count()
    }

    fn edge_names(art: &ReductionArtifact, g: &StaticGraph) -> Vec<String> {
        let mut v: Vec<String> =
            g.edges().iter().map(|&(a, b)| format!("{}{}", art.names[a], art.names[b])).collect();
        v.sort();
        v
    }

    #[test]
    fn two_variable_shape() {
        let art = reduce_3sat_to_walk(&two_variable_formula()).unwrap();
        assert_eq!(art.graph.vertex_count(), 13);
        assert_eq!(art.graph.edge_count(), 16);
        assert_eq!(art.graph.lifetime(), 4);
        let s2 = art.graph.snapshot(2).unwrap();
        assert_eq!(edge_names(&art, &s2), ["x_1T", "x_2T", "~x_1T", "~x_2T"]);
        let s1 = art.graph.snapshot(1).unwrap();
        // x_1 - a_1, a_2 and ~x_1 - a_3, a_4, each with its clause edge
        assert_eq!(
            edge_names(&art, &s1),
            ["a_1b_1", "a_1x_1", "a_2b_2", "a_2x_1", "a_3b_3", "a_3~x_1", "a_4b_4", "a_4~x_1"]
        );
        assert!(is_forest(&s1));
        assert!(solve_walk_fixed_tau(&art.graph).is_none());
        for bits in 0..4 {
            let a = [bits & 1 == 1, bits & 2 == 2];
            assert!(matches!(walk_witness_from_assignment(&art, &a), Err(ReductionError::NotSatisfying(_))));
        }
    }

    #[test]
    fn single_clause() {
        let f = CnfFormula::new(3, vec![vec![1, 2, 3]]);
        let art = reduce_3sat_to_walk(&f).unwrap();
        assert_eq!(art.graph.lifetime(), 6);
        for t in [1, 3, 5] {
            assert!(is_forest(&art.graph.snapshot(t).unwrap()));
        }
        let w = walk_witness_from_assignment(&art, &[true, true, true]).unwrap();
        assert_eq!(verify(&art.graph, &w, WalkKind::Walk.into()), Ok(()));
        let back = assignment_from_walk(&art, &w).unwrap();
        assert!(f.satisfies(&back));
        let w = walk_witness_from_assignment(&art, &[false, false, true]).unwrap();
        assert_eq!(assignment_from_walk(&art, &w).unwrap(), vec![false, false, true]);
    }

    #[test]
    fn forest_mode() {
        let f = CnfFormula::new(3, vec![vec![1, -2, 3], vec![-1, 2], vec![2, -3]]);
        let art = reduce_3sat_to_walk_forest(&f).unwrap();
        assert_eq!(art.graph.lifetime(), 17);
        for t in 1..=17 {
            assert!(is_forest(&art.graph.snapshot(t).unwrap()), "snapshot {t}");
        }
        let w = walk_witness_from_assignment(&art, &[true, true, false]).unwrap();
        assert_eq!(verify(&art.graph, &w, WalkKind::Walk.into()), Ok(()));
        assert!(f.satisfies(&assignment_from_walk(&art, &w).unwrap()));
    }

    #[test]
    fn rejects_bad_input() {
        let f = CnfFormula::new(2, vec![vec![1, -1]]);
        assert!(matches!(reduce_3sat_to_walk(&f), Err(ReductionError::Cnf(_))));
        let art = reduce_3sat_to_walk(&CnfFormula::new(1, vec![vec![1]])).unwrap();
        assert!(matches!(
            walk_witness_from_assignment(&art, &[true, false]),
            Err(ReductionError::AssignmentLength { .. })
        ));
        assert!(matches!(
            assignment_from_walk(&art, &TemporalWalk::empty(0)),
            Err(ReductionError::InvalidWalk(_))
        ));
    }
}
