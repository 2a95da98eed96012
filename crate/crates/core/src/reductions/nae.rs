//! NAE-3-SAT to Eulerian local tour on a dynamic-based graph with lifetime 2.
//!
//! The skeleton is a cycle through `t` and the variable gadgets, plus the
//! degree-1 ends `s_1`, `s_2`. Variable `i` runs two paths from `I_i` to
//! `O_i`, one through the clause entries of each polarity. A forced edge is a
//! 6-vertex gadget whose internal vertices all have degree 3, so both
//! timestamp-trails of a local tour must cross it end to end.

use std::collections::{BTreeMap, HashSet};

use crate::exact::TrailCover;
use crate::graph::{StaticGraph, Timestamp, Vertex};
use crate::poly::traverse::hierholzer;
use crate::reductions::artifact::{literal_name, pair, Builder, Construction, ReductionArtifact};
use crate::reductions::cnf::{var_of, CnfFormula};
use crate::reductions::{check_length, ReductionError};
use crate::verify::{verify, WalkKind};
use crate::walk::{Step, TemporalWalk};

#[derive(Debug, Clone)]
pub(crate) struct ClauseGadget {
    pub entries: [Vertex; 3],
    /// `(a_1, a_2)`, `(b_1, b_2)`, `(c_1, c_2)`; pair `k` hangs off entry `k`.
    pub pairs: [(Vertex, Vertex); 3],
}

impl ClauseGadget {
    fn entry_edges(&self, k: usize) -> [(Vertex, Vertex); 2] {
        let (p1, p2) = self.pairs[k];
        [pair(p1, self.entries[k]), pair(self.entries[k], p2)]
    }

    fn inner_edge(&self, k: usize) -> (Vertex, Vertex) {
        pair(self.pairs[k].0, self.pairs[k].1)
    }

    pub(crate) fn normal_edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..3).flat_map(|k| [self.inner_edge(k), self.entry_edges(k)[0], self.entry_edges(k)[1]]).collect()
    }

    fn forced_edges(&self) -> [(Vertex, Vertex); 3] {
        [(self.pairs[0].1, self.pairs[1].0), (self.pairs[1].1, self.pairs[2].0), (self.pairs[2].1, self.pairs[0].0)]
    }
}

/// The construction before forced edges are realised.
#[derive(Debug, Clone)]
pub(crate) struct NaeLayout {
    pub names: Vec<String>,
    pub s1: Vertex,
    pub s2: Vertex,
    pub t: Vertex,
    /// Per variable: vertex sequences of `P_i` and `P̄_i`, `I_i` to `O_i`.
    pub paths: Vec<[Vec<Vertex>; 2]>,
    pub clauses: Vec<ClauseGadget>,
    pub normal: Vec<(Vertex, Vertex)>,
    /// Oriented `(u, v)` as listed: `E'` first, then three per clause.
    pub forced: Vec<(Vertex, Vertex)>,
}

impl NaeLayout {
    pub fn new(formula: &CnfFormula) -> Result<Self, ReductionError> {
        formula.validate_3cnf()?;
        let n = formula.variable_count;
        let mut names: Vec<String> = Vec::new();
        let mut add = |name: String| {
            names.push(name);
            names.len() - 1
        };
        let s1 = add("s_1".into());
        let s2 = add("s_2".into());
        let t = add("t".into());
        let io: Vec<(Vertex, Vertex)> = (1..=n).map(|i| (add(format!("I_{i}")), add(format!("O_{i}")))).collect();

        let mut clauses = Vec::with_capacity(formula.clauses.len());
        let mut occurrences = vec![[Vec::new(), Vec::new()]; n];
        for (j, clause) in formula.clauses.iter().enumerate() {
            let j1 = j + 1;
            let entries: [Vertex; 3] = std::array::from_fn(|k| add(format!("I_{j1}({})", literal_name(clause[k]))));
            let pairs: [(Vertex, Vertex); 3] = std::array::from_fn(|k| {
                let letter = ['a', 'b', 'c'][k];
                (add(format!("{letter}^{j1}_1")), add(format!("{letter}^{j1}_2")))
            });
            for (k, &lit) in clause.iter().enumerate() {
                let (v, positive) = var_of(lit);
                occurrences[v - 1][usize::from(!positive)].push(entries[k]);
            }
            clauses.push(ClauseGadget { entries, pairs });
        }

        let mut paths = Vec::with_capacity(n);
        for (i, [pos, neg]) in occurrences.into_iter().enumerate() {
            let (inp, out) = io[i];
            let through = |mid: Vec<Vertex>| -> Vec<Vertex> {
                std::iter::once(inp).chain(mid).chain(std::iter::once(out)).collect()
            };
            if pos.is_empty() && neg.is_empty() {
                let mid = add(format!("M_{}", i + 1));
                paths.push([vec![inp, out], vec![inp, mid, out]]);
            } else {
                paths.push([through(pos), through(neg)]);
            }
        }

        let mut normal = Vec::new();
        for [p, q] in &paths {
            for w in p.windows(2).chain(q.windows(2)) {
                normal.push(pair(w[0], w[1]));
            }
        }
        for c in &clauses {
            normal.extend(c.normal_edges());
        }

        let mut forced = vec![(s1, t), (s2, t), (t, io[0].0)];
        for i in 0..n - 1 {
            forced.push((io[i].1, io[i + 1].0));
        }
        forced.push((io[n - 1].1, t));
        for c in &clauses {
            forced.extend(c.forced_edges());
        }
        Ok(NaeLayout { names, s1, s2, t, paths, clauses, normal, forced })
    }

    pub fn var_paths(&self) -> Vec<[Vec<(Vertex, Vertex)>; 2]> {
        self.paths
            .iter()
            .map(|ps| ps.clone().map(|p| p.windows(2).map(|w| pair(w[0], w[1])).collect()))
            .collect()
    }

    /// Normal edges of the two trails for a NAE assignment: the true literal
    /// paths and, per clause, the entry of the first true literal plus the
    /// other two inner edges go to the first trail; the rest to the second.
    pub fn split(&self, formula: &CnfFormula, assignment: &[bool]) -> [Vec<(Vertex, Vertex)>; 2] {
        let mut sides = [Vec::new(), Vec::new()];
        for (i, [p, q]) in self.var_paths().into_iter().enumerate() {
            let (first, second) = if assignment[i] { (p, q) } else { (q, p) };
            sides[0].extend(first);
            sides[1].extend(second);
        }
        for (c, clause) in self.clauses.iter().zip(&formula.clauses) {
            let p = clause
                .iter()
                .position(|&l| CnfFormula::literal_value(l, assignment))
                .expect("NAE clause has a true literal");
            sides[0].extend(c.entry_edges(p));
            sides[1].push(c.inner_edge(p));
            for k in [(p + 1) % 3, (p + 2) % 3] {
                sides[0].push(c.inner_edge(k));
                sides[1].extend(c.entry_edges(k));
            }
        }
        sides
    }
}

/// Internal vertices `w_1..w_4` of forced edge `k` once realised as gadgets
/// after the layout's vertices.
fn gadget(layout: &NaeLayout, k: usize) -> [Vertex; 4] {
    let base = layout.names.len() + 4 * k;
    [base, base + 1, base + 2, base + 3]
}

/// Edges of forced edge `k` crossed at each timestamp: `u,w1,w2,w3,w4,v`
/// and `u,w1,w3,w2,w4,v`.
fn gadget_trails(layout: &NaeLayout, k: usize) -> [Vec<(Vertex, Vertex)>; 2] {
    let (u, v) = layout.forced[k];
    let [w1, w2, w3, w4] = gadget(layout, k);
    let walk = |seq: [Vertex; 6]| seq.windows(2).map(|w| pair(w[0], w[1])).collect();
    [walk([u, w1, w2, w3, w4, v]), walk([u, w1, w3, w2, w4, v])]
}

/// Base layout plus all forced gadgets, every edge labelled `labels`.
fn expanded(layout: &NaeLayout, labels: &[Timestamp]) -> (Builder, Vec<Vec<(Vertex, Vertex)>>) {
    let mut b = Builder { names: layout.names.clone(), edges: Vec::new() };
    for &(u, v) in &layout.normal {
        b.edge(u, v, labels.to_vec());
    }
    let mut gadget_edges = Vec::with_capacity(layout.forced.len());
    for (k, &(u, v)) in layout.forced.iter().enumerate() {
        let (nu, nv) = (layout.names[u].clone(), layout.names[v].clone());
        let w: Vec<Vertex> = (1..=4).map(|i| b.vertex(format!("fw({nu},{nv},{i})"))).collect();
        debug_assert_eq!(w, gadget(layout, k));
        let list = [(u, w[0]), (w[0], w[1]), (w[1], w[2]), (w[2], w[3]), (w[3], v), (w[0], w[2]), (w[1], w[3])];
        gadget_edges.push(list.iter().map(|&(a, c)| b.edge(a, c, labels.to_vec())).collect());
    }
    (b, gadget_edges)
}

fn clause_edges(layout: &NaeLayout, gadget_edges: &[Vec<(Vertex, Vertex)>]) -> Vec<Vec<(Vertex, Vertex)>> {
    let skeleton = layout.forced.len() - 3 * layout.clauses.len();
    layout
        .clauses
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut edges = c.normal_edges();
            for g in &gadget_edges[skeleton + 3 * j..skeleton + 3 * j + 3] {
                edges.extend(g);
            }
            edges
        })
        .collect()
}

fn specials(layout: &NaeLayout) -> BTreeMap<String, Vertex> {
    BTreeMap::from([("s_1".into(), layout.s1), ("s_2".into(), layout.s2), ("t".into(), layout.t)])
}

/// Dynamic-based graph with lifetime 2 and maximum degree 4.
pub fn reduce_nae3sat_to_localtour(formula: &CnfFormula) -> Result<ReductionArtifact, ReductionError> {
    let layout = NaeLayout::new(formula)?;
    let (b, gadget_edges) = expanded(&layout, &[1, 2]);
    Ok(ReductionArtifact {
        construction: Construction::NaeLocalTour,
        formula: formula.clone(),
        graph: b.graph(2),
        names: b.names,
        var_paths: layout.var_paths(),
        clause_edges: clause_edges(&layout, &gadget_edges),
        special: specials(&layout),
    })
}

/// Edge sets of the two timestamp-trails for a NAE assignment, forced
/// gadgets included.
fn tour_edge_sets(layout: &NaeLayout, formula: &CnfFormula, assignment: &[bool]) -> [Vec<(Vertex, Vertex)>; 2] {
    let mut sides = layout.split(formula, assignment);
    for k in 0..layout.forced.len() {
        let [a, b] = gadget_trails(layout, k);
        sides[0].extend(a);
        sides[1].extend(b);
    }
    sides
}

fn check_nae(formula: &CnfFormula, assignment: &[bool]) -> Result<(), ReductionError> {
    check_length(formula, assignment)?;
    match formula.first_nae_violation(assignment) {
        Some(c) => Err(ReductionError::NotNae(c)),
        None => Ok(()),
    }
}

/// Trail through exactly `edges`, from `start`, at `time`.
pub(crate) fn trail_through(n: usize, edges: &[(Vertex, Vertex)], start: Vertex, time: Timestamp) -> Vec<Step> {
    hierholzer(&StaticGraph::new(n, edges.to_vec()), start, time).expect("edge set is a connected trail")
}

/// Local tour from `s_1`: an `s_1`-`s_2` trail at time 1 and an `s_2`-`s_1`
/// trail at time 2.
pub fn localtour_witness_from_nae(art: &ReductionArtifact, assignment: &[bool]) -> Result<TemporalWalk, ReductionError> {
    if art.construction != Construction::NaeLocalTour {
        return Err(ReductionError::WrongConstruction);
    }
    check_nae(&art.formula, assignment)?;
    let layout = NaeLayout::new(&art.formula)?;
    let [t1, t2] = tour_edge_sets(&layout, &art.formula, assignment);
    let n = art.graph.vertex_count();
    let mut steps = trail_through(n, &t1, layout.s1, 1);
    steps.extend(trail_through(n, &t2, layout.s2, 2));
    let walk = TemporalWalk::new(layout.s1, steps);
    verify(&art.graph, &walk, WalkKind::LocalTour.into()).map_err(ReductionError::InvalidWalk)?;
    Ok(walk)
}

/// `x_i` is true iff the time-1 trail uses every edge of `P_i`. Also checks
/// that each variable's paths are split between the two trails and that both
/// path edges at a clause entry share their timestamps.
pub fn nae_assignment_from_localtour(art: &ReductionArtifact, walk: &TemporalWalk) -> Result<Vec<bool>, ReductionError> {
    if art.construction != Construction::NaeLocalTour {
        return Err(ReductionError::WrongConstruction);
    }
    verify(&art.graph, walk, WalkKind::LocalTour.into()).map_err(ReductionError::InvalidWalk)?;
    let layout = NaeLayout::new(&art.formula)?;
    let used: [HashSet<(Vertex, Vertex)>; 2] =
        [1, 2].map(|t| walk.restrict(t).iter().map(|s| pair(s.from, s.to)).collect());
    let within = |edges: &[(Vertex, Vertex)], k: usize| edges.iter().all(|e| used[k].contains(e));

    for [p, q] in &layout.paths {
        for path in [p, q] {
            for w in path.windows(3) {
                let (a, b) = (pair(w[0], w[1]), pair(w[1], w[2]));
                if (0..2).any(|k| used[k].contains(&a) != used[k].contains(&b)) {
                    return Err(ReductionError::Extraction(format!(
                        "path edges at {} are used at different timestamps",
                        art.names[w[1]]
                    )));
                }
            }
        }
    }
    let mut assignment = Vec::with_capacity(layout.paths.len());
    for (i, [p, q]) in art.var_paths.iter().enumerate() {
        let value = within(p, 0);
        let split = if value { within(q, 1) } else { within(q, 0) && within(p, 1) };
        if !split {
            return Err(ReductionError::Extraction(format!("paths of x_{} are not split between the trails", i + 1)));
        }
        assignment.push(value);
    }
    if let Some(c) = art.formula.first_nae_violation(&assignment) {
        return Err(ReductionError::Extraction(format!("clause {} has all literals equal", c + 1)));
    }
    Ok(assignment)
}

/// Static graph (lifetime 1): the local-tour graph plus pendants `p_1`,
/// `p_2` attached to `t`.
pub fn reduce_to_two_trail_cover(formula: &CnfFormula) -> Result<ReductionArtifact, ReductionError> {
    let layout = NaeLayout::new(formula)?;
    let (mut b, gadget_edges) = expanded(&layout, &[1]);
    let mut special = specials(&layout);
    for name in ["p_1", "p_2"] {
        let p = b.vertex(name);
        b.edge(layout.t, p, vec![1]);
        special.insert(name.into(), p);
    }
    Ok(ReductionArtifact {
        construction: Construction::TwoTrailCover,
        formula: formula.clone(),
        graph: b.graph(1),
        names: b.names,
        var_paths: layout.var_paths(),
        clause_edges: clause_edges(&layout, &gadget_edges),
        special,
    })
}

/// The two timestamp-trails of the local-tour witness as a trail pair on the
/// cover instance. They cover every edge except the two pendant edges.
pub fn two_trail_cover_witness_from_nae(art: &ReductionArtifact, assignment: &[bool]) -> Result<TrailCover, ReductionError> {
    if art.construction != Construction::TwoTrailCover {
        return Err(ReductionError::WrongConstruction);
    }
    check_nae(&art.formula, assignment)?;
    let layout = NaeLayout::new(&art.formula)?;
    let [t1, t2] = tour_edge_sets(&layout, &art.formula, assignment);
    let n = art.graph.vertex_count();
    let seq = |steps: Vec<Step>, start: Vertex| -> Vec<Vertex> {
        std::iter::once(start).chain(steps.iter().map(|s| s.to)).collect()
    };
    Ok(TrailCover {
        first: seq(trail_through(n, &t1, layout.s1, 1), layout.s1),
        second: seq(trail_through(n, &t2, layout.s2, 1), layout.s2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{two_trail_cover_exact, SolveStatus};
    use crate::verify::{check_odd_coverage, OddCoverage};

    fn one_clause() -> CnfFormula {
        CnfFormula::new(3, vec![vec![1, 2, 3]])
    }

    #[test]
    fn counts_and_degrees() {
        let art = reduce_nae3sat_to_localtour(&one_clause()).unwrap();
        let g = &art.graph;
        assert_eq!(NaeLayout::new(&one_clause()).unwrap().forced.len(), 9);
        assert_eq!(g.vertex_count(), 54);
        assert_eq!(g.edge_count(), 81);
        assert!(g.is_dynamic_based());
        assert!((0..54).all(|v| g.degree(v) <= 4));
        let leaves: Vec<&str> = (0..54).filter(|&v| g.degree(v) == 1).map(|v| art.names[v].as_str()).collect();
        assert_eq!(leaves, ["s_1", "s_2"]);
        for (v, name) in art.names.iter().enumerate() {
            if name.starts_with("fw(") {
                assert_eq!(g.degree(v), 3, "{name}");
            }
        }
        let mut sorted = art.names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), art.names.len());
    }

    #[test]
    fn witness_and_extraction() {
        let art = reduce_nae3sat_to_localtour(&one_clause()).unwrap();
        let w = localtour_witness_from_nae(&art, &[true, false, false]).unwrap();
        assert_eq!(check_odd_coverage(&art.graph, &w), Ok(OddCoverage::Complete));
        assert_eq!(nae_assignment_from_localtour(&art, &w).unwrap(), vec![true, false, false]);
        assert_eq!(
            localtour_witness_from_nae(&art, &[true, true, true]),
            Err(ReductionError::NotNae(0))
        );
        // exactly one of the two edges leaving I_1 is used at time 1
        let i1 = art.vertex("I_1").unwrap();
        let out: Vec<Vertex> = ["I_1(x_1)", "O_1"].iter().map(|n| art.vertex(n).unwrap()).collect();
        let at1: Vec<bool> = out
            .iter()
            .map(|&o| w.restrict(1).iter().any(|s| pair(s.from, s.to) == pair(i1, o)))
            .collect();
        assert_eq!(at1, [true, false]);
    }

    #[test]
    fn unused_and_single_polarity_variables() {
        let f = CnfFormula::new(5, vec![vec![1, -2, 3], vec![-1, 2, 4]]);
        let art = reduce_nae3sat_to_localtour(&f).unwrap();
        assert!(art.vertex("M_5").is_some());
        let a = [true, true, false, false, true];
        let w = localtour_witness_from_nae(&art, &a).unwrap();
        assert!(f.nae_satisfies(&nae_assignment_from_localtour(&art, &w).unwrap()));
    }

    fn mini_skeleton(pendants: bool) -> StaticGraph {
        // s_1 = 0, t = 1, s_2 = 2; gadgets s_1..t and s_2..t
        let mut edges = Vec::new();
        let mut next = 3;
        for u in [0, 2] {
            let w: Vec<usize> = (next..next + 4).collect();
            next += 4;
            edges.extend([(u, w[0]), (w[0], w[1]), (w[1], w[2]), (w[2], w[3]), (w[3], 1), (w[0], w[2]), (w[1], w[3])]);
        }
        if pendants {
            edges.extend([(1, next), (1, next + 1)]);
            next += 2;
        }
        StaticGraph::new(next, edges)
    }

    #[test]
    fn pendants_at_t_cannot_be_covered() {
        assert_eq!(two_trail_cover_exact(&mini_skeleton(false), None).status, SolveStatus::Feasible);
        assert_eq!(two_trail_cover_exact(&mini_skeleton(true), None).status, SolveStatus::Infeasible);

        let art = reduce_to_two_trail_cover(&one_clause()).unwrap();
        let t = art.special["t"];
        assert_eq!(art.graph.degree(t), 6);
        assert_eq!(art.vertex("p_1"), Some(art.special["p_1"]));
        let cover = two_trail_cover_witness_from_nae(&art, &[false, true, true]).unwrap();
        let g = art.graph.base_graph();
        assert!(!cover.covers(&g));
        let keep: Vec<usize> = (0..g.edge_count())
            .filter(|&e| !art.names[g.edges()[e].1].starts_with("p_"))
            .collect();
        assert_eq!(keep.len(), 81);
        assert!(cover.covers(&g.edge_subgraph(&keep)));
    }
}
