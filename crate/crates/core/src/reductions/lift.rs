//! From a local tour on lifetime 2 to a local trail (or tour) on any fixed
//! lifetime, by hanging a star off the start vertex.

use crate::graph::{Timestamp, Vertex};
use crate::reductions::artifact::{Builder, Construction, ReductionArtifact};
use crate::reductions::ReductionError;
use crate::verify::{verify, WalkKind};
use crate::walk::{Step, TemporalWalk};

/// Star with centre `u` and leaves `v_1..v_{tau+1}`, leaf `v_2` identified
/// with `s`. All edges are active at every timestamp; the lifetime is `tau`,
/// or `tau + 1` for the closed variant.
pub fn lift_localtour_to_localtrail(
    art: &ReductionArtifact,
    s: Vertex,
    tau: Timestamp,
    closed: bool,
) -> Result<ReductionArtifact, ReductionError> {
    if art.construction != Construction::NaeLocalTour {
        return Err(ReductionError::WrongConstruction);
    }
    if tau < 2 {
        return Err(ReductionError::Lifetime(tau));
    }
    let n = art.graph.vertex_count();
    if s >= n {
        return Err(ReductionError::Vertex(s));
    }
    let lifetime = if closed { tau + 1 } else { tau };
    let full: Vec<Timestamp> = (1..=lifetime).collect();
    let mut b = Builder { names: art.names.clone(), edges: Vec::new() };
    for e in art.graph.edges() {
        b.edge(e.u, e.v, full.clone());
    }
    let mut special = art.special.clone();
    let u = b.vertex("u");
    special.insert("u".into(), u);
    for i in 1..=tau as usize + 1 {
        let leaf = if i == 2 {
            s
        } else {
            let name = format!("v_{i}");
            let v = b.vertex(name.clone());
            special.insert(name, v);
            v
        };
        b.edge(u, leaf, full.clone());
    }
    Ok(ReductionArtifact {
        construction: Construction::NaeLocalTrail { lifetime: tau, closed, pin: s },
        formula: art.formula.clone(),
        graph: b.graph(lifetime),
        names: b.names,
        var_paths: art.var_paths.clone(),
        clause_edges: art.clause_edges.clone(),
        special,
    })
}

fn leaf(art: &ReductionArtifact, i: usize, s: Vertex) -> Vertex {
    if i == 2 {
        s
    } else {
        art.special[&format!("v_{i}")]
    }
}

/// Prefixes `v_1 u, u s` at time 1, appends `s u, u v_3` at time 2, then
/// `v_i u, u v_{i+1}` at each time `i >= 3` (and `v_{tau+1} u, u v_1` at
/// `tau + 1` when closed). `tour` must be a local tour of the unlifted graph
/// from the pinned vertex using times 1 and 2.
pub fn localtrail_witness_from_localtour(
    lifted: &ReductionArtifact,
    tour: &TemporalWalk,
) -> Result<TemporalWalk, ReductionError> {
    let Construction::NaeLocalTrail { lifetime: tau, closed, pin: s } = lifted.construction else {
        return Err(ReductionError::WrongConstruction);
    };
    if tour.start != s || tour.end() != s {
        return Err(ReductionError::Extraction(format!("tour must start and end at {}", lifted.names[s])));
    }
    if tour.steps.iter().any(|st| st.time > 2) {
        return Err(ReductionError::Extraction("tour uses timestamps beyond 2".into()));
    }
    let u = lifted.special["u"];
    let tau = tau as usize;
    let v = |i: usize| leaf(lifted, i, s);
    let mut steps = vec![Step::new(v(1), u, 1), Step::new(u, s, 1)];
    steps.extend(tour.steps.iter().copied());
    steps.push(Step::new(s, u, 2));
    steps.push(Step::new(u, v(3), 2));
    for i in 3..=tau {
        steps.push(Step::new(v(i), u, i as Timestamp));
        steps.push(Step::new(u, v(i + 1), i as Timestamp));
    }
    if closed {
        let last = tau as Timestamp + 1;
        steps.push(Step::new(v(tau + 1), u, last));
        steps.push(Step::new(u, v(1), last));
    }
    let walk = TemporalWalk::new(v(1), steps);
    let kind = if closed { WalkKind::LocalTour } else { WalkKind::LocalTrail };
    verify(&lifted.graph, &walk, kind.into()).map_err(ReductionError::InvalidWalk)?;
    Ok(walk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{localtour_witness_from_nae, reduce_nae3sat_to_localtour, CnfFormula};

    #[test]
    fn lifted_witnesses() {
        let f = CnfFormula::new(3, vec![vec![1, 2, 3]]);
        let base = reduce_nae3sat_to_localtour(&f).unwrap();
        let s1 = base.special["s_1"];
        let tour = localtour_witness_from_nae(&base, &[false, true, false]).unwrap();
        for tau in 2..=4 {
            for closed in [false, true] {
                let art = lift_localtour_to_localtrail(&base, s1, tau, closed).unwrap();
                let u = art.special["u"];
                assert_eq!(art.graph.degree(u), tau as usize + 1);
                assert!(art.graph.is_dynamic_based());
                let w = localtrail_witness_from_localtour(&art, &tour).unwrap();
                let v1 = art.special["v_1"];
                assert_eq!(w.steps[..2], [Step::new(v1, u, 1), Step::new(u, s1, 1)]);
                assert_eq!(w.steps[2], tour.steps[0]);
            }
        }
        assert_eq!(lift_localtour_to_localtrail(&base, 999, 3, false), Err(ReductionError::Vertex(999)));
    }
}
