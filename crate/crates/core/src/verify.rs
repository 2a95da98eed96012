//! Witness checking for the six problem variants.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{odd_degree_vertices, EdgeId, TemporalGraph, Timestamp, Vertex};
use crate::walk::TemporalWalk;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WalkKind {
    Walk,
    ClosedWalk,
    LocalTrail,
    LocalTour,
    Trail,
    Tour,
}

/// How much a variant lets a walk repeat edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Repetition {
    Free,
    OncePerSnapshot,
    Never,
}

impl WalkKind {
    pub const ALL: [WalkKind; 6] = [
        WalkKind::Walk,
        WalkKind::ClosedWalk,
        WalkKind::LocalTrail,
        WalkKind::LocalTour,
        WalkKind::Trail,
        WalkKind::Tour,
    ];

    pub fn is_closed(self) -> bool {
        matches!(self, WalkKind::ClosedWalk | WalkKind::LocalTour | WalkKind::Tour)
    }

    pub fn repetition(self) -> Repetition {
        match self {
            WalkKind::Walk | WalkKind::ClosedWalk => Repetition::Free,
            WalkKind::LocalTrail | WalkKind::LocalTour => Repetition::OncePerSnapshot,
            WalkKind::Trail | WalkKind::Tour => Repetition::Never,
        }
    }

    pub fn from_parts(repetition: Repetition, closed: bool) -> Self {
        match (repetition, closed) {
            (Repetition::Free, false) => WalkKind::Walk,
            (Repetition::Free, true) => WalkKind::ClosedWalk,
            (Repetition::OncePerSnapshot, false) => WalkKind::LocalTrail,
            (Repetition::OncePerSnapshot, true) => WalkKind::LocalTour,
            (Repetition::Never, false) => WalkKind::Trail,
            (Repetition::Never, true) => WalkKind::Tour,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            WalkKind::Walk => "walk",
            WalkKind::ClosedWalk => "closed-walk",
            WalkKind::LocalTrail => "local-trail",
            WalkKind::LocalTour => "local-tour",
            WalkKind::Trail => "trail",
            WalkKind::Tour => "tour",
        }
    }
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown value `{0}`")]
pub struct UnknownName(pub String);

impl FromStr for WalkKind {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        WalkKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TimeOrder {
    #[default]
    NonDecreasing,
    Strict,
}

impl TimeOrder {
    /// Whether a step at `next` may follow a step at `prev`.
    pub fn allows(self, prev: Timestamp, next: Timestamp) -> bool {
        match self {
            TimeOrder::NonDecreasing => next >= prev,
            TimeOrder::Strict => next > prev,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TimeOrder::NonDecreasing => "nondecreasing",
            TimeOrder::Strict => "strict",
        }
    }
}

impl FromStr for TimeOrder {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "nondecreasing" => Ok(TimeOrder::NonDecreasing),
            "strict" => Ok(TimeOrder::Strict),
            _ => Err(UnknownName(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProblemVariant {
    pub kind: WalkKind,
    pub order: TimeOrder,
}

impl ProblemVariant {
    pub fn new(kind: WalkKind) -> Self {
        ProblemVariant { kind, order: TimeOrder::NonDecreasing }
    }

    pub fn strict(kind: WalkKind) -> Self {
        ProblemVariant { kind, order: TimeOrder::Strict }
    }
}

impl From<WalkKind> for ProblemVariant {
    fn from(kind: WalkKind) -> Self {
        ProblemVariant::new(kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationCode {
    BrokenChain,
    InactiveTime,
    TimeRegression,
    EdgeRepeatInSnapshot,
    EdgeRepeatGlobal,
    NotEulerian,
    NotClosed,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::BrokenChain => "broken-chain",
            ViolationCode::InactiveTime => "inactive-time",
            ViolationCode::TimeRegression => "time-regression",
            ViolationCode::EdgeRepeatInSnapshot => "edge-repeat-in-snapshot",
            ViolationCode::EdgeRepeatGlobal => "edge-repeat-global",
            ViolationCode::NotEulerian => "not-eulerian",
            ViolationCode::NotClosed => "not-closed",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Location {
    /// The walk's start vertex.
    Start,
    /// Zero-based step index.
    Step(usize),
    Edge(EdgeId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub code: ViolationCode,
    pub location: Location,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.location {
            Location::Start => write!(f, "{} at start", self.code.as_str()),
            Location::Step(i) => write!(f, "{} at step {}", self.code.as_str(), i + 1),
            Location::Edge(e) => write!(f, "{} on edge {}", self.code.as_str(), e),
        }
    }
}

/// Checks `walk` against `variant` on `g`, collecting every violation.
///
/// A step whose endpoints are not adjacent in `g` is reported as
/// `InactiveTime`: the pair is never active.
pub fn verify(
    g: &TemporalGraph,
    walk: &TemporalWalk,
    variant: ProblemVariant,
) -> Result<(), Vec<Violation>> {
    let mut out = structural_violations(g, walk, variant.order, variant.kind.repetition());

    let covered: HashSet<EdgeId> = walk
        .steps
        .iter()
        .filter_map(|s| step_edge(g, s.from, s.to))
        .collect();
    for id in 0..g.edge_count() {
        if !covered.contains(&id) {
            out.push(Violation { code: ViolationCode::NotEulerian, location: Location::Edge(id) });
        }
    }

    if variant.kind.is_closed() && walk.end() != walk.start {
        let last = walk.steps.len().saturating_sub(1);
        out.push(Violation { code: ViolationCode::NotClosed, location: Location::Step(last) });
    }

    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

fn step_edge(g: &TemporalGraph, a: Vertex, b: Vertex) -> Option<EdgeId> {
    if a >= g.vertex_count() || b >= g.vertex_count() || a == b {
        return None;
    }
    g.edge_id(a, b)
}

/// Chain, activity, ordering and repetition checks, without coverage or
/// closedness.
pub fn structural_violations(
    g: &TemporalGraph,
    walk: &TemporalWalk,
    order: TimeOrder,
    repetition: Repetition,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let start_ok = walk.start < g.vertex_count() || (g.vertex_count() == 0 && walk.is_empty());
    if !start_ok {
        out.push(Violation { code: ViolationCode::BrokenChain, location: Location::Start });
    }
    let mut at = walk.start;
    let mut prev_time: Option<Timestamp> = None;
    let mut used_global = HashSet::new();
    let mut used_snapshot: HashSet<(EdgeId, Timestamp)> = HashSet::new();
    for (i, s) in walk.steps.iter().enumerate() {
        let loc = Location::Step(i);
        if s.from != at {
            out.push(Violation { code: ViolationCode::BrokenChain, location: loc });
        }
        at = s.to;
        if let Some(p) = prev_time {
            if !order.allows(p, s.time) {
                out.push(Violation { code: ViolationCode::TimeRegression, location: loc });
            }
        }
        prev_time = Some(s.time);
        let Some(id) = step_edge(g, s.from, s.to) else {
            out.push(Violation { code: ViolationCode::InactiveTime, location: loc });
            continue;
        };
        if !g.edge(id).is_active(s.time) {
            out.push(Violation { code: ViolationCode::InactiveTime, location: loc });
        }
        match repetition {
            Repetition::Free => {}
            Repetition::OncePerSnapshot => {
                if !used_snapshot.insert((id, s.time)) {
                    out.push(Violation {
                        code: ViolationCode::EdgeRepeatInSnapshot,
                        location: loc,
                    });
                }
            }
            Repetition::Never => {
                if !used_global.insert(id) {
                    out.push(Violation { code: ViolationCode::EdgeRepeatGlobal, location: loc });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OddCoverage {
    Complete,
    /// Odd-degree vertices not touched at each listed timestamp.
    Missing(BTreeMap<Timestamp, BTreeSet<Vertex>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OddCoverageError {
    #[error("odd-vertex coverage needs lifetime 2, got {0}")]
    Lifetime(Timestamp),
    #[error("walk is not a valid local trail: {0:?}")]
    InvalidWalk(Vec<Violation>),
}

/// Whether both timestamp-restricted trails of `walk` touch every odd-degree
/// vertex of `g`. Requires lifetime 2 and a structurally valid local trail;
/// coverage and closedness are not required.
pub fn check_odd_coverage(
    g: &TemporalGraph,
    walk: &TemporalWalk,
) -> Result<OddCoverage, OddCoverageError> {
    if g.lifetime() != 2 {
        return Err(OddCoverageError::Lifetime(g.lifetime()));
    }
    let bad = structural_violations(g, walk, TimeOrder::NonDecreasing, Repetition::OncePerSnapshot);
    if !bad.is_empty() {
        return Err(OddCoverageError::InvalidWalk(bad));
    }
    let odd = odd_degree_vertices(&g.base_graph());
    let mut missing = BTreeMap::new();
    for t in 1..=2 {
        let seen = walk.vertices_at(t);
        let miss: BTreeSet<Vertex> = odd.iter().copied().filter(|v| !seen.contains(v)).collect();
        if !miss.is_empty() {
            missing.insert(t, miss);
        }
    }
    Ok(if missing.is_empty() { OddCoverage::Complete } else { OddCoverage::Missing(missing) })
}
