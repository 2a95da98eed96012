use crate::exact::engine::{dfs, Outcome, Space};
use crate::exact::SearchStats;
use crate::graph::{odd_degree_vertices, TemporalGraph, Timestamp, Vertex};
use crate::verify::TimeOrder;
use crate::walk::Step;

/// Per-instance tables shared by the three spaces.
struct Tables<'a> {
    g: &'a TemporalGraph,
    order: TimeOrder,
    full: u64,
    /// `dead[t]`: edges that can no longer be traversed after a step at `t`.
    dead: Vec<u64>,
}

impl<'a> Tables<'a> {
    fn new(g: &'a TemporalGraph, order: TimeOrder) -> Self {
        let m = g.edge_count();
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let dead = (0..=g.lifetime())
            .map(|t| {
                let mut mask = 0u64;
                for (id, e) in g.edges().iter().enumerate() {
                    let gone = match order {
                        TimeOrder::NonDecreasing => e.max_label() < t,
                        TimeOrder::Strict => e.max_label() <= t,
                    };
                    if gone {
                        mask |= 1 << id;
                    }
                }
                mask
            })
            .collect();
        Tables { g, order, full, dead }
    }

    /// `(neighbour, edge, time)` moves out of `pos` allowed after `time`.
    fn moves(&self, pos: Vertex, time: Timestamp) -> impl Iterator<Item = (Vertex, usize, Timestamp)> + '_ {
        self.g.neighbors(pos).iter().flat_map(move |&(w, e)| {
            self.g
                .edge(e)
                .labels()
                .iter()
                .copied()
                .filter(move |&t| self.order.allows(time, t))
                .map(move |t| (w, e, t))
        })
    }

    fn stranded(&self, time: Timestamp, covered: u64) -> bool {
        self.dead[time as usize] & !covered & self.full != 0
    }
}

/// A space together with the start vertex of one search.
pub(crate) struct Rooted<'s, T> {
    space: &'s T,
    start: Vertex,
}

impl<T> std::ops::Deref for Rooted<'_, T> {
    type Target = T;

    fn deref(&self) -> &T {
        self.space
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct WalkState {
    pos: Vertex,
    time: Timestamp,
    covered: u64,
}

pub(crate) struct WalkSpace<'a> {
    t: Tables<'a>,
    closed: bool,
}

impl<'a> WalkSpace<'a> {
    pub fn new(g: &'a TemporalGraph, closed: bool, order: TimeOrder) -> Self {
        WalkSpace { t: Tables::new(g, order), closed }
    }

    pub fn search(&self, start: Vertex, max_nodes: Option<u64>) -> (Outcome, SearchStats) {
        dfs(&Rooted { space: self, start }, WalkState { pos: start, time: 0, covered: 0 }, max_nodes)
    }
}

impl Space for Rooted<'_, WalkSpace<'_>> {
    type State = WalkState;

    fn accept(&self, s: &WalkState) -> bool {
        s.covered == self.t.full && (!self.closed || s.pos == self.start)
    }

    fn dead(&self, s: &WalkState) -> bool {
        self.t.stranded(s.time, s.covered)
    }

    fn successors(&self, s: &WalkState, out: &mut Vec<(Step, WalkState)>) {
        for (w, e, t) in self.t.moves(s.pos, s.time) {
            out.push((Step::new(s.pos, w, t), WalkState { pos: w, time: t, covered: s.covered | 1 << e }));
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct LocalState {
    pos: Vertex,
    time: Timestamp,
    covered: u64,
    /// Edges already used at `time`.
    current: u64,
    /// Vertices touched at `time`; only tracked when odd-vertex pruning is on.
    seen: u128,
}

pub(crate) struct LocalSpace<'a> {
    t: Tables<'a>,
    closed: bool,
    /// Odd-degree vertices that every timestamp's trail must touch.
    odd: Option<u128>,
}

impl<'a> LocalSpace<'a> {
    pub fn new(g: &'a TemporalGraph, closed: bool, order: TimeOrder, odd_pruning: bool) -> Self {
        let odd = odd_pruning.then(|| {
            odd_degree_vertices(&g.base_graph()).into_iter().fold(0u128, |m, v| m | 1 << v)
        });
        LocalSpace { t: Tables::new(g, order), closed, odd }
    }

    pub fn search(&self, start: Vertex, max_nodes: Option<u64>) -> (Outcome, SearchStats) {
        let init = LocalState { pos: start, time: 0, covered: 0, current: 0, seen: 0 };
        dfs(&Rooted { space: self, start }, init, max_nodes)
    }
}

impl Space for Rooted<'_, LocalSpace<'_>> {
    type State = LocalState;

    fn accept(&self, s: &LocalState) -> bool {
        s.covered == self.t.full && (!self.closed || s.pos == self.start)
    }

    fn dead(&self, s: &LocalState) -> bool {
        self.t.stranded(s.time, s.covered)
    }

    fn successors(&self, s: &LocalState, out: &mut Vec<(Step, LocalState)>) {
        for (w, e, t) in self.t.moves(s.pos, s.time) {
            let bit = 1u64 << e;
            let same = t == s.time;
            if same && s.current & bit != 0 {
                continue;
            }
            let touched = (1u128 << s.pos) | (1u128 << w);
            let seen = match self.odd {
                None => 0,
                Some(_) if same => s.seen | touched,
                Some(odd) => {
                    // leaving timestamp 1 (possibly without any step in it)
                    if s.time <= 1 && t >= 2 && odd & !s.seen != 0 {
                        continue;
                    }
                    touched
                }
            };
            let current = if same { s.current | bit } else { bit };
            out.push((
                Step::new(s.pos, w, t),
                LocalState { pos: w, time: t, covered: s.covered | bit, current, seen },
            ));
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct TrailState {
    pos: Vertex,
    time: Timestamp,
    used: u64,
}

pub(crate) struct TrailSpace<'a> {
    t: Tables<'a>,
    closed: bool,
    /// Per-edge endpoint masks and the odd vertices of the whole graph; `None`
    /// when the graph has too many vertices for parity pruning.
    parity: Option<(Vec<u128>, u128)>,
    incident: Vec<u64>,
}

impl<'a> TrailSpace<'a> {
    pub fn new(g: &'a TemporalGraph, closed: bool, order: TimeOrder) -> Self {
        let parity = (g.vertex_count() <= 128).then(|| {
            let ends = g.edges().iter().map(|e| (1u128 << e.u) | (1u128 << e.v)).collect();
            let odd = odd_degree_vertices(&g.base_graph()).into_iter().fold(0u128, |m, v| m | 1 << v);
            (ends, odd)
        });
        let incident = (0..g.vertex_count())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &(_, e)| m | 1 << e))
            .collect();
        TrailSpace { t: Tables::new(g, order), closed, parity, incident }
    }

    pub fn search(&self, start: Vertex, max_nodes: Option<u64>) -> (Outcome, SearchStats) {
        dfs(&Rooted { space: self, start }, TrailState { pos: start, time: 0, used: 0 }, max_nodes)
    }

    /// Odd vertices of the subgraph of unused edges.
    fn remaining_odd(&self, used: u64) -> Option<u128> {
        let (ends, odd) = self.parity.as_ref()?;
        let mut m = *odd;
        let mut rest = used;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            m ^= ends[e];
            rest &= rest - 1;
        }
        Some(m)
    }
}

impl Space for Rooted<'_, TrailSpace<'_>> {
    type State = TrailState;

    fn accept(&self, s: &TrailState) -> bool {
        s.used == self.t.full && (!self.closed || s.pos == self.start)
    }

    fn dead(&self, s: &TrailState) -> bool {
        if self.t.stranded(s.time, s.used) {
            return true;
        }
        let rest = self.t.full & !s.used;
        if rest == 0 {
            return false;
        }
        if self.incident[s.pos] & rest == 0 {
            return true;
        }
        let Some(odd) = self.remaining_odd(s.used) else {
            return false;
        };
        let here = 1u128 << s.pos;
        if self.closed {
            let expected = if s.pos == self.start { 0 } else { here | 1u128 << self.start };
            odd != expected
        } else {
            odd.count_ones() > 2 || (odd != 0 && odd & here == 0)
        }
    }

    fn successors(&self, s: &TrailState, out: &mut Vec<(Step, TrailState)>) {
        for (w, e, t) in self.t.moves(s.pos, s.time) {
            let bit = 1u64 << e;
            if s.used & bit == 0 {
                out.push((Step::new(s.pos, w, t), TrailState { pos: w, time: t, used: s.used | bit }));
            }
        }
    }
}
