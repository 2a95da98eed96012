//! Eulerian walks, local trails and trails on temporal graphs.

pub mod exact;
pub mod graph;
pub mod io;
pub mod poly;
pub mod reductions;
pub mod verify;
pub mod walk;

pub use graph::{GraphError, StaticGraph, TemporalEdge, TemporalGraph, Timestamp, Vertex};
pub use verify::{verify, ProblemVariant, TimeOrder, Violation, ViolationCode, WalkKind};
pub use walk::{Step, TemporalWalk};
