//! Generators for the SAT-based hardness constructions, with translation
//! between witnesses and truth assignments.

mod artifact;
mod cnf;
mod hexring;
mod lift;
mod nae;
mod sat_walk;
mod trail;

use thiserror::Error;

use crate::verify::Violation;

pub use artifact::{Construction, ReductionArtifact};
pub use cnf::{var_of, CnfError, CnfFormula};
pub use hexring::hexagon_ring;
pub use lift::{lift_localtour_to_localtrail, localtrail_witness_from_localtour};
pub use nae::{
    localtour_witness_from_nae, nae_assignment_from_localtour, reduce_nae3sat_to_localtour,
    reduce_to_two_trail_cover, two_trail_cover_witness_from_nae,
};
pub use sat_walk::{assignment_from_walk, reduce_3sat_to_walk, reduce_3sat_to_walk_forest, walk_witness_from_assignment};
pub use trail::{reduce_nae3sat_to_trail, trail_witness_from_nae};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error("assignment has {got} values for {expected} variables")]
    AssignmentLength { expected: usize, got: usize },
    #[error("assignment leaves clause {} unsatisfied", .0 + 1)]
    NotSatisfying(usize),
    #[error("assignment makes all literals of clause {} equal", .0 + 1)]
    NotNae(usize),
    #[error("walk is not a valid witness: {}", violations_text(.0))]
    InvalidWalk(Vec<Violation>),
    #[error("artifact was built by a different construction")]
    WrongConstruction,
    #[error("lifetime must be at least 2, got {0}")]
    Lifetime(u32),
    #[error("vertex {0} is not in the graph")]
    Vertex(usize),
    #[error("witness extraction failed: {0}")]
    Extraction(String),
}

fn violations_text(v: &[Violation]) -> String {
    let shown: Vec<String> = v.iter().take(5).map(|x| x.to_string()).collect();
    let more = if v.len() > 5 { format!(" (+{} more)", v.len() - 5) } else { String::new() };
    format!("{}{more}", shown.join(", "))
}

fn check_length(formula: &CnfFormula, assignment: &[bool]) -> Result<(), ReductionError> {
    if assignment.len() != formula.variable_count {
        return Err(ReductionError::AssignmentLength { expected: formula.variable_count, got: assignment.len() });
    }
    Ok(())
}
