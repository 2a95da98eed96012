use thiserror::Error;

/// CNF over variables `1..=variable_count`; a literal is a signed variable
/// index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    pub variable_count: usize,
    pub clauses: Vec<Vec<i32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("clause {} contains literal 0", .clause + 1)]
    ZeroLiteral { clause: usize },
    #[error("clause {}: literal {literal} exceeds the {variables} declared variables", .clause + 1)]
    OutOfRange { clause: usize, literal: i32, variables: usize },
    #[error("clause {} has {width} literals, expected {expected}", .clause + 1)]
    Width { clause: usize, width: usize, expected: &'static str },
    #[error("clause {} mentions variable {variable} more than once", .clause + 1)]
    RepeatedVariable { clause: usize, variable: usize },
    #[error("formula has no variables")]
    NoVariables,
}

/// Variable index (1-based) and polarity of a literal.
pub fn var_of(lit: i32) -> (usize, bool) {
    (lit.unsigned_abs() as usize, lit > 0)
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Vec<i32>>) -> Self {
        CnfFormula { variable_count, clauses }
    }

    /// Literals in range, nonzero, and no variable repeated within a clause.
    pub fn validate_literals(&self) -> Result<(), CnfError> {
        for (ci, clause) in self.clauses.iter().enumerate() {
            let mut vars = Vec::with_capacity(clause.len());
            for &lit in clause {
                if lit == 0 {
                    return Err(CnfError::ZeroLiteral { clause: ci });
                }
                let (v, _) = var_of(lit);
                if v > self.variable_count {
                    return Err(CnfError::OutOfRange { clause: ci, literal: lit, variables: self.variable_count });
                }
                if vars.contains(&v) {
                    return Err(CnfError::RepeatedVariable { clause: ci, variable: v });
                }
                vars.push(v);
            }
        }
        Ok(())
    }

    /// Input rule for the walk reduction: 1 to 3 literals over distinct
    /// variables.
    pub fn validate_for_walk(&self) -> Result<(), CnfError> {
        self.validate_common("1 to 3", |w| (1..=3).contains(&w))
    }

    /// Input rule for the NAE reductions: exactly 3 literals over 3 distinct
    /// variables.
    pub fn validate_3cnf(&self) -> Result<(), CnfError> {
        self.validate_common("3", |w| w == 3)
    }

    fn validate_common(&self, expected: &'static str, width_ok: impl Fn(usize) -> bool) -> Result<(), CnfError> {
        if self.variable_count == 0 {
            return Err(CnfError::NoVariables);
        }
        if let Some((ci, c)) = self.clauses.iter().enumerate().find(|(_, c)| !width_ok(c.len())) {
            return Err(CnfError::Width { clause: ci, width: c.len(), expected });
        }
        self.validate_literals()
    }

    pub fn literal_value(lit: i32, assignment: &[bool]) -> bool {
        let (v, positive) = var_of(lit);
        assignment[v - 1] == positive
    }

    /// First clause with no true literal.
    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| !c.iter().any(|&l| Self::literal_value(l, assignment)))
    }

    /// First clause whose literals are all equal.
    pub fn first_nae_violation(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|c| {
            let t = c.iter().filter(|&&l| Self::literal_value(l, assignment)).count();
            t == 0 || t == c.len()
        })
    }

    pub fn satisfies(&self, assignment: &[bool]) -> bool {
        self.first_unsatisfied(assignment).is_none()
    }

    pub fn nae_satisfies(&self, assignment: &[bool]) -> bool {
        self.first_nae_violation(assignment).is_none()
    }
}
