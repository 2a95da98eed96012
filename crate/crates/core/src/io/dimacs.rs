use std::fmt::Write;

use crate::io::{parse_num, ParseError};
use crate::reductions::CnfFormula;

/// DIMACS CNF. Clauses may span lines; each ends with `0`. Width and
/// repeated-variable rules are left to the reductions.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        last = ln;
        if line.starts_with('p') {
            if header.is_some() {
                return Err(ParseError::new(ln, "second problem line"));
            }
            let mut tok = line.split_whitespace().skip(1);
            if tok.next() != Some("cnf") {
                return Err(ParseError::new(ln, "expected 'p cnf n m'"));
            }
            let n: usize = parse_num(ln, tok.next(), "variable count")?;
            let m: usize = parse_num(ln, tok.next(), "clause count")?;
            if let Some(t) = tok.next() {
                return Err(ParseError::new(ln, format!("unexpected token '{t}'")));
            }
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or_else(|| ParseError::new(ln, "clause before 'p cnf' line"))?;
        for token in line.split_whitespace() {
            let lit: i32 = parse_num(ln, Some(token), "literal")?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > n {
                return Err(ParseError::new(ln, format!("literal {lit} exceeds {n} variables")));
            } else {
                current.push(lit);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| ParseError::new(0, "missing 'p cnf' line"))?;
    if !current.is_empty() {
        return Err(ParseError::new(last, "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(ParseError::new(last, format!("header declares {m} clauses, found {}", clauses.len())));
    }
    Ok(CnfFormula::new(n, clauses))
}

pub fn serialize_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.variable_count, f.clauses.len());
    for c in &f.clauses {
        for lit in c {
            write!(out, "{lit} ").unwrap();
        }
        out.push_str("0\n");
    }
    out
}
