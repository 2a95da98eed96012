//! `.wit`: header `wit kind ordering start k`, then `k` lines `from to time`.

use std::fmt::Write;

use crate::graph::{Timestamp, Vertex};
use crate::io::{content_lines, expect_end, parse_num, ParseError};
use crate::verify::{ProblemVariant, TimeOrder, WalkKind};
use crate::walk::{Step, TemporalWalk};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessDocument {
    pub variant: ProblemVariant,
    pub walk: TemporalWalk,
}

pub fn parse_witness(text: &str) -> Result<WitnessDocument, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::new(0, "empty input"))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("wit") {
        return Err(ParseError::new(hl, "expected header 'wit kind ordering start k'"));
    }
    let kind: WalkKind = parse_num(hl, tok.next(), "problem kind")?;
    let order: TimeOrder = parse_num(hl, tok.next(), "ordering")?;
    let start: Vertex = parse_num(hl, tok.next(), "start vertex")?;
    let k: usize = parse_num(hl, tok.next(), "step count")?;
    expect_end(hl, tok)?;
    let mut steps = Vec::with_capacity(k);
    let mut last = hl;
    for (ln, line) in lines {
        last = ln;
        if steps.len() == k {
            return Err(ParseError::new(ln, format!("more than {k} steps")));
        }
        let mut tok = line.split_whitespace();
        let from: Vertex = parse_num(ln, tok.next(), "vertex")?;
        let to: Vertex = parse_num(ln, tok.next(), "vertex")?;
        let time: Timestamp = parse_num(ln, tok.next(), "time")?;
        expect_end(ln, tok)?;
        steps.push(Step::new(from, to, time));
    }
    if steps.len() != k {
        return Err(ParseError::new(last, format!("expected {k} steps, found {}", steps.len())));
    }
    Ok(WitnessDocument { variant: ProblemVariant { kind, order }, walk: TemporalWalk::new(start, steps) })
}

pub fn serialize_witness(doc: &WitnessDocument) -> String {
    let w = &doc.walk;
    let mut out = format!("wit {} {} {} {}\n", doc.variant.kind, doc.variant.order.as_str(), w.start, w.len());
    for s in &w.steps {
        writeln!(out, "{} {} {}", s.from, s.to, s.time).unwrap();
    }
    out
}
