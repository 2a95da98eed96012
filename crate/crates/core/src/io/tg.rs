//! `.tg`: header `tg n m tau`, then `m` lines `u v labels` where labels is a
//! comma list or `*` for every timestamp, then optionally a `names` line
//! followed by `id name` lines.

use std::collections::HashSet;
use std::fmt::Write;

use crate::graph::{TemporalGraph, Timestamp};
use crate::io::{content_lines, expect_end, parse_num, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TgDocument {
    pub graph: TemporalGraph,
    /// One name per vertex when a names section is present.
    pub names: Option<Vec<String>>,
}

pub fn parse_tg(text: &str) -> Result<TemporalGraph, ParseError> {
    parse_tg_document(text).map(|d| d.graph)
}

pub fn parse_tg_document(text: &str) -> Result<TgDocument, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::new(0, "empty input"))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("tg") {
        return Err(ParseError::new(hl, "expected header 'tg n m tau'"));
    }
    let n: usize = parse_num(hl, tok.next(), "vertex count")?;
    let m: usize = parse_num(hl, tok.next(), "edge count")?;
    let tau: Timestamp = parse_num(hl, tok.next(), "lifetime")?;
    expect_end(hl, tok)?;
    if tau == 0 {
        return Err(ParseError::new(hl, "lifetime must be positive"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    let mut last_line = hl;
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| ParseError::new(last_line, format!("expected {m} edge lines, found {}", edges.len())))?;
        last_line = ln;
        let mut tok = line.split_whitespace();
        let u: usize = parse_num(ln, tok.next(), "endpoint")?;
        let v: usize = parse_num(ln, tok.next(), "endpoint")?;
        let field = tok.next().ok_or_else(|| ParseError::new(ln, "missing labels"))?;
        expect_end(ln, tok)?;
        if u == v {
            return Err(ParseError::new(ln, format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(ParseError::new(ln, format!("vertex {} out of range for n = {n}", u.max(v))));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::new(ln, format!("duplicate edge {u} {v}")));
        }
        let labels: Vec<Timestamp> = if field == "*" {
            (1..=tau).collect()
        } else {
            let mut labels = Vec::new();
            for part in field.split(',') {
                let t: Timestamp = parse_num(ln, Some(part), "label")?;
                if t == 0 || t > tau {
                    return Err(ParseError::new(ln, format!("label {t} outside 1..={tau}")));
                }
                labels.push(t);
            }
            labels
        };
        edges.push((u, v, labels));
    }

    let mut names = None;
    if let Some((ln, line)) = lines.next() {
        if line != "names" {
            return Err(ParseError::new(ln, format!("expected 'names' or end of input, found '{line}'")));
        }
        let mut list: Vec<Option<String>> = vec![None; n];
        for (ln, line) in lines {
            let mut tok = line.split_whitespace();
            let id: usize = parse_num(ln, tok.next(), "vertex id")?;
            let name = tok.next().ok_or_else(|| ParseError::new(ln, "missing name"))?;
            expect_end(ln, tok)?;
            let slot = list.get_mut(id).ok_or_else(|| ParseError::new(ln, format!("vertex {id} out of range")))?;
            if slot.replace(name.to_string()).is_some() {
                return Err(ParseError::new(ln, format!("vertex {id} named twice")));
            }
        }
        let complete: Option<Vec<String>> = list.into_iter().collect();
        names = Some(complete.ok_or_else(|| ParseError::new(0, "names section must name every vertex"))?);
    }

    let graph = TemporalGraph::new(n, tau, edges).map_err(|e| ParseError::new(0, e.to_string()))?;
    Ok(TgDocument { graph, names })
}

pub fn serialize_tg(g: &TemporalGraph) -> String {
    serialize_tg_document(&TgDocument { graph: g.clone(), names: None })
}

/// Canonical form: edges in `(min, max)` order, `*` for full label sets.
pub fn serialize_tg_document(doc: &TgDocument) -> String {
    let g = &doc.graph;
    let mut out = format!("tg {} {} {}\n", g.vertex_count(), g.edge_count(), g.lifetime());
    for e in g.edges() {
        let labels = if e.labels().len() == g.lifetime() as usize {
            "*".to_string()
        } else {
            e.labels().iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
        };
        writeln!(out, "{} {} {labels}", e.u, e.v).unwrap();
    }
    if let Some(names) = &doc.names {
        out.push_str("names\n");
        for (id, name) in names.iter().enumerate() {
            writeln!(out, "{id} {name}").unwrap();
        }
    }
    out
}
