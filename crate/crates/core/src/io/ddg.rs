//! `.ddg`: header `ddg n m`, then `m` lines `tail head transit`.

use std::fmt::Write;

use crate::io::{content_lines, expect_end, parse_num, ParseError};
use crate::poly::DynamicDigraph;

pub fn parse_ddg(text: &str) -> Result<DynamicDigraph, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::new(0, "empty input"))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("ddg") {
        return Err(ParseError::new(hl, "expected header 'ddg n m'"));
    }
    let n: usize = parse_num(hl, tok.next(), "vertex count")?;
    let m: usize = parse_num(hl, tok.next(), "arc count")?;
    expect_end(hl, tok)?;
    let mut arcs = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, line) in lines {
        last = ln;
        if arcs.len() == m {
            return Err(ParseError::new(ln, format!("more than {m} arcs")));
        }
        let mut tok = line.split_whitespace();
        let tail: usize = parse_num(ln, tok.next(), "tail")?;
        let head: usize = parse_num(ln, tok.next(), "head")?;
        let transit: i64 = parse_num(ln, tok.next(), "transit")?;
        expect_end(ln, tok)?;
        if tail >= n || head >= n {
            return Err(ParseError::new(ln, format!("vertex {} out of range for n = {n}", tail.max(head))));
        }
        arcs.push((tail, head, transit));
    }
    if arcs.len() != m {
        return Err(ParseError::new(last, format!("expected {m} arcs, found {}", arcs.len())));
    }
    Ok(DynamicDigraph::new(n, arcs))
}

pub fn serialize_ddg(d: &DynamicDigraph) -> String {
    let mut out = format!("ddg {} {}\n", d.vertex_count, d.arcs.len());
    for a in &d.arcs {
        writeln!(out, "{} {} {}", a.tail, a.head, a.transit).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "ddg 2 2\n0 1 1\n1 0 -1\n";
        let d = parse_ddg(text).unwrap();
        assert_eq!(d.arcs[1].transit, -1);
        assert_eq!(serialize_ddg(&d), text);
        assert_eq!(parse_ddg("ddg 2 1\n0 2 1\n").unwrap_err().line, 2);
    }
}
