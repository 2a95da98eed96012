//! Vertex-name side table as JSON lines: `{"id":0,"name":"s_1"}`.

use serde::{Deserialize, Serialize};

use crate::io::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NameRecord {
    pub id: usize,
    pub name: String,
}

pub fn serialize_names_jsonl(names: &[String]) -> String {
    names
        .iter()
        .enumerate()
        .map(|(id, name)| {
            let rec = NameRecord { id, name: name.clone() };
            serde_json::to_string(&rec).expect("plain record") + "\n"
        })
        .collect()
}

/// Records must list ids `0..k` in order.
pub fn parse_names_jsonl(text: &str) -> Result<Vec<String>, ParseError> {
    let mut names = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec: NameRecord = serde_json::from_str(line).map_err(|e| ParseError::new(i + 1, e.to_string()))?;
        if rec.id != names.len() {
            return Err(ParseError::new(i + 1, format!("expected id {}, found {}", names.len(), rec.id)));
        }
        names.push(rec.name);
    }
    Ok(names)
}
