use crate::graph::{TemporalGraph, Timestamp, Vertex};

/// Ring of `k >= 3` hexagons, consecutive ones sharing an edge, on the
/// dynamic-based lifetime `tau`. Hexagon `j` is the cycle
/// `A_{j-1} B_{j-1} X_j B_j A_j Y_j` (indices mod `k`), so `A_j B_j` is
/// shared by hexagons `j` and `j + 1`. Returns `None` for `k < 3`.
pub fn hexagon_ring(k: usize, tau: Timestamp) -> Option<(TemporalGraph, Vec<String>)> {
    if k < 3 || tau == 0 {
        return None;
    }
    let id = |letter: usize, j: usize| -> Vertex { 4 * ((j + k - 1) % k) + letter };
    let (a, b, x, y) = (0, 1, 2, 3);
    let mut names = Vec::with_capacity(4 * k);
    for j in 1..=k {
        for letter in ["A", "B", "X", "Y"] {
            names.push(format!("{letter}_{j}"));
        }
    }
    let mut edges = Vec::with_capacity(5 * k);
    for j in 1..=k {
        let prev = if j == 1 { k } else { j - 1 };
        edges.push((id(a, j), id(b, j)));
        edges.push((id(b, prev), id(x, j)));
        edges.push((id(x, j), id(b, j)));
        edges.push((id(a, j), id(y, j)));
        edges.push((id(y, j), id(a, prev)));
    }
    let g = TemporalGraph::dynamic(4 * k, tau, edges).expect("ring is simple");
    Some((g, names))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_of_three() {
        let (g, names) = hexagon_ring(3, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (12, 15));
        for (v, name) in names.iter().enumerate() {
            let expected = if name.starts_with('A') || name.starts_with('B') { 3 } else { 2 };
            assert_eq!(g.degree(v), expected, "{name}");
        }
        assert!(hexagon_ring(2, 2).is_none());
    }
}
