use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{TemporalGraph, Timestamp};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("{m} edges requested but {n} vertices allow at most {max}")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("density must lie in (0, 1], got {0}")]
    Density(f64),
    #[error("lifetime must be positive")]
    Lifetime,
}

/// Uniformly random simple graph with `m` edges; each timestamp joins an
/// edge's label set independently with probability `density`, redrawing
/// empty sets. Reproducible from `seed`.
pub fn gen_random(n: usize, m: usize, tau: Timestamp, density: f64, seed: u64) -> Result<TemporalGraph, GenError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(GenError::TooManyEdges { n, m, max });
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(GenError::Density(density));
    }
    if tau == 0 {
        return Err(GenError::Lifetime);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut chosen: Vec<usize> = sample(&mut rng, max, m).into_vec();
    chosen.sort_unstable();
    let edges: Vec<_> = chosen
        .into_iter()
        .map(|i| {
            let labels = loop {
                let l: Vec<Timestamp> = (1..=tau).filter(|_| rng.gen_bool(density)).collect();
                if !l.is_empty() {
                    break l;
                }
            };
            (pairs[i].0, pairs[i].1, labels)
        })
        .collect();
    Ok(TemporalGraph::new(n, tau, edges).expect("generated graph is valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = gen_random(7, 12, 3, 0.4, 9).unwrap();
        assert_eq!(a, gen_random(7, 12, 3, 0.4, 9).unwrap());
        assert_eq!(a.edge_count(), 12);
        assert!(gen_random(6, 10, 4, 1.0, 1).unwrap().is_dynamic_based());
        assert!(matches!(gen_random(4, 7, 2, 0.5, 0), Err(GenError::TooManyEdges { .. })));
        assert!(gen_random(4, 3, 2, 0.0, 0).is_err());
    }
}
