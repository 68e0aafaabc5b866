use super::{Graph, GraphError};
use crate::rng::SplitMix64;

/// Random connected unicyclic graph on `n >= 3` vertices.
///
/// Model: draw the cycle length `p` uniformly from `3..=n` and build the
/// cycle on `0..p`; then each vertex `v = p..n` is joined to a uniformly
/// chosen earlier vertex in `0..v`. This covers every unicyclic shape but is
/// not uniform over isomorphism classes.
pub fn random_unicyclic(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidSpec(format!(
            "unicyclic graphs need n >= 3, got {n}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let p = rng.range_inclusive(3, n as u64) as usize;
    let mut edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    for v in p..n {
        edges.push((rng.below(v as u64) as usize, v));
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_stats;

    #[test]
    fn three_vertices_is_a_triangle() {
        for seed in 0..20 {
            let g = random_unicyclic(3, seed).unwrap();
            assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        }
    }

    #[test]
    fn deterministic_in_seed() {
        assert_eq!(random_unicyclic(12, 5).unwrap(), random_unicyclic(12, 5).unwrap());
    }

    #[test]
    fn structure_is_unicyclic() {
        let g = random_unicyclic(8, 42).unwrap();
        assert_eq!(g.edge_count(), 8);
        assert!(g.is_connected());
        assert_eq!(g.cyclomatic_number(), 1);
        let stats = graph_stats(&g).unwrap();
        assert!(stats.cycle_length.is_some());
    }

    #[test]
    fn rejects_tiny() {
        assert!(random_unicyclic(2, 0).is_err());
    }
}
