//! Seeded random colored graphs for property suites. No manifold guarantee.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{ColoredGraph, GraphError, Vertex};

#[derive(Debug, Clone, Copy)]
pub struct SamplerConfig {
    /// Rejection-sampling attempts before giving up.
    pub max_attempts: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            max_attempts: 10_000,
        }
    }
}

fn random_matching<R: Rng>(n: usize, rng: &mut R) -> Vec<(Vertex, Vertex)> {
    let mut vertices: Vec<Vertex> = (0..n).collect();
    vertices.shuffle(rng);
    vertices
        .chunks_exact(2)
        .map(|pair| (pair[0], pair[1]))
        .collect()
}

fn regular_edges<R: Rng>(d: usize, n: usize, rng: &mut R) -> Vec<Vec<(Vertex, Vertex)>> {
    (0..=d).map(|_| random_matching(n, rng)).collect()
}

fn flatten(matchings: &[Vec<(Vertex, Vertex)>]) -> Vec<(Vertex, Vertex, usize)> {
    matchings
        .iter()
        .enumerate()
        .flat_map(|(c, m)| m.iter().map(move |&(u, v)| (u, v, c)))
        .collect()
}

/// A regular `(d+1)`-colored graph on `2p` vertices: one uniform random perfect
/// matching per color, resampled until connected.
pub fn random_gem(d: usize, p: usize, seed: u64) -> Result<ColoredGraph, GraphError> {
    random_gem_with(d, p, seed, &SamplerConfig::default())
}

pub fn random_gem_with(
    d: usize,
    p: usize,
    seed: u64,
    config: &SamplerConfig,
) -> Result<ColoredGraph, GraphError> {
    if p == 0 {
        return Err(GraphError::InvalidOrder);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..config.max_attempts {
        let edges = flatten(&regular_edges(d, 2 * p, &mut rng));
        match ColoredGraph::validate(d, 2 * p, &edges) {
            Ok(g) => return Ok(g),
            Err(GraphError::Disconnected { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(GraphError::SamplingExhausted(config.max_attempts))
}

/// A connected member of the class with boundary: a random regular graph on
/// `2p` vertices with `removed` of its color-`d` edges deleted
/// (so `2 * removed` boundary vertices).
pub fn random_boundary_gem(
    d: usize,
    p: usize,
    removed: usize,
    seed: u64,
) -> Result<ColoredGraph, GraphError> {
    random_boundary_gem_with(d, p, removed, seed, &SamplerConfig::default())
}

pub fn random_boundary_gem_with(
    d: usize,
    p: usize,
    removed: usize,
    seed: u64,
    config: &SamplerConfig,
) -> Result<ColoredGraph, GraphError> {
    if p == 0 || removed == 0 || removed > p {
        return Err(GraphError::InvalidOrder);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..config.max_attempts {
        let mut matchings = regular_edges(d, 2 * p, &mut rng);
        matchings[d].shuffle(&mut rng);
        matchings[d].truncate(p - removed);
        match ColoredGraph::validate(d, 2 * p, &flatten(&matchings)) {
            Ok(g) => return Ok(g),
            Err(GraphError::Disconnected { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(GraphError::SamplingExhausted(config.max_attempts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::s4_2;

    #[test]
    fn order_two_is_forced() {
        for seed in 0..5 {
            assert_eq!(random_gem(4, 1, seed).unwrap(), s4_2());
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = random_gem(2, 3, 42).unwrap();
        assert_eq!(a, random_gem(2, 3, 42).unwrap());
        assert_eq!(a.num_vertices(), 6);
        assert!(a.is_regular());
    }

    #[test]
    fn zero_order_rejected() {
        assert_eq!(random_gem(4, 0, 1), Err(GraphError::InvalidOrder));
    }

    #[test]
    fn boundary_sampler_removes_requested_edges() {
        let g = random_boundary_gem(4, 6, 2, 7).unwrap();
        assert_eq!(g.classify_vertices().p_bar, 2);
        assert_eq!(g.edge_count(4), 4);
    }

    #[test]
    fn exhausted_budget_reported() {
        let cfg = SamplerConfig { max_attempts: 0 };
        assert_eq!(
            random_gem_with(2, 3, 0, &cfg),
            Err(GraphError::SamplingExhausted(0))
        );
    }
}
