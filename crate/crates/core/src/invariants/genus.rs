//! f-vectors, Euler characteristic, `ρ_ε`, regular genus and G-degree.

use crate::boundary::boundary_graph;
use crate::color::ColorSet;
use crate::graph::ColoredGraph;
use crate::scalar::GenusScalar;

use super::permutation::CyclicPermutation;
use super::InvariantError;

/// Number of `h`-simplices of the associated cell complex, `h = 0..=d`:
/// an `h`-simplex labeled by `B` (|B| = h+1) for every component of `Γ` with
/// the colors of `B` removed.
pub fn f_vector(graph: &ColoredGraph) -> Vec<usize> {
    let d = graph.dimension();
    (0..=d)
        .map(|h| {
            ColorSet::subsets_of_size(d, h + 1)
                .into_iter()
                .map(|labels| graph.g(labels.complement(d)))
                .sum()
        })
        .collect()
}

pub fn euler_characteristic(graph: &ColoredGraph) -> i64 {
    alternating_sum(&f_vector(graph))
}

pub(crate) fn alternating_sum(f: &[usize]) -> i64 {
    f.iter()
        .enumerate()
        .map(|(h, &x)| if h % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// Doubled `ρ_ε` from the closed formula; no regularity check.
pub(crate) fn rho_closed_twice(graph: &ColoredGraph, eps: &CyclicPermutation) -> i64 {
    let d = graph.dimension() as i64;
    let faces: i64 = eps.cyclic_pairs().map(|pair| graph.g(pair) as i64).sum();
    2 - faces - (1 - d) * graph.order() as i64
}

fn check_dimension(graph: &ColoredGraph, eps: &CyclicPermutation) -> Result<(), InvariantError> {
    if eps.dimension() != graph.dimension() {
        return Err(InvariantError::Dimension {
            expected: graph.dimension(),
            got: eps.dimension(),
        });
    }
    Ok(())
}

fn to_genus<T: GenusScalar>(
    graph: &ColoredGraph,
    eps: &CyclicPermutation,
    twice: i64,
) -> Result<T, InvariantError> {
    if graph.is_bipartite() && twice % 2 != 0 {
        return Err(InvariantError::NonIntegralGenusForBipartite {
            permutation: eps.to_string(),
        });
    }
    Ok(T::from_halves(twice))
}

/// `ρ_ε` of a regular graph: `2 - 2ρ_ε = Σ g_{ε_i ε_{i+1}} + (1-d)p`.
pub fn rho_closed<T: GenusScalar>(
    graph: &ColoredGraph,
    eps: &CyclicPermutation,
) -> Result<T, InvariantError> {
    if !graph.is_regular() {
        return Err(InvariantError::NotRegular);
    }
    check_dimension(graph, eps)?;
    to_genus(graph, eps, rho_closed_twice(graph, eps))
}

/// Residue counts needed by the boundary genus formula, computed once per graph.
#[derive(Debug, Clone)]
pub struct BoundaryGenusData {
    dimension: usize,
    p_bar: i64,
    p_dot: i64,
    /// `ġ` indexed by pair mask.
    regular_pairs: Vec<(ColorSet, i64)>,
    /// `∂g` for pairs of `{0..d-1}`.
    boundary_pairs: Vec<(ColorSet, i64)>,
}

impl BoundaryGenusData {
    pub fn new(graph: &ColoredGraph) -> Result<Self, InvariantError> {
        let bgraph = boundary_graph(graph)?;
        let d = graph.dimension();
        let cls = graph.classify_vertices();
        let regular_pairs = ColorSet::subsets_of_size(d, 2)
            .into_iter()
            .map(|pair| (pair, graph.g_dot(pair) as i64))
            .collect();
        let boundary_pairs = ColorSet::subsets_of_size(d, 2)
            .into_iter()
            .filter(|pair| !pair.contains(d))
            .map(|pair| (pair, bgraph.graph.g(pair) as i64))
            .collect();
        Ok(BoundaryGenusData {
            dimension: d,
            p_bar: cls.p_bar as i64,
            p_dot: cls.p_dot as i64,
            regular_pairs,
            boundary_pairs,
        })
    }

    fn lookup(table: &[(ColorSet, i64)], key: ColorSet) -> i64 {
        table
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .unwrap_or(0)
    }

    /// Doubled `ρ_ε` for a canonical `ε` (with `ε_d = d`):
    /// `2 - 2ρ_ε = Σ ġ_{ε_i ε_{i+1}} + (1-d)ṗ + (2-d)p̄ + ∂g_{ε_0 ε_{d-1}}`.
    pub fn rho_twice(&self, eps: &CyclicPermutation) -> i64 {
        let d = self.dimension as i64;
        let faces: i64 = eps
            .cyclic_pairs()
            .map(|pair| Self::lookup(&self.regular_pairs, pair))
            .sum();
        let boundary_faces = Self::lookup(&self.boundary_pairs, eps.boundary_pair());
        2 - faces - (1 - d) * self.p_dot - (2 - d) * self.p_bar - boundary_faces
    }
}

/// `ρ_ε` of a graph with boundary, from the boundary genus formula.
pub fn rho_boundary<T: GenusScalar>(
    graph: &ColoredGraph,
    eps: &CyclicPermutation,
) -> Result<T, InvariantError> {
    if graph.is_regular() {
        return Err(InvariantError::NoBoundary);
    }
    check_dimension(graph, eps)?;
    let data = BoundaryGenusData::new(graph)?;
    to_genus(graph, eps, data.rho_twice(eps))
}

/// Doubled `ρ_ε` for every canonical permutation, picking the formula that
/// matches the graph (closed for regular graphs, boundary otherwise).
pub(crate) fn rho_table_twice(
    graph: &ColoredGraph,
) -> Result<Vec<(CyclicPermutation, i64)>, InvariantError> {
    let perms = CyclicPermutation::enumerate(graph.dimension());
    let table: Vec<(CyclicPermutation, i64)> = if graph.is_regular() {
        perms
            .into_iter()
            .map(|eps| {
                let t = rho_closed_twice(graph, &eps);
                (eps, t)
            })
            .collect()
    } else {
        let data = BoundaryGenusData::new(graph)?;
        perms
            .into_iter()
            .map(|eps| {
                let t = data.rho_twice(&eps);
                (eps, t)
            })
            .collect()
    };
    if graph.is_bipartite() {
        if let Some((eps, _)) = table.iter().find(|(_, t)| t % 2 != 0) {
            return Err(InvariantError::NonIntegralGenusForBipartite {
                permutation: eps.to_string(),
            });
        }
    }
    Ok(table)
}

/// `ρ_ε` for every canonical permutation, in canonical order.
pub fn rho_table<T: GenusScalar>(
    graph: &ColoredGraph,
) -> Result<Vec<(CyclicPermutation, T)>, InvariantError> {
    Ok(rho_table_twice(graph)?
        .into_iter()
        .map(|(eps, t)| (eps, T::from_halves(t)))
        .collect())
}

/// The minimum of `ρ_ε` over all cyclic permutations.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularGenus<T> {
    pub value: T,
    /// Every permutation attaining the minimum, in canonical order.
    pub argmin: Vec<CyclicPermutation>,
}

pub fn regular_genus<T: GenusScalar>(
    graph: &ColoredGraph,
) -> Result<RegularGenus<T>, InvariantError> {
    let table = rho_table_twice(graph)?;
    let min = table
        .iter()
        .map(|(_, t)| *t)
        .min()
        .expect("at least one permutation");
    Ok(RegularGenus {
        value: T::from_halves(min),
        argmin: table
            .into_iter()
            .filter(|(_, t)| *t == min)
            .map(|(eps, _)| eps)
            .collect(),
    })
}

/// `ω_G`: the sum of `ρ_ε` over all `d!/2` cyclic permutations of a regular graph.
pub fn gurau_degree<T: GenusScalar>(graph: &ColoredGraph) -> Result<T, InvariantError> {
    if !graph.is_regular() {
        return Err(InvariantError::NotRegular);
    }
    let twice: i64 = rho_table_twice(graph)?.iter().map(|(_, t)| t).sum();
    Ok(T::from_halves(twice))
}
