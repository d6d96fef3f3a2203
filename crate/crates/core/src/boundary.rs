//! Boundary graphs of colored graphs with boundary.
//!
//! Two boundary vertices are joined by a `j`-colored edge of `∂Γ` exactly when
//! they are the two ends of a maximal path of `Γ` alternating colors `j` and `d`.

use thiserror::Error;

use crate::color::{Color, ColorSet};
use crate::graph::{ColoredGraph, GraphError, Vertex};
use crate::invariants::genus::rho_closed_twice;
use crate::invariants::permutation::CyclicPermutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundaryError {
    #[error("graph is regular: it has no boundary")]
    NoBoundary,
    #[error("alternating path from boundary vertex {start} (color {color}) ended at internal vertex {end}")]
    InternalInconsistency {
        start: Vertex,
        color: Color,
        end: Vertex,
    },
    #[error("color {color} is not a boundary color (allowed 0..{dimension})")]
    InvalidColor { color: Color, dimension: usize },
    #[error("boundary component is not a regular colored graph")]
    NotRegular,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The boundary graph together with its bookkeeping back to the parent gem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryGraph {
    /// `(d-1)`-dimensional, regular, possibly disconnected.
    pub graph: ColoredGraph,
    /// Boundary component index of each boundary-graph vertex (by least vertex).
    pub component_map: Vec<usize>,
    /// Parent vertex of each boundary-graph vertex, increasing.
    pub parent_vertex_map: Vec<Vertex>,
    component_count: usize,
}

impl BoundaryGraph {
    /// Number of boundary components `h`.
    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// `∂g_B`: components of the boundary graph restricted to `colors`.
    pub fn g(&self, colors: ColorSet) -> Result<usize, BoundaryError> {
        let top = self.graph.dimension();
        if let Some(c) = colors.iter().find(|&c| c > top) {
            return Err(BoundaryError::InvalidColor {
                color: c,
                dimension: top + 1,
            });
        }
        Ok(self.graph.component_count(colors))
    }

    /// The `k`-th boundary component as a stand-alone connected graph.
    pub fn component(&self, k: usize) -> Option<ColoredGraph> {
        let members: Vec<Vertex> = (0..self.graph.num_vertices())
            .filter(|&v| self.component_map[v] == k)
            .collect();
        if members.is_empty() {
            return None;
        }
        let mut index = vec![usize::MAX; self.graph.num_vertices()];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .graph
            .edges()
            .into_iter()
            .filter(|&(u, _, _)| self.component_map[u] == k)
            .map(|(u, v, c)| (index[u], index[v], c))
            .collect();
        ColoredGraph::from_edge_list(self.graph.dimension(), members.len(), &edges, true).ok()
    }

    /// Whether the boundary complex sits inside the complex of `parent`
    /// without identifications: for every non-empty `L ⊆ {0..d-1}`, distinct
    /// components of `∂Γ` with the colors of `L` removed lie in distinct
    /// components of `Γ` with the colors of `L` removed.
    pub fn embeds_in(&self, parent: &ColoredGraph) -> bool {
        let d = parent.dimension();
        (1..d).all(|size| {
            ColorSet::subsets_of_size(d - 1, size)
                .into_iter()
                .all(|labels| {
                    let (own, count) = self.graph.component_labels(labels.complement(d - 1));
                    let (outer, _) = parent.component_labels(labels.complement(d));
                    let mut image = vec![usize::MAX; count];
                    self.parent_vertex_map.iter().enumerate().all(|(i, &v)| {
                        let target = &mut image[own[i]];
                        if *target == usize::MAX {
                            *target = outer[v];
                        }
                        *target == outer[v]
                    }) && {
                        image.sort_unstable();
                        image.windows(2).all(|w| w[0] != w[1])
                    }
                })
        })
    }
}

/// Endpoint of the maximal `{j, d}`-path that leaves boundary vertex `start`
/// along its `j`-edge.
fn trace(graph: &ColoredGraph, start: Vertex, j: Color) -> Result<Vertex, BoundaryError> {
    let d = graph.dimension();
    let mut v = start;
    loop {
        let w = graph
            .neighbor(v, j)
            .expect("colors below d are perfect matchings");
        match graph.neighbor(w, d) {
            None => return Ok(w),
            Some(next) => v = next,
        }
    }
}

pub fn boundary_graph(graph: &ColoredGraph) -> Result<BoundaryGraph, BoundaryError> {
    if graph.is_regular() {
        return Err(BoundaryError::NoBoundary);
    }
    let d = graph.dimension();
    let parent_vertex_map = graph.classify_vertices().boundary_vertices;
    let mut index = vec![usize::MAX; graph.num_vertices()];
    for (i, &v) in parent_vertex_map.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::new();
    for &u in &parent_vertex_map {
        for j in 0..d {
            let w = trace(graph, u, j)?;
            if index[w] == usize::MAX {
                return Err(BoundaryError::InternalInconsistency {
                    start: u,
                    color: j,
                    end: w,
                });
            }
            if u < w {
                edges.push((index[u], index[w], j));
            }
        }
    }
    let bgraph = ColoredGraph::from_edge_list(d - 1, parent_vertex_map.len(), &edges, false)?;
    let (component_map, component_count) = bgraph.component_labels(bgraph.all_colors());
    Ok(BoundaryGraph {
        graph: bgraph,
        component_map,
        parent_vertex_map,
        component_count,
    })
}

/// `∂g_B` for a subset of `{0, ..., d-1}`.
pub fn boundary_g(graph: &ColoredGraph, colors: ColorSet) -> Result<usize, BoundaryError> {
    let d = graph.dimension();
    if colors.contains(d) {
        return Err(BoundaryError::InvalidColor {
            color: d,
            dimension: d,
        });
    }
    boundary_graph(graph)?.g(colors)
}

/// Number of boundary components; zero for regular graphs.
pub fn boundary_component_count(graph: &ColoredGraph) -> usize {
    match boundary_graph(graph) {
        Ok(b) => b.component_count(),
        Err(_) => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Sphericity {
    /// Regular genus zero: a sphere for closed 3-dimensional (and lower) components.
    ProvenSphere,
    Unknown,
}

/// Genus-zero sphere certificate for a regular connected colored graph.
pub fn sphericity_heuristic(component: &ColoredGraph) -> Result<Sphericity, BoundaryError> {
    if !component.is_regular() {
        return Err(BoundaryError::NotRegular);
    }
    let zero = CyclicPermutation::enumerate(component.dimension())
        .iter()
        .any(|eps| rho_closed_twice(component, eps) == 0);
    Ok(if zero {
        Sphericity::ProvenSphere
    } else {
        Sphericity::Unknown
    })
}

/// Every vertex link of a regular graph's complex (each component of the
/// graph with one color removed) has regular genus zero.
pub fn vertex_links_spherical(graph: &ColoredGraph) -> Result<bool, BoundaryError> {
    if !graph.is_regular() {
        return Err(BoundaryError::NotRegular);
    }
    for c in 0..=graph.dimension() {
        for link in graph.residue_graphs(graph.all_colors().without(c))? {
            if sphericity_heuristic(&link)? != Sphericity::ProvenSphere {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
