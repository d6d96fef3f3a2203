//! The colored-graph data model.
//!
//! A [`ColoredGraph`] of dimension `d` has vertices `0..2p` and, for every
//! color `c` in `{0, ..., d}`, a partial matching of `c`-colored edges.
//! Colors `0..d` must be perfect matchings; color `d` may be missing at some
//! vertices (the *boundary vertices*). Multi-edges between the same two
//! vertices are allowed as long as their colors differ; loops are not.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::color::{Color, ColorSet, MAX_DIMENSION};
use crate::dsu::DisjointSets;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("dimension must be at least 2 (got {0})")]
    DimensionTooSmall(usize),
    #[error("dimension {0} exceeds the supported maximum of {MAX_DIMENSION}")]
    DimensionTooLarge(usize),
    #[error("a colored graph needs at least one vertex")]
    Empty,
    #[error("edge #{edge}: vertex {vertex} is out of range (graph has {num_vertices} vertices)")]
    VertexOutOfRange {
        edge: usize,
        vertex: Vertex,
        num_vertices: usize,
    },
    #[error("color {color} is outside 0..={dimension}")]
    InvalidColor { color: Color, dimension: usize },
    #[error("edge #{edge}: loop at vertex {vertex}")]
    LoopEdge { edge: usize, vertex: Vertex },
    #[error("edge #{edge}: vertex {vertex} already has an edge of color {color}")]
    DuplicateColorAtVertex {
        edge: usize,
        vertex: Vertex,
        color: Color,
    },
    #[error("vertex {vertex} has no edge of color {color}")]
    MissingNonFinalColor { vertex: Vertex, color: Color },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("odd number of boundary vertices ({0})")]
    OddBoundaryCount(usize),
    #[error("boundary component count must be non-negative (got {0})")]
    NegativeBoundaryCount(i64),
    #[error("order parameter p must be at least 1")]
    InvalidOrder,
    #[error("no connected sample found after {0} attempts")]
    SamplingExhausted(usize),
}

/// A validated member of the class of `(d+1)`-colored graphs that are regular
/// with respect to color `d`. Immutable; rewrites build new graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    dimension: usize,
    adjacency: Vec<Vec<Option<Vertex>>>,
    regular: bool,
    bipartite: bool,
}

impl ColoredGraph {
    /// Validates a raw edge list `(u, v, color)` and builds the graph.
    ///
    /// Checks, in order: dimension, vertex range, color range, loops, the
    /// matching property, presence of every color below `d` at every vertex,
    /// even boundary count and connectivity.
    pub fn validate(
        dimension: usize,
        num_vertices: usize,
        edges: &[(Vertex, Vertex, Color)],
    ) -> Result<Self, GraphError> {
        if dimension < 2 {
            return Err(GraphError::DimensionTooSmall(dimension));
        }
        Self::from_edge_list(dimension, num_vertices, edges, true)
    }

    /// Edge-list constructor shared with internal callers that may need lower
    /// dimensions (boundary graphs of surfaces) or disconnected results
    /// (boundary graphs with several components).
    pub(crate) fn from_edge_list(
        dimension: usize,
        num_vertices: usize,
        edges: &[(Vertex, Vertex, Color)],
        require_connected: bool,
    ) -> Result<Self, GraphError> {
        if dimension > MAX_DIMENSION {
            return Err(GraphError::DimensionTooLarge(dimension));
        }
        if num_vertices == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![vec![None; dimension + 1]; num_vertices];
        for (k, &(u, v, c)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= num_vertices {
                    return Err(GraphError::VertexOutOfRange {
                        edge: k,
                        vertex: w,
                        num_vertices,
                    });
                }
            }
            if c > dimension {
                return Err(GraphError::InvalidColor {
                    color: c,
                    dimension,
                });
            }
            if u == v {
                return Err(GraphError::LoopEdge { edge: k, vertex: u });
            }
            for w in [u, v] {
                if adjacency[w][c].is_some() {
                    return Err(GraphError::DuplicateColorAtVertex {
                        edge: k,
                        vertex: w,
                        color: c,
                    });
                }
            }
            adjacency[u][c] = Some(v);
            adjacency[v][c] = Some(u);
        }
        Self::from_adjacency(dimension, adjacency, require_connected)
    }

    /// Builds a graph from a symmetric adjacency table `[vertex][color]`.
    pub(crate) fn from_adjacency(
        dimension: usize,
        adjacency: Vec<Vec<Option<Vertex>>>,
        require_connected: bool,
    ) -> Result<Self, GraphError> {
        if adjacency.is_empty() {
            return Err(GraphError::Empty);
        }
        for (v, row) in adjacency.iter().enumerate() {
            debug_assert_eq!(row.len(), dimension + 1);
            for (c, slot) in row.iter().enumerate() {
                match slot {
                    Some(w) => debug_assert_eq!(adjacency[*w][c], Some(v), "asymmetric adjacency"),
                    None if c < dimension => {
                        return Err(GraphError::MissingNonFinalColor {
                            vertex: v,
                            color: c,
                        })
                    }
                    None => {}
                }
            }
        }
        let boundary = adjacency
            .iter()
            .filter(|row| row[dimension].is_none())
            .count();
        if boundary % 2 == 1 {
            return Err(GraphError::OddBoundaryCount(boundary));
        }
        let mut graph = ColoredGraph {
            dimension,
            regular: boundary == 0,
            bipartite: false,
            adjacency,
        };
        if require_connected {
            let components = graph.component_count(ColorSet::full(dimension));
            if components != 1 {
                return Err(GraphError::Disconnected { components });
            }
        }
        graph.bipartite = graph.two_color().is_some();
        Ok(graph)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    /// Half the vertex count.
    pub fn order(&self) -> usize {
        self.adjacency.len() / 2
    }

    /// True iff the color-`d` matching is perfect.
    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn has_boundary(&self) -> bool {
        !self.regular
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    pub fn all_colors(&self) -> ColorSet {
        ColorSet::full(self.dimension)
    }

    pub fn neighbor(&self, v: Vertex, color: Color) -> Option<Vertex> {
        self.adjacency[v][color]
    }

    pub(crate) fn adjacency(&self) -> &[Vec<Option<Vertex>>] {
        &self.adjacency
    }

    /// Edges `(u, v, color)` with `u < v`, sorted by color then by `u`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex, Color)> {
        let mut out = Vec::new();
        for c in 0..=self.dimension {
            for u in 0..self.num_vertices() {
                if let Some(v) = self.adjacency[u][c] {
                    if u < v {
                        out.push((u, v, c));
                    }
                }
            }
        }
        out
    }

    pub fn edge_count(&self, color: Color) -> usize {
        self.adjacency
            .iter()
            .filter(|row| row[color].is_some())
            .count()
            / 2
    }

    pub fn is_boundary_vertex(&self, v: Vertex) -> bool {
        self.adjacency[v][self.dimension].is_none()
    }

    fn check_colors(&self, colors: ColorSet) -> Result<(), GraphError> {
        match colors.max_color() {
            Some(c) if c > self.dimension => Err(GraphError::InvalidColor {
                color: c,
                dimension: self.dimension,
            }),
            _ => Ok(()),
        }
    }

    /// Component labels of `Γ_B`, numbered by least vertex.
    pub(crate) fn component_labels(&self, colors: ColorSet) -> (Vec<usize>, usize) {
        let mut sets = DisjointSets::new(self.num_vertices());
        for c in colors.iter() {
            for (u, row) in self.adjacency.iter().enumerate() {
                if let Some(v) = row[c] {
                    sets.union(u, v);
                }
            }
        }
        sets.labels()
    }

    pub(crate) fn component_count(&self, colors: ColorSet) -> usize {
        self.component_labels(colors).1
    }

    /// Each component of `Γ_B` as a graph of its own, colors of `B` renumbered
    /// `0..|B|` in increasing order, components ordered by least vertex.
    pub fn residue_graphs(&self, colors: ColorSet) -> Result<Vec<ColoredGraph>, GraphError> {
        let decomposition = self.residues(colors)?;
        let palette: Vec<Color> = colors.iter().collect();
        let top = palette.len().saturating_sub(1);
        let mut out = Vec::with_capacity(decomposition.count());
        for comp in &decomposition.components {
            let mut index = vec![usize::MAX; self.num_vertices()];
            for (i, &v) in comp.vertices.iter().enumerate() {
                index[v] = i;
            }
            let adjacency = comp
                .vertices
                .iter()
                .map(|&v| {
                    palette
                        .iter()
                        .map(|&c| self.adjacency[v][c].map(|w| index[w]))
                        .collect()
                })
                .collect();
            out.push(ColoredGraph::from_adjacency(top, adjacency, true)?);
        }
        Ok(out)
    }

    /// Connected components of the subgraph keeping only colors in `colors`.
    pub fn residues(&self, colors: ColorSet) -> Result<ResidueDecomposition, GraphError> {
        self.check_colors(colors)?;
        let (labels, count) = self.component_labels(colors);
        let mut components = vec![
            ResidueComponent {
                vertices: Vec::new(),
                regular: true,
            };
            count
        ];
        for (v, &l) in labels.iter().enumerate() {
            let comp = &mut components[l];
            comp.vertices.push(v);
            if colors.iter().any(|c| self.adjacency[v][c].is_none()) {
                comp.regular = false;
            }
        }
        Ok(ResidueDecomposition {
            colors,
            labels,
            components,
        })
    }

    /// `(g_B, ġ_B)`: number of components of `Γ_B` and number of regular ones.
    pub fn count_g(&self, colors: ColorSet) -> Result<(usize, usize), GraphError> {
        let r = self.residues(colors)?;
        Ok((r.count(), r.regular_count()))
    }

    /// `g_B` without validation of the color set; callers guarantee range.
    pub(crate) fn g(&self, colors: ColorSet) -> usize {
        self.component_count(colors)
    }

    pub(crate) fn g_dot(&self, colors: ColorSet) -> usize {
        self.residues(colors)
            .map(|r| r.regular_count())
            .unwrap_or(0)
    }

    pub fn classify_vertices(&self) -> VertexClassification {
        let (boundary_vertices, internal_vertices): (Vec<_>, Vec<_>) =
            (0..self.num_vertices()).partition(|&v| self.is_boundary_vertex(v));
        VertexClassification {
            p_bar: boundary_vertices.len() / 2,
            p_dot: internal_vertices.len() / 2,
            boundary_vertices,
            internal_vertices,
        }
    }

    /// For every color `c`, whether `Γ` with color `c` removed is connected.
    pub fn is_contracted(&self) -> Vec<bool> {
        (0..=self.dimension)
            .map(|c| self.g(self.all_colors().without(c)) == 1)
            .collect()
    }

    /// Crystallization test for a gem of a manifold with `h` boundary components.
    pub fn is_crystallization(&self, h: i64) -> Result<bool, GraphError> {
        if h < 0 {
            return Err(GraphError::NegativeBoundaryCount(h));
        }
        let d = self.dimension;
        if self.regular && h == 0 {
            return Ok(self.is_contracted().into_iter().all(|x| x));
        }
        let full = self.all_colors();
        Ok(self.g(full.without(d)) == 1 && (0..d).all(|c| self.g(full.without(c)) as i64 == h))
    }

    /// Proper 2-coloring of the underlying multigraph, if one exists.
    pub fn two_color(&self) -> Option<Vec<bool>> {
        let n = self.num_vertices();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for w in self.adjacency[u].iter().flatten() {
                    match side[*w] {
                        None => {
                            side[*w] = Some(!s);
                            queue.push_back(*w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    /// Applies a permutation of the colors: an edge of color `c` gets color `perm[c]`.
    /// The result must still be regular with respect to color `d`.
    pub fn recolor(&self, perm: &[Color]) -> Result<ColoredGraph, GraphError> {
        assert_eq!(perm.len(), self.dimension + 1, "permutation length");
        let mut adjacency = vec![vec![None; self.dimension + 1]; self.num_vertices()];
        for (v, row) in self.adjacency.iter().enumerate() {
            for (c, slot) in row.iter().enumerate() {
                adjacency[v][perm[c]] = *slot;
            }
        }
        ColoredGraph::from_adjacency(self.dimension, adjacency, true)
    }

    /// Whether `other` equals `self` after renaming vertices (colors fixed).
    ///
    /// Both graphs are connected, so fixing the image of vertex 0 determines
    /// the whole map; every candidate image is tried.
    pub fn is_relabeling_of(&self, other: &ColoredGraph) -> bool {
        if self.dimension != other.dimension || self.num_vertices() != other.num_vertices() {
            return false;
        }
        (0..other.num_vertices()).any(|target| self.extend_map(other, target).is_some())
    }

    fn extend_map(&self, other: &ColoredGraph, target: Vertex) -> Option<Vec<Vertex>> {
        let n = self.num_vertices();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[0] = target;
        used[target] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            let image = map[u];
            for c in 0..=self.dimension {
                match (self.adjacency[u][c], other.adjacency[image][c]) {
                    (None, None) => {}
                    (Some(w), Some(x)) => {
                        if map[w] == usize::MAX {
                            if used[x] {
                                return None;
                            }
                            map[w] = x;
                            used[x] = true;
                            queue.push_back(w);
                        } else if map[w] != x {
                            return None;
                        }
                    }
                    _ => return None,
                }
            }
        }
        map.iter().all(|&m| m != usize::MAX).then_some(map)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueComponent {
    pub vertices: Vec<Vertex>,
    /// Every vertex meets an edge of every color in the residue's color set.
    pub regular: bool,
}

/// Connected components of `Γ_B`, ordered by least vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueDecomposition {
    pub colors: ColorSet,
    labels: Vec<usize>,
    pub components: Vec<ResidueComponent>,
}

impl ResidueDecomposition {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn regular_count(&self) -> usize {
        self.components.iter().filter(|c| c.regular).count()
    }

    pub fn component_of(&self, v: Vertex) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexClassification {
    pub boundary_vertices: Vec<Vertex>,
    pub internal_vertices: Vec<Vertex>,
    pub p_bar: usize,
    pub p_dot: usize,
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Order-2 gem of the 4-sphere.
    pub fn s4_2() -> ColoredGraph {
        let edges: Vec<_> = (0..=4).map(|c| (0, 1, c)).collect();
        ColoredGraph::validate(4, 2, &edges).unwrap()
    }

    /// Order-2 gem of the 4-ball: `s4_2` without its color-4 edge.
    pub fn b4_2() -> ColoredGraph {
        let edges: Vec<_> = (0..4).map(|c| (0, 1, c)).collect();
        ColoredGraph::validate(4, 2, &edges).unwrap()
    }

    /// The 6-vertex 3-colored torus gem: color `i` joins `a_j` to `b_{j+i mod 3}`.
    pub fn k33() -> ColoredGraph {
        let mut edges = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                edges.push((j, 3 + (j + i) % 3, i));
            }
        }
        ColoredGraph::validate(2, 6, &edges).unwrap()
    }

    /// Two copies of `s4_2` with their color-4 edges swapped across copies.
    pub fn two_s4_joined() -> ColoredGraph {
        let mut edges = Vec::new();
        for c in 0..4 {
            edges.push((0, 1, c));
            edges.push((2, 3, c));
        }
        edges.push((0, 2, 4));
        edges.push((1, 3, 4));
        ColoredGraph::validate(4, 4, &edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn set(colors: &[Color]) -> ColorSet {
        colors.iter().copied().collect()
    }

    #[test]
    fn sphere_gem_is_regular_and_bipartite() {
        let g = s4_2();
        assert!(g.is_regular());
        assert!(g.is_bipartite());
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn ball_gem_has_two_boundary_vertices() {
        let g = b4_2();
        assert!(!g.is_regular());
        let cls = g.classify_vertices();
        assert_eq!((cls.p_bar, cls.p_dot), (1, 0));
        assert_eq!(cls.boundary_vertices, vec![0, 1]);
        let cls = s4_2().classify_vertices();
        assert_eq!((cls.p_bar, cls.p_dot), (0, 1));
    }

    #[test]
    fn duplicate_color_rejected() {
        let mut edges: Vec<_> = (0..=4).map(|c| (0, 1, c)).collect();
        edges.push((0, 1, 0));
        assert!(matches!(
            ColoredGraph::validate(4, 2, &edges),
            Err(GraphError::DuplicateColorAtVertex {
                edge: 5,
                color: 0,
                ..
            })
        ));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            ColoredGraph::validate(4, 2, &[(0, 0, 3)]),
            Err(GraphError::LoopEdge { edge: 0, vertex: 0 })
        );
        assert_eq!(
            ColoredGraph::validate(1, 2, &[(0, 1, 0)]),
            Err(GraphError::DimensionTooSmall(1))
        );
        assert!(matches!(
            ColoredGraph::validate(2, 2, &[(0, 1, 0)]),
            Err(GraphError::MissingNonFinalColor { color: 1, .. })
        ));
        assert!(matches!(
            ColoredGraph::validate(2, 2, &[(0, 2, 0)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
        assert!(matches!(
            ColoredGraph::validate(2, 2, &[(0, 1, 5)]),
            Err(GraphError::InvalidColor { color: 5, .. })
        ));
        // two disjoint order-2 gems
        let mut edges = Vec::new();
        for c in 0..=2 {
            edges.push((0, 1, c));
            edges.push((2, 3, c));
        }
        assert_eq!(
            ColoredGraph::validate(2, 4, &edges),
            Err(GraphError::Disconnected { components: 2 })
        );
        assert_eq!(ColoredGraph::validate(2, 0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn residue_examples() {
        let r = s4_2().residues(set(&[0, 1])).unwrap();
        assert_eq!(r.count(), 1);
        assert!(r.components[0].regular);

        let r = b4_2().residues(set(&[0, 4])).unwrap();
        assert_eq!((r.count(), r.regular_count()), (1, 0));

        assert_eq!(
            s4_2()
                .residues(ColorSet::full(4).without(2))
                .unwrap()
                .count(),
            1
        );
        assert!(matches!(
            s4_2().residues(set(&[5])),
            Err(GraphError::InvalidColor { color: 5, .. })
        ));
    }

    #[test]
    fn count_g_examples() {
        assert_eq!(b4_2().count_g(set(&[0, 1])).unwrap(), (1, 1));
        assert_eq!(b4_2().count_g(set(&[3, 4])).unwrap(), (1, 0));
        for pair in ColorSet::subsets_of_size(4, 2) {
            assert_eq!(s4_2().count_g(pair).unwrap(), (1, 1));
        }
    }

    #[test]
    fn contracted_examples() {
        assert!(s4_2().is_contracted().iter().all(|&x| x));
        assert!(b4_2().is_contracted().iter().all(|&x| x));
        let joined = two_s4_joined();
        assert_eq!(joined.is_contracted(), vec![true, true, true, true, false]);
        assert_eq!(joined.g(ColorSet::full(4).without(4)), 2);
    }

    #[test]
    fn crystallization_examples() {
        assert!(b4_2().is_crystallization(1).unwrap());
        assert!(s4_2().is_crystallization(0).unwrap());
        assert!(!two_s4_joined().is_crystallization(0).unwrap());
        assert_eq!(
            s4_2().is_crystallization(-1),
            Err(GraphError::NegativeBoundaryCount(-1))
        );
    }

    #[test]
    fn k33_is_bipartite_torus_gem() {
        let g = k33();
        assert!(g.is_regular() && g.is_bipartite());
        assert_eq!(g.count_g(set(&[0, 1])).unwrap(), (1, 1));
        assert_eq!(g.count_g(set(&[2])).unwrap(), (3, 3));
    }

    #[test]
    fn relabeling_detects_isomorphic_copies() {
        let g = k33();
        // reverse the vertex order
        let edges: Vec<_> = g
            .edges()
            .into_iter()
            .map(|(u, v, c)| (5 - u, 5 - v, c))
            .collect();
        let h = ColoredGraph::validate(2, 6, &edges).unwrap();
        assert!(g.is_relabeling_of(&h));
        assert!(!s4_2().is_relabeling_of(&b4_2()));
        assert_eq!(g.recolor(&[0, 1, 2]).unwrap(), g);
        assert!(matches!(
            b4_2().recolor(&[4, 1, 2, 3, 0]),
            Err(GraphError::MissingNonFinalColor { color: 0, .. })
        ));
    }

    #[test]
    fn edges_are_sorted_by_color_then_endpoint() {
        let edges = two_s4_joined().edges();
        assert_eq!(edges[0], (0, 1, 0));
        assert_eq!(edges[1], (2, 3, 0));
        assert_eq!(*edges.last().unwrap(), (1, 3, 4));
    }
}
