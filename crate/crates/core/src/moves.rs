//! Graph rewriting: 1-dipoles, boundary capping/regularization and contraction.

use serde::Serialize;
use thiserror::Error;

use crate::boundary::{boundary_graph, BoundaryError};
use crate::color::Color;
use crate::graph::{ColoredGraph, GraphError, Vertex};
use crate::invariants::genus::{euler_characteristic, rho_table_twice};
use crate::pi1::{abelianization, presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("no {color}-colored edge between {u} and {v}")]
    NoSuchEdge { u: Vertex, v: Vertex, color: Color },
    #[error("edge {x}-{y} of color {color} is not a 1-dipole")]
    NotADipole { x: Vertex, y: Vertex, color: Color },
    #[error("dipole endpoints {x}, {y} share a second edge of color {color}")]
    WeldMismatch { x: Vertex, y: Vertex, color: Color },
    #[error("graph is regular: nothing to cap")]
    NoBoundary,
    #[error("color {color} cannot be used here (dimension {dimension})")]
    InvalidColor { color: Color, dimension: usize },
    #[error("expected one color per boundary component ({expected}), got {got}")]
    ComponentMap { expected: usize, got: usize },
    #[error("{0} changed during contraction")]
    InvariantBroken(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Boundary(#[from] BoundaryError),
}

/// A `color`-colored edge `x – y` whose endpoints lie in different components
/// of the graph with `color` removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DipoleSite {
    pub color: Color,
    pub vertices: (Vertex, Vertex),
}

/// All 1-dipoles, ordered by color and then by least endpoint.
pub fn find_1_dipoles(graph: &ColoredGraph) -> Vec<DipoleSite> {
    let mut sites = Vec::new();
    for j in 0..=graph.dimension() {
        let (labels, count) = graph.component_labels(graph.all_colors().without(j));
        if count == 1 {
            continue;
        }
        for u in 0..graph.num_vertices() {
            if let Some(v) = graph.neighbor(u, j) {
                if u < v && labels[u] != labels[v] {
                    sites.push(DipoleSite {
                        color: j,
                        vertices: (u, v),
                    });
                }
            }
        }
    }
    sites
}

fn is_dipole(graph: &ColoredGraph, site: &DipoleSite) -> bool {
    let (x, y) = site.vertices;
    let (labels, _) = graph.component_labels(graph.all_colors().without(site.color));
    labels[x] != labels[y]
}

/// Deletes the dipole's two vertices and welds the hanging edges of equal color.
///
/// Remaining vertices keep their relative order. A color present at only one
/// endpoint (necessarily `d`) leaves its far end as a boundary vertex.
pub fn cancel_1_dipole(graph: &ColoredGraph, site: DipoleSite) -> Result<ColoredGraph, MoveError> {
    let (x, y) = site.vertices;
    let j = site.color;
    let d = graph.dimension();
    if j > d || x >= graph.num_vertices() || graph.neighbor(x, j) != Some(y) {
        return Err(MoveError::NoSuchEdge {
            u: x,
            v: y,
            color: j,
        });
    }
    if !is_dipole(graph, &site) {
        return Err(MoveError::NotADipole { x, y, color: j });
    }
    let mut adjacency: Vec<Vec<Option<Vertex>>> = graph.adjacency().to_vec();
    for k in (0..=d).filter(|&k| k != j) {
        let (a, b) = (graph.neighbor(x, k), graph.neighbor(y, k));
        if a == Some(y) {
            return Err(MoveError::WeldMismatch { x, y, color: k });
        }
        match (a, b) {
            (Some(a), Some(b)) => {
                adjacency[a][k] = Some(b);
                adjacency[b][k] = Some(a);
            }
            (Some(a), None) => adjacency[a][k] = None,
            (None, Some(b)) => adjacency[b][k] = None,
            (None, None) => {}
        }
    }
    let keep: Vec<Vertex> = (0..graph.num_vertices())
        .filter(|&v| v != x && v != y)
        .collect();
    let mut index = vec![usize::MAX; graph.num_vertices()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let adjacency = keep
        .iter()
        .map(|&v| adjacency[v].iter().map(|s| s.map(|w| index[w])).collect())
        .collect();
    Ok(ColoredGraph::from_adjacency(d, adjacency, true)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DipoleInsertion {
    /// The new edge `u – x` of the split color.
    pub site: DipoleSite,
    /// Whether the created edge is a 1-dipole (it always is for this construction).
    pub genuine: bool,
}

/// Splits the `color`-colored edge `u – v` by two new vertices `x = 2p`, `y = 2p+1`:
/// `u – x` and `y – v` take the split color, and `x`, `y` are joined by every
/// other color. Cancelling the returned site undoes the move up to relabeling.
pub fn insert_1_dipole(
    graph: &ColoredGraph,
    edge: (Vertex, Vertex),
    color: Color,
) -> Result<(ColoredGraph, DipoleInsertion), MoveError> {
    let (u, v) = edge;
    let d = graph.dimension();
    if color > d || u >= graph.num_vertices() || graph.neighbor(u, color) != Some(v) {
        return Err(MoveError::NoSuchEdge { u, v, color });
    }
    let n = graph.num_vertices();
    let (x, y) = (n, n + 1);
    let mut adjacency = graph.adjacency().to_vec();
    adjacency.push(vec![None; d + 1]);
    adjacency.push(vec![None; d + 1]);
    adjacency[u][color] = Some(x);
    adjacency[x][color] = Some(u);
    adjacency[v][color] = Some(y);
    adjacency[y][color] = Some(v);
    for k in (0..=d).filter(|&k| k != color) {
        adjacency[x][k] = Some(y);
        adjacency[y][k] = Some(x);
    }
    let result = ColoredGraph::from_adjacency(d, adjacency, true)?;
    let site = DipoleSite {
        color,
        vertices: (u, x),
    };
    let genuine = is_dipole(&result, &site);
    Ok((result, DipoleInsertion { site, genuine }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularizationRecord {
    /// Capping color used for each boundary component.
    pub singular_colors: Vec<Color>,
    /// New color-`d` edges, before any color swap.
    pub added_edges: Vec<(Vertex, Vertex)>,
    /// The transposition applied afterwards (fixed-color variant only).
    pub color_swap: Option<(Color, Color)>,
}

/// Joins the two ends of every maximal `{c_k, d}`-path by a new color-`d` edge,
/// where `c_k` is the color chosen for the boundary component containing them.
fn cap(
    graph: &ColoredGraph,
    colors: &[Color],
) -> Result<(ColoredGraph, Vec<(Vertex, Vertex)>), MoveError> {
    let d = graph.dimension();
    let bgraph = boundary_graph(graph).map_err(|e| match e {
        BoundaryError::NoBoundary => MoveError::NoBoundary,
        other => other.into(),
    })?;
    if colors.len() != bgraph.component_count() {
        return Err(MoveError::ComponentMap {
            expected: bgraph.component_count(),
            got: colors.len(),
        });
    }
    if let Some(&c) = colors.iter().find(|&&c| c >= d) {
        return Err(MoveError::InvalidColor {
            color: c,
            dimension: d,
        });
    }
    let mut adjacency = graph.adjacency().to_vec();
    let mut added = Vec::new();
    for (i, &u) in bgraph.parent_vertex_map.iter().enumerate() {
        let c = colors[bgraph.component_map[i]];
        // The c-neighbor of u in the boundary graph is the far end of u's {c,d}-path.
        let partner = bgraph
            .graph
            .neighbor(i, c)
            .expect("boundary graph is regular");
        let w = bgraph.parent_vertex_map[partner];
        if u < w {
            adjacency[u][d] = Some(w);
            adjacency[w][d] = Some(u);
            added.push((u, w));
        }
    }
    Ok((ColoredGraph::from_adjacency(d, adjacency, true)?, added))
}

/// The capped graph for a fixed color `c`, before the `(c d)` swap; `c` is its
/// singular color.
pub fn cap_boundary(
    graph: &ColoredGraph,
    singular_color: Color,
) -> Result<ColoredGraph, MoveError> {
    let h = boundary_graph(graph)
        .map_err(|_| MoveError::NoBoundary)?
        .component_count();
    Ok(cap(graph, &vec![singular_color; h])?.0)
}

/// Caps every boundary component with color `c`, then exchanges colors `c` and
/// `d` so that `d` becomes the only singular color.
pub fn regularize(
    graph: &ColoredGraph,
    singular_color: Color,
) -> Result<(ColoredGraph, RegularizationRecord), MoveError> {
    let d = graph.dimension();
    if singular_color >= d {
        return Err(MoveError::InvalidColor {
            color: singular_color,
            dimension: d,
        });
    }
    let h = boundary_graph(graph)
        .map_err(|_| MoveError::NoBoundary)?
        .component_count();
    let colors = vec![singular_color; h];
    let (capped, added_edges) = cap(graph, &colors)?;
    let mut perm: Vec<Color> = (0..=d).collect();
    perm.swap(singular_color, d);
    let swapped = capped.recolor(&perm)?;
    Ok((
        swapped,
        RegularizationRecord {
            singular_colors: colors,
            added_edges,
            color_swap: Some((singular_color, d)),
        },
    ))
}

/// Generalized variant: one capping color per boundary component, no swap.
pub fn regularize_per_component(
    graph: &ColoredGraph,
    colors: &[Color],
) -> Result<(ColoredGraph, RegularizationRecord), MoveError> {
    let (capped, added_edges) = cap(graph, colors)?;
    Ok((
        capped,
        RegularizationRecord {
            singular_colors: colors.to_vec(),
            added_edges,
            color_swap: None,
        },
    ))
}

fn next_site(graph: &ColoredGraph) -> Option<DipoleSite> {
    let d = graph.dimension();
    let sites = find_1_dipoles(graph);
    sites
        .iter()
        .find(|s| s.color < d)
        .or_else(|| sites.first())
        .copied()
}

/// Greedily cancels 1-dipoles (colors below `d` first, then `d`) until none remain.
pub fn full_contraction(graph: &ColoredGraph) -> ColoredGraph {
    let mut current = graph.clone();
    while let Some(site) = next_site(&current) {
        current = cancel_1_dipole(&current, site).expect("found sites are cancellable");
    }
    current
}

/// [`full_contraction`] that re-checks χ, every `ρ_ε` (regular graphs) and the
/// abelianized fundamental group after each cancellation.
pub fn full_contraction_checked(graph: &ColoredGraph) -> Result<ColoredGraph, MoveError> {
    let abelian = |g: &ColoredGraph| abelianization(&presentation(g, 0, 1).expect("valid pair"));
    let chi = euler_characteristic(graph);
    let rho = graph.is_regular().then(|| rho_table_twice(graph).ok());
    let ab = abelian(graph);
    let mut current = graph.clone();
    while let Some(site) = next_site(&current) {
        current = cancel_1_dipole(&current, site)?;
        if euler_characteristic(&current) != chi {
            return Err(MoveError::InvariantBroken("Euler characteristic"));
        }
        if let Some(expected) = &rho {
            if &rho_table_twice(&current).ok() != expected {
                return Err(MoveError::InvariantBroken("regular genus"));
            }
        }
        if abelian(&current) != ab {
            return Err(MoveError::InvariantBroken("abelianized fundamental group"));
        }
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{b4_2, s4_2};
    use crate::invariants::genus::f_vector;

    #[test]
    fn sphere_and_ball_have_no_dipoles() {
        assert!(find_1_dipoles(&s4_2()).is_empty());
        assert!(find_1_dipoles(&b4_2()).is_empty());
    }

    #[test]
    fn inserted_dipole_is_found() {
        let (g, ins) = insert_1_dipole(&s4_2(), (0, 1), 3).unwrap();
        assert!(ins.genuine);
        assert_eq!(
            ins.site,
            DipoleSite {
                color: 3,
                vertices: (0, 2)
            }
        );
        let sites = find_1_dipoles(&g);
        assert!(sites.contains(&ins.site));
        assert!(sites.iter().all(|s| s.color == 3));
    }

    #[test]
    fn split_sphere_has_four_top_simplices() {
        let (g, _) = insert_1_dipole(&s4_2(), (0, 1), 0).unwrap();
        assert!(g.is_regular());
        assert_eq!(f_vector(&g)[4], 4);
    }

    #[test]
    fn insert_then_cancel_is_identity_up_to_relabeling() {
        for c in 0..=4 {
            let (g, ins) = insert_1_dipole(&s4_2(), (0, 1), c).unwrap();
            let back = cancel_1_dipole(&g, ins.site).unwrap();
            assert!(back.is_relabeling_of(&s4_2()));
        }
        for c in 0..4 {
            let (g, ins) = insert_1_dipole(&b4_2(), (0, 1), c).unwrap();
            let back = cancel_1_dipole(&g, ins.site).unwrap();
            assert!(back.is_relabeling_of(&b4_2()));
        }
    }

    #[test]
    fn cancellation_removes_one_cell_per_face_type() {
        let (g, ins) = insert_1_dipole(&s4_2(), (0, 1), 2).unwrap();
        let before = f_vector(&g);
        let after = f_vector(&cancel_1_dipole(&g, ins.site).unwrap());
        let delta: Vec<_> = before.iter().zip(&after).map(|(a, b)| a - b).collect();
        assert_eq!(delta, vec![1, 4, 6, 5, 2]);
    }

    #[test]
    fn cancel_errors() {
        let site = DipoleSite {
            color: 0,
            vertices: (0, 1),
        };
        assert_eq!(
            cancel_1_dipole(&s4_2(), site),
            Err(MoveError::NotADipole {
                x: 0,
                y: 1,
                color: 0
            })
        );
        assert_eq!(
            insert_1_dipole(&b4_2(), (0, 1), 4).unwrap_err(),
            MoveError::NoSuchEdge {
                u: 0,
                v: 1,
                color: 4
            }
        );
    }

    #[test]
    fn regularized_ball_is_sphere_gem() {
        let (g, record) = regularize(&b4_2(), 0).unwrap();
        assert!(g.is_regular());
        assert!(g.is_relabeling_of(&s4_2()));
        assert_eq!(record.added_edges, vec![(0, 1)]);
        assert_eq!(record.color_swap, Some((0, 4)));
        assert_eq!(regularize(&s4_2(), 0).unwrap_err(), MoveError::NoBoundary);
        assert!(matches!(
            regularize(&b4_2(), 4),
            Err(MoveError::InvalidColor { color: 4, .. })
        ));
    }

    #[test]
    fn per_component_capping_skips_swap() {
        let (g, record) = regularize_per_component(&b4_2(), &[2]).unwrap();
        assert!(g.is_regular());
        assert_eq!(record.color_swap, None);
        assert!(matches!(
            regularize_per_component(&b4_2(), &[0, 1]),
            Err(MoveError::ComponentMap {
                expected: 1,
                got: 2
            })
        ));
    }

    #[test]
    fn contraction_returns_to_order_two() {
        let mut g = s4_2();
        for (k, c) in [0usize, 3, 1].into_iter().enumerate() {
            let (u, v, _) = g
                .edges()
                .into_iter()
                .filter(|e| e.2 == c)
                .nth(k % 2)
                .unwrap();
            g = insert_1_dipole(&g, (u, v), c).unwrap().0;
        }
        assert_eq!(g.num_vertices(), 8);
        let contracted = full_contraction_checked(&g).unwrap();
        assert!(contracted.is_relabeling_of(&s4_2()));
        assert_eq!(full_contraction(&contracted), contracted);
    }
}
