//! Edge-colored graphs encoding PL manifolds with boundary.
//!
//! A `(d+1)`-colored graph in which every vertex has exactly one edge of each
//! color `0..d` and at most one edge of color `d` encodes a `d`-dimensional
//! cell complex; vertices missing color `d` carry the boundary. This crate
//! validates such graphs, builds boundary graphs, applies dipole moves and
//! boundary capping, computes Euler characteristics, regular genus and
//! G-degree, reads off fundamental-group presentations, and checks the
//! identities and lower bounds relating these quantities.
//!
//! ```
//! use gemkit::{ColoredGraph, Genus, regular_genus};
//!
//! let edges: Vec<_> = (0..=4).map(|c| (0, 1, c)).collect();
//! let sphere = ColoredGraph::validate(4, 2, &edges).unwrap();
//! assert_eq!(regular_genus::<Genus>(&sphere).unwrap().value, Genus::from_integer(0));
//! ```

pub mod boundary;
pub mod color;
mod dsu;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod moves;
pub mod pi1;
pub mod random;
pub mod scalar;

use num_rational::Ratio;

/// Exact regular-genus value: an integer or a half-integer.
pub type Genus = Ratio<i64>;
/// Integer type used for Smith normal form of relator matrices.
pub type SmithInt = i128;

pub use boundary::{boundary_graph, BoundaryError, BoundaryGraph, Sphericity};
pub use color::{Color, ColorSet};
pub use graph::{ColoredGraph, GraphError, Vertex};
pub use invariants::{
    euler_characteristic, f_vector, gurau_degree, regular_genus, rho_boundary, rho_closed,
    CyclicPermutation, InvariantError, InvariantReport,
};
pub use moves::{
    cancel_1_dipole, find_1_dipoles, full_contraction, insert_1_dipole, regularize, DipoleSite,
    MoveError,
};
pub use pi1::{abelianization, presentation, tietze_simplify, Abelianization, GroupPresentation};
pub use scalar::GenusScalar;
