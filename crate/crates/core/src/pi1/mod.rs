//! Finite presentations of fundamental groups read off a colored graph.
//!
//! For a pair of colors `{i, j}`, the generators are the components of the
//! graph with `i` and `j` removed (the `{i,j}`-labeled edges of the cell
//! complex). Every `{i,j}`-colored cycle gives one relator, and the edges of a
//! maximal tree of the 1-dimensional `{i,j}`-labeled subcomplex are set trivial.

pub mod smith;
mod tietze;

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::color::{Color, ColorSet};
use crate::dsu::DisjointSets;
use crate::graph::ColoredGraph;
use crate::SmithInt;

pub use tietze::tietze_simplify;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Pi1Error {
    #[error("invalid color pair ({i}, {j}) for dimension {dimension}")]
    InvalidColorPair {
        i: Color,
        j: Color,
        dimension: usize,
    },
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// `±(generator + 1)`.
    pub fn signed_index(self) -> i64 {
        (self.generator as i64 + 1) * self.exponent()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "g{}^-1", self.generator)
        } else {
            write!(f, "g{}", self.generator)
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.signed_index())
    }
}

pub type Word = Vec<Letter>;

pub(crate) fn inverse_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inv()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generator_count: usize,
    /// One relator per bicolored cycle.
    pub cycle_relators: Vec<Word>,
    /// Single-letter relators killing the maximal-tree generators.
    pub tree_relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Self {
        GroupPresentation {
            generator_count,
            cycle_relators: relators,
            tree_relators: Vec::new(),
        }
    }

    pub fn relators(&self) -> impl Iterator<Item = &Word> {
        self.cycle_relators.iter().chain(&self.tree_relators)
    }

    /// Relators-by-generators matrix of exponent sums.
    pub fn exponent_matrix(&self) -> Vec<Vec<SmithInt>> {
        self.relators()
            .map(|r| {
                let mut row = vec![0; self.generator_count];
                for l in r {
                    row[l.generator] += l.exponent() as SmithInt;
                }
                row
            })
            .collect()
    }
}

/// `< g0, g1 | g0 g1 g0^-1 g1^-1 >`
impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for k in 0..self.generator_count {
            write!(f, "{}g{k}", if k == 0 { " " } else { ", " })?;
        }
        write!(f, " |")?;
        for (k, r) in self.relators().enumerate() {
            write!(f, "{}", if k == 0 { " " } else { ", " })?;
            for (m, l) in r.iter().enumerate() {
                if m > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{l}")?;
            }
        }
        write!(f, " >")
    }
}

/// Which reading of the presentation is justified by the singular colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PresentationCase {
    /// Neither `i` nor `j` singular: the group of the manifold with the
    /// singular vertices' neighbourhoods removed.
    Truncated,
    /// No color outside `{i, j}` singular: the group of the singular manifold.
    Singular,
    /// Both readings hold.
    Both,
    Neither,
}

pub fn presentation_case(i: Color, j: Color, singular: &[Color]) -> PresentationCase {
    let pair_clean = !singular.contains(&i) && !singular.contains(&j);
    let rest_clean = singular.iter().all(|&c| c == i || c == j);
    match (pair_clean, rest_clean) {
        (true, true) => PresentationCase::Both,
        (true, false) => PresentationCase::Truncated,
        (false, true) => PresentationCase::Singular,
        (false, false) => PresentationCase::Neither,
    }
}

pub fn presentation(
    graph: &ColoredGraph,
    i: Color,
    j: Color,
) -> Result<GroupPresentation, Pi1Error> {
    let d = graph.dimension();
    if i == j || i > d || j > d {
        return Err(Pi1Error::InvalidColorPair { i, j, dimension: d });
    }
    let full = graph.all_colors();
    let pair = ColorSet::single(i).with(j);
    let (generator_of, generator_count) = graph.component_labels(pair.complement(d));

    // v0 -i- v1 -j- v2 -i- ... ; relator x(v0) x(v1)^-1 x(v2) x(v3)^-1 ...
    let cycles = graph.residues(pair).expect("colors in range");
    let mut cycle_relators = Vec::new();
    for comp in cycles.components.iter().filter(|c| c.regular) {
        let start = comp.vertices[0];
        let mut word = Vec::with_capacity(comp.vertices.len());
        let mut v = start;
        let mut step = 0usize;
        loop {
            let letter = Letter::new(generator_of[v]);
            word.push(if step % 2 == 0 { letter } else { letter.inv() });
            let color = if step % 2 == 0 { i } else { j };
            v = graph.neighbor(v, color).expect("regular residue");
            step += 1;
            if v == start && step % 2 == 0 {
                break;
            }
        }
        cycle_relators.push(word);
    }

    // Maximal tree of the {i,j}-labeled 1-skeleton: vertices are components of
    // the graph without i (label-i vertices) and without j (label-j vertices).
    let (without_i, ni) = graph.component_labels(full.without(i));
    let (without_j, _) = graph.component_labels(full.without(j));
    let mut representative = vec![usize::MAX; generator_count];
    for v in 0..graph.num_vertices() {
        if representative[generator_of[v]] == usize::MAX {
            representative[generator_of[v]] = v;
        }
    }
    let nj = without_j.iter().max().map_or(0, |m| m + 1);
    let mut forest = DisjointSets::new(ni + nj);
    let tree_relators = representative
        .iter()
        .enumerate()
        .filter(|&(_, &v)| forest.union(without_i[v], ni + without_j[v]))
        .map(|(x, _)| vec![Letter::new(x)])
        .collect();

    Ok(GroupPresentation {
        generator_count,
        cycle_relators,
        tree_relators,
    })
}

/// Invariants of the abelianized group: `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub free_rank: usize,
    /// Non-trivial invariant factors, each dividing the next.
    pub divisors: Vec<SmithInt>,
}

pub fn abelianization(pres: &GroupPresentation) -> Abelianization {
    let diagonal = smith::smith_diagonal(pres.exponent_matrix());
    Abelianization {
        free_rank: pres.generator_count - diagonal.len(),
        divisors: diagonal.into_iter().filter(|&x| x > 1).collect(),
    }
}

/// Bounds on the minimal number of generators of the group: the abelianized
/// lower bound and the generator count after Tietze simplification.
pub fn rank_bounds(pres: &GroupPresentation) -> (usize, usize) {
    let ab = abelianization(pres);
    (
        ab.free_rank + ab.divisors.len(),
        tietze_simplify(pres).generator_count,
    )
}
