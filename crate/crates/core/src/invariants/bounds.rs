//! Lower bounds for the regular genus and G-degree of regular 5-colored gems,
//! semi-simplicity, the Dehn–Sommerville relation and gem complexity.

use serde::Serialize;

use crate::color::ColorSet;
use crate::graph::ColoredGraph;
use crate::moves::{cancel_1_dipole, find_1_dipoles};
use crate::scalar::GenusScalar;
use crate::Genus;

use super::genus::{euler_characteristic, rho_closed_twice, rho_table_twice};
use super::permutation::CyclicPermutation;
use super::report::RhoEntry;
use super::{serialize_genus, InvariantError};

fn require_regular_4(graph: &ColoredGraph) -> Result<(), InvariantError> {
    if graph.dimension() != 4 {
        return Err(InvariantError::Dimension {
            expected: 4,
            got: graph.dimension(),
        });
    }
    if !graph.is_regular() {
        return Err(InvariantError::NotRegular);
    }
    Ok(())
}

fn non_negative(name: &'static str, value: i64) -> Result<(), InvariantError> {
    if value < 0 {
        return Err(InvariantError::NegativeRank { name, value });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub genus: i64,
    pub gdegree: i64,
}

/// `2χ + 3m + 2h - 4 + 2m̂` and twelve times that, for a 4-manifold with
/// `h ≥ 1` boundary components, `χ(M) = chi`, and fundamental group ranks `m`
/// (of `M`) and `m̂` (of the manifold with coned-off boundary).
pub fn lower_bound_thm(chi: i64, m: i64, h: i64, m_hat: i64) -> Result<LowerBound, InvariantError> {
    if h < 1 {
        return Err(InvariantError::InvalidBoundaryCount(h));
    }
    non_negative("m", m)?;
    non_negative("m_hat", m_hat)?;
    let genus = 2 * chi + 3 * m + 2 * h - 4 + 2 * m_hat;
    Ok(LowerBound {
        genus,
        gdegree: 12 * genus,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound: LowerBound,
    /// `ρ_ε - genus bound` per permutation.
    pub slack: Vec<RhoEntry>,
    #[serde(serialize_with = "serialize_genus")]
    pub rho_min: Genus,
    #[serde(serialize_with = "serialize_genus")]
    pub omega_g: Genus,
    #[serde(serialize_with = "serialize_genus")]
    pub gdegree_slack: Genus,
    pub genus_holds: bool,
    pub gdegree_holds: bool,
    /// Both bounds attained.
    pub equality: bool,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.genus_holds && self.gdegree_holds
    }
}

/// Compares every `ρ_ε` and `ω_G` of a regular 5-colored gem with the lower
/// bounds for the given data. Violations are reported, not raised.
pub fn check_bound_on_gem(
    graph: &ColoredGraph,
    chi: i64,
    m: i64,
    h: i64,
    m_hat: i64,
) -> Result<BoundReport, InvariantError> {
    require_regular_4(graph)?;
    let bound = lower_bound_thm(chi, m, h, m_hat)?;
    let table = rho_table_twice(graph)?;
    let min_twice = table.iter().map(|(_, t)| *t).min().unwrap();
    let omega_twice: i64 = table.iter().map(|(_, t)| t).sum();
    let slack = table
        .iter()
        .map(|(eps, t)| RhoEntry {
            permutation: eps.clone(),
            rho: Genus::from_halves(t - 2 * bound.genus),
        })
        .collect();
    let genus_holds = min_twice >= 2 * bound.genus;
    let gdegree_holds = omega_twice >= 2 * bound.gdegree;
    Ok(BoundReport {
        bound,
        slack,
        rho_min: Genus::from_halves(min_twice),
        omega_g: Genus::from_halves(omega_twice),
        gdegree_slack: Genus::from_halves(omega_twice - 2 * bound.gdegree),
        genus_holds,
        gdegree_holds,
        equality: min_twice == 2 * bound.genus && omega_twice == 2 * bound.gdegree,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SemisimpleReport {
    pub semi_simple: bool,
    /// Permutations witnessing weak semi-simplicity, in canonical order.
    pub weak_semi_simple: Vec<CyclicPermutation>,
}

fn triple(a: usize, b: usize, c: usize) -> ColorSet {
    ColorSet::single(a).with(b).with(c)
}

/// Semi-simplicity of a regular 5-colored gem with `g(Γ_4̂) = h` and
/// `g(Γ_ĉ) = 1` for `c < 4`: every `g_{ijk}` with `i,j,k < 4` equals `m̂ + h`
/// and every `g_{ij4}` equals `m + 1`. The weak variant only asks this of the
/// five triples `{ε_i, ε_{i+2}, ε_{i+4}}`.
pub fn check_semisimple(
    graph: &ColoredGraph,
    m: i64,
    m_hat: i64,
    h: i64,
) -> Result<SemisimpleReport, InvariantError> {
    require_regular_4(graph)?;
    non_negative("m", m)?;
    non_negative("m_hat", m_hat)?;
    let full = graph.all_colors();
    let top = graph.g(full.without(4)) as i64;
    if top != h {
        return Err(InvariantError::ResidueShape(format!(
            "g(Γ without color 4) = {top}, expected h = {h}"
        )));
    }
    if let Some(c) = (0..4).find(|&c| graph.g(full.without(c)) != 1) {
        return Err(InvariantError::ResidueShape(format!(
            "graph without color {c} is disconnected"
        )));
    }
    let expected = |t: ColorSet| if t.contains(4) { m + 1 } else { m_hat + h };
    let matches = |t: ColorSet| graph.g(t) as i64 == expected(t);
    let semi_simple = ColorSet::subsets_of_size(4, 3).into_iter().all(matches);
    let weak_semi_simple = CyclicPermutation::enumerate(4)
        .into_iter()
        .filter(|eps| (0..5).all(|i| matches(triple(eps.get(i), eps.get(i + 2), eps.get(i + 4)))))
        .collect();
    Ok(SemisimpleReport {
        semi_simple,
        weak_semi_simple,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DehnSommervilleReport {
    /// Color-4 1-dipoles cancelled before checking.
    pub dipoles_cancelled: usize,
    pub p: usize,
    pub chi: i64,
    /// `Σ g_{ijk}` over all 3-subsets of colors.
    pub triple_sum: i64,
    /// `2p`.
    pub lhs: i64,
    /// `6χ + 2Σ g_{ijk} - 30`.
    pub rhs: i64,
    /// Every 3-residue has genus zero, so that the cell complex is a manifold
    /// around its edges; the relation is only expected under this condition.
    pub three_residues_planar: bool,
    pub holds: bool,
}

/// `2p = 6χ + 2Σ g_{ijk} - 30` for a regular 5-colored gem whose residues
/// `Γ_ĉ`, `c < 4`, are connected. Color-4 1-dipoles are cancelled first so
/// the cell complex has exactly five vertices.
pub fn check_dehn_sommerville(
    graph: &ColoredGraph,
) -> Result<DehnSommervilleReport, InvariantError> {
    require_regular_4(graph)?;
    let full = graph.all_colors();
    if let Some(c) = (0..4).find(|&c| graph.g(full.without(c)) != 1) {
        return Err(InvariantError::Precondition(format!(
            "graph without color {c} is disconnected"
        )));
    }
    let mut current = graph.clone();
    let mut dipoles_cancelled = 0;
    while let Some(site) = find_1_dipoles(&current).into_iter().find(|s| s.color == 4) {
        current = cancel_1_dipole(&current, site)?;
        dipoles_cancelled += 1;
    }
    let p = current.order();
    let chi = euler_characteristic(&current);
    let triple_sum: i64 = ColorSet::subsets_of_size(4, 3)
        .into_iter()
        .map(|t| current.g(t) as i64)
        .sum();
    // each component of a 3-residue is a 2-dimensional gem; its genus is zero
    // exactly when the closed formula gives 2 - 2ρ = 2
    let three_residues_planar = ColorSet::subsets_of_size(4, 3).into_iter().all(|t| {
        let pairs: i64 = ColorSet::subsets_of_size(4, 2)
            .into_iter()
            .filter(|pair| pair.iter().all(|c| t.contains(c)))
            .map(|pair| current.g(pair) as i64)
            .sum();
        pairs - p as i64 == 2 * current.g(t) as i64
    });
    let lhs = 2 * p as i64;
    let rhs = 6 * chi + 2 * triple_sum - 30;
    Ok(DehnSommervilleReport {
        dipoles_cancelled,
        p,
        chi,
        triple_sum,
        lhs,
        rhs,
        three_residues_planar,
        holds: lhs == rhs,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GemComplexityReport {
    pub p: usize,
    /// `6(χ(M) - 1 + (p - 1))`.
    pub relation_value: i64,
    #[serde(serialize_with = "serialize_genus")]
    pub omega_g: Genus,
    pub equal: bool,
    pub claimed_minimal: bool,
    /// False only when the gem is claimed minimal and the values differ.
    pub consistent: bool,
    pub note: Option<String>,
}

/// Places `6(χ(M) - 1 + (p - 1))` next to `ω_G` of a regular 5-colored gem
/// of order `2p`. Equality is only required when `claimed_minimal` is set.
pub fn gem_complexity_relation(
    graph: &ColoredGraph,
    chi: i64,
    claimed_minimal: bool,
) -> Result<GemComplexityReport, InvariantError> {
    require_regular_4(graph)?;
    let p = graph.order();
    let relation_value = 6 * (chi - 1 + (p as i64 - 1));
    let omega_twice: i64 = CyclicPermutation::enumerate(4)
        .iter()
        .map(|eps| rho_closed_twice(graph, eps))
        .sum();
    let equal = omega_twice == 2 * relation_value;
    let note = (!equal).then(|| {
        "values differ: the gem does not realize the minimal complexity, or the manifold is closed"
            .to_string()
    });
    Ok(GemComplexityReport {
        p,
        relation_value,
        omega_g: Genus::from_halves(omega_twice),
        equal,
        claimed_minimal,
        consistent: equal || !claimed_minimal,
        note,
    })
}
