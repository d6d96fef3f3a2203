//! Checkers for the G-degree pairing and the regularization identities.

use serde::Serialize;

use crate::boundary::boundary_graph;
use crate::color::{Color, ColorSet};
use crate::graph::ColoredGraph;
use crate::moves::cap_boundary;
use crate::scalar::GenusScalar;
use crate::Genus;

use super::genus::{euler_characteristic, rho_closed_twice, rho_table_twice, BoundaryGenusData};
use super::permutation::CyclicPermutation;
use super::{serialize_genus, InvariantError};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OmegaPair {
    pub permutation: CyclicPermutation,
    pub partner: CyclicPermutation,
    /// `ρ_ε + ρ_ε'`.
    #[serde(serialize_with = "serialize_genus")]
    pub sum: Genus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OmegaPairingReport {
    #[serde(serialize_with = "serialize_genus")]
    pub omega_g: Genus,
    pub pairs: Vec<OmegaPair>,
    /// `ρ_ε + ρ_ε'` is the same for every `ε`.
    pub sum_constant: bool,
    /// `ω_G = 6(ρ_ε + ρ_ε')` for every `ε`.
    pub holds: bool,
}

/// For a regular 5-colored graph, checks `ω_G = 6(ρ_ε + ρ_ε')` for every `ε`,
/// where `ε' = (ε_1, ε_3, ε_0, ε_2, 4)`.
pub fn check_omega_pairing(graph: &ColoredGraph) -> Result<OmegaPairingReport, InvariantError> {
    if graph.dimension() != 4 {
        return Err(InvariantError::Dimension {
            expected: 4,
            got: graph.dimension(),
        });
    }
    if !graph.is_regular() {
        return Err(InvariantError::NotRegular);
    }
    let table = rho_table_twice(graph)?;
    let lookup = |eps: &CyclicPermutation| table.iter().find(|(e, _)| e == eps).unwrap().1;
    let omega_twice: i64 = table.iter().map(|(_, t)| t).sum();
    let mut sums = Vec::with_capacity(table.len());
    let pairs: Vec<OmegaPair> = table
        .iter()
        .map(|(eps, t)| {
            let partner = eps.partner().expect("dimension 4");
            let sum_twice = t + lookup(&partner);
            sums.push(sum_twice);
            OmegaPair {
                permutation: eps.clone(),
                partner,
                sum: Genus::from_halves(sum_twice),
            }
        })
        .collect();
    let sum_constant = sums.windows(2).all(|w| w[0] == w[1]);
    let holds = sums.iter().all(|&s| 6 * s == omega_twice);
    Ok(OmegaPairingReport {
        omega_g: Genus::from_halves(omega_twice),
        pairs,
        sum_constant,
        holds,
    })
}

/// One residue-count identity `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl LemmaCheck {
    fn new(name: String, lhs: i64, rhs: i64) -> Self {
        LemmaCheck {
            name,
            lhs,
            rhs,
            holds: lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransferCase {
    /// The capping color is a cyclic neighbour of `d` in `ε`: the genus is unchanged.
    Adjacent,
    /// Otherwise the genus shifts by `∂g_{ε_0 ε_{d-1}} - ∂g_{ε_0 ε_{d-1} c}`.
    Shifted,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransferCheck {
    pub permutation: CyclicPermutation,
    pub case: TransferCase,
    #[serde(serialize_with = "serialize_genus")]
    pub rho_before: Genus,
    #[serde(serialize_with = "serialize_genus")]
    pub rho_after: Genus,
    #[serde(serialize_with = "serialize_genus")]
    pub predicted: Genus,
    /// Every component of `∂Γ_{ε_0 ε_{d-1} c}` has genus zero. The shifted case
    /// is only asserted when this holds.
    pub residues_planar: bool,
    pub asserted: bool,
    pub holds: bool,
    /// `2ρ_after - 2ρ_before = p̄ + ∂g_{ε_0 ε_{d-1}} - ∂g_{ε_0 c} - ∂g_{ε_{d-1} c}`,
    /// which needs no planarity.
    pub exact_shift_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularizationReport {
    pub singular_color: Color,
    /// Number of boundary components.
    pub h: usize,
    pub p_bar: usize,
    pub lemma: Vec<LemmaCheck>,
    pub transfer: Vec<TransferCheck>,
    /// `χ(Γ̃) - χ(Γ)`.
    pub chi_shift: i64,
    /// Euler characteristic of the boundary complex.
    pub boundary_chi: i64,
    /// The boundary complex sits in the complex of the graph without identifications.
    pub boundary_embeds: bool,
    /// `χ(Γ̃) - χ(Γ) = h - χ(∂)` whenever the boundary embeds; each boundary
    /// component is coned off.
    pub chi_shift_exact: bool,
    /// `χ(Γ̃) - χ(Γ) = h`, expected when the boundary embeds with `χ(∂) = 0`
    /// (as for a manifold, whose boundary is a closed 3-manifold).
    pub chi_law_holds: bool,
    pub lemma_holds: bool,
    pub transfer_holds: bool,
}

/// Caps the boundary with color `c` and compares residue counts and `ρ_ε` of
/// the capped graph with those of the original.
///
/// Residue counts are taken before the `c ↔ d` swap, so `g̃_{id}` counts
/// `{i,d}`-cycles of the capped graph:
/// `g̃_{id} = ġ_{id} + ∂g_{ic}` for `i ≠ c`, and `g̃_{cd} = ġ_{cd} + p̄`.
pub fn check_regularization_identities(
    graph: &ColoredGraph,
    c: Color,
) -> Result<RegularizationReport, InvariantError> {
    let d = graph.dimension();
    let bgraph = boundary_graph(graph)?;
    let capped = cap_boundary(graph, c)?;
    let p_bar = graph.classify_vertices().p_bar;
    let dg = |colors: ColorSet| bgraph.graph.g(colors) as i64;

    let mut lemma = Vec::with_capacity(d);
    for i in 0..d {
        let pair = ColorSet::single(i).with(d);
        let lhs = capped.g(pair) as i64;
        let rhs = if i == c {
            graph.g_dot(pair) as i64 + p_bar as i64
        } else {
            graph.g_dot(pair) as i64 + dg(ColorSet::single(i).with(c))
        };
        lemma.push(LemmaCheck::new(format!("g~{{{i},{d}}}"), lhs, rhs));
    }

    let data = BoundaryGenusData::new(graph)?;
    let transfer = CyclicPermutation::enumerate(d)
        .into_iter()
        .map(|eps| {
            let (a, b) = (eps.get(0), eps.get(d - 1));
            let before = data.rho_twice(&eps);
            let after = rho_closed_twice(&capped, &eps);
            let ab = ColorSet::single(a).with(b);
            let ac = ColorSet::single(a).with(c);
            let bc = ColorSet::single(b).with(c);
            let (case, predicted, planar, exact) = if c == a || c == b {
                (TransferCase::Adjacent, before, true, after == before)
            } else {
                // Σ over components of (2 - 2ρ) = pair counts - p̄
                let planar = dg(ab) + dg(ac) + dg(bc) == 2 * dg(ab.with(c)) + p_bar as i64;
                let exact = after - before == p_bar as i64 + dg(ab) - dg(ac) - dg(bc);
                (
                    TransferCase::Shifted,
                    before + 2 * (dg(ab) - dg(ab.with(c))),
                    planar,
                    exact,
                )
            };
            TransferCheck {
                case,
                rho_before: Genus::from_halves(before),
                rho_after: Genus::from_halves(after),
                predicted: Genus::from_halves(predicted),
                residues_planar: planar,
                asserted: planar,
                holds: !planar || after == predicted,
                exact_shift_holds: exact,
                permutation: eps,
            }
        })
        .collect::<Vec<_>>();

    let chi_shift = euler_characteristic(&capped) - euler_characteristic(graph);
    let boundary_chi = euler_characteristic(&bgraph.graph);
    let boundary_embeds = bgraph.embeds_in(graph);
    let h = bgraph.component_count();
    let lemma_holds = lemma.iter().all(|l| l.holds);
    let transfer_holds = transfer.iter().all(|t| t.holds && t.exact_shift_holds);
    Ok(RegularizationReport {
        singular_color: c,
        h,
        p_bar,
        lemma,
        transfer,
        chi_shift,
        boundary_chi,
        boundary_embeds,
        chi_shift_exact: !boundary_embeds || chi_shift == h as i64 - boundary_chi,
        chi_law_holds: chi_shift == h as i64,
        lemma_holds,
        transfer_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{b4_2, k33, s4_2};

    #[test]
    fn omega_pairing_on_sphere() {
        let r = check_omega_pairing(&s4_2()).unwrap();
        assert!(r.holds && r.sum_constant);
        assert_eq!(r.omega_g, Genus::from_integer(0));
        assert_eq!(r.pairs.len(), 12);
        assert_eq!(
            check_omega_pairing(&k33()),
            Err(InvariantError::Dimension {
                expected: 4,
                got: 2
            })
        );
        assert_eq!(
            check_omega_pairing(&b4_2()),
            Err(InvariantError::NotRegular)
        );
    }

    #[test]
    fn regularizing_the_ball() {
        for c in 0..4 {
            let r = check_regularization_identities(&b4_2(), c).unwrap();
            assert!(r.lemma_holds, "{r:?}");
            assert!(r.transfer_holds, "{r:?}");
            assert_eq!(r.h, 1);
            assert_eq!(r.chi_shift, 1);
            assert!(r.boundary_embeds && r.chi_shift_exact && r.chi_law_holds);
            assert_eq!(r.boundary_chi, 0);
            assert!(r.lemma.iter().all(|l| l.lhs == 1));
        }
        let r = check_regularization_identities(&b4_2(), 2).unwrap();
        let t = r
            .transfer
            .iter()
            .find(|t| t.permutation.to_string() == "(0,2,1,3,4)")
            .unwrap();
        assert_eq!(t.case, TransferCase::Shifted);
        assert_eq!(t.rho_after, Genus::from_integer(0));
        assert!(t.asserted && t.holds);
        assert_eq!(
            check_regularization_identities(&s4_2(), 0).unwrap_err(),
            InvariantError::NoBoundary
        );
    }
}
