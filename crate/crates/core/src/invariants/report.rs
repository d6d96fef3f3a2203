use std::collections::BTreeMap;

use serde::Serialize;

use crate::boundary::boundary_component_count;
use crate::color::ColorSet;
use crate::graph::ColoredGraph;
use crate::scalar::GenusScalar;
use crate::Genus;

use super::checks::{check_omega_pairing, check_regularization_identities};
use super::genus::{alternating_sum, f_vector, rho_table_twice};
use super::permutation::CyclicPermutation;
use super::{serialize_genus, serialize_opt_genus, InvariantError};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RhoEntry {
    pub permutation: CyclicPermutation,
    #[serde(serialize_with = "serialize_genus")]
    pub rho: Genus,
}

/// `g_B` and `ġ_B` for one color set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GEntry {
    pub colors: String,
    pub g: usize,
    pub g_dot: usize,
}

/// Everything computed for one gem.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub dimension: usize,
    pub p: usize,
    pub p_bar: usize,
    pub p_dot: usize,
    /// Boundary components; zero for regular graphs.
    pub h: usize,
    pub regular: bool,
    pub bipartite: bool,
    /// All color pairs, then all color triples.
    pub g_table: Vec<GEntry>,
    pub f_vector: Vec<usize>,
    pub chi: i64,
    pub rho_table: Vec<RhoEntry>,
    #[serde(serialize_with = "serialize_genus")]
    pub rho_min: Genus,
    /// Regular graphs only.
    #[serde(serialize_with = "serialize_opt_genus")]
    pub omega_g: Option<Genus>,
    pub bound_checks: BTreeMap<String, bool>,
}

impl InvariantReport {
    pub fn compute(graph: &ColoredGraph) -> Result<Self, InvariantError> {
        let d = graph.dimension();
        let cls = graph.classify_vertices();
        let g_table = [2, 3]
            .into_iter()
            .filter(|&k| k <= d + 1)
            .flat_map(|k| ColorSet::subsets_of_size(d, k))
            .map(|colors| {
                let (g, g_dot) = graph.count_g(colors).expect("colors in range");
                GEntry {
                    colors: colors.to_string(),
                    g,
                    g_dot,
                }
            })
            .collect();
        let f = f_vector(graph);
        let table = rho_table_twice(graph)?;
        let min = table.iter().map(|(_, t)| *t).min().unwrap();
        let omega_g = graph
            .is_regular()
            .then(|| Genus::from_halves(table.iter().map(|(_, t)| t).sum()));

        let mut bound_checks = BTreeMap::new();
        bound_checks.insert("rho_integral_if_bipartite".to_string(), true);
        if d == 4 && graph.is_regular() {
            bound_checks.insert(
                "omega_pairing".to_string(),
                check_omega_pairing(graph)?.holds,
            );
        }
        if d == 4 && !graph.is_regular() {
            let mut lemma = true;
            for c in 0..d {
                lemma &= check_regularization_identities(graph, c)?.lemma_holds;
            }
            bound_checks.insert("regularization_lemma".to_string(), lemma);
        }

        Ok(InvariantReport {
            dimension: d,
            p: graph.order(),
            p_bar: cls.p_bar,
            p_dot: cls.p_dot,
            h: if graph.is_regular() {
                0
            } else {
                boundary_component_count(graph)
            },
            regular: graph.is_regular(),
            bipartite: graph.is_bipartite(),
            g_table,
            chi: alternating_sum(&f),
            f_vector: f,
            rho_table: table
                .into_iter()
                .map(|(permutation, t)| RhoEntry {
                    permutation,
                    rho: Genus::from_halves(t),
                })
                .collect(),
            rho_min: Genus::from_halves(min),
            omega_g,
            bound_checks,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{b4_2, k33, s4_2};

    #[test]
    fn sphere_report() {
        let r = InvariantReport::compute(&s4_2()).unwrap();
        assert_eq!(r.f_vector, vec![5, 10, 10, 5, 2]);
        assert_eq!(r.chi, 2);
        assert_eq!(r.omega_g, Some(Genus::from_integer(0)));
        assert_eq!(r.g_table.len(), 20);
        assert_eq!(r.bound_checks["omega_pairing"], true);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""rho_min":"0""#), "{json}");
    }

    #[test]
    fn ball_and_torus_reports() {
        let r = InvariantReport::compute(&b4_2()).unwrap();
        assert_eq!((r.h, r.p_bar, r.p_dot, r.chi), (1, 1, 0, 1));
        assert_eq!(r.omega_g, None);
        assert_eq!(r.bound_checks["regularization_lemma"], true);
        let r = InvariantReport::compute(&k33()).unwrap();
        assert_eq!(r.rho_min, Genus::from_integer(1));
        assert_eq!(r.rho_table.len(), 1);
        assert_eq!(r.g_table.len(), 4);
    }
}
