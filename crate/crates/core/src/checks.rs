//! Structural statements about CIS and well-covered graphs, phrased as
//! checks on a single graph. Each returns `Ok(None)` when the statement
//! holds (or does not apply) and a description of the failure otherwise.

use crate::enumeration::{CliqueStructure, MaximalFamily};
use crate::graph::{Graph, VertexSet};
use crate::reduction::irreducible_quotient;

/// Connected and isomorphic to `K_{a,b}` with `a, b >= 1`.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    g.order() >= 2 && g.is_connected() && irreducible_quotient(g).quotient.order() == 2
}

/// No two maximum cliques meet in exactly `omega - 1` vertices.
pub fn clique_intersection_violation(s: &CliqueStructure) -> Option<(VertexSet, VertexSet)> {
    let omega = s.omega();
    let max: Vec<VertexSet> = s.maximum_cliques().collect();
    for (i, &a) in max.iter().enumerate() {
        for &b in &max[i + 1..] {
            if a.intersection(b).len() + 1 == omega {
                return Some((a, b));
            }
        }
    }
    None
}

/// For a well-covered graph without isolated vertices: for every maximal
/// stable set `S` and `v ∉ S` with `|S ∩ N(v)| = rho`, every maximal stable
/// set `S'` containing `{v} ∪ (S \ N(v))` satisfies `|S' \ S| = rho`, and
/// `W = S' \ (S ∪ {v})` has `rho - 1` vertices, avoids `N[v]`, and is
/// completely joined to `S ∩ N(v)`.
pub fn rho_exchange_violation(g: &Graph, s: &CliqueStructure) -> Option<String> {
    if !s.well_covered().holds || (0..g.order()).any(|v| g.degree(v) == 0) {
        return None;
    }
    let stable: &MaximalFamily = &s.stable_sets;
    let rho = (0..g.order())
        .map(|v| {
            stable
                .members
                .iter()
                .filter(|m| !m.contains(v))
                .map(|m| m.intersection(g.neighbors(v)).len())
                .min()
                .unwrap()
        })
        .min()?;
    for &set in &stable.members {
        for v in g.vertices().difference(set).iter() {
            let hit = set.intersection(g.neighbors(v));
            if hit.len() != rho {
                continue;
            }
            let x = set.difference(g.neighbors(v)).with(v);
            for &other in stable.members.iter().filter(|m| x.is_subset(**m)) {
                let w = other.difference(set).without(v);
                let ok = other.difference(set).len() == rho
                    && w.len() + 1 == rho
                    && w.is_disjoint(g.closed_neighbors(v))
                    && w.iter().all(|u| hit.is_subset(g.neighbors(u)));
                if !ok {
                    return Some(format!("S={set} v={v} S'={other} rho={rho}"));
                }
            }
        }
    }
    None
}

/// A connected `k`-regular well-covered co-well-covered graph is complete
/// or has `3 * omega <= 2 * (k + 1)`.
pub fn clique_bound_violation(g: &Graph, s: &CliqueStructure) -> Option<String> {
    let k = g.profile().valency?;
    let n = g.order();
    if !g.is_connected() || k == n - 1 || !s.well_covered().holds || !s.co_well_covered().holds {
        return None;
    }
    let omega = s.omega();
    (3 * omega > 2 * (k + 1)).then(|| format!("k={k} omega={omega}"))
}

/// True iff every local graph is a disjoint union of two complete graphs.
pub fn locally_two_cliques(g: &Graph) -> bool {
    (0..g.order()).all(|v| match g.local_graph(v) {
        Ok(local) => {
            let comps = local.components();
            comps.len() == 2 && comps.iter().all(|&c| local.is_clique(c))
        }
        Err(_) => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::DEFAULT_LIMIT;
    use crate::families;

    #[test]
    fn complete_bipartite_recognition() {
        assert!(is_complete_bipartite(&families::complete_bipartite(2, 5).unwrap()));
        assert!(is_complete_bipartite(&families::cycle(4).unwrap()));
        assert!(!is_complete_bipartite(&families::cycle(6).unwrap()));
        assert!(!is_complete_bipartite(&Graph::complete(1).unwrap()));
    }

    #[test]
    fn clique_intersection_examples() {
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = CliqueStructure::compute(&diamond, DEFAULT_LIMIT).unwrap();
        assert!(clique_intersection_violation(&s).is_some());
        let s = CliqueStructure::compute(&families::rook(3).unwrap(), DEFAULT_LIMIT).unwrap();
        assert!(clique_intersection_violation(&s).is_none());
    }

    #[test]
    fn rho_exchange_on_cycles() {
        for n in [3, 4, 5, 7] {
            let g = families::cycle(n).unwrap();
            let s = CliqueStructure::compute(&g, DEFAULT_LIMIT).unwrap();
            assert_eq!(rho_exchange_violation(&g, &s), None, "C_{n}");
        }
    }

    #[test]
    fn locally_two_cliques_examples() {
        assert!(locally_two_cliques(&families::rook(4).unwrap()));
        assert!(locally_two_cliques(&families::cycle(5).unwrap()));
        assert!(!locally_two_cliques(&Graph::complete(4).unwrap()));
    }
}
