mod common;

use cisgraph::enumeration::{
    alpha_omega, chromatic_number, is_cis, is_co_well_covered, is_well_covered, maximal_cliques, maximal_stable_sets,
    p4_property, red_edges, rho, rho_vertex, CliqueStructure, DEFAULT_LIMIT,
};
use cisgraph::reduction::irreducible_quotient;
use cisgraph::{families, Error, Graph, VertexSet};
use common::{graph_strategy, naive_is_cis, naive_maximal_cliques, naive_maximal_stable_sets, path};
use proptest::prelude::*;

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

fn masks(family: &[VertexSet]) -> Vec<u32> {
    let mut out: Vec<u32> = family.iter().map(|s| s.bits() as u32).collect();
    out.sort_unstable();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn cliques_match_subset_oracle(g in graph_strategy(1, 10)) {
        let mut naive = naive_maximal_cliques(&g);
        naive.sort_unstable();
        prop_assert_eq!(masks(&maximal_cliques(&g, DEFAULT_LIMIT).members), naive);
    }

    #[test]
    fn stable_sets_are_cliques_of_complement(g in graph_strategy(1, 14)) {
        prop_assert_eq!(
            maximal_stable_sets(&g, DEFAULT_LIMIT).members,
            maximal_cliques(&g.complement(), DEFAULT_LIMIT).members
        );
    }

    #[test]
    fn cis_matches_oracle_and_witness_verifies(g in graph_strategy(1, 9)) {
        let cert = is_cis(&g, DEFAULT_LIMIT).unwrap();
        prop_assert_eq!(cert.is_cis, naive_is_cis(&g));
        prop_assert!(cert.verify(&g));
        prop_assert_eq!(cert.witness.is_some(), !cert.is_cis);
    }

    #[test]
    fn cis_closed_under_complement(g in graph_strategy(1, 10)) {
        prop_assert_eq!(is_cis(&g, DEFAULT_LIMIT).unwrap().is_cis, is_cis(&g.complement(), DEFAULT_LIMIT).unwrap().is_cis);
    }

    #[test]
    fn cis_of_disjoint_union(a in graph_strategy(1, 6), b in graph_strategy(1, 6)) {
        let u = a.disjoint_union(&b).unwrap();
        let both = naive_is_cis(&a) && naive_is_cis(&b);
        prop_assert_eq!(is_cis(&u, DEFAULT_LIMIT).unwrap().is_cis, both);
    }

    #[test]
    fn cis_of_lexicographic_product(a in graph_strategy(1, 5), b in graph_strategy(1, 5)) {
        let p = a.lexicographic_product(&b).unwrap();
        let both = naive_is_cis(&a) && naive_is_cis(&b);
        prop_assert_eq!(is_cis(&p, DEFAULT_LIMIT).unwrap().is_cis, both);
    }

    #[test]
    fn cis_of_irreducible_quotient(g in graph_strategy(1, 8)) {
        let q = irreducible_quotient(&g).quotient;
        prop_assert_eq!(is_cis(&q, DEFAULT_LIMIT).unwrap().is_cis, naive_is_cis(&g));
    }

    #[test]
    fn cis_implies_p4_property(g in graph_strategy(1, 9)) {
        if naive_is_cis(&g) {
            prop_assert!(p4_property(&g).holds);
        }
    }

    #[test]
    fn cover_witnesses_verify(g in graph_strategy(1, 10)) {
        let wc = is_well_covered(&g, DEFAULT_LIMIT).unwrap();
        let sizes: Vec<u32> = naive_maximal_stable_sets(&g).iter().map(|s| s.count_ones()).collect();
        prop_assert_eq!(wc.holds, sizes.iter().all(|&s| s == sizes[0]));
        if let Some((a, b)) = wc.witness {
            prop_assert!(a.len() != b.len() && g.is_stable(a) && g.is_stable(b));
        }
        let cwc = is_co_well_covered(&g, DEFAULT_LIMIT).unwrap();
        prop_assert_eq!(cwc.holds, is_well_covered(&g.complement(), DEFAULT_LIMIT).unwrap().holds);
    }

    #[test]
    fn chromatic_number_bounds(g in graph_strategy(1, 7)) {
        let chi = chromatic_number(&g).unwrap();
        let (alpha, omega) = alpha_omega(&g, DEFAULT_LIMIT).unwrap();
        prop_assert!(omega <= chi && g.order() <= chi * alpha);
        // brute force: no proper (chi - 1)-coloring exists
        prop_assert!(!colorable(&g, chi - 1));
        prop_assert!(colorable(&g, chi));
    }
}

fn colorable(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return false;
    }
    let n = g.order() as u32;
    (0..(k as u64).pow(n)).any(|code| {
        let color = |v: usize| (code / (k as u64).pow(v as u32)) % k as u64;
        g.edges().iter().all(|&(u, v)| color(u) != color(v))
    })
}

#[test]
fn maximal_clique_examples() {
    let c5 = families::cycle(5).unwrap();
    let cliques = maximal_cliques(&c5, DEFAULT_LIMIT);
    assert_eq!(cliques.len(), 5);
    assert!(cliques.members.iter().all(|c| c.len() == 2));
    assert_eq!(maximal_cliques(&Graph::complete(4).unwrap(), DEFAULT_LIMIT).members, vec![set(&[0, 1, 2, 3])]);
    let q4 = families::q_graph(4).unwrap();
    assert!(maximal_cliques(&q4, DEFAULT_LIMIT).members.iter().all(|c| c.len() == 4));
}

#[test]
fn truncation_is_reported() {
    let family = maximal_cliques(&families::cycle(9).unwrap(), 3);
    assert!(family.truncated);
    assert_eq!(alpha_omega(&families::cycle(9).unwrap(), 3), Err(Error::EnumerationLimitExceeded(3)));
}

#[test]
fn maximal_stable_set_examples() {
    let k5 = Graph::complete(5).unwrap();
    assert_eq!(maximal_stable_sets(&k5, DEFAULT_LIMIT).len(), 5);
    let q5 = families::q_graph(5).unwrap();
    assert!(maximal_stable_sets(&q5, DEFAULT_LIMIT).members.iter().all(|s| s.len() == 5));
    let k23 = families::complete_bipartite(2, 3).unwrap();
    assert_eq!(maximal_stable_sets(&k23, DEFAULT_LIMIT).members, vec![set(&[0, 1]), set(&[2, 3, 4])]);
}

#[test]
fn alpha_omega_examples() {
    assert_eq!(alpha_omega(&families::rook(4).unwrap(), DEFAULT_LIMIT).unwrap(), (4, 4));
    assert_eq!(alpha_omega(&families::r_graph(3).unwrap(), DEFAULT_LIMIT).unwrap(), (6, 4));
    assert_eq!(alpha_omega(&families::cycle(5).unwrap(), DEFAULT_LIMIT).unwrap(), (2, 2));
}

#[test]
fn well_covered_examples() {
    assert!(is_well_covered(&families::cycle(7).unwrap(), DEFAULT_LIMIT).unwrap().holds);
    let c6 = is_well_covered(&families::cycle(6).unwrap(), DEFAULT_LIMIT).unwrap();
    assert!(!c6.holds);
    let (a, b) = c6.witness.unwrap();
    let mut sizes = [a.len(), b.len()];
    sizes.sort();
    assert_eq!(sizes, [2, 3]);
    let k23 = is_well_covered(&families::complete_bipartite(2, 3).unwrap(), DEFAULT_LIMIT).unwrap();
    assert_eq!(k23.witness, Some((set(&[0, 1]), set(&[2, 3, 4]))));
}

#[test]
fn cis_examples() {
    let p4 = is_cis(&path(4), DEFAULT_LIMIT).unwrap();
    assert_eq!(p4.witness, Some((set(&[1, 2]), set(&[0, 3]))));
    for m in 1..=8 {
        for n in 1..=8 {
            assert!(is_cis(&families::complete_bipartite(m, n).unwrap(), DEFAULT_LIMIT).unwrap().is_cis);
        }
    }
    assert!(is_cis(&families::s_graph(4).unwrap(), DEFAULT_LIMIT).unwrap().is_cis);
}

#[test]
fn rho_examples() {
    for n in 2..=6 {
        assert_eq!(rho(&Graph::complete(n).unwrap(), DEFAULT_LIMIT).unwrap(), 1);
        assert_eq!(rho(&families::complete_bipartite(n, n).unwrap(), DEFAULT_LIMIT).unwrap(), n);
    }
    assert_eq!(rho_vertex(&families::cycle(5).unwrap(), 0, DEFAULT_LIMIT).unwrap(), 1);
    let isolated = Graph::from_edges(3, &[(0, 1)]).unwrap();
    assert_eq!(rho_vertex(&isolated, 2, DEFAULT_LIMIT), Err(Error::IsolatedVertex(2)));
    assert_eq!(rho(&Graph::empty(3).unwrap(), DEFAULT_LIMIT), Err(Error::AllVerticesIsolated));
}

#[test]
fn chromatic_number_examples() {
    assert_eq!(chromatic_number(&Graph::complete(5).unwrap()).unwrap(), 5);
    assert_eq!(chromatic_number(&families::cycle(5).unwrap()).unwrap(), 3);
    let rook = families::rook(3).unwrap();
    assert!(colorable(&rook, 3) && !colorable(&rook, 2));
    assert_eq!(chromatic_number(&rook).unwrap(), 3);
    assert_eq!(chromatic_number(&Graph::empty(65).unwrap()), Err(Error::OrderTooLargeForExactColoring(65)));
}

#[test]
fn p4_property_examples() {
    let p4 = p4_property(&path(4));
    assert!(!p4.holds);
    let failing = p4.failing_path.unwrap();
    assert!(failing == [0, 1, 2, 3] || failing == [3, 2, 1, 0]);
    assert!(p4_property(&families::cycle(4).unwrap()).holds);
    assert!(!p4_property(&families::cycle(6).unwrap()).holds);
}

#[test]
fn red_edge_examples() {
    assert!(red_edges(&Graph::complete(4).unwrap(), DEFAULT_LIMIT).unwrap().is_empty());
    let oct = Graph::complete(3).unwrap().lexicographic_product(&Graph::empty(2).unwrap()).unwrap();
    assert_eq!(red_edges(&oct, DEFAULT_LIMIT).unwrap().len(), 12);

    // oracle: count, per edge, the 4-subsets containing it that are cliques
    let q5 = families::q_graph(5).unwrap();
    let red = red_edges(&q5, DEFAULT_LIMIT).unwrap();
    let n = q5.order();
    for &(u, v) in &q5.edges() {
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                let quad = set(&[u, v, a, b]);
                if quad.len() == 4 && q5.is_clique(quad) {
                    count += 1;
                }
            }
        }
        assert_eq!(red.contains(&(u, v)), count >= 2, "edge {u}-{v}");
    }
    for v in 0..n {
        let incident = red.iter().filter(|&&(a, b)| a == v || b == v).count();
        assert_eq!(incident, 2, "vertex {v}");
    }
}

#[test]
fn structure_agrees_with_free_functions() {
    let g = families::r_graph(2).unwrap();
    let s = CliqueStructure::compute(&g, DEFAULT_LIMIT).unwrap();
    assert_eq!((s.alpha(), s.omega()), alpha_omega(&g, DEFAULT_LIMIT).unwrap());
    assert_eq!(s.cis(), is_cis(&g, DEFAULT_LIMIT).unwrap());
}
