#![allow(dead_code)]

use cisgraph::Graph;
use proptest::prelude::*;

/// Labeled graph on `n` vertices from upper-triangle bits, row-major.
pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut k = 0;
    Graph::from_fn(n, |_, _| {
        k += 1;
        bits[k - 1]
    })
    .unwrap()
}

pub fn graph_strategy(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| from_bits(n, &bits))
    })
}

fn subsets(n: usize) -> impl Iterator<Item = u32> {
    1..(1u32 << n)
}

fn is_clique_mask(g: &Graph, mask: u32) -> bool {
    (0..g.order()).all(|u| mask >> u & 1 == 0 || (u + 1..g.order()).all(|v| mask >> v & 1 == 0 || g.is_adjacent(u, v)))
}

/// Maximal cliques by trying every vertex subset; only for small graphs.
pub fn naive_maximal_cliques(g: &Graph) -> Vec<u32> {
    let n = g.order();
    assert!(n <= 12);
    subsets(n)
        .filter(|&m| is_clique_mask(g, m))
        .filter(|&m| (0..n).all(|v| m >> v & 1 == 1 || !is_clique_mask(g, m | 1 << v)))
        .collect()
}

pub fn naive_maximal_stable_sets(g: &Graph) -> Vec<u32> {
    naive_maximal_cliques(&g.complement())
}

pub fn naive_is_cis(g: &Graph) -> bool {
    let stable = naive_maximal_stable_sets(g);
    naive_maximal_cliques(g).iter().all(|c| stable.iter().all(|s| c & s != 0))
}

pub fn naive_alpha(g: &Graph) -> usize {
    naive_maximal_stable_sets(g).iter().map(|s| s.count_ones() as usize).max().unwrap()
}

pub fn naive_omega(g: &Graph) -> usize {
    naive_maximal_cliques(g).iter().map(|s| s.count_ones() as usize).max().unwrap()
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1).unwrap()
}

/// Circulant graph on `Z_n` with connection set `s` (closed under negation).
pub fn circulant(n: usize, s: &[usize]) -> Graph {
    Graph::from_fn(n, |u, v| {
        let d = v - u;
        s.contains(&d) || s.contains(&(n - d))
    })
    .unwrap()
}
