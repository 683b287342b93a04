//! Quotients by neighborhood equivalence and recognition of the
//! factorizations `G = Z[K_m]` and `G = X[empty_n]`.

use crate::graph::{Graph, VertexSet};

/// Which neighborhoods define the equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborhoodMode {
    /// `N(u) = N(v)`; classes are stable sets.
    Open,
    /// `N[u] = N[v]`; classes are cliques.
    Closed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientResult {
    pub quotient: Graph,
    /// Classes ordered by their least vertex, which is also the quotient
    /// vertex order.
    pub classes: Vec<VertexSet>,
    pub mode: NeighborhoodMode,
}

impl QuotientResult {
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    /// Common class size, if all classes have the same size.
    pub fn uniform_class_size(&self) -> Option<usize> {
        let first = self.classes[0].len();
        self.classes.iter().all(|c| c.len() == first).then_some(first)
    }
}

pub fn neighborhood_partition(g: &Graph, mode: NeighborhoodMode) -> QuotientResult {
    let key = |v: usize| match mode {
        NeighborhoodMode::Open => g.neighbors(v),
        NeighborhoodMode::Closed => g.closed_neighbors(v),
    };
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..g.order() {
        match reps.iter().position(|&r| key(r) == key(v)) {
            Some(i) => classes[i].insert(v),
            None => {
                reps.push(v);
                classes.push(VertexSet::singleton(v));
            }
        }
    }
    let quotient = Graph::from_fn(reps.len(), |i, j| g.is_adjacent(reps[i], reps[j]))
        .expect("quotient is no larger than the input");
    QuotientResult { quotient, classes, mode }
}

pub fn irreducible_quotient(g: &Graph) -> QuotientResult {
    neighborhood_partition(g, NeighborhoodMode::Open)
}

/// No two distinct vertices share an open neighborhood.
pub fn is_irreducible(g: &Graph) -> bool {
    let rows = g.rows();
    let mut sorted = rows.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// `(Z, m)` with `G ≅ Z[K_m]` and `m >= 2`, when all closed-neighborhood
/// classes have the common size `m`.
pub fn factor_lex_complete(g: &Graph) -> Option<(Graph, usize)> {
    let q = neighborhood_partition(g, NeighborhoodMode::Closed);
    match q.uniform_class_size() {
        Some(m) if m >= 2 => Some((q.quotient, m)),
        _ => None,
    }
}

/// `(X, n)` with `G ≅ X[empty_n]` and `X` irreducible, when all
/// open-neighborhood classes have the common size `n`. For irreducible
/// input this is `(G, 1)`.
pub fn factor_lex_empty(g: &Graph) -> Option<(Graph, usize)> {
    let q = irreducible_quotient(g);
    q.uniform_class_size().map(|n| (q.quotient, n))
}
