use crate::enumeration::{clique_number, visit_maximal_cliques};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::small::isomorphism_classes;
use std::ops::ControlFlow;

/// Clique number `t`, every maximal clique of size `t`, and no two
/// `t`-cliques meeting in `t - 1` vertices.
pub fn is_extremal_local(g: &Graph, t: usize) -> bool {
    if clique_number(g) != t {
        return false;
    }
    let mut cliques: Vec<VertexSet> = Vec::new();
    let flow = visit_maximal_cliques(g, |c| {
        if c.len() != t {
            return ControlFlow::Break(());
        }
        cliques.push(c);
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return false;
    }
    let near_miss = |a: &VertexSet, b: &VertexSet| t >= 1 && a.intersection(*b).len() == t - 1;
    cliques.iter().enumerate().all(|(i, a)| cliques[i + 1..].iter().all(|b| !near_miss(a, b)))
}

/// All graphs of order `k` (up to isomorphism) satisfying
/// [`is_extremal_local`] for `t`, found by trying every labeled graph.
pub fn derive_extremal_locals(k: usize, t: usize, budget: u64) -> Result<Vec<Graph>> {
    if k > 7 {
        return Err(Error::OrderTooLarge(k));
    }
    isomorphism_classes(k, |g| is_extremal_local(g, t), budget)
}
