use super::cliques::clique_number;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`chromatic_number`].
pub const MAX_COLORING_ORDER: usize = 64;

/// Exact chromatic number by branch and bound.
///
/// Vertices are colored in descending-degree order, colors tried in
/// ascending index; a branch is cut once it would use as many colors as the
/// best coloring found so far. The clique number is the starting lower bound
/// and a greedy coloring the starting upper bound.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > MAX_COLORING_ORDER {
        return Err(Error::OrderTooLargeForExactColoring(n));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let lower = clique_number(g);
    let mut best = greedy(g, &order);
    if best == lower {
        return Ok(best);
    }

    let mut classes = vec![VertexSet::empty(); n];
    search(g, &order, 0, 0, &mut classes, &mut best, lower);
    Ok(best)
}

fn greedy(g: &Graph, order: &[usize]) -> usize {
    let mut classes: Vec<VertexSet> = Vec::new();
    for &v in order {
        match classes.iter().position(|c| c.is_disjoint(g.neighbors(v))) {
            Some(i) => classes[i].insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    classes.len()
}

fn search(
    g: &Graph,
    order: &[usize],
    depth: usize,
    used: usize,
    classes: &mut [VertexSet],
    best: &mut usize,
    lower: usize,
) {
    if *best == lower {
        return;
    }
    if depth == order.len() {
        *best = used;
        return;
    }
    let v = order[depth];
    for c in 0..used {
        if classes[c].is_disjoint(g.neighbors(v)) {
            classes[c].insert(v);
            search(g, order, depth + 1, used, classes, best, lower);
            classes[c].remove(v);
            if *best == lower {
                return;
            }
        }
    }
    if used + 1 < *best {
        classes[used].insert(v);
        search(g, order, depth + 1, used + 1, classes, best, lower);
        classes[used].remove(v);
    }
}
