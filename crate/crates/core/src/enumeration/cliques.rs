use std::ops::ControlFlow;

use crate::graph::{Graph, VertexSet};

/// Which side of the clique/stable duality a family describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Cliques,
    StableSets,
}

/// All inclusion-maximal cliques (or stable sets) of a graph, sorted by bit
/// pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalFamily {
    pub members: Vec<VertexSet>,
    pub kind: FamilyKind,
    /// Set when enumeration stopped at the limit; `members` is then partial.
    pub truncated: bool,
}

impl MaximalFamily {
    pub fn max_size(&self) -> usize {
        self.members.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn min_size(&self) -> usize {
        self.members.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Calls `visit` on every maximal clique of `g` (Bron–Kerbosch with the
/// greedy pivot). Stops early when `visit` breaks.
pub fn visit_maximal_cliques<F>(g: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    expand(g.rows(), VertexSet::empty(), g.vertices(), VertexSet::empty(), &mut visit)
}

/// Same as [`visit_maximal_cliques`] on the complement, without building it.
pub fn visit_maximal_stable_sets<F>(g: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    let n = g.order();
    let rows: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).complement(n).without(v)).collect();
    expand(&rows, VertexSet::empty(), g.vertices(), VertexSet::empty(), &mut visit)
}

fn expand<F>(adj: &[VertexSet], r: VertexSet, mut p: VertexSet, mut x: VertexSet, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    if p.is_empty() {
        if x.is_empty() {
            return visit(r);
        }
        return ControlFlow::Continue(());
    }
    // pivot maximizes |P ∩ N(u)| over P ∪ X; lowest index on ties
    let mut pivot = 0;
    let mut best = None;
    for u in p.union(x).iter() {
        let c = p.intersection(adj[u]).len();
        if best.is_none_or(|b| c > b) {
            best = Some(c);
            pivot = u;
        }
    }
    for v in p.difference(adj[pivot]).iter() {
        expand(adj, r.with(v), p.intersection(adj[v]), x.intersection(adj[v]), visit)?;
        p.remove(v);
        x.insert(v);
    }
    ControlFlow::Continue(())
}

fn collect(
    kind: FamilyKind,
    limit: usize,
    run: impl FnOnce(&mut dyn FnMut(VertexSet) -> ControlFlow<()>) -> ControlFlow<()>,
) -> MaximalFamily {
    let mut members = Vec::new();
    let mut truncated = false;
    let _ = run(&mut |s| {
        if members.len() == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        members.push(s);
        ControlFlow::Continue(())
    });
    members.sort_unstable();
    MaximalFamily { members, kind, truncated }
}

pub fn maximal_cliques(g: &Graph, limit: usize) -> MaximalFamily {
    collect(FamilyKind::Cliques, limit, |f| visit_maximal_cliques(g, f))
}

pub fn maximal_stable_sets(g: &Graph, limit: usize) -> MaximalFamily {
    collect(FamilyKind::StableSets, limit, |f| visit_maximal_stable_sets(g, f))
}

/// Clique number by branch and bound; independent of the maximal-family
/// machinery and cheap enough for inner loops.
pub fn clique_number(g: &Graph) -> usize {
    fn grow(adj: &[VertexSet], size: usize, mut p: VertexSet, best: &mut usize) {
        if p.is_empty() {
            *best = (*best).max(size);
            return;
        }
        while let Some(v) = p.first() {
            if size + p.len() <= *best {
                return;
            }
            grow(adj, size + 1, p.intersection(adj[v]), best);
            p.remove(v);
        }
    }
    let mut best = 0;
    grow(g.rows(), 0, g.vertices(), &mut best);
    best
}

pub fn stability_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| (v - u) == 1 || (v - u) == n - 1).unwrap()
    }

    fn naive_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
        let n = g.order();
        let mut out = Vec::new();
        for bits in 1u128..(1u128 << n) {
            let s = VertexSet::from_bits(bits);
            if g.is_clique(s) && (0..n).filter(|&v| !s.contains(v)).all(|v| !g.is_clique(s.with(v))) {
                out.push(s);
            }
        }
        out
    }

    #[test]
    fn examples() {
        let c5 = cycle(5);
        let f = maximal_cliques(&c5, 100);
        assert_eq!(f.len(), 5);
        assert!(f.members.iter().all(|s| s.len() == 2));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(maximal_cliques(&k4, 100).members, vec![VertexSet::full(4)]);
        let stable = maximal_stable_sets(&k4, 100);
        assert_eq!(stable.len(), 4);
        assert!(stable.members.iter().all(|s| s.len() == 1));
        let k23 = Graph::from_fn(5, |u, v| (u < 2) != (v < 2)).unwrap();
        let s = maximal_stable_sets(&k23, 100);
        assert_eq!(s.members, vec![VertexSet::full(2), VertexSet::full(5).difference(VertexSet::full(2))]);
    }

    #[test]
    fn truncation_is_reported() {
        let g = Graph::empty(6).unwrap();
        let f = maximal_cliques(&g, 3);
        assert!(f.truncated);
        assert_eq!(f.len(), 3);
        let f = maximal_cliques(&g, 6);
        assert!(!f.truncated);
    }

    #[test]
    fn matches_naive_oracle() {
        // deterministic pseudo-random graphs up to 10 vertices
        let mut state = 0x9e3779b97f4a7c15u64;
        for n in 1..=10 {
            for _ in 0..20 {
                let g = Graph::from_fn(n, |_, _| {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    !state.is_multiple_of(3)
                })
                .unwrap();
                let fam = maximal_cliques(&g, usize::MAX);
                assert_eq!(fam.members, naive_maximal_cliques(&g));
                assert_eq!(clique_number(&g), fam.max_size());
                let stable = maximal_stable_sets(&g, usize::MAX);
                assert_eq!(stable.members, maximal_cliques(&g.complement(), usize::MAX).members);
            }
        }
    }
}
