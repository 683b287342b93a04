//! Immutable simple graphs on at most [`MAX_ORDER`] vertices and the
//! structural operators the rest of the crate is built from.

mod graph6;
mod vertex_set;

pub use graph6::{decode_graph6, encode_graph6, parse_edge_list, write_edge_list};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Largest supported order: one 128-bit row per vertex.
pub const MAX_ORDER: usize = VertexSet::CAPACITY;

/// A simple undirected graph. `adj[v]` is the open neighborhood of `v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_order(n)?;
        let mut adj = vec![VertexSet::empty(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from neighborhood rows, validating every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        check_order(n)?;
        let full = VertexSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            if let Some(w) = row.difference(full).first() {
                return Err(Error::VertexOutOfRange { vertex: w, order: n });
            }
            if row.contains(v) {
                return Err(Error::LoopEdge(v));
            }
            for w in row.iter() {
                if !adj[w].contains(v) {
                    return Err(Error::EdgeList(format!("asymmetric adjacency between {v} and {w}")));
                }
            }
        }
        Ok(Graph { adj })
    }

    /// Graph on `n` vertices with `u ~ v` iff `adjacent(u, v)`; the predicate
    /// is only consulted for `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        check_order(n)?;
        let mut adj = vec![VertexSet::empty(); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Ok(Graph { adj })
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_ORDER);
        Graph { adj }
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::from_fn(n, |_, _| false)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, row) in self.adj.iter().enumerate() {
            for v in row.iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    pub fn is_stable(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Vertices adjacent to every member of `set` (and outside it).
    pub fn common_neighbors(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(self.vertices(), |acc, v| acc.intersection(self.adj[v])).difference(set)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = self.adj.iter().enumerate().map(|(v, row)| row.complement(n).without(v)).collect();
        Graph { adj }
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.order();
        check_order(shift + other.order())?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| VertexSet::from_bits(row.bits() << shift)));
        Ok(Graph { adj })
    }

    /// `self[other]`: vertex `(u, x)` is `u * |other| + x`, and
    /// `(u, x) ~ (v, y)` iff `u ~ v`, or `u == v` and `x ~ y`.
    pub fn lexicographic_product(&self, other: &Graph) -> Result<Graph> {
        let (a, b) = (self.order(), other.order());
        check_order(a * b)?;
        let block = VertexSet::full(b).bits();
        let mut adj = Vec::with_capacity(a * b);
        for u in 0..a {
            let mut outer = 0u128;
            for v in self.adj[u].iter() {
                outer |= block << (v * b);
            }
            for x in 0..b {
                let inner = other.adj[x].bits() << (u * b);
                adj.push(VertexSet::from_bits(outer | inner));
            }
        }
        Ok(Graph { adj })
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        Graph::from_fn(edges.len(), |i, j| {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            a == c || a == d || b == c || b == d
        })
    }

    /// Subgraph induced on `set`, keeping vertex order.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Graph> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(w) = set.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: w, order: self.order() });
        }
        let verts = set.to_vec();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts.iter().map(|&v| self.adj[v].intersection(set).iter().map(|w| index[w]).collect()).collect();
        Ok(Graph { adj })
    }

    /// The graph induced on `N(v)`.
    pub fn local_graph(&self, v: usize) -> Result<Graph> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.order() });
        }
        if self.adj[v].is_empty() {
            return Err(Error::IsolatedVertex(v));
        }
        self.induced_subgraph(self.adj[v])
    }

    /// `perm[v]` is the new label of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length must equal order");
        let mut adj = vec![VertexSet::empty(); n];
        for v in 0..n {
            adj[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Graph { adj }
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty();
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier.iter().fold(VertexSet::empty(), |acc, v| acc.union(self.adj[v]));
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn profile(&self) -> Profile {
        let degrees: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        let valency = if degrees.windows(2).all(|w| w[0] == w[1]) { Some(degrees[0]) } else { None };
        let components = self.components();
        Profile { is_connected: components.len() == 1, degrees, valency, components }
    }

    pub fn has_universal_vertex(&self) -> bool {
        let n = self.order();
        (0..n).any(|v| self.degree(v) == n - 1)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", encode_graph6(self))
    }
}

/// Degree and connectivity summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub degrees: Vec<usize>,
    /// `Some(k)` iff the graph is `k`-regular.
    pub valency: Option<usize>,
    pub components: Vec<VertexSet>,
    pub is_connected: bool,
}

impl Profile {
    pub fn is_regular(&self) -> bool {
        self.valency.is_some()
    }
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyOrder)
    } else if n > MAX_ORDER {
        Err(Error::OrderTooLarge(n))
    } else {
        Ok(())
    }
}
