//! Graph families: the classical ones, the shift graphs `PX(n)` and their
//! block-completed relatives `Q_n`, the Cayley graphs `R_n` and `S_n` on
//! `Z_{2n} × Z_4`, general Cayley graphs, the closure of the base family
//! under complement and lexicographic product, and the extremal local
//! graphs derived by exhaustive search.

mod closure;
mod group;
mod locals;
mod spec;

pub use closure::{closure_members, closure_seeds, MAX_CLOSURE_ORDER};
pub use group::{cayley_graph, AbelianGroup, ConnectionSet, FiniteGroup, GroupTable};
pub use locals::{derive_extremal_locals, is_extremal_local};
pub use spec::FamilySpec;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn fits(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::BadParameter(format!("{name} requires n >= {min}, got {value}")))
    } else {
        Ok(())
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("K", n, 1)?;
    fits(n)?;
    Graph::complete(n)
}

pub fn empty(n: usize) -> Result<Graph> {
    at_least("E", n, 1)?;
    fits(n)?;
    Graph::empty(n)
}

/// `K_{m,n}` with the `m`-side first.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    at_least("Kmn", m.min(n), 1)?;
    fits(m + n)?;
    Graph::from_fn(m + n, |u, v| (u < m) != (v < m))
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("C", n, 3)?;
    fits(n)?;
    Graph::from_fn(n, |u, v| v - u == 1 || v - u == n - 1)
}

/// `L(K_{n,n})` as the rook's graph: `(i, j)` is vertex `i * n + j`, adjacent
/// iff exactly one coordinate agrees.
pub fn rook(n: usize) -> Result<Graph> {
    at_least("LKnn", n, 1)?;
    fits(n * n)?;
    Graph::from_fn(n * n, |u, v| (u / n == v / n) != (u % n == v % n))
}

/// `PX(n)` on `Z_n × Z_2 × Z_2`: `(i, x, y) ~ (i + 1, y, z)`. Vertex
/// `(i, x, y)` is `4i + 2x + y`.
pub fn px_graph(n: usize) -> Result<Graph> {
    at_least("PX", n, 3)?;
    fits(4 * n)?;
    Graph::from_fn(4 * n, |u, v| shift_adjacent(n, u, v) || shift_adjacent(n, v, u))
}

fn shift_adjacent(n: usize, from: usize, to: usize) -> bool {
    let (i, y) = (from / 4, from % 2);
    let (j, x) = (to / 4, (to / 2) % 2);
    j == (i + 1) % n && x == y
}

/// `Q_n`: `PX(n)` with each block `{(i, ., .)}` made complete.
pub fn q_graph(n: usize) -> Result<Graph> {
    at_least("Q", n, 3)?;
    fits(4 * n)?;
    Graph::from_fn(4 * n, |u, v| u / 4 == v / 4 || shift_adjacent(n, u, v) || shift_adjacent(n, v, u))
}

fn z2n_z4(n: usize) -> Result<AbelianGroup> {
    fits(8 * n)?;
    AbelianGroup::new(&[2 * n, 4])
}

/// Connection set of `R_n` as `(a, b)` pairs in `Z_{2n} × Z_4`.
pub fn r_connection_tuples(n: usize) -> Vec<Vec<usize>> {
    let mut s = vec![vec![0, 1], vec![0, 3], vec![n, 0], vec![n, 2]];
    for i in 0..n {
        s.push(vec![2 * i, 2]);
        s.push(vec![2 * i + 1, 0]);
    }
    s
}

/// Connection set of `S_n` as `(a, b)` pairs in `Z_{2n} × Z_4`.
pub fn s_connection_tuples(n: usize) -> Vec<Vec<usize>> {
    let mut s = vec![vec![0, 1], vec![0, 3]];
    for i in 0..n {
        s.push(vec![2 * i + 1, 0]);
        s.push(vec![2 * i + 1, 1]);
        s.push(vec![2 * i + 1, 3]);
    }
    s
}

/// `R_n`: Cayley graph on `Z_{2n} × Z_4`, vertex `(a, b)` is `4a + b`.
pub fn r_graph(n: usize) -> Result<Graph> {
    at_least("R", n, 2)?;
    let group = z2n_z4(n)?;
    let s = ConnectionSet::from_tuples(&group, &r_connection_tuples(n))?;
    cayley_graph(&group, &s)
}

/// `S_n`: Cayley graph on `Z_{2n} × Z_4`, vertex `(a, b)` is `4a + b`.
pub fn s_graph(n: usize) -> Result<Graph> {
    at_least("S", n, 2)?;
    let group = z2n_z4(n)?;
    let s = ConnectionSet::from_tuples(&group, &s_connection_tuples(n))?;
    cayley_graph(&group, &s)
}
