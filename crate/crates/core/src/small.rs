//! Exhaustive enumeration of small labeled graphs with isomorphism
//! deduplication.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{decode_graph6, Graph, VertexSet};
use crate::symmetry::canonical_form;

/// Largest order [`isomorphism_classes`] accepts (`2^28` labeled graphs).
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;

/// The labeled graph whose `k`-th upper-triangle cell, in the column-major
/// order `(0,1), (0,2), (1,2), (0,3), ...`, is bit `k` of `mask`.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut adj = vec![VertexSet::empty(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (mask >> k) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Graph::from_rows_unchecked(adj)
}

/// One canonical representative per isomorphism class among all labeled
/// graphs on `n` vertices that pass `filter`, sorted by canonical form.
///
/// `filter` must be isomorphism-invariant; it runs on every labeled graph
/// before canonicalization, so cheap tests belong there.
pub fn isomorphism_classes<F>(n: usize, filter: F, budget: u64) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let cells = n * (n - 1) / 2;
    let forms = (0..1u64 << cells)
        .into_par_iter()
        .try_fold(HashSet::new, |mut acc, mask| {
            let g = labeled_graph(n, mask);
            if filter(&g) {
                acc.insert(canonical_form(&g, budget)?);
            }
            Ok::<_, Error>(acc)
        })
        .try_reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            Ok(a)
        })?;
    let mut forms: Vec<String> = forms.into_iter().collect();
    forms.sort();
    Ok(forms.iter().map(|f| decode_graph6(f.as_bytes()).expect("canonical forms are valid graph6")).collect())
}
