use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::canonical_form;

/// Largest order accepted by [`closure_members`].
pub const MAX_CLOSURE_ORDER: usize = 64;

/// Base-family members of exactly order `n`: `K_n`, `L(K_{m,m})` for
/// `m >= 3`, `Q_m` for `m >= 4`, and `R_m`, `S_m` for `m >= 3`.
pub fn closure_seeds(n: usize) -> Result<Vec<Graph>> {
    let mut out = vec![super::complete(n)?];
    let m = (1..=n).find(|m| m * m >= n).unwrap_or(1);
    if m * m == n && m >= 3 {
        out.push(super::rook(m)?);
    }
    if n.is_multiple_of(4) && n / 4 >= 4 {
        out.push(super::q_graph(n / 4)?);
    }
    if n.is_multiple_of(8) && n / 8 >= 3 {
        out.push(super::r_graph(n / 8)?);
        out.push(super::s_graph(n / 8)?);
    }
    Ok(out)
}

/// Isomorphism classes of order `n` in the closure of the base family under
/// complement and lexicographic product, using products of at most
/// `max_factors` factors. Sorted by canonical form.
///
/// Complements distribute over lexicographic products, so every member is a
/// product of seeds and seed complements; only those products are formed.
pub fn closure_members(n: usize, max_factors: usize, budget: u64) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    if n > MAX_CLOSURE_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut memo = HashMap::new();
    let members = build(n, max_factors.max(1), budget, &mut memo)?;
    Ok(members.into_values().collect())
}

type Classes = BTreeMap<String, Graph>;

fn atoms(n: usize, budget: u64) -> Result<Classes> {
    let mut out = Classes::new();
    for seed in closure_seeds(n)? {
        for g in [seed.complement(), seed] {
            out.insert(canonical_form(&g, budget)?, g);
        }
    }
    Ok(out)
}

fn build(n: usize, factors: usize, budget: u64, memo: &mut HashMap<(usize, usize), Classes>) -> Result<Classes> {
    if let Some(hit) = memo.get(&(n, factors)) {
        return Ok(hit.clone());
    }
    let mut out = atoms(n, budget)?;
    if factors > 1 {
        for a in (2..=n / 2).filter(|a| n.is_multiple_of(*a)) {
            let outer = atoms(a, budget)?;
            let inner = build(n / a, factors - 1, budget, memo)?;
            for x in outer.values() {
                for y in inner.values() {
                    let g = x.lexicographic_product(y)?;
                    let form = canonical_form(&g, budget)?;
                    out.entry(form).or_insert(g);
                }
            }
        }
    }
    memo.insert((n, factors), out.clone());
    Ok(out)
}
