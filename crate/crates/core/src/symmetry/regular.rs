use std::collections::{HashMap, HashSet, VecDeque};

use super::group::PermutationGroup;
use super::perm::Permutation;
use crate::error::Result;

/// Searches for a subgroup of `group` acting regularly on its points.
///
/// The group is materialized (refusing beyond `cap`); the search then grows
/// semiregular subgroups one generator at a time, always adding an element
/// that carries point 0 to the least point not yet reached. Every
/// non-identity element of a regular subgroup is fixed-point-free, so only
/// those are candidates.
pub fn find_regular_subgroup(group: &PermutationGroup, cap: usize) -> Result<Option<Vec<Permutation>>> {
    let n = group.degree();
    if !group.is_transitive() {
        return Ok(None);
    }
    let elements = group.materialize(cap)?;
    let mut by_image: HashMap<usize, Vec<&Permutation>> = HashMap::new();
    for p in elements.iter().filter(|p| !p.has_fixed_point()) {
        by_image.entry(p.image(0)).or_default().push(p);
    }
    let id = Permutation::identity(n);
    let mut subgroup: HashSet<Permutation> = HashSet::from([id]);
    let mut gens = Vec::new();
    if extend(n, &by_image, &mut subgroup, &mut gens) {
        Ok(Some(gens))
    } else {
        Ok(None)
    }
}

fn extend(
    n: usize,
    by_image: &HashMap<usize, Vec<&Permutation>>,
    subgroup: &mut HashSet<Permutation>,
    gens: &mut Vec<Permutation>,
) -> bool {
    if subgroup.len() == n {
        return true;
    }
    let reached: HashSet<usize> = subgroup.iter().map(|p| p.image(0)).collect();
    let target = (0..n).find(|p| !reached.contains(p)).expect("semiregular subgroup smaller than n misses a point");
    let Some(candidates) = by_image.get(&target) else {
        return false;
    };
    for &g in candidates {
        if let Some(bigger) = close_semiregular(n, subgroup, gens, g) {
            let saved = std::mem::replace(subgroup, bigger);
            gens.push(g.clone());
            if extend(n, by_image, subgroup, gens) {
                return true;
            }
            gens.pop();
            *subgroup = saved;
        }
    }
    false
}

/// `<gens, g>` if it has at most `n` elements and every non-identity
/// element is fixed-point-free.
fn close_semiregular(
    n: usize,
    current: &HashSet<Permutation>,
    gens: &[Permutation],
    g: &Permutation,
) -> Option<HashSet<Permutation>> {
    let mut all_gens: Vec<&Permutation> = gens.iter().collect();
    all_gens.push(g);
    let mut elems = current.clone();
    let mut queue: VecDeque<Permutation> = current.iter().cloned().collect();
    while let Some(p) = queue.pop_front() {
        for s in &all_gens {
            let q = p.then(s);
            if !elems.contains(&q) {
                if !q.is_identity() && q.has_fixed_point() {
                    return None;
                }
                elems.insert(q.clone());
                if elems.len() > n {
                    return None;
                }
                queue.push_back(q);
            }
        }
    }
    Some(elems)
}

/// True iff `gens` generate a group of order `n` acting regularly on
/// `0..n`: transitive with all point stabilizers trivial.
pub fn is_regular(n: usize, gens: &[Permutation]) -> bool {
    let group = PermutationGroup::new(n, gens.to_vec());
    if !group.is_transitive() || group.order_u64() != Some(n as u64) {
        return false;
    }
    group.materialize(n).map(|elems| elems.iter().all(|p| p.is_identity() || !p.has_fixed_point())).unwrap_or(false)
}
