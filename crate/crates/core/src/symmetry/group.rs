use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigUint;

use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Default cap on the number of elements [`PermutationGroup::materialize`]
/// will produce.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A permutation group given by generators, with its orbit partition. The
/// stabilizer chain behind order and membership queries is built on first use.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    orbits: Vec<VertexSet>,
    chain: OnceLock<StabilizerChain>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Self {
        assert!(generators.iter().all(|g| g.degree() == degree), "generator degree mismatch");
        let orbits = orbit_partition(degree, &generators);
        PermutationGroup { degree, generators, orbits, chain: OnceLock::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| StabilizerChain::build(self.degree, &self.generators))
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Orbits, each a vertex set, ordered by least member.
    pub fn orbits(&self) -> &[VertexSet] {
        &self.orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits.len() == 1
    }

    /// Group order as the product of basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order if it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(self.order()).ok()
    }

    /// Order of the stabilizer of `v`, by orbit–stabilizer.
    pub fn stabilizer_order(&self, v: usize) -> BigUint {
        let orbit = self.orbits.iter().find(|o| o.contains(v)).expect("every point has an orbit");
        self.order() / BigUint::from(orbit.len())
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.chain().contains(p)
    }

    /// Every element of the group, sorted; refuses groups larger than `cap`.
    pub fn materialize(&self, cap: usize) -> Result<Vec<Permutation>> {
        if self.order() > BigUint::from(cap) {
            return Err(Error::GroupTooLarge(cap));
        }
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = p.then(g);
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let mut out: Vec<Permutation> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }
}

pub(crate) fn orbit_partition(n: usize, generators: &[Permutation]) -> Vec<VertexSet> {
    let mut seen = VertexSet::empty();
    let mut out = Vec::new();
    for v in 0..n {
        if seen.contains(v) {
            continue;
        }
        let mut orbit = VertexSet::singleton(v);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for g in generators {
                let y = g.image(x);
                if !orbit.contains(y) {
                    orbit.insert(y);
                    stack.push(y);
                }
            }
        }
        seen = seen.union(orbit);
        out.push(orbit);
    }
    out
}

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    generators: Vec<Permutation>,
    /// `transversal[p]` maps `base` to `p`, for `p` in the basic orbit.
    transversal: Vec<Option<Permutation>>,
    /// `checked[s]`: orbit points whose Schreier generator for generator `s`
    /// is known to sift. Stays valid as the chain grows.
    checked: Vec<VertexSet>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[base] = Some(Permutation::identity(n));
        Level { base, generators: Vec::new(), transversal, checked: Vec::new() }
    }

    fn rebuild_orbit(&mut self) {
        let n = self.transversal.len();
        let mut queue = VecDeque::new();
        for p in 0..n {
            if self.transversal[p].is_some() {
                queue.push_back(p);
            }
        }
        while let Some(p) = queue.pop_front() {
            for s in &self.generators {
                let q = s.image(p);
                if self.transversal[q].is_none() {
                    let u = self.transversal[p].as_ref().unwrap().then(s);
                    self.transversal[q] = Some(u);
                    queue.push_back(q);
                }
            }
        }
    }

    fn orbit_len(&self) -> usize {
        self.transversal.iter().filter(|t| t.is_some()).count()
    }
}

/// Deterministic Schreier–Sims stabilizer chain.
#[derive(Debug, Clone)]
struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain { degree, levels: Vec::new() };
        for g in generators {
            if let Some((level, residue)) = chain.sift(g, 0) {
                chain.extend(level, residue);
            }
        }
        chain
    }

    /// Strips `p` through the chain from `start`; returns the level and
    /// residue where it could not be stripped further, or `None` if it
    /// reduced to the identity.
    fn sift(&self, p: &Permutation, start: usize) -> Option<(usize, Permutation)> {
        let mut h = p.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let img = h.image(level.base);
            match &level.transversal[img] {
                Some(u) => h = h.then(&u.inverse()),
                None => return Some((i, h)),
            }
        }
        if h.is_identity() {
            None
        } else {
            Some((self.levels.len(), h))
        }
    }

    /// Adds `g` (which fixes the bases of levels `< i`) as a strong generator
    /// of levels `0..=i`, then restores the Schreier property.
    fn extend(&mut self, i: usize, g: Permutation) {
        if i == self.levels.len() {
            let base = g.first_moved().expect("residue is not the identity");
            self.levels.push(Level::new(base, self.degree));
        }
        for level in &mut self.levels[..=i] {
            level.generators.push(g.clone());
            level.checked.push(VertexSet::empty());
            level.rebuild_orbit();
        }
        for j in (0..=i).rev() {
            while let Some((level, residue)) = self.failing_schreier_generator(j) {
                self.extend(level, residue);
            }
        }
    }

    fn failing_schreier_generator(&mut self, i: usize) -> Option<(usize, Permutation)> {
        for si in 0..self.levels[i].generators.len() {
            for p in 0..self.degree {
                let level = &self.levels[i];
                if level.checked[si].contains(p) {
                    continue;
                }
                let Some(up) = &level.transversal[p] else { continue };
                let s = &level.generators[si];
                let uq = level.transversal[s.image(p)].as_ref().unwrap();
                let schreier = up.then(s).then(&uq.inverse());
                if let Some(found) = self.sift(&schreier, i + 1) {
                    return Some(found);
                }
                self.levels[i].checked[si].insert(p);
            }
        }
        None
    }

    fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit_len()))
    }

    fn contains(&self, p: &Permutation) -> bool {
        self.sift(p, 0).is_none()
    }
}
