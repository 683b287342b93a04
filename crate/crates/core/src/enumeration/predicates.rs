use std::collections::BTreeMap;

use super::cliques::{maximal_cliques, maximal_stable_sets, MaximalFamily};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Outcome of a CIS test. A failing verdict carries a disjoint pair
/// (maximal clique, maximal stable set).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CisCertificate {
    pub is_cis: bool,
    pub witness: Option<(VertexSet, VertexSet)>,
}

impl CisCertificate {
    pub fn cis() -> Self {
        CisCertificate { is_cis: true, witness: None }
    }

    /// Re-checks the certificate's witness directly against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match (self.is_cis, self.witness) {
            (true, None) => true,
            (false, Some((c, s))) => is_maximal_clique(g, c) && is_maximal_stable(g, s) && c.is_disjoint(s),
            // a negative verdict from a shortcut criterion may lack a witness
            (false, None) => true,
            (true, Some(_)) => false,
        }
    }
}

/// Outcome of a well-covered (or co-well-covered) test; when the property
/// fails the witness holds two maximal sets of different sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverWitness {
    pub holds: bool,
    pub witness: Option<(VertexSet, VertexSet)>,
}

impl CoverWitness {
    fn from_family(family: &MaximalFamily) -> Self {
        let Some(&first) = family.members.first() else {
            return CoverWitness { holds: true, witness: None };
        };
        match family.members.iter().find(|s| s.len() != first.len()) {
            Some(&other) => CoverWitness { holds: false, witness: Some((first, other)) },
            None => CoverWitness { holds: true, witness: None },
        }
    }
}

pub(crate) fn is_maximal_clique(g: &Graph, c: VertexSet) -> bool {
    !c.is_empty() && g.is_clique(c) && g.common_neighbors(c).is_empty()
}

pub(crate) fn is_maximal_stable(g: &Graph, s: VertexSet) -> bool {
    g.is_stable(s) && g.vertices().difference(s).iter().all(|v| !g.neighbors(v).is_disjoint(s))
}

fn checked(family: MaximalFamily, limit: usize) -> Result<MaximalFamily> {
    if family.truncated {
        Err(Error::EnumerationLimitExceeded(limit))
    } else {
        Ok(family)
    }
}

/// Both maximal families of one graph, enumerated once.
#[derive(Debug, Clone)]
pub struct CliqueStructure {
    pub cliques: MaximalFamily,
    pub stable_sets: MaximalFamily,
}

impl CliqueStructure {
    pub fn compute(g: &Graph, limit: usize) -> Result<Self> {
        let cliques = checked(maximal_cliques(g, limit), limit)?;
        let stable_sets = checked(maximal_stable_sets(g, limit), limit)?;
        Ok(CliqueStructure { cliques, stable_sets })
    }

    pub fn alpha(&self) -> usize {
        self.stable_sets.max_size()
    }

    pub fn omega(&self) -> usize {
        self.cliques.max_size()
    }

    pub fn well_covered(&self) -> CoverWitness {
        CoverWitness::from_family(&self.stable_sets)
    }

    pub fn co_well_covered(&self) -> CoverWitness {
        CoverWitness::from_family(&self.cliques)
    }

    /// First disjoint (clique, stable set) pair in sorted order, if any.
    pub fn cis(&self) -> CisCertificate {
        for &c in &self.cliques.members {
            if let Some(&s) = self.stable_sets.members.iter().find(|s| s.is_disjoint(c)) {
                return CisCertificate { is_cis: false, witness: Some((c, s)) };
            }
        }
        CisCertificate::cis()
    }

    pub fn maximum_cliques(&self) -> impl Iterator<Item = VertexSet> + '_ {
        let omega = self.omega();
        self.cliques.members.iter().copied().filter(move |c| c.len() == omega)
    }
}

pub fn alpha_omega(g: &Graph, limit: usize) -> Result<(usize, usize)> {
    let s = CliqueStructure::compute(g, limit)?;
    Ok((s.alpha(), s.omega()))
}

pub fn is_well_covered(g: &Graph, limit: usize) -> Result<CoverWitness> {
    let family = checked(maximal_stable_sets(g, limit), limit)?;
    Ok(CoverWitness::from_family(&family))
}

pub fn is_co_well_covered(g: &Graph, limit: usize) -> Result<CoverWitness> {
    let family = checked(maximal_cliques(g, limit), limit)?;
    Ok(CoverWitness::from_family(&family))
}

pub fn is_cis(g: &Graph, limit: usize) -> Result<CisCertificate> {
    Ok(CliqueStructure::compute(g, limit)?.cis())
}

fn rho_from(g: &Graph, stable: &MaximalFamily, v: usize) -> usize {
    let nv = g.neighbors(v);
    stable
        .members
        .iter()
        .filter(|s| !s.contains(v))
        .map(|s| s.intersection(nv).len())
        .min()
        .expect("a non-isolated vertex is avoided by some maximal stable set")
}

/// Minimum of `|S ∩ N(v)|` over maximal stable sets `S` avoiding `v`.
pub fn rho_vertex(g: &Graph, v: usize, limit: usize) -> Result<usize> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    if g.degree(v) == 0 {
        return Err(Error::IsolatedVertex(v));
    }
    let stable = checked(maximal_stable_sets(g, limit), limit)?;
    Ok(rho_from(g, &stable, v))
}

/// `rho_vertex` minimized over all non-isolated vertices.
pub fn rho(g: &Graph, limit: usize) -> Result<usize> {
    let active: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    if active.is_empty() {
        return Err(Error::AllVerticesIsolated);
    }
    let stable = checked(maximal_stable_sets(g, limit), limit)?;
    Ok(active.into_iter().map(|v| rho_from(g, &stable, v)).min().unwrap())
}

/// Result of the induced-P4 necessary condition for CIS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P4Check {
    pub holds: bool,
    /// An induced path `a-b-c-d` with no vertex adjacent to `b, c` and to
    /// neither of `a, d`.
    pub failing_path: Option<[usize; 4]>,
}

pub fn p4_property(g: &Graph) -> P4Check {
    for (x, y) in g.edges() {
        for (b, c) in [(x, y), (y, x)] {
            let middle = g.neighbors(b).intersection(g.neighbors(c));
            let ends_a = g.neighbors(b).difference(g.closed_neighbors(c));
            let ends_d = g.neighbors(c).difference(g.closed_neighbors(b));
            for a in ends_a.iter() {
                for d in ends_d.difference(g.neighbors(a)).iter() {
                    let ok = middle.difference(g.neighbors(a)).difference(g.neighbors(d)).is_empty();
                    if ok {
                        return P4Check { holds: false, failing_path: Some([a, b, c, d]) };
                    }
                }
            }
        }
    }
    P4Check { holds: true, failing_path: None }
}

/// Edges contained in at least two distinct maximum cliques.
pub fn red_edges(g: &Graph, limit: usize) -> Result<Vec<(usize, usize)>> {
    let cliques = checked(maximal_cliques(g, limit), limit)?;
    let omega = cliques.max_size();
    let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in cliques.members.iter().filter(|c| c.len() == omega) {
        let verts = c.to_vec();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                *count.entry((u, v)).or_default() += 1;
            }
        }
    }
    Ok(count.into_iter().filter(|&(_, k)| k >= 2).map(|(e, _)| e).collect())
}
