//! Automorphism groups, canonical forms, vertex-transitivity and Cayley
//! recognition.

mod group;
mod perm;
mod regular;
mod search;

pub use group::{PermutationGroup, DEFAULT_GROUP_CAP};
pub use perm::Permutation;
pub use regular::{find_regular_subgroup, is_regular};

use crate::enumeration::CisCertificate;
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph, VertexSet};

/// Default node budget for one individualization–refinement search.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

pub fn automorphism_group(g: &Graph, budget: u64) -> Result<PermutationGroup> {
    let outcome = search::run(g, budget)?;
    Ok(PermutationGroup::new(g.order(), outcome.generators))
}

/// Label-invariant graph6 string: isomorphic graphs, and only those, share it.
pub fn canonical_form(g: &Graph, budget: u64) -> Result<String> {
    let outcome = search::run(g, budget)?;
    Ok(encode_graph6(&g.relabel(&outcome.labeling)))
}

/// Canonical form together with the automorphism group, from one search.
pub fn canonical_form_and_group(g: &Graph, budget: u64) -> Result<(String, PermutationGroup)> {
    let outcome = search::run(g, budget)?;
    let form = encode_graph6(&g.relabel(&outcome.labeling));
    Ok((form, PermutationGroup::new(g.order(), outcome.generators)))
}

pub fn are_isomorphic(a: &Graph, b: &Graph, budget: u64) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da = a.profile().degrees;
    let mut db = b.profile().degrees;
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a, budget)? == canonical_form(b, budget)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transitivity {
    pub is_vertex_transitive: bool,
    pub orbits: Vec<VertexSet>,
}

pub fn transitivity(g: &Graph, budget: u64) -> Result<Transitivity> {
    let group = automorphism_group(g, budget)?;
    Ok(Transitivity { is_vertex_transitive: group.is_transitive(), orbits: group.orbits().to_vec() })
}

/// CIS test for vertex-transitive graphs: CIS iff well-covered,
/// co-well-covered and `alpha * omega == n`. No pairwise intersection of the
/// two families is performed, so a negative verdict carries no witness.
pub fn vt_cis_check(g: &Graph, limit: usize, budget: u64) -> Result<CisCertificate> {
    if !transitivity(g, budget)?.is_vertex_transitive {
        return Err(Error::NotVertexTransitive);
    }
    let wc = crate::enumeration::is_well_covered(g, limit)?;
    if !wc.holds {
        return Ok(CisCertificate { is_cis: false, witness: None });
    }
    let cwc = crate::enumeration::is_co_well_covered(g, limit)?;
    if !cwc.holds {
        return Ok(CisCertificate { is_cis: false, witness: None });
    }
    let alpha = crate::enumeration::stability_number(g);
    let omega = crate::enumeration::clique_number(g);
    Ok(CisCertificate { is_cis: alpha * omega == g.order(), witness: None })
}
