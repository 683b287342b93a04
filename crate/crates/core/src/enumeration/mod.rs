//! Exact enumeration of maximal cliques and stable sets, and the predicates
//! built on top of them.

mod cliques;
mod coloring;
mod predicates;

pub use cliques::{
    clique_number, maximal_cliques, maximal_stable_sets, stability_number, visit_maximal_cliques,
    visit_maximal_stable_sets, FamilyKind, MaximalFamily,
};
pub use coloring::{chromatic_number, MAX_COLORING_ORDER};
pub use predicates::{
    alpha_omega, is_cis, is_co_well_covered, is_well_covered, p4_property, red_edges, rho, rho_vertex, CisCertificate,
    CliqueStructure, CoverWitness, P4Check,
};

/// Default cap on the number of maximal sets materialized per family.
pub const DEFAULT_LIMIT: usize = 5_000_000;
