//! Predicate expressions for `enumerate`: named atoms joined by `&` (or `∧`),
//! each optionally negated with `!` (or `¬`).
//!
//! Atoms: `true`, `connected`, `co-connected`, `regular`, `irreducible`,
//! `co-irreducible`, `cis`, `well-covered`, `co-well-covered`,
//! `vertex-transitive`, `universal-vertex`, `p4`, `no-near-cliques` (no two
//! maximum cliques share all but one vertex), `complete-bipartite`, and
//! comparisons `alpha`, `omega`, `edges` with `=`, `<=`, `>=`, `<`, `>`
//! against an integer.

use std::sync::OnceLock;

use cisgraph::checks::{clique_intersection_violation, is_complete_bipartite};
use cisgraph::enumeration::{p4_property, CliqueStructure};
use cisgraph::reduction::is_irreducible;
use cisgraph::symmetry::transitivity;
use cisgraph::Graph;

use crate::context::Settings;
use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    True,
    Connected,
    CoConnected,
    Regular,
    Irreducible,
    CoIrreducible,
    Cis,
    WellCovered,
    CoWellCovered,
    VertexTransitive,
    UniversalVertex,
    P4,
    NoNearCliques,
    CompleteBipartite,
    Compare(Quantity, Cmp, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Alpha,
    Omega,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Eq,
    Le,
    Ge,
    Lt,
    Gt,
}

impl Cmp {
    fn apply(self, a: usize, b: usize) -> bool {
        match self {
            Cmp::Eq => a == b,
            Cmp::Le => a <= b,
            Cmp::Ge => a >= b,
            Cmp::Lt => a < b,
            Cmp::Gt => a > b,
        }
    }
}

/// Conjunction of possibly negated atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicate {
    pub terms: Vec<(bool, Atom)>,
}

fn parse_atom(text: &str) -> Result<Atom> {
    let named = match text {
        "true" => Some(Atom::True),
        "connected" => Some(Atom::Connected),
        "co-connected" => Some(Atom::CoConnected),
        "regular" => Some(Atom::Regular),
        "irreducible" => Some(Atom::Irreducible),
        "co-irreducible" => Some(Atom::CoIrreducible),
        "cis" => Some(Atom::Cis),
        "well-covered" => Some(Atom::WellCovered),
        "co-well-covered" => Some(Atom::CoWellCovered),
        "vertex-transitive" | "vt" => Some(Atom::VertexTransitive),
        "universal-vertex" => Some(Atom::UniversalVertex),
        "p4" => Some(Atom::P4),
        "no-near-cliques" => Some(Atom::NoNearCliques),
        "complete-bipartite" => Some(Atom::CompleteBipartite),
        _ => None,
    };
    if let Some(atom) = named {
        return Ok(atom);
    }
    for (op, cmp) in [("<=", Cmp::Le), (">=", Cmp::Ge), ("=", Cmp::Eq), ("<", Cmp::Lt), (">", Cmp::Gt)] {
        if let Some((lhs, rhs)) = text.split_once(op) {
            let q = match lhs.trim() {
                "alpha" | "α" => Quantity::Alpha,
                "omega" | "ω" => Quantity::Omega,
                "edges" => Quantity::Edges,
                other => return Err(CliError::Input(format!("unknown quantity {other:?}"))),
            };
            let v = rhs.trim().parse().map_err(|_| CliError::Input(format!("not a number: {rhs:?}")))?;
            return Ok(Atom::Compare(q, cmp, v));
        }
    }
    Err(CliError::Input(format!("unknown predicate {text:?}")))
}

impl std::str::FromStr for Predicate {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Predicate> {
        let mut terms = Vec::new();
        for part in text.split(['&', '∧']) {
            let part = part.trim();
            let (negated, rest) = match part.strip_prefix('!').or_else(|| part.strip_prefix('¬')) {
                Some(rest) => (true, rest.trim()),
                None => (false, part),
            };
            if rest.is_empty() {
                return Err(CliError::Input(format!("empty term in {text:?}")));
            }
            terms.push((negated, parse_atom(rest)?));
        }
        Ok(Predicate { terms })
    }
}

impl Predicate {
    /// Evaluates left to right, stopping at the first false term; the clique
    /// structure is computed at most once.
    pub fn eval(&self, g: &Graph, settings: &Settings) -> Result<bool> {
        let cell: OnceLock<CliqueStructure> = OnceLock::new();
        let structure = || -> Result<&CliqueStructure> {
            if let Some(s) = cell.get() {
                return Ok(s);
            }
            let s = CliqueStructure::compute(g, settings.limit)?;
            Ok(cell.get_or_init(|| s))
        };
        for &(negated, atom) in &self.terms {
            let value = match atom {
                Atom::True => true,
                Atom::Connected => g.is_connected(),
                Atom::CoConnected => g.complement().is_connected(),
                Atom::Regular => g.profile().is_regular(),
                Atom::Irreducible => is_irreducible(g),
                Atom::CoIrreducible => is_irreducible(&g.complement()),
                Atom::Cis => structure()?.cis().is_cis,
                Atom::WellCovered => structure()?.well_covered().holds,
                Atom::CoWellCovered => structure()?.co_well_covered().holds,
                Atom::VertexTransitive => transitivity(g, settings.budget)?.is_vertex_transitive,
                Atom::UniversalVertex => g.has_universal_vertex(),
                Atom::P4 => p4_property(g).holds,
                Atom::NoNearCliques => clique_intersection_violation(structure()?).is_none(),
                Atom::CompleteBipartite => is_complete_bipartite(g),
                Atom::Compare(q, cmp, v) => {
                    let x = match q {
                        Quantity::Alpha => structure()?.alpha(),
                        Quantity::Omega => structure()?.omega(),
                        Quantity::Edges => g.edge_count(),
                    };
                    cmp.apply(x, v)
                }
            };
            if value == negated {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
