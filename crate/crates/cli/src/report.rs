//! Per-graph property records.

use std::fmt::Write as _;

use cisgraph::enumeration::{chromatic_number, CisCertificate, CliqueStructure, CoverWitness};
use cisgraph::graph::encode_graph6;
use cisgraph::reduction::is_irreducible;
use cisgraph::symmetry::automorphism_group;
use cisgraph::{Graph, VertexSet};
use serde::Serialize;

use crate::context::Settings;
use crate::error::Result;

/// Which of the expensive fields to compute.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Extras {
    pub chromatic: bool,
    pub symmetry: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub id: String,
    pub graph6: String,
    pub order: usize,
    pub edges: usize,
    /// Valency when regular.
    pub valency: Option<usize>,
    pub connected: bool,
    pub irreducible: bool,
    pub alpha: Option<usize>,
    pub omega: Option<usize>,
    pub well_covered: Option<bool>,
    pub co_well_covered: Option<bool>,
    pub cis: Option<bool>,
    pub vertex_transitive: Option<bool>,
    pub automorphisms: Option<String>,
    pub chromatic_number: Option<usize>,
    /// Disjoint maximal clique and maximal stable set.
    pub cis_witness: Option<[Vec<usize>; 2]>,
    /// Two maximal stable sets of different sizes.
    pub well_covered_witness: Option<[Vec<usize>; 2]>,
    /// Two maximal cliques of different sizes.
    pub co_well_covered_witness: Option<[Vec<usize>; 2]>,
    /// Fields that could not be computed, with the reason.
    pub errors: Vec<String>,
}

fn pair(w: Option<(VertexSet, VertexSet)>) -> Option<[Vec<usize>; 2]> {
    w.map(|(a, b)| [a.to_vec(), b.to_vec()])
}

fn cover_pair(w: &CoverWitness, g: &Graph, stable: bool) -> Option<[Vec<usize>; 2]> {
    let (a, b) = w.witness?;
    let ok = |s: VertexSet| if stable { g.is_stable(s) } else { g.is_clique(s) };
    assert!(ok(a) && ok(b) && a.len() != b.len(), "cover witness failed to re-verify");
    pair(w.witness)
}

fn cis_pair(cert: &CisCertificate, g: &Graph) -> Option<[Vec<usize>; 2]> {
    assert!(cert.verify(g), "CIS witness failed to re-verify");
    pair(cert.witness)
}

impl Report {
    pub fn compute(id: &str, g: &Graph, settings: &Settings, extras: Extras) -> Result<Report> {
        let profile = g.profile();
        let mut report = Report {
            id: id.to_string(),
            graph6: encode_graph6(g),
            order: g.order(),
            edges: g.edge_count(),
            valency: profile.valency,
            connected: profile.is_connected,
            irreducible: is_irreducible(g),
            alpha: None,
            omega: None,
            well_covered: None,
            co_well_covered: None,
            cis: None,
            vertex_transitive: None,
            automorphisms: None,
            chromatic_number: None,
            cis_witness: None,
            well_covered_witness: None,
            co_well_covered_witness: None,
            errors: Vec::new(),
        };
        match CliqueStructure::compute(g, settings.limit) {
            Ok(s) => {
                let (wc, cwc, cis) = (s.well_covered(), s.co_well_covered(), s.cis());
                report.alpha = Some(s.alpha());
                report.omega = Some(s.omega());
                report.well_covered = Some(wc.holds);
                report.co_well_covered = Some(cwc.holds);
                report.cis = Some(cis.is_cis);
                report.well_covered_witness = cover_pair(&wc, g, true);
                report.co_well_covered_witness = cover_pair(&cwc, g, false);
                report.cis_witness = cis_pair(&cis, g);
            }
            Err(e) => report.errors.push(format!("cliques: {e}")),
        }
        if extras.symmetry {
            match automorphism_group(g, settings.budget) {
                Ok(group) => {
                    report.vertex_transitive = Some(group.is_transitive());
                    report.automorphisms = Some(group.order().to_string());
                }
                Err(e) => report.errors.push(format!("symmetry: {e}")),
            }
        }
        if extras.chromatic {
            match chromatic_number(g) {
                Ok(chi) => report.chromatic_number = Some(chi),
                Err(e) => report.errors.push(format!("chromatic_number: {e}")),
            }
        }
        Ok(report)
    }

    /// True when some requested field hit a limit or budget.
    pub fn is_incomplete(&self) -> bool {
        !self.errors.is_empty()
    }

    /// `key=value` lines; absent fields are omitted.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k}={v}");
        };
        line("id", self.id.clone());
        line("graph6", self.graph6.clone());
        line("order", self.order.to_string());
        line("edges", self.edges.to_string());
        line("regular", self.valency.is_some().to_string());
        if let Some(k) = self.valency {
            line("valency", k.to_string());
        }
        line("connected", self.connected.to_string());
        line("irreducible", self.irreducible.to_string());
        let opt = |v: Option<String>| v;
        for (k, v) in [
            ("alpha", opt(self.alpha.map(|v| v.to_string()))),
            ("omega", self.omega.map(|v| v.to_string())),
            ("well_covered", self.well_covered.map(|v| v.to_string())),
            ("co_well_covered", self.co_well_covered.map(|v| v.to_string())),
            ("cis", self.cis.map(|v| v.to_string())),
            ("vertex_transitive", self.vertex_transitive.map(|v| v.to_string())),
            ("automorphisms", self.automorphisms.clone()),
            ("chromatic_number", self.chromatic_number.map(|v| v.to_string())),
            ("cis_witness", self.cis_witness.as_ref().map(show_pair)),
            ("well_covered_witness", self.well_covered_witness.as_ref().map(show_pair)),
            ("co_well_covered_witness", self.co_well_covered_witness.as_ref().map(show_pair)),
        ] {
            if let Some(v) = v {
                line(k, v);
            }
        }
        for e in &self.errors {
            line("error", e.clone());
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

fn show_pair(p: &[Vec<usize>; 2]) -> String {
    let set = |s: &Vec<usize>| {
        let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        format!("{{{}}}", items.join(","))
    };
    format!("{} {}", set(&p[0]), set(&p[1]))
}
