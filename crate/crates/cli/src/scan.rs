//! Catalog scanning: vertex-transitivity and CIS for every graph6 line, with
//! optional membership checks against the closure of the base family.

use std::collections::{BTreeSet, HashMap};

use cisgraph::families::{closure_members, MAX_CLOSURE_ORDER};
use cisgraph::graph::decode_graph6;
use cisgraph::symmetry::canonical_form;

use crate::context::Context;
use crate::error::Result;
use crate::report::{Extras, Report};
use crate::suite::SuiteResult;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanOptions {
    pub closure_check: bool,
    /// Report every graph, not just the vertex-transitive CIS ones.
    pub all: bool,
}

#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub reports: Vec<Report>,
    pub suite: SuiteResult,
    /// Skipped lines and per-graph failures, one message each.
    pub log: Vec<String>,
}

pub fn scan_catalog(text: &str, ctx: &Context, options: ScanOptions) -> Result<ScanOutcome> {
    let mut out = ScanOutcome { reports: Vec::new(), suite: SuiteResult::new("scan"), log: Vec::new() };
    let mut closures: HashMap<usize, BTreeSet<String>> = HashMap::new();
    let (mut graphs, mut vt_cis) = (0, 0);
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = match decode_graph6(line.as_bytes()) {
            Ok(g) => g,
            Err(e) => {
                out.log.push(format!("line {}: skipped: {e}", i + 1));
                continue;
            }
        };
        graphs += 1;
        let id = format!("line{}", i + 1);
        let report = Report::compute(&id, &g, &ctx.settings, Extras { chromatic: false, symmetry: true })?;
        if report.is_incomplete() {
            out.log.push(format!("line {}: incomplete: {}", i + 1, report.errors.join("; ")));
        }
        let hit = report.cis == Some(true) && report.vertex_transitive == Some(true);
        if hit {
            vt_cis += 1;
            if options.closure_check {
                let n = g.order();
                if n > MAX_CLOSURE_ORDER {
                    out.log.push(format!("line {}: closure check skipped for order {n}", i + 1));
                } else {
                    if let std::collections::hash_map::Entry::Vacant(e) = closures.entry(n) {
                        let members = closure_members(n, usize::MAX, ctx.settings.budget)?;
                        let forms = members
                            .iter()
                            .map(|m| canonical_form(m, ctx.settings.budget))
                            .collect::<cisgraph::Result<BTreeSet<String>>>()?;
                        e.insert(forms);
                    }
                    let form = canonical_form(&g, ctx.settings.budget)?;
                    let member = closures[&n].contains(&form);
                    out.suite.check(&g, member, || format!("{id}: vertex-transitive CIS graph outside the closure"));
                }
            }
        }
        if hit || options.all {
            out.reports.push(report);
        }
    }
    out.suite.note(format!("graphs={graphs} vertex_transitive_cis={vt_cis} skipped={}", out.log.len()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Settings;
    use cisgraph::families;
    use cisgraph::graph::encode_graph6;

    #[test]
    fn q_catalog_is_in_the_closure() {
        let ctx = Context::new(Settings::default());
        let text: String = (4..=8).map(|n| encode_graph6(&families::q_graph(n).unwrap()) + "\n").collect();
        let out = scan_catalog(&text, &ctx, ScanOptions { closure_check: true, all: false }).unwrap();
        assert_eq!(out.reports.len(), 5);
        assert_eq!((out.suite.run, out.suite.passed), (5, 5));
        assert!(out.log.is_empty());
    }

    #[test]
    fn non_cis_graphs_are_filtered_and_bad_lines_skipped() {
        let ctx = Context::new(Settings::default());
        let c6 = encode_graph6(&families::cycle(6).unwrap());
        let text = format!(">>graph6<<C~\n# comment\n{c6}\nnot-a-graph\n");
        let out = scan_catalog(&text, &ctx, ScanOptions::default()).unwrap();
        assert_eq!(out.reports.len(), 1);
        assert_eq!(out.reports[0].graph6, "C~");
        assert_eq!(out.log.len(), 1);
        assert!(out.log[0].starts_with("line 4: skipped"));
        let all = scan_catalog(&text, &ctx, ScanOptions { closure_check: false, all: true }).unwrap();
        assert_eq!(all.reports[1].cis, Some(false));
    }

    #[test]
    fn empty_catalog_passes() {
        let ctx = Context::new(Settings::default());
        let out = scan_catalog("", &ctx, ScanOptions { closure_check: true, all: false }).unwrap();
        assert!(out.reports.is_empty() && out.suite.is_pass() && out.suite.run == 0);
    }
}
