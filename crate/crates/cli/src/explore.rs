//! Scans around the open questions. A finding is reported as a
//! counterexample; an empty scan is evidence within its bounds, nothing more.

use std::ops::RangeInclusive;

use cisgraph::enumeration::chromatic_number;
use cisgraph::families;
use cisgraph::reduction::is_irreducible;
use cisgraph::symmetry::transitivity;

use crate::context::Context;
use crate::error::{CliError, Result};
use crate::suite::SuiteResult;

fn check_order(ctx: &Context, max: usize) -> Result<()> {
    if max > ctx.exhaustive_order() {
        return Err(cisgraph::Error::OrderTooLarge(max).into());
    }
    Ok(())
}

/// CIS graphs of order at most `max` with `alpha * omega < n`.
pub fn q1(ctx: &Context, max: usize) -> Result<SuiteResult> {
    check_order(ctx, max)?;
    let mut r = SuiteResult::new("q1");
    for n in 1..=max {
        for c in ctx.classes(n)?.iter().filter(|c| c.is_cis()) {
            let (a, w) = (c.structure.alpha(), c.structure.omega());
            r.check(&c.graph, a * w >= n, || format!("alpha={a} omega={w} n={n}"));
        }
    }
    r.note(format!("cis_graphs_scanned={} orders=1..{max}", r.run));
    Ok(r)
}

/// Chromatic number against clique number for `Q_n`, `n` in `range`.
pub fn q2(range: RangeInclusive<usize>) -> Result<SuiteResult> {
    if *range.start() < 4 {
        return Err(CliError::Input("q2 covers Q_n for n >= 4".into()));
    }
    let mut r = SuiteResult::new("q2");
    for n in range {
        let g = families::q_graph(n)?;
        let chi = chromatic_number(&g)?;
        let omega = cisgraph::enumeration::clique_number(&g);
        r.check(&g, chi == omega, || format!("Q:{n} chi={chi} omega={omega}"));
        r.note(format!("Q:{n} chi={chi} omega={omega}"));
    }
    Ok(r)
}

/// Regular, connected, co-connected, well-covered and co-well-covered,
/// irreducible and co-irreducible CIS graphs that are not vertex-transitive.
pub fn q3(ctx: &Context, max: usize) -> Result<SuiteResult> {
    check_order(ctx, max)?;
    let mut r = SuiteResult::new("q3");
    for n in 1..=max {
        for c in ctx.classes(n)? {
            let (g, s) = (&c.graph, &c.structure);
            let co = g.complement();
            let candidate = c.is_cis()
                && g.profile().is_regular()
                && g.is_connected()
                && co.is_connected()
                && s.well_covered().holds
                && s.co_well_covered().holds
                && is_irreducible(g)
                && is_irreducible(&co);
            if candidate {
                let vt = transitivity(g, ctx.settings.budget)?.is_vertex_transitive;
                r.check(g, vt, || "qualifies but is not vertex-transitive".into());
            }
        }
    }
    r.note(format!("candidates={} orders=1..{max}", r.run));
    Ok(r)
}
