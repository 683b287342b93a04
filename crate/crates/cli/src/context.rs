//! Run-wide settings and the lazily built table of small isomorphism classes
//! that several suites share.

use std::sync::OnceLock;

use cisgraph::enumeration::{CliqueStructure, DEFAULT_LIMIT};
use cisgraph::small::{isomorphism_classes, MAX_EXHAUSTIVE_ORDER};
use cisgraph::symmetry::DEFAULT_BUDGET;
use cisgraph::Graph;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    /// Cap on maximal sets per enumeration.
    pub limit: usize,
    /// Node budget per symmetry search.
    pub budget: u64,
    pub seed: u64,
    /// Allows exhaustive work at order 8.
    pub long: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { limit: DEFAULT_LIMIT, budget: DEFAULT_BUDGET, seed: 0, long: false }
    }
}

/// One isomorphism class together with its maximal cliques and stable sets.
#[derive(Debug, Clone)]
pub struct SmallGraph {
    pub graph: Graph,
    pub structure: CliqueStructure,
}

impl SmallGraph {
    pub fn is_cis(&self) -> bool {
        self.structure.cis().is_cis
    }
}

pub struct Context {
    pub settings: Settings,
    classes: Vec<OnceLock<Vec<SmallGraph>>>,
}

impl Context {
    pub fn new(settings: Settings) -> Self {
        Context { settings, classes: (0..=MAX_EXHAUSTIVE_ORDER).map(|_| OnceLock::new()).collect() }
    }

    /// Largest order the exhaustive suites cover.
    pub fn exhaustive_order(&self) -> usize {
        if self.settings.long {
            8
        } else {
            7
        }
    }

    /// All isomorphism classes of order `n`, computed once per context.
    pub fn classes(&self, n: usize) -> Result<&[SmallGraph]> {
        if let Some(done) = self.classes.get(n).and_then(|c| c.get()) {
            return Ok(done);
        }
        let graphs = isomorphism_classes(n, |_| true, self.settings.budget)?;
        let mut out = Vec::with_capacity(graphs.len());
        for graph in graphs {
            let structure = CliqueStructure::compute(&graph, self.settings.limit)?;
            out.push(SmallGraph { graph, structure });
        }
        Ok(self.classes[n].get_or_init(|| out))
    }

    /// Classes of every order from 1 to [`Context::exhaustive_order`].
    pub fn all_classes(&self) -> Result<Vec<&SmallGraph>> {
        let mut out = Vec::new();
        for n in 1..=self.exhaustive_order() {
            out.extend(self.classes(n)?);
        }
        Ok(out)
    }
}
