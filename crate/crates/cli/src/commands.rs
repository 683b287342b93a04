//! Graph-producing commands shared by the binary and the tests.

use std::sync::Mutex;

use cisgraph::graph::{encode_graph6, write_edge_list};
use cisgraph::small::isomorphism_classes;
use cisgraph::Graph;
use serde_json::json;

use crate::context::Context;
use crate::error::{CliError, Result};
use crate::predicate::Predicate;

/// Output encodings for graphs and records.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Graph6,
    Edges,
    Jsonl,
}

impl std::str::FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "g6" => Ok(Format::Graph6),
            "edges" => Ok(Format::Edges),
            "jsonl" => Ok(Format::Jsonl),
            _ => Err(CliError::Input(format!("unknown format {s:?}; expected g6, edges or jsonl"))),
        }
    }
}

/// One graph in the chosen encoding, newline-terminated (edge lists are
/// followed by a blank line).
pub fn render_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => encode_graph6(g) + "\n",
        Format::Edges => write_edge_list(g) + "\n",
        Format::Jsonl => json!({"graph6": encode_graph6(g), "order": g.order(), "edges": g.edges()}).to_string() + "\n",
    }
}

/// Isomorphism classes of order `n` satisfying `predicate`, as canonical
/// representatives sorted by canonical form.
pub fn enumerate(n: usize, predicate: &Predicate, ctx: &Context) -> Result<Vec<Graph>> {
    if n > ctx.exhaustive_order() {
        return Err(cisgraph::Error::OrderTooLarge(n).into());
    }
    let failure: Mutex<Option<CliError>> = Mutex::new(None);
    let classes = isomorphism_classes(
        n,
        |g| match predicate.eval(g, &ctx.settings) {
            Ok(v) => v,
            Err(e) => {
                failure.lock().expect("lock").get_or_insert(e);
                false
            }
        },
        ctx.settings.budget,
    )?;
    match failure.into_inner().expect("lock") {
        Some(e) => Err(e),
        None => Ok(classes),
    }
}
