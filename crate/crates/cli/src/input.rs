use std::path::Path;

use cisgraph::families::FamilySpec;
use cisgraph::graph::{decode_graph6, parse_edge_list};
use cisgraph::Graph;

use crate::error::{CliError, Result};

/// A graph argument: a family spec such as `Q:5`, a graph6 string, or
/// `@path` naming a file that holds one graph (graph6 or edge list).
pub fn parse_graph(arg: &str) -> Result<Graph> {
    if let Some(path) = arg.strip_prefix('@') {
        let text = read(Path::new(path))?;
        return if text.trim().lines().next().is_some_and(|l| l.contains(' ')) {
            Ok(parse_edge_list(&text)?)
        } else {
            Ok(decode_graph6(text.trim().as_bytes())?)
        };
    }
    if arg.contains(':') {
        let spec: FamilySpec = arg.parse()?;
        return Ok(spec.build()?);
    }
    decode_graph6(arg.as_bytes())
        .map_err(|e| CliError::Input(format!("{arg:?} is neither a family spec nor graph6 ({e})")))
}

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_specs_and_graph6() {
        assert_eq!(parse_graph("K:4").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_graph("C~").unwrap(), Graph::complete(4).unwrap());
        assert!(matches!(parse_graph("Q:2"), Err(CliError::Library(_))));
        assert!(matches!(parse_graph("C"), Err(CliError::Input(_))));
        assert!(matches!(parse_graph("@/nonexistent/file"), Err(CliError::Io { .. })));
    }
}
