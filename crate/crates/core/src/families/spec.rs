use std::fmt;
use std::str::FromStr;

use super::group::{cayley_graph, AbelianGroup, ConnectionSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parameterized family member, parsed from strings such as `Q:7`,
/// `Kmn:3,4` or `Cayley:Z4xZ4:0,1;0,3;1,0;3,0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Rook(usize),
    Px(usize),
    Q(usize),
    R(usize),
    S(usize),
    /// Abelian Cayley graph: moduli and connection-set tuples.
    Cayley {
        moduli: Vec<usize>,
        connection: Vec<Vec<usize>>,
    },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Complete(n) => super::complete(*n),
            FamilySpec::Empty(n) => super::empty(*n),
            FamilySpec::CompleteBipartite(m, n) => super::complete_bipartite(*m, *n),
            FamilySpec::Cycle(n) => super::cycle(*n),
            FamilySpec::Rook(n) => super::rook(*n),
            FamilySpec::Px(n) => super::px_graph(*n),
            FamilySpec::Q(n) => super::q_graph(*n),
            FamilySpec::R(n) => super::r_graph(*n),
            FamilySpec::S(n) => super::s_graph(*n),
            FamilySpec::Cayley { moduli, connection } => {
                let group = AbelianGroup::new(moduli)?;
                let s = ConnectionSet::from_tuples(&group, connection)?;
                cayley_graph(&group, &s)
            }
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}

fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad(format!("not a number: {t:?}")))).collect()
}

fn one(kind: &str, args: &str) -> Result<usize> {
    match parse_list(args)?.as_slice() {
        [n] => Ok(*n),
        _ => Err(bad(format!("{kind} takes one parameter"))),
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s.split_once(':').ok_or_else(|| bad(format!("expected KIND:PARAMS, got {s:?}")))?;
        let spec = match kind {
            "K" => FamilySpec::Complete(one(kind, args)?),
            "E" => FamilySpec::Empty(one(kind, args)?),
            "C" => FamilySpec::Cycle(one(kind, args)?),
            "LKnn" => FamilySpec::Rook(one(kind, args)?),
            "PX" => FamilySpec::Px(one(kind, args)?),
            "Q" => FamilySpec::Q(one(kind, args)?),
            "R" => FamilySpec::R(one(kind, args)?),
            "S" => FamilySpec::S(one(kind, args)?),
            "Kmn" => match parse_list(args)?.as_slice() {
                [m, n] => FamilySpec::CompleteBipartite(*m, *n),
                _ => return Err(bad("Kmn takes two parameters")),
            },
            "Cayley" => {
                let (group, elems) = args.split_once(':').ok_or_else(|| bad("Cayley expects GROUP:ELEMENTS"))?;
                let moduli = group
                    .split('x')
                    .map(|f| {
                        f.trim()
                            .strip_prefix('Z')
                            .and_then(|m| m.parse::<usize>().ok())
                            .ok_or_else(|| bad(format!("bad cyclic factor {f:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let connection =
                    elems.split(';').filter(|e| !e.trim().is_empty()).map(parse_list).collect::<Result<Vec<_>>>()?;
                FamilySpec::Cayley { moduli, connection }
            }
            other => return Err(bad(format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "K:{n}"),
            FamilySpec::Empty(n) => write!(f, "E:{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "Kmn:{m},{n}"),
            FamilySpec::Cycle(n) => write!(f, "C:{n}"),
            FamilySpec::Rook(n) => write!(f, "LKnn:{n}"),
            FamilySpec::Px(n) => write!(f, "PX:{n}"),
            FamilySpec::Q(n) => write!(f, "Q:{n}"),
            FamilySpec::R(n) => write!(f, "R:{n}"),
            FamilySpec::S(n) => write!(f, "S:{n}"),
            FamilySpec::Cayley { moduli, connection } => {
                let group: Vec<String> = moduli.iter().map(|m| format!("Z{m}")).collect();
                let elems: Vec<String> =
                    connection.iter().map(|e| e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
                write!(f, "Cayley:{}:{}", group.join("x"), elems.join(";"))
            }
        }
    }
}
