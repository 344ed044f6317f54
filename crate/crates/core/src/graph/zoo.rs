//! Named graphs with fixed vertex numberings.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::{Error, Result};

/// Graphs that can be built by name.
///
/// Numberings:
/// * `Chvatal`: the 12-vertex Chvátal graph with the adjacency used by most
///   graph libraries (`0: 1 4 6 9`, `1: 2 5 7`, ...).
/// * `Petersen`: outer 5-cycle `0..5`, spokes `i – i+5`, inner pentagram
///   `5+i – 5+(i+2 mod 5)`.
/// * `Clebsch`: the folded 5-cube. Vertices are 4-bit vectors, adjacent when
///   they differ in exactly one bit or in all four.
/// * `Cycle(m)` / `OddCycle(m)`: `i – i+1 mod m`.
/// * `CompleteBipartite(a, b)`: parts `0..a` and `a..a+b`.
/// * `Path(m)`: `m` vertices `0 – 1 – ... – m-1`.
/// * `Star(m)`: centre `0` and `m` leaves `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Chvatal,
    Petersen,
    Clebsch,
    OddCycle(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Complete(usize),
    Path(usize),
    Star(usize),
}

const CHVATAL: [(usize, &[usize]); 10] = [
    (0, &[1, 4, 6, 9]),
    (1, &[2, 5, 7]),
    (2, &[3, 6, 8]),
    (3, &[4, 7, 9]),
    (4, &[5, 8]),
    (5, &[10, 11]),
    (6, &[10, 11]),
    (7, &[8, 11]),
    (8, &[10]),
    (9, &[10, 11]),
];

/// Builds the named graph.
pub fn zoo(name: &NamedGraph) -> Result<Graph> {
    let bad = || Error::UnknownName(name.to_string());
    match *name {
        NamedGraph::Chvatal => Graph::from_edges(
            12,
            CHVATAL
                .iter()
                .flat_map(|&(u, ns)| ns.iter().map(move |&v| (u, v))),
        ),
        NamedGraph::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))
        }
        NamedGraph::Clebsch => {
            let edges = (0..16usize).flat_map(|u| {
                (u + 1..16)
                    .filter(move |&v| matches!((u ^ v).count_ones(), 1 | 4))
                    .map(move |v| (u, v))
            });
            Graph::from_edges(16, edges)
        }
        NamedGraph::OddCycle(m) if m >= 3 && m % 2 == 1 => cycle(m),
        NamedGraph::OddCycle(_) => Err(bad()),
        NamedGraph::Cycle(m) if m >= 3 => cycle(m),
        NamedGraph::Cycle(_) => Err(bad()),
        NamedGraph::CompleteBipartite(a, b) => {
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        NamedGraph::Complete(m) => {
            Graph::from_edges(m, (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))))
        }
        NamedGraph::Path(m) => Graph::from_edges(m, (1..m).map(|i| (i - 1, i))),
        NamedGraph::Star(m) => Graph::from_edges(m + 1, (1..=m).map(|i| (0, i))),
    }
}

fn cycle(m: usize) -> Result<Graph> {
    Graph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m)))
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Chvatal => write!(f, "chvatal"),
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::Clebsch => write!(f, "clebsch"),
            NamedGraph::OddCycle(m) => write!(f, "odd_cycle({m})"),
            NamedGraph::Cycle(m) => write!(f, "c{m}"),
            NamedGraph::CompleteBipartite(a, b) => write!(f, "k{a},{b}"),
            NamedGraph::Complete(m) => write!(f, "k{m}"),
            NamedGraph::Path(m) => write!(f, "path{m}"),
            NamedGraph::Star(m) => write!(f, "star{m}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `chvatal`, `petersen`, `clebsch`, `c<m>`, `odd_cycle(<m>)`,
    /// `k<m>`, `k<a>,<b>` (also `k33`-style for single digits),
    /// `path<m>` and `star<m>`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(s.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        let lower = s.trim().to_ascii_lowercase();
        let name = match lower.as_str() {
            "chvatal" => NamedGraph::Chvatal,
            "petersen" => NamedGraph::Petersen,
            "clebsch" => NamedGraph::Clebsch,
            t if t.starts_with("odd_cycle(") && t.ends_with(')') => {
                NamedGraph::OddCycle(num(&t["odd_cycle(".len()..t.len() - 1])?)
            }
            t if t.starts_with("path") => NamedGraph::Path(num(&t[4..])?),
            t if t.starts_with("star") => NamedGraph::Star(num(&t[4..])?),
            t if t.starts_with('c') => NamedGraph::Cycle(num(&t[1..])?),
            t if t.starts_with('k') => {
                let rest = &t[1..];
                if let Some((a, b)) = rest.split_once(',') {
                    NamedGraph::CompleteBipartite(num(a)?, num(b)?)
                } else if rest.len() == 2 && rest.bytes().all(|c| c.is_ascii_digit()) {
                    NamedGraph::CompleteBipartite(num(&rest[..1])?, num(&rest[1..])?)
                } else {
                    NamedGraph::Complete(num(rest)?)
                }
            }
            _ => return Err(unknown()),
        };
        zoo(&name)?;
        Ok(name)
    }
}
