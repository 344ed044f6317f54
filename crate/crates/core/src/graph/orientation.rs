use serde::{Deserialize, Serialize};

use super::Graph;
use crate::{Error, Result};

/// An orientation of a simple graph: every edge appears as exactly one arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Checks that `arcs` orient every edge of `base` exactly once.
    pub fn new(base: Graph, arcs: Vec<(usize, usize)>) -> Result<Self> {
        if arcs.len() != base.edge_count() {
            return Err(Error::InvalidGraph(format!(
                "{} arcs for {} edges",
                arcs.len(),
                base.edge_count()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &arcs {
            if !base.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!(
                    "arc ({u}, {v}) is not an edge"
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u}, {v}}} oriented twice"
                )));
            }
        }
        Ok(Orientation { base, arcs })
    }

    /// Builds the orientation directly from arcs; the base graph is the
    /// underlying simple graph.
    pub fn from_arcs(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let base = Graph::from_edges(n, arcs.iter().copied())?;
        Orientation::new(base, arcs)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n()];
        for &(u, _) in &self.arcs {
            d[u] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n()];
        for &(_, v) in &self.arcs {
            d[v] += 1;
        }
        d
    }

    /// Out-neighbour lists, sorted.
    pub fn out_neighbors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n()];
        for &(u, v) in &self.arcs {
            out[u].push(v);
        }
        for l in &mut out {
            l.sort_unstable();
        }
        out
    }

    pub fn to_json(&self) -> OrientationJson {
        OrientationJson {
            n: self.n(),
            arcs: self.arcs.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(j: &OrientationJson) -> Result<Self> {
        Orientation::from_arcs(j.n, j.arcs.iter().map(|a| (a[0], a[1])).collect())
    }
}

/// JSON form `{"n": int, "arcs": [[u, v], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationJson {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
}
