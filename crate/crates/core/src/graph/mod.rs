//! Simple undirected graphs on the vertex set `0..n`.

mod enumerate;
mod graph6;
mod ops;
mod orientation;
mod zoo;

pub use enumerate::{nonisomorphic_graphs, ENUMERATE_MAX_N};
pub use graph6::{encode_graph6, parse_graph6};
pub use ops::{regularize, BipartiteCheck, Bipartition, Regularized};
pub use orientation::{Orientation, OrientationJson};
pub use zoo::{zoo, NamedGraph};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A simple undirected graph with dense vertex ids `0..n`.
///
/// Adjacency lists are kept sorted, so iteration order is deterministic and
/// `has_edge` is a binary search. Values are immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// direction) are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Subgraph induced by `keep`, relabelled so that `keep[i]` becomes `i`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = keep.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v].iter().filter_map(move |&w| {
                (index[w] != usize::MAX && index[w] > i).then_some((i, index[w]))
            })
        });
        Graph::from_edges(keep.len(), edges.collect::<Vec<_>>())
            .expect("induced subgraph is simple")
    }

    /// `G − v`, together with the surviving original vertex ids in order.
    pub fn remove_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        self.remove_vertices(&[v])
    }

    /// `G − S`, together with the surviving original vertex ids in order.
    pub fn remove_vertices(&self, drop: &[usize]) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n()).filter(|v| !drop.contains(v)).collect();
        (self.induced_subgraph(&keep), keep)
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(off + other.n(), edges.collect::<Vec<_>>()).expect("union is simple")
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        Graph::from_edges(
            self.n(),
            self.edges()
                .map(|(u, v)| (perm[u], perm[v]))
                .collect::<Vec<_>>(),
        )
        .expect("permutation of a simple graph is simple")
    }

    /// Triangle-freeness: no edge `uv` whose endpoints share a neighbour.
    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (u, v) in self.edges() {
            if let Some(w) = sorted_intersection(&self.adj[u], &self.adj[v]).next() {
                return Some([u, v, w]);
            }
        }
        None
    }

    /// No 4-cycle as a (not necessarily induced) subgraph, i.e. no two
    /// vertices share two neighbours.
    pub fn is_c4_free(&self) -> bool {
        self.find_c4().is_none()
    }

    /// A 4-cycle `[a, x, b, y]` if one exists.
    pub fn find_c4(&self) -> Option<[usize; 4]> {
        for a in 0..self.n() {
            for b in a + 1..self.n() {
                let mut common = sorted_intersection(&self.adj[a], &self.adj[b]);
                if let (Some(x), Some(y)) = (common.next(), common.next()) {
                    return Some([a, x, b, y]);
                }
            }
        }
        None
    }

    /// Proper 2-colouring witness, or an odd closed walk certifying that
    /// none exists.
    pub fn bipartite_check(&self) -> BipartiteCheck {
        ops::bipartite_check(self)
    }

    /// The bipartition `(A, B)` if the graph is bipartite.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        match self.bipartite_check() {
            BipartiteCheck::Bipartite(p) => Some(p),
            BipartiteCheck::OddClosedWalk(_) => None,
        }
    }

    /// Line graph. Vertex `i` of the result is the `i`-th edge of `self` in
    /// lexicographic `(min endpoint, max endpoint)` order, see [`Graph::edges`].
    pub fn line_graph(&self) -> Graph {
        ops::line_graph(self)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self> {
        Graph::from_edges(j.n, j.edges.iter().map(|e| (e[0], e[1])))
    }

    /// Bitset adjacency for graphs with at most 64 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitset view needs n <= 64");
        self.adj
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &w| m | (1u64 << w)))
            .collect()
    }
}

/// JSON form `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

pub(crate) fn sorted_intersection<'a>(
    a: &'a [usize],
    b: &'a [usize],
) -> impl Iterator<Item = usize> + 'a {
    let (mut i, mut j) = (0, 0);
    std::iter::from_fn(move || {
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    return Some(a[i - 1]);
                }
            }
        }
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn merges_duplicate_edges() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn triangle_predicates() {
        assert!(!k3().is_triangle_free());
        assert!(zoo(&NamedGraph::OddCycle(5)).unwrap().is_triangle_free());
        assert!(zoo(&NamedGraph::Chvatal).unwrap().is_triangle_free());
    }

    #[test]
    fn c4_predicates() {
        assert!(!zoo(&NamedGraph::CompleteBipartite(2, 2))
            .unwrap()
            .is_c4_free());
        let p = zoo(&NamedGraph::Petersen).unwrap();
        assert!(p.is_c4_free());
        assert!(p.line_graph().is_c4_free());
    }

    #[test]
    fn bipartite_examples() {
        let k33 = zoo(&NamedGraph::CompleteBipartite(3, 3)).unwrap();
        let parts = k33.is_bipartite().unwrap();
        assert_eq!((parts.a.len(), parts.b.len()), (3, 3));
        assert!(zoo(&NamedGraph::OddCycle(5))
            .unwrap()
            .is_bipartite()
            .is_none());
        let p3 = zoo(&NamedGraph::Path(3)).unwrap();
        let parts = p3.is_bipartite().unwrap();
        assert_eq!((parts.a.len(), parts.b.len()), (2, 1));
    }

    #[test]
    fn components_and_removal() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        let (h, keep) = g.remove_vertex(1);
        assert_eq!(keep, vec![0, 2, 3, 4]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(2, 3)]);
    }

    #[test]
    fn json_round_trip() {
        let g = zoo(&NamedGraph::Petersen).unwrap();
        let s = serde_json::to_string(&g.to_json()).unwrap();
        let back = Graph::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, g);
    }
}
