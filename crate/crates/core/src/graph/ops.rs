use serde::{Deserialize, Serialize};

use super::Graph;
use crate::{Error, Result};

/// A proper 2-colouring, as the two colour classes (each sorted).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl Bipartition {
    /// Re-checks the witness: the classes partition the vertex set and no
    /// edge lies inside a class.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut side = vec![None; g.n()];
        for (s, part) in [(false, &self.a), (true, &self.b)] {
            for &v in part.iter() {
                if v >= g.n() || side[v].is_some() {
                    return false;
                }
                side[v] = Some(s);
            }
        }
        side.iter().all(Option::is_some) && g.edges().all(|(u, v)| side[u] != side[v])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BipartiteCheck {
    Bipartite(Bipartition),
    /// Vertex sequence `v0, v1, ..., v_{m-1}` with `m` odd, consecutive
    /// vertices (cyclically) adjacent.
    OddClosedWalk(Vec<usize>),
}

impl BipartiteCheck {
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            BipartiteCheck::Bipartite(p) => p.verify(g),
            BipartiteCheck::OddClosedWalk(w) => {
                w.len() % 2 == 1 && (0..w.len()).all(|i| g.has_edge(w[i], w[(i + 1) % w.len()]))
            }
        }
    }
}

pub(crate) fn bipartite_check(g: &Graph) -> BipartiteCheck {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!side[u].unwrap());
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == side[u].unwrap() => {
                        return BipartiteCheck::OddClosedWalk(odd_cycle_from_bfs(
                            u, w, &parent, &depth,
                        ));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (v, s) in side.into_iter().enumerate() {
        if s == Some(false) {
            a.push(v)
        } else {
            b.push(v)
        }
    }
    BipartiteCheck::Bipartite(Bipartition { a, b })
}

/// Closes the two BFS-tree paths from `u` and `w` at their meeting point.
fn odd_cycle_from_bfs(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut x, mut y) = (u, w);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

pub(crate) fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut out = Vec::new();
    for list in &incident {
        for (x, &i) in list.iter().enumerate() {
            for &j in &list[x + 1..] {
                out.push((i, j));
            }
        }
    }
    Graph::from_edges(edges.len(), out).expect("line graph is simple")
}

/// Output of [`regularize`].
#[derive(Clone, Debug)]
pub struct Regularized {
    pub graph: Graph,
    /// `embedding[v]` is the image of input vertex `v`; the image is an
    /// induced copy of the input.
    pub embedding: Vec<usize>,
    pub doublings: usize,
}

/// Cap on the order of the regular supergraph built by [`regularize`].
pub const REGULARIZE_MAX_N: usize = 1 << 22;

/// Embeds a triangle-free graph as an induced subgraph of a triangle-free
/// `target_degree`-regular graph.
///
/// Each round takes two disjoint copies of the current graph and joins every
/// vertex of degree below the target to its own copy. A cross edge `vv'`
/// cannot lie in a triangle: all other neighbours of `v` are in the first
/// copy and all other neighbours of `v'` in the second. Every deficient
/// vertex gains exactly one edge per round, so `target − δ(G)` rounds
/// suffice. The input is the first copy, vertices `0..n`.
pub fn regularize(g: &Graph, target_degree: usize) -> Result<Regularized> {
    if !g.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    if target_degree < g.max_degree() {
        return Err(Error::Precondition(format!(
            "target degree {target_degree} below maximum degree {}",
            g.max_degree()
        )));
    }
    let rounds = if g.n() == 0 {
        0
    } else {
        target_degree - g.min_degree()
    };
    let final_n = u32::try_from(rounds)
        .ok()
        .and_then(|r| g.n().checked_mul(1usize.checked_shl(r)?))
        .unwrap_or(usize::MAX);
    if final_n > REGULARIZE_MAX_N {
        return Err(Error::SizeCap {
            what: "regular supergraph order",
            actual: final_n,
            cap: REGULARIZE_MAX_N,
        });
    }
    let mut cur = g.clone();
    for _ in 0..rounds {
        let n = cur.n();
        let mut edges: Vec<(usize, usize)> = cur.edges().collect();
        edges.extend(cur.edges().map(|(u, v)| (u + n, v + n)));
        edges.extend(
            (0..n)
                .filter(|&v| cur.degree(v) < target_degree)
                .map(|v| (v, v + n)),
        );
        cur = Graph::from_edges(2 * n, edges)?;
    }
    Ok(Regularized {
        graph: cur,
        embedding: (0..g.n()).collect(),
        doublings: rounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{zoo, NamedGraph};

    fn is_induced_copy(big: &Graph, small: &Graph, emb: &[usize]) -> bool {
        (0..small.n())
            .all(|u| (0..small.n()).all(|v| small.has_edge(u, v) == big.has_edge(emb[u], emb[v])))
    }

    #[test]
    fn path_becomes_hexagon() {
        let p3 = zoo(&NamedGraph::Path(3)).unwrap();
        let r = regularize(&p3, 2).unwrap();
        assert_eq!(r.doublings, 1);
        let c6 = zoo(&NamedGraph::Cycle(6)).unwrap();
        // the doubled path 0-1-2 / 3-4-5 closes up as 0-1-2-5-4-3-0
        let perm = [0, 1, 2, 5, 4, 3];
        let mut relabel = vec![0; 6];
        for (i, &v) in perm.iter().enumerate() {
            relabel[v] = i;
        }
        assert_eq!(r.graph.permute(&relabel), c6);
    }

    #[test]
    fn regular_input_unchanged() {
        let c5 = zoo(&NamedGraph::OddCycle(5)).unwrap();
        let r = regularize(&c5, 2).unwrap();
        assert_eq!(r.doublings, 0);
        assert_eq!(r.graph, c5);
    }

    #[test]
    fn single_vertex_to_cube() {
        let r = regularize(&Graph::empty(1), 3).unwrap();
        let g = &r.graph;
        assert_eq!(g.n(), 8);
        assert!((0..8).all(|v| g.degree(v) == 3));
        assert!(g.is_triangle_free());
        assert!(g.is_bipartite().is_some());
    }

    #[test]
    fn petersen_and_star_invariants() {
        for (g, d) in [
            (zoo(&NamedGraph::Star(3)).unwrap(), 4),
            (zoo(&NamedGraph::Petersen).unwrap(), 5),
            (zoo(&NamedGraph::Path(4)).unwrap(), 3),
        ] {
            let r = regularize(&g, d).unwrap();
            assert_eq!(r.graph.min_degree(), d);
            assert_eq!(r.graph.max_degree(), d);
            assert!(r.graph.is_triangle_free());
            assert!(is_induced_copy(&r.graph, &g, &r.embedding));
        }
    }

    #[test]
    fn refuses_triangles_and_low_targets() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(regularize(&k3, 3), Err(Error::NotTriangleFree)));
        let star = zoo(&NamedGraph::Star(3)).unwrap();
        assert!(regularize(&star, 2).is_err());
    }

    #[test]
    fn line_graph_examples() {
        let c5 = zoo(&NamedGraph::OddCycle(5)).unwrap();
        let l = c5.line_graph();
        assert_eq!(l.n(), 5);
        assert!((0..5).all(|v| l.degree(v) == 2) && l.is_connected());

        let l = zoo(&NamedGraph::Star(3)).unwrap().line_graph();
        assert_eq!(l, Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap());

        let p = zoo(&NamedGraph::Petersen).unwrap();
        let l = p.line_graph();
        assert_eq!(l.n(), 15);
        assert!((0..15).all(|v| l.degree(v) == 4));
    }

    #[test]
    fn line_graph_degrees_match_endpoint_degrees() {
        let g = zoo(&NamedGraph::Chvatal)
            .unwrap()
            .disjoint_union(&zoo(&NamedGraph::Star(4)).unwrap());
        let l = g.line_graph();
        assert_eq!(l.n(), g.edge_count());
        for (i, (u, v)) in g.edges().enumerate() {
            assert_eq!(l.degree(i), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn odd_walk_witness_is_valid() {
        for g in [
            zoo(&NamedGraph::OddCycle(7)).unwrap(),
            zoo(&NamedGraph::Petersen).unwrap(),
            zoo(&NamedGraph::Clebsch).unwrap(),
        ] {
            let c = g.bipartite_check();
            assert!(matches!(c, BipartiteCheck::OddClosedWalk(_)));
            assert!(c.verify(&g));
        }
        let g = zoo(&NamedGraph::CompleteBipartite(2, 5)).unwrap();
        assert!(g.bipartite_check().verify(&g));
    }
}
