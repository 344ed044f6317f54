//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are grown from graphs on `n − 1` by adding a
//! vertex with every possible neighbourhood, then deduplicated by a
//! canonical code: the largest upper-triangle bit string over all vertex
//! orders compatible with an equitable degree refinement.

use std::collections::BTreeSet;

use super::Graph;
use crate::{Limits, Result};

/// Largest order accepted by the generators.
pub const ENUMERATE_MAX_N: usize = 10;

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Canonical code of a graph given by adjacency masks; equal codes mean
/// isomorphic graphs.
fn canonical_code(adj: &[u32]) -> u64 {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| color[w])
                    .collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let ranks: Vec<&(usize, Vec<usize>)> =
            sig.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sig
            .iter()
            .map(|s| ranks.binary_search(&s).expect("present"))
            .collect();
        let before = color.iter().collect::<BTreeSet<_>>().len();
        color = next;
        if ranks.len() == before {
            break;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| color[v]);
    let mut best = 0u64;
    let mut placed = Vec::with_capacity(n);
    let mut used = 0u32;
    fn go(
        order: &[usize],
        color: &[usize],
        adj: &[u32],
        placed: &mut Vec<usize>,
        used: &mut u32,
        code: u64,
        best: &mut u64,
    ) {
        let j = placed.len();
        if j == order.len() {
            *best = (*best).max(code);
            return;
        }
        let cell = color[order[j]];
        for &v in order.iter().filter(|&&v| color[v] == cell) {
            if *used >> v & 1 == 1 {
                continue;
            }
            let mut c = code;
            for &u in placed.iter() {
                c = c << 1 | u64::from(adj[v] >> u & 1);
            }
            placed.push(v);
            *used |= 1 << v;
            go(order, color, adj, placed, used, c, best);
            *used &= !(1 << v);
            placed.pop();
        }
    }
    go(&order, &color, adj, &mut placed, &mut used, 0, &mut best);
    best
}

fn from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("code describes a simple graph")
}

/// All graphs on exactly `n` vertices satisfying `keep`, one per
/// isomorphism class, in increasing order of canonical code. `keep` must be
/// closed under deleting a vertex (triangle-free, bipartite, any graph);
/// with `connected`, only connected graphs are returned and `keep` need
/// only be closed under deleting a non-cut vertex.
pub fn nonisomorphic_graphs(
    n: usize,
    connected: bool,
    keep: impl Fn(&Graph) -> bool,
) -> Result<Vec<Graph>> {
    Limits::default().check("order for graph enumeration", n, ENUMERATE_MAX_N)?;
    let mut level: Vec<Graph> = if n == 0 {
        vec![]
    } else {
        vec![Graph::empty(1)]
    };
    level.retain(&keep);
    for m in 2..=n {
        let mut seen = BTreeSet::new();
        for g in &level {
            let base = masks(g);
            let first = u32::from(connected);
            for nb in first..1u32 << (m - 1) {
                let mut adj = base.clone();
                for (w, a) in adj.iter_mut().enumerate() {
                    *a |= (nb >> w & 1) << (m - 1);
                }
                adj.push(nb);
                seen.insert(canonical_code(&adj));
            }
        }
        level = seen
            .into_iter()
            .map(|c| from_code(m, c))
            .filter(|g| keep(g))
            .collect();
    }
    Ok(level)
}
