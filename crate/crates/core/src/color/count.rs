//! Exact counting of proper list colourings, `|C_L(G)|`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::list::{Color, ListAssignment};
use crate::graph::Graph;
use crate::{Limits, Result};

/// `|C_L(G)|` under the default [`Limits`].
pub fn count_list_colorings(g: &Graph, l: &ListAssignment) -> Result<BigUint> {
    count_list_colorings_with(g, l, &Limits::default())
}

/// `|C_L(G)|`: counted per connected component and multiplied. Within a
/// component, vertices are processed in [`constrained_order`] and partial
/// counts are memoised on the colours of the current frontier (processed
/// vertices that still have unprocessed neighbours).
pub fn count_list_colorings_with(
    g: &Graph,
    l: &ListAssignment,
    limits: &Limits,
) -> Result<BigUint> {
    l.check_covers(g)?;
    limits.check("graph order for counting", g.n(), limits.count_max_n)?;
    Ok(count_unchecked(g, l))
}

pub(crate) fn count_unchecked(g: &Graph, l: &ListAssignment) -> BigUint {
    let mut total = BigUint::one();
    for comp in g.components() {
        let h = g.induced_subgraph(&comp);
        let lh = l.restrict(&comp);
        let order = constrained_order(&h, &lh);
        total *= count_in_order(&h, &lh, &order);
        if total.is_zero() {
            break;
        }
    }
    total
}

/// Greedy most-constrained-first order: start from a vertex with the
/// shortest list, then repeatedly take the unprocessed vertex with the most
/// processed neighbours, breaking ties by shorter list and smaller id.
pub fn constrained_order(g: &Graph, l: &ListAssignment) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut seen_nbrs = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                (
                    std::cmp::Reverse(seen_nbrs[v]),
                    l.list(v).len(),
                    std::cmp::Reverse(g.degree(v)),
                    v,
                )
            })
            .expect("an unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            seen_nbrs[w] += 1;
        }
    }
    order
}

/// Frontier dynamic programme over an arbitrary vertex order (a
/// permutation of `0..n`).
pub fn count_in_order(g: &Graph, l: &ListAssignment, order: &[usize]) -> BigUint {
    let n = g.n();
    assert_eq!(order.len(), n);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // A vertex leaves the frontier once its last neighbour is processed.
    let last: Vec<usize> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&w| pos[w])
                .fold(pos[v], usize::max)
        })
        .collect();

    let mut frontier: Vec<usize> = Vec::new();
    let mut states: HashMap<Vec<Color>, BigUint> = HashMap::from([(Vec::new(), BigUint::one())]);
    for (i, &x) in order.iter().enumerate() {
        let slots: Vec<usize> = g
            .neighbors(x)
            .iter()
            .filter(|&&w| pos[w] < i)
            .map(|w| {
                frontier
                    .iter()
                    .position(|f| f == w)
                    .expect("processed neighbour is on the frontier")
            })
            .collect();
        let keep: Vec<usize> = (0..frontier.len())
            .filter(|&s| last[frontier[s]] > i)
            .collect();
        let x_stays = last[x] > i;

        let mut next: HashMap<Vec<Color>, BigUint> = HashMap::with_capacity(states.len());
        for (state, cnt) in states {
            for &c in l.list(x) {
                if slots.iter().any(|&s| state[s] == c) {
                    continue;
                }
                let mut key: Vec<Color> = keep.iter().map(|&s| state[s]).collect();
                if x_stays {
                    key.push(c);
                }
                *next.entry(key).or_insert_with(BigUint::zero) += &cnt;
            }
        }
        states = next;
        frontier = keep.iter().map(|&s| frontier[s]).collect();
        if x_stays {
            frontier.push(x);
        }
        if states.is_empty() {
            return BigUint::zero();
        }
    }
    states.into_values().sum()
}

/// Plain backtracking count in the given vertex order, with no
/// memoisation. Reference implementation for tests and cross-checks.
pub fn count_by_backtracking(g: &Graph, l: &ListAssignment, order: &[usize]) -> BigUint {
    fn go(
        g: &Graph,
        l: &ListAssignment,
        order: &[usize],
        i: usize,
        col: &mut [Option<Color>],
    ) -> BigUint {
        if i == order.len() {
            return BigUint::one();
        }
        let v = order[i];
        let mut total = BigUint::zero();
        for &c in l.list(v) {
            if g.neighbors(v).iter().any(|&w| col[w] == Some(c)) {
                continue;
            }
            col[v] = Some(c);
            total += go(g, l, order, i + 1, col);
            col[v] = None;
        }
        total
    }
    let mut col = vec![None; g.n()];
    go(g, l, order, 0, &mut col)
}

/// Calls `f` on every proper L-colouring of `g` (as a colour vector),
/// in lexicographic order of `(colour of 0, colour of 1, ...)`.
pub fn for_each_coloring(g: &Graph, l: &ListAssignment, mut f: impl FnMut(&[Color])) {
    fn go(
        g: &Graph,
        l: &ListAssignment,
        v: usize,
        col: &mut Vec<Color>,
        f: &mut dyn FnMut(&[Color]),
    ) {
        if v == g.n() {
            f(col);
            return;
        }
        for &c in l.list(v) {
            if g.neighbors(v).iter().any(|&w| w < v && col[w] == c) {
                continue;
            }
            col.push(c);
            go(g, l, v + 1, col, f);
            col.pop();
        }
    }
    let mut col = Vec::with_capacity(g.n());
    go(g, l, 0, &mut col, &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{zoo, NamedGraph};
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn c5_with_three_colours() {
        // chromatic polynomial of C5 at 3: (3-1)^5 + (-1)^5 (3-1) = 30
        let g = zoo(&NamedGraph::OddCycle(5)).unwrap();
        assert_eq!(
            count_list_colorings(&g, &ListAssignment::uniform(5, 3)).unwrap(),
            big(30)
        );
    }

    #[test]
    fn tiny_cases() {
        let one = Graph::empty(1);
        assert_eq!(
            count_list_colorings(&one, &ListAssignment::new(vec![vec![1, 2]])).unwrap(),
            big(2)
        );
        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(
            count_list_colorings(&edge, &ListAssignment::new(vec![vec![1], vec![1]])).unwrap(),
            big(0)
        );
        assert_eq!(
            count_list_colorings(&Graph::empty(0), &ListAssignment::new(vec![])).unwrap(),
            big(1)
        );
        let empty_list = ListAssignment::new(vec![vec![]]);
        assert_eq!(count_list_colorings(&one, &empty_list).unwrap(), big(0));
    }

    #[test]
    fn chromatic_polynomials_of_zoo() {
        // Petersen: P(3) = 120, Clebsch has no 3-colouring.
        let p = zoo(&NamedGraph::Petersen).unwrap();
        assert_eq!(
            count_list_colorings(&p, &ListAssignment::uniform(10, 3)).unwrap(),
            big(120)
        );
        let c = zoo(&NamedGraph::Clebsch).unwrap();
        assert_eq!(
            count_list_colorings(&c, &ListAssignment::uniform(16, 3)).unwrap(),
            big(0)
        );
        // K_{3,3} with 2 colours: the two proper 2-colourings.
        let k = zoo(&NamedGraph::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(
            count_list_colorings(&k, &ListAssignment::uniform(6, 2)).unwrap(),
            big(2)
        );
    }

    #[test]
    fn rejects_bad_coverage_and_size() {
        let g = Graph::empty(3);
        assert!(count_list_colorings(&g, &ListAssignment::uniform(2, 2)).is_err());
        let big_g = Graph::empty(65);
        assert!(count_list_colorings(&big_g, &ListAssignment::uniform(65, 1)).is_err());
        let lifted = Limits::may_not_terminate();
        assert_eq!(
            count_list_colorings_with(&big_g, &ListAssignment::uniform(65, 1), &lifted).unwrap(),
            big(1)
        );
    }

    #[test]
    fn multiplicative_over_components() {
        let a = zoo(&NamedGraph::OddCycle(5)).unwrap();
        let b = zoo(&NamedGraph::Star(3)).unwrap();
        let la = ListAssignment::uniform(5, 3);
        let lb = ListAssignment::new(vec![vec![1, 2], vec![1, 2, 3], vec![2], vec![1, 3]]);
        let u = a.disjoint_union(&b);
        let lu = ListAssignment::new(la.lists().iter().chain(lb.lists()).cloned().collect());
        assert_eq!(
            count_list_colorings(&u, &lu).unwrap(),
            count_list_colorings(&a, &la).unwrap() * count_list_colorings(&b, &lb).unwrap()
        );
    }

    fn arb_instance() -> impl Strategy<Value = (Graph, ListAssignment)> {
        (1usize..8).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                proptest::collection::vec(proptest::bool::weighted(0.4), pairs),
                proptest::collection::vec(proptest::collection::vec(1u32..5, 0..4), n),
            )
                .prop_map(move |(bits, lists)| {
                    let mut edges = Vec::new();
                    let mut k = 0;
                    for j in 1..n {
                        for i in 0..j {
                            if bits[k] {
                                edges.push((i, j));
                            }
                            k += 1;
                        }
                    }
                    (
                        Graph::from_edges(n, edges).unwrap(),
                        ListAssignment::new(lists),
                    )
                })
        })
    }

    proptest! {
        #[test]
        fn dp_matches_backtracking_in_any_order((g, l) in arb_instance(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut order: Vec<usize> = (0..g.n()).collect();
            order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let reference = count_by_backtracking(&g, &l, &(0..g.n()).collect::<Vec<_>>());
            prop_assert_eq!(count_by_backtracking(&g, &l, &order), reference.clone());
            prop_assert_eq!(count_in_order(&g, &l, &order), reference.clone());
            prop_assert_eq!(count_list_colorings(&g, &l).unwrap(), reference.clone());
            let mut n = 0u64;
            for_each_coloring(&g, &l, |_| n += 1);
            prop_assert_eq!(BigUint::from(n), reference);
        }

        #[test]
        fn deletion_bound((g, l) in arb_instance(), v_seed in any::<usize>()) {
            let v = v_seed % g.n();
            let (h, keep) = g.remove_vertex(v);
            let whole = count_list_colorings(&g, &l).unwrap();
            let minus = count_list_colorings(&h, &l.restrict(&keep)).unwrap();
            prop_assert!(whole <= minus * BigUint::from(l.list(v).len()));
        }
    }
}
