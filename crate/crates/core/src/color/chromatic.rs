//! Chromatic number and list-colourability witnesses by backtracking.

use super::list::{Color, ListAssignment, PartialColoring};
use crate::graph::Graph;
use crate::{Limits, Result};

/// Least `k` such that `g` has a proper `k`-colouring, under the default
/// [`Limits`].
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with(g, &Limits::default())
}

pub fn chromatic_number_with(g: &Graph, limits: &Limits) -> Result<usize> {
    limits.check(
        "graph order for chromatic number",
        g.n(),
        limits.count_max_n,
    )?;
    if g.n() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let mut k = if g.is_bipartite().is_some() { 2 } else { 3 };
    while k_coloring(g, k).is_none() {
        k += 1;
    }
    Ok(k)
}

/// A proper colouring with colours `0..k`, if one exists. DSATUR branching:
/// always extend at the uncoloured vertex seeing the most distinct colours,
/// and only ever open one new colour class per step.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, k: usize, col: &mut Vec<Option<usize>>, used: usize) -> bool {
        let pick = (0..g.n()).filter(|&v| col[v].is_none()).max_by_key(|&v| {
            let mut seen = 0u128;
            for &w in g.neighbors(v) {
                if let Some(c) = col[w] {
                    seen |= 1 << c;
                }
            }
            (seen.count_ones(), g.degree(v), std::cmp::Reverse(v))
        });
        let Some(v) = pick else { return true };
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).iter().any(|&w| col[w] == Some(c)) {
                continue;
            }
            col[v] = Some(c);
            if go(g, k, col, used.max(c + 1)) {
                return true;
            }
            col[v] = None;
        }
        false
    }
    assert!(k <= 128, "colour count beyond backtracking range");
    let mut col = vec![None; g.n()];
    go(g, k, &mut col, 0).then(|| col.into_iter().map(|c| c.expect("total")).collect())
}

/// A total proper L-colouring if one exists. Backtracks on the vertex with
/// the fewest remaining admissible colours, trying colours in increasing
/// order.
pub fn is_l_colorable(g: &Graph, l: &ListAssignment) -> Result<Option<PartialColoring>> {
    l.check_covers(g)?;
    fn go(g: &Graph, l: &ListAssignment, col: &mut Vec<Option<Color>>) -> bool {
        let options = |v: usize, col: &[Option<Color>]| -> Vec<Color> {
            l.list(v)
                .iter()
                .copied()
                .filter(|&c| !g.neighbors(v).iter().any(|&w| col[w] == Some(c)))
                .collect()
        };
        let pick = (0..g.n())
            .filter(|&v| col[v].is_none())
            .min_by_key(|&v| (options(v, col).len(), v));
        let Some(v) = pick else { return true };
        let cands = options(v, col);
        for c in cands {
            col[v] = Some(c);
            if go(g, l, col) {
                return true;
            }
            col[v] = None;
        }
        false
    }
    let mut col = vec![None; g.n()];
    Ok(go(g, l, &mut col).then(|| PartialColoring::from_options(col)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::count::count_list_colorings;
    use crate::graph::{zoo, NamedGraph};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn named(n: NamedGraph) -> Graph {
        zoo(&n).unwrap()
    }

    #[test]
    fn zoo_chromatic_numbers() {
        assert_eq!(chromatic_number(&named(NamedGraph::Chvatal)).unwrap(), 4);
        assert_eq!(
            chromatic_number(&named(NamedGraph::OddCycle(7))).unwrap(),
            3
        );
        assert_eq!(
            chromatic_number(&named(NamedGraph::CompleteBipartite(3, 3))).unwrap(),
            2
        );
        assert_eq!(chromatic_number(&named(NamedGraph::Petersen)).unwrap(), 3);
        assert_eq!(chromatic_number(&named(NamedGraph::Clebsch)).unwrap(), 4);
        assert_eq!(
            chromatic_number(&named(NamedGraph::Petersen).line_graph()).unwrap(),
            4
        );
        assert_eq!(
            chromatic_number(&named(NamedGraph::Complete(5))).unwrap(),
            5
        );
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::empty(3)).unwrap(), 1);
    }

    #[test]
    fn witnesses() {
        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        let l = ListAssignment::new(vec![vec![1, 2], vec![1]]);
        let w = is_l_colorable(&edge, &l).unwrap().unwrap();
        assert_eq!(w.to_total().unwrap(), vec![2, 1]);
        let l = ListAssignment::new(vec![vec![1], vec![1]]);
        assert!(is_l_colorable(&edge, &l).unwrap().is_none());
        let c5 = named(NamedGraph::OddCycle(5));
        assert!(is_l_colorable(&c5, &ListAssignment::uniform(5, 2))
            .unwrap()
            .is_none());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..9).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn chromatic_number_is_least_k_with_positive_count(g in arb_graph()) {
            let chi = chromatic_number(&g).unwrap();
            let count = |k: usize| count_list_colorings(&g, &ListAssignment::uniform(g.n(), k as u32)).unwrap();
            prop_assert!(!count(chi).is_zero());
            if chi > 0 {
                prop_assert!(count(chi - 1).is_zero());
            }
            let col = k_coloring(&g, chi).unwrap();
            prop_assert!(g.edges().all(|(u, v)| col[u] != col[v]));
        }

        #[test]
        fn witness_iff_positive_count(g in arb_graph(), seed in proptest::collection::vec(proptest::collection::vec(1u32..4, 0..3), 8)) {
            let l = ListAssignment::new(seed[..g.n()].to_vec());
            let w = is_l_colorable(&g, &l).unwrap();
            let count = count_list_colorings(&g, &l).unwrap();
            prop_assert_eq!(w.is_some(), !count.is_zero());
            if let Some(w) = w {
                prop_assert!(w.is_total() && w.is_proper(&g, &l));
            }
        }
    }
}
