//! Brute-force choosability and list chromatic number.
//!
//! A list assignment with prescribed sizes is determined, up to renaming
//! colours, by the multiset of colour supports `S_c = {v : c ∈ L(v)}`, where
//! every vertex `v` lies in exactly `s(v)` supports. The search enumerates
//! these multisets directly, which is the same as enumerating lists over a
//! universe of `Σ s(v)` colours up to colour permutation.
//!
//! Two reductions keep this small:
//!
//! * If two supports are disjoint, merging the two colours into one keeps
//!   every list size and can only destroy colourings (a colouring of the
//!   merged lists maps back to one of the originals). So a bad assignment
//!   exists iff a bad one with pairwise intersecting supports exists.
//! * Colourability is monotone in the lists, and colours added later in the
//!   enumeration are fresh. A prefix of the support multiset is abandoned as
//!   soon as some partial colouring from the current colours leaves a rest
//!   that is greedily colourable from its outstanding fresh colours alone.
//!
//! Vertices whose degree in the remaining graph is below their list size are
//! peeled first (they can always be coloured last), and the remaining
//! components are searched independently.

use super::list::{Color, ListAssignment};
use crate::graph::Graph;
use crate::{Error, Limits, Result};

/// Outcome of a choosability search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoosabilityReport {
    pub choosable: bool,
    /// A list assignment with the requested sizes and no proper colouring.
    pub counterexample: Option<ListAssignment>,
    /// Number of complete support families that needed a colourability test.
    pub families_checked: u64,
}

/// Largest `k` accepted by [`list_chromatic_number`].
pub const LIST_CHROMATIC_MAX_K: usize = 4;

const MASK_BITS: usize = 64;
const COLOR_BITS: usize = 128;

/// Whether every list assignment with `|L(v)| = sizes[v]` admits a proper
/// colouring.
pub fn is_choosable_with_sizes(g: &Graph, sizes: &[usize]) -> Result<ChoosabilityReport> {
    is_choosable_with_sizes_with(g, sizes, &Limits::default())
}

pub fn is_choosable_with_sizes_with(
    g: &Graph,
    sizes: &[usize],
    limits: &Limits,
) -> Result<ChoosabilityReport> {
    if sizes.len() != g.n() {
        return Err(Error::ListCoverage {
            lists: sizes.len(),
            n: g.n(),
        });
    }
    limits.check("graph order for choosability", g.n(), limits.choose_max_n)?;

    let core = peel(g, sizes);
    let (h, _) = g.remove_vertices(&(0..g.n()).filter(|v| !core.contains(v)).collect::<Vec<_>>());
    let mut families_checked = 0;
    for comp in h.components() {
        let orig: Vec<usize> = comp.iter().map(|&i| core[i]).collect();
        let sub = g.induced_subgraph(&orig);
        let sub_sizes: Vec<usize> = orig.iter().map(|&v| sizes[v]).collect();
        limits.check("component order for choosability", sub.n(), MASK_BITS)?;
        let demand: usize = sub_sizes.iter().sum();
        limits.check("total list size for choosability", demand, COLOR_BITS)?;

        let mut search = Search::new(&sub, &sub_sizes);
        let bad = search.run();
        families_checked += search.families;
        if let Some(family) = bad {
            let counterexample = lift_counterexample(g, sizes, &orig, &family);
            return Ok(ChoosabilityReport {
                choosable: false,
                counterexample: Some(counterexample),
                families_checked,
            });
        }
    }
    Ok(ChoosabilityReport {
        choosable: true,
        counterexample: None,
        families_checked,
    })
}

/// Least `k ≤ k_max` such that `g` is `k`-choosable, or `k_max + 1` if
/// none is. `k_max` is at most [`LIST_CHROMATIC_MAX_K`].
pub fn list_chromatic_number(g: &Graph, k_max: usize) -> Result<usize> {
    list_chromatic_number_with(g, k_max, &Limits::default())
}

pub fn list_chromatic_number_with(g: &Graph, k_max: usize, limits: &Limits) -> Result<usize> {
    if k_max > LIST_CHROMATIC_MAX_K {
        return Err(Error::InvalidParams(format!(
            "k_max {k_max} exceeds {LIST_CHROMATIC_MAX_K}"
        )));
    }
    limits.check("graph order for choosability", g.n(), limits.choose_max_n)?;
    if g.n() == 0 {
        return Ok(0);
    }
    for k in 1..=k_max {
        if is_choosable_with_sizes_with(g, &vec![k; g.n()], limits)?.choosable {
            return Ok(k);
        }
    }
    Ok(k_max + 1)
}

/// Reference check that enumerates every assignment of `sizes[v]`-subsets
/// of `{1, ..., universe}`, with only the list of vertex 0 fixed to
/// `{1, ..., sizes[0]}`. Exponential; for cross-checking tiny cases.
pub fn choosable_by_raw_enumeration(g: &Graph, sizes: &[usize], universe: usize) -> bool {
    fn subsets(universe: usize, k: usize) -> Vec<Vec<Color>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            start: usize,
            universe: usize,
            k: usize,
            cur: &mut Vec<Color>,
            out: &mut Vec<Vec<Color>>,
        ) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for c in start..=universe {
                cur.push(c as Color);
                rec(c + 1, universe, k, cur, out);
                cur.pop();
            }
        }
        rec(1, universe, k, &mut cur, &mut out);
        out
    }
    fn rec(g: &Graph, choices: &[Vec<Vec<Color>>], v: usize, lists: &mut Vec<Vec<Color>>) -> bool {
        if v == choices.len() {
            let l = ListAssignment::new(lists.clone());
            return super::chromatic::is_l_colorable(g, &l)
                .expect("lists cover")
                .is_some();
        }
        for c in &choices[v] {
            lists.push(c.clone());
            let ok = rec(g, choices, v + 1, lists);
            lists.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let mut choices: Vec<Vec<Vec<Color>>> = sizes.iter().map(|&s| subsets(universe, s)).collect();
    if let Some(first) = choices.first_mut() {
        first.truncate(1);
    }
    rec(g, &choices, 0, &mut Vec::new())
}

/// Repeatedly drops vertices whose current degree is below their list size.
/// Returns the surviving vertices, sorted.
fn peel(g: &Graph, sizes: &[usize]) -> Vec<usize> {
    let mut alive = vec![true; g.n()];
    let mut deg = g.degrees();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..g.n() {
            if alive[v] && deg[v] < sizes[v] {
                alive[v] = false;
                changed = true;
                for &w in g.neighbors(v) {
                    deg[w] -= 1;
                }
            }
        }
    }
    (0..g.n()).filter(|&v| alive[v]).collect()
}

fn lift_counterexample(
    g: &Graph,
    sizes: &[usize],
    comp: &[usize],
    family: &[u64],
) -> ListAssignment {
    let mut lists: Vec<Vec<Color>> = vec![Vec::new(); g.n()];
    for (c, &s) in family.iter().enumerate() {
        for (i, &v) in comp.iter().enumerate() {
            if s >> i & 1 == 1 {
                lists[v].push(c as Color + 1);
            }
        }
    }
    let mut fresh = family.len() as Color + 1;
    for v in 0..g.n() {
        if !comp.contains(&v) {
            lists[v] = (fresh..fresh + sizes[v] as Color).collect();
            fresh += sizes[v] as Color;
        }
    }
    ListAssignment::new(lists)
}

struct Search<'a> {
    adj: Vec<u64>,
    sizes: &'a [usize],
    families: u64,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, sizes: &'a [usize]) -> Self {
        Search {
            adj: g.adjacency_masks(),
            sizes,
            families: 0,
        }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    /// A bad support family, if any.
    fn run(&mut self) -> Option<Vec<u64>> {
        let mut demand = self.sizes.to_vec();
        let mut family = Vec::new();
        self.extend(&mut demand, u64::MAX, &mut family)
            .then_some(family)
    }

    fn extend(&mut self, demand: &mut [usize], prev: u64, family: &mut Vec<u64>) -> bool {
        let pos = (0..self.n())
            .filter(|&v| demand[v] > 0)
            .fold(0u64, |m, v| m | 1 << v);
        if pos == 0 {
            self.families += 1;
            return !self.safe(family, demand);
        }
        if family.iter().any(|&s| s & pos == 0) {
            return false;
        }
        if !family.is_empty() && self.safe(family, demand) {
            return false;
        }
        let mut s = pos;
        loop {
            if s <= prev && family.iter().all(|&f| f & s != 0) {
                family.push(s);
                for v in bits(s) {
                    demand[v] -= 1;
                }
                if self.extend(demand, s, family) {
                    return true;
                }
                for v in bits(s) {
                    demand[v] += 1;
                }
                family.pop();
            }
            s = (s - 1) & pos;
            if s == 0 {
                break;
            }
        }
        false
    }

    /// Whether every completion of `family` is colourable. Colours added
    /// later are fresh, so it suffices to colour some set `U` from the
    /// current lists such that the rest can be coloured greedily from
    /// `demand[v]` fresh colours alone: repeatedly removing a vertex with
    /// fewer remaining neighbours than its demand must empty the rest.
    /// With `demand` all zero this is plain colourability.
    fn safe(&self, family: &[u64], demand: &[usize]) -> bool {
        let n = self.n();
        let mut avail: Vec<u128> = vec![0; n];
        for (c, &s) in family.iter().enumerate() {
            for v in bits(s) {
                avail[v] |= 1 << c;
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (avail[v].count_ones(), std::cmp::Reverse(demand[v])));
        let mut col: Vec<Option<usize>> = vec![None; n];
        self.safe_rec(&order, 0, &avail, demand, &mut col, 0)
    }

    fn safe_rec(
        &self,
        order: &[usize],
        i: usize,
        avail: &[u128],
        demand: &[usize],
        col: &mut Vec<Option<usize>>,
        rest: u64,
    ) -> bool {
        let Some(&v) = order.get(i) else { return true };
        let mut a = avail[v];
        for w in bits(self.adj[v]) {
            if let Some(c) = col[w] {
                a &= !(1u128 << c);
            }
        }
        while a != 0 {
            let c = a.trailing_zeros() as usize;
            a &= a - 1;
            col[v] = Some(c);
            if self.safe_rec(order, i + 1, avail, demand, col, rest) {
                return true;
            }
            col[v] = None;
        }
        demand[v] > 0
            && self.degenerate(rest | 1 << v, demand)
            && self.safe_rec(order, i + 1, avail, demand, col, rest | 1 << v)
    }

    /// Whether `set` empties under repeated removal of vertices with fewer
    /// neighbours in the set than their demand. Subsets of a set that
    /// empties also empty.
    fn degenerate(&self, mut set: u64, demand: &[usize]) -> bool {
        loop {
            let Some(v) =
                bits(set).find(|&v| ((self.adj[v] & set).count_ones() as usize) < demand[v])
            else {
                return set == 0;
            };
            set &= !(1 << v);
        }
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::chromatic::{chromatic_number, is_l_colorable};
    use crate::graph::{zoo, NamedGraph};

    fn named(n: NamedGraph) -> Graph {
        zoo(&n).unwrap()
    }

    #[test]
    fn k33_is_three_choosable_not_two() {
        let g = named(NamedGraph::CompleteBipartite(3, 3));
        assert_eq!(list_chromatic_number(&g, 4).unwrap(), 3);
        let r = is_choosable_with_sizes(&g, &[2; 6]).unwrap();
        let bad = r.counterexample.unwrap();
        assert!(bad.sizes().iter().all(|&s| s == 2));
        assert!(is_l_colorable(&g, &bad).unwrap().is_none());
    }

    #[test]
    fn small_list_chromatic_numbers() {
        assert_eq!(list_chromatic_number(&Graph::empty(1), 4).unwrap(), 1);
        assert_eq!(
            list_chromatic_number(&named(NamedGraph::Cycle(4)), 4).unwrap(),
            2
        );
        assert_eq!(
            list_chromatic_number(&named(NamedGraph::Cycle(6)), 4).unwrap(),
            2
        );
        assert_eq!(
            list_chromatic_number(&named(NamedGraph::OddCycle(5)), 4).unwrap(),
            3
        );
        assert_eq!(
            list_chromatic_number(&named(NamedGraph::Complete(4)), 3).unwrap(),
            4
        );
        assert_eq!(
            list_chromatic_number(&named(NamedGraph::CompleteBipartite(2, 4)), 4).unwrap(),
            3
        );
        assert!(list_chromatic_number(&named(NamedGraph::Path(3)), 5).is_err());
    }

    #[test]
    fn c4_matches_raw_enumeration_over_eight_colours() {
        let g = named(NamedGraph::Cycle(4));
        assert!(choosable_by_raw_enumeration(&g, &[2; 4], 8));
        assert!(is_choosable_with_sizes(&g, &[2; 4]).unwrap().choosable);
    }

    #[test]
    fn raw_oracle_agrees_on_tiny_graphs() {
        let cases: Vec<(Graph, Vec<usize>)> = vec![
            (named(NamedGraph::Path(3)), vec![1, 1, 1]),
            (named(NamedGraph::Path(3)), vec![1, 2, 1]),
            (named(NamedGraph::Complete(3)), vec![2, 2, 2]),
            (named(NamedGraph::Complete(3)), vec![2, 3, 3]),
            (named(NamedGraph::Star(3)), vec![2, 1, 1, 1]),
            (named(NamedGraph::Cycle(4)), vec![1, 2, 2, 2]),
            (named(NamedGraph::Cycle(4)), vec![2, 2, 2, 1]),
            (
                named(NamedGraph::CompleteBipartite(2, 3)),
                vec![2, 2, 2, 2, 2],
            ),
            (named(NamedGraph::OddCycle(5)), vec![2, 2, 2, 2, 3]),
            (Graph::empty(2), vec![0, 1]),
        ];
        for (g, sizes) in cases {
            let universe = sizes.iter().sum::<usize>().min(7);
            let raw = choosable_by_raw_enumeration(&g, &sizes, universe);
            let fast = is_choosable_with_sizes(&g, &sizes).unwrap();
            assert_eq!(raw, fast.choosable, "{sizes:?}");
            if let Some(bad) = fast.counterexample {
                assert_eq!(bad.sizes(), sizes);
                assert!(is_l_colorable(&g, &bad).unwrap().is_none());
            }
        }
    }

    #[test]
    fn list_chromatic_at_least_chromatic() {
        for g in [
            named(NamedGraph::Petersen),
            named(NamedGraph::OddCycle(7)),
            named(NamedGraph::CompleteBipartite(2, 3)),
            named(NamedGraph::Star(5)),
        ] {
            let chi = chromatic_number(&g).unwrap();
            assert!(list_chromatic_number(&g, 4).unwrap() >= chi);
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn agrees_with_raw_enumeration(
            bits in proptest::collection::vec(proptest::prelude::any::<bool>(), 6),
            sizes in proptest::collection::vec(1usize..3, 4),
        ) {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let g = Graph::from_edges(4, pairs.iter().zip(&bits).filter(|(_, b)| **b).map(|(e, _)| *e)).unwrap();
            let universe = sizes.iter().sum();
            let fast = is_choosable_with_sizes(&g, &sizes).unwrap();
            proptest::prop_assert_eq!(choosable_by_raw_enumeration(&g, &sizes, universe), fast.choosable);
        }
    }

    #[test]
    fn size_cap() {
        let g = Graph::empty(13);
        assert!(matches!(
            list_chromatic_number(&g, 2),
            Err(Error::SizeCap { .. })
        ));
    }
}
