use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::kspec::KSpec;
use crate::{Error, Result};

pub type Color = u32;

/// Per-vertex colour lists. Each list is sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        ListAssignment { lists }
    }

    /// Every vertex gets `{1, ..., k}`.
    pub fn uniform(n: usize, k: u32) -> Self {
        ListAssignment {
            lists: vec![(1..=k).collect(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(Vec::len).collect()
    }

    /// Errors unless there is exactly one list per vertex of `g`.
    pub fn check_covers(&self, g: &Graph) -> Result<()> {
        if self.lists.len() != g.n() {
            return Err(Error::ListCoverage {
                lists: self.lists.len(),
                n: g.n(),
            });
        }
        Ok(())
    }

    /// Lists of the surviving vertices, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> ListAssignment {
        ListAssignment {
            lists: keep.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }

    /// Copy with the list of `v` replaced.
    pub fn with_list(&self, v: usize, list: Vec<Color>) -> ListAssignment {
        let mut lists = self.lists.clone();
        lists[v] = list;
        ListAssignment::new(lists)
    }

    pub fn to_json(&self) -> ListAssignmentJson {
        ListAssignmentJson {
            lists: self
                .lists
                .iter()
                .enumerate()
                .map(|(v, l)| (v.to_string(), l.clone()))
                .collect(),
        }
    }

    /// Reads `{"lists": {"0": [...], ...}}`; keys must be exactly `0..n`.
    pub fn from_json(j: &ListAssignmentJson) -> Result<Self> {
        let mut lists = vec![None; j.lists.len()];
        for (k, l) in &j.lists {
            let v: usize = k
                .parse()
                .map_err(|_| Error::InvalidParams(format!("bad vertex key {k:?}")))?;
            if v >= lists.len() {
                return Err(Error::InvalidParams(format!(
                    "vertex keys must be 0..{}",
                    lists.len()
                )));
            }
            lists[v] = Some(l.clone());
        }
        Ok(ListAssignment::new(
            lists
                .into_iter()
                .map(|l| l.expect("keys are a permutation"))
                .collect(),
        ))
    }
}

/// Wire form `{"lists": {"0": [1, 2, 3], ...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignmentJson {
    pub lists: BTreeMap<String, Vec<Color>>,
}

/// A partial map from vertices to colours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartialColoring {
    colors: Vec<Option<Color>>,
}

impl PartialColoring {
    pub fn empty(n: usize) -> Self {
        PartialColoring {
            colors: vec![None; n],
        }
    }

    pub fn from_total(colors: Vec<Color>) -> Self {
        PartialColoring {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn from_options(colors: Vec<Option<Color>>) -> Self {
        PartialColoring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: Option<Color>) {
        self.colors[v] = c;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    /// Colours of a total colouring.
    pub fn to_total(&self) -> Option<Vec<Color>> {
        self.colors.iter().copied().collect()
    }

    /// No edge with both ends coloured alike, and every assigned colour is
    /// in the vertex's list.
    pub fn is_proper(&self, g: &Graph, l: &ListAssignment) -> bool {
        self.colors.len() == g.n()
            && self
                .colors
                .iter()
                .enumerate()
                .all(|(v, c)| c.is_none_or(|c| l.list(v).binary_search(&c).is_ok()))
            && g.edges()
                .all(|(u, v)| self.colors[u].is_none() || self.colors[u] != self.colors[v])
    }
}

/// `L_c(v) = L(v) \ {c(u) : u ∈ N(v)}`. The colour of `v` itself, if any,
/// is not removed.
pub fn residual_list(g: &Graph, l: &ListAssignment, c: &PartialColoring, v: usize) -> Vec<Color> {
    l.list(v)
        .iter()
        .copied()
        .filter(|&x| !g.neighbors(v).iter().any(|&u| c.get(u) == Some(x)))
        .collect()
}

/// How [`degree_list_assignment`] draws colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UniversePolicy {
    /// `L(v) = {1, ..., k(deg v)}`.
    SharedPrefix,
    /// `k(deg v)` distinct colours drawn uniformly from `{1, ..., universe}`
    /// with ChaCha8 seeded by `seed`.
    Random { seed: u64, universe: u32 },
}

/// A `(k ∘ deg)`-list-assignment: `|L(v)| = k(deg(v))` for every `v`.
pub fn degree_list_assignment(
    g: &Graph,
    k: KSpec,
    policy: UniversePolicy,
) -> Result<ListAssignment> {
    let sizes: Vec<u64> = (0..g.n()).map(|v| k.eval(g.degree(v) as u64)).collect();
    match policy {
        UniversePolicy::SharedPrefix => Ok(ListAssignment::new(
            sizes.iter().map(|&s| (1..=s as Color).collect()).collect(),
        )),
        UniversePolicy::Random { seed, universe } => {
            if let Some(&s) = sizes.iter().find(|&&s| s > universe as u64) {
                return Err(Error::InvalidParams(format!(
                    "list size {s} exceeds universe {universe}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(ListAssignment::new(
                sizes
                    .iter()
                    .map(|&s| {
                        sample(&mut rng, universe as usize, s as usize)
                            .into_iter()
                            .map(|i| i as Color + 1)
                            .collect()
                    })
                    .collect(),
            ))
        }
    }
}
