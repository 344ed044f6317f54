//! Exact uniform sampling of list colourings by self-reducibility.

use std::collections::HashMap;

use num_bigint::{BigUint, RandBigInt};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::count::count_unchecked;
use super::list::{Color, ListAssignment, PartialColoring};
use crate::graph::Graph;
use crate::{Error, Limits, Result};

/// One exact uniform sample from `C_L(G)`, drawn with ChaCha8 seeded by
/// `seed`.
pub fn uniform_sample_coloring(
    g: &Graph,
    l: &ListAssignment,
    seed: u64,
) -> Result<PartialColoring> {
    let mut sampler = ColoringSampler::new(g, l, &Limits::default())?;
    Ok(sampler.sample(&mut ChaCha8Rng::seed_from_u64(seed)))
}

/// Reusable sampler. Vertices are coloured in the order `0, 1, ..., n-1`;
/// vertex `i` receives colour `c` with probability (extensions of the
/// prefix with `c`) / (extensions of the prefix). Extension counts are
/// exact and cached per prefix, so repeated sampling on one instance only
/// pays for each prefix once.
///
/// Each sample consumes exactly one uniform draw from `[0, |C_L(G)|)` and
/// walks the prefix tree with it, which realises the sequential rule above.
pub struct ColoringSampler {
    g: Graph,
    l: ListAssignment,
    total: BigUint,
    cache: HashMap<Vec<Color>, BigUint>,
}

impl ColoringSampler {
    pub fn new(g: &Graph, l: &ListAssignment, limits: &Limits) -> Result<Self> {
        l.check_covers(g)?;
        limits.check("graph order for sampling", g.n(), limits.count_max_n)?;
        let total = count_unchecked(g, l);
        if total.is_zero() {
            return Err(Error::NoColoring);
        }
        Ok(ColoringSampler {
            g: g.clone(),
            l: l.clone(),
            total,
            cache: HashMap::new(),
        })
    }

    /// `|C_L(G)|`.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    pub fn sample(&mut self, rng: &mut ChaCha8Rng) -> PartialColoring {
        let mut r = rng.gen_biguint_below(&self.total);
        let mut prefix: Vec<Color> = Vec::with_capacity(self.g.n());
        for v in 0..self.g.n() {
            let list = self.l.list(v).to_vec();
            let mut chosen = None;
            for c in list {
                prefix.push(c);
                let ext = self.extensions(&prefix);
                if r < ext {
                    chosen = Some(c);
                    break;
                }
                r -= ext;
                prefix.pop();
            }
            assert!(
                chosen.is_some(),
                "draw below the total always lands on a colour"
            );
        }
        PartialColoring::from_total(prefix)
    }

    /// `count` samples from one ChaCha8 stream seeded by `seed`; the first
    /// equals [`uniform_sample_coloring`] with the same seed.
    pub fn samples(&mut self, seed: u64, count: usize) -> Vec<PartialColoring> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| self.sample(&mut rng)).collect()
    }

    /// Number of proper colourings extending the colours of `0..prefix.len()`.
    fn extensions(&mut self, prefix: &[Color]) -> BigUint {
        if let Some(x) = self.cache.get(prefix) {
            return x.clone();
        }
        let i = prefix.len() - 1;
        let v = i;
        let clash = self
            .g
            .neighbors(v)
            .iter()
            .any(|&w| w < v && prefix[w] == prefix[v]);
        let x = if clash {
            BigUint::zero()
        } else {
            let rest: Vec<usize> = (prefix.len()..self.g.n()).collect();
            let h = self.g.induced_subgraph(&rest);
            let lists = rest
                .iter()
                .map(|&u| {
                    self.l
                        .list(u)
                        .iter()
                        .copied()
                        .filter(|&c| {
                            !self
                                .g
                                .neighbors(u)
                                .iter()
                                .any(|&w| w < prefix.len() && prefix[w] == c)
                        })
                        .collect()
                })
                .collect();
            count_unchecked(&h, &ListAssignment::new(lists))
        };
        self.cache.insert(prefix.to_vec(), x.clone());
        x
    }
}
