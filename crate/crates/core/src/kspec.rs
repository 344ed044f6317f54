//! List-size functions `k : ℕ → ℕ` applied to vertex degrees.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{int, ratio};
use crate::{Error, Result};

/// A non-decreasing, positive list-size function of the degree.
///
/// Every variant is an instance of the affine-ceiling family
/// `x ↦ mult · ⌈(a·x + b) / c⌉ + offset`; the named variants are
///
/// | variant              | function             |
/// |----------------------|----------------------|
/// | `Half`               | `⌈(x+1)/2⌉ + 1`      |
/// | `ThreeQuarter`       | `⌈3(x+1)/4⌉`         |
/// | `TwoThirdsDoubled`   | `2⌈(x+2)/3⌉`         |
/// | `HalfBipartite`      | `⌈x/2⌉ + 1`          |
/// | `Constant(k)`        | `k`                  |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KSpec {
    Half,
    ThreeQuarter,
    TwoThirdsDoubled,
    HalfBipartite,
    Constant(u64),
    Affine {
        mult: u64,
        a: u64,
        b: u64,
        c: u64,
        offset: u64,
    },
}

/// `slope · x + intercept`, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub slope: BigRational,
    pub intercept: BigRational,
}

impl LinearForm {
    pub fn eval(&self, x: &BigRational) -> BigRational {
        &self.slope * x + &self.intercept
    }
}

impl KSpec {
    /// Parameters `(mult, a, b, c, offset)` of the affine-ceiling form.
    pub fn affine_params(self) -> (u64, u64, u64, u64, u64) {
        match self {
            KSpec::Half => (1, 1, 1, 2, 1),
            KSpec::ThreeQuarter => (1, 3, 3, 4, 0),
            KSpec::TwoThirdsDoubled => (2, 1, 2, 3, 0),
            KSpec::HalfBipartite => (1, 1, 0, 2, 1),
            KSpec::Constant(k) => (0, 0, 0, 1, k),
            KSpec::Affine {
                mult,
                a,
                b,
                c,
                offset,
            } => (mult, a, b, c, offset),
        }
    }

    /// Rejects zero divisors and functions that are not positive at 0.
    pub fn validate(self) -> Result<Self> {
        let (mult, _, b, c, offset) = self.affine_params();
        if c == 0 {
            return Err(Error::InvalidParams(
                "k-spec divisor must be positive".into(),
            ));
        }
        if mult * b.div_ceil(c) + offset == 0 {
            return Err(Error::InvalidParams(
                "k-spec must be positive at degree 0".into(),
            ));
        }
        Ok(self)
    }

    pub fn eval(self, x: u64) -> u64 {
        let (mult, a, b, c, offset) = self.affine_params();
        mult * (a * x + b).div_ceil(c) + offset
    }

    /// `k(x) ≥ lower_bound(x)` for every `x ≥ 0` (drop the ceiling).
    pub fn lower_bound(self) -> LinearForm {
        let (mult, a, b, c, offset) = self.affine_params();
        LinearForm {
            slope: ratio(mult * a, c),
            intercept: ratio(mult * b, c) + int(offset),
        }
    }

    /// `k(x) ≤ upper_bound(x)` for every `x ≥ 0` (`⌈y/c⌉ ≤ (y + c − 1)/c`).
    pub fn upper_bound(self) -> LinearForm {
        let (mult, a, b, c, offset) = self.affine_params();
        LinearForm {
            slope: ratio(mult * a, c),
            intercept: ratio(mult * (b + c - 1), c) + int(offset),
        }
    }
}

impl fmt::Display for KSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KSpec::Half => write!(f, "half"),
            KSpec::ThreeQuarter => write!(f, "three-quarter"),
            KSpec::TwoThirdsDoubled => write!(f, "two-thirds"),
            KSpec::HalfBipartite => write!(f, "half-bipartite"),
            KSpec::Constant(k) => write!(f, "const:{k}"),
            KSpec::Affine {
                mult,
                a,
                b,
                c,
                offset,
            } => write!(f, "affine:{mult},{a},{b},{c},{offset}"),
        }
    }
}

impl FromStr for KSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParams(format!("unknown k-spec `{s}`"));
        let spec = match s {
            "half" => KSpec::Half,
            "three-quarter" | "three_quarter" => KSpec::ThreeQuarter,
            "two-thirds" | "two_thirds_doubled" => KSpec::TwoThirdsDoubled,
            "half-bipartite" => KSpec::HalfBipartite,
            _ => {
                if let Some(k) = s.strip_prefix("const:") {
                    KSpec::Constant(k.parse().map_err(|_| bad())?)
                } else if let Some(rest) = s.strip_prefix("affine:") {
                    let v: Vec<u64> = rest
                        .split(',')
                        .map(|t| t.trim().parse())
                        .collect::<Result<_, _>>()
                        .map_err(|_| bad())?;
                    let [mult, a, b, c, offset] = v[..] else {
                        return Err(bad());
                    };
                    KSpec::Affine {
                        mult,
                        a,
                        b,
                        c,
                        offset,
                    }
                } else {
                    return Err(bad());
                }
            }
        };
        spec.validate()
    }
}

impl Serialize for KSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_values() {
        assert_eq!(KSpec::Half.eval(2), 3);
        assert_eq!(KSpec::Half.eval(3), 3);
        assert_eq!(KSpec::Half.eval(1), 2);
        assert_eq!(KSpec::Half.eval(4), 4);
        assert_eq!(KSpec::Half.eval(524), 264);
        assert_eq!(KSpec::ThreeQuarter.eval(5), 5);
        assert_eq!(KSpec::TwoThirdsDoubled.eval(5), 6);
        assert_eq!(KSpec::HalfBipartite.eval(3), 3);
        assert_eq!(KSpec::HalfBipartite.eval(2), 2);
        assert_eq!(KSpec::Constant(2).eval(100), 2);
    }

    #[test]
    fn bounds_sandwich_and_monotone() {
        for spec in [
            KSpec::Half,
            KSpec::ThreeQuarter,
            KSpec::TwoThirdsDoubled,
            KSpec::HalfBipartite,
            KSpec::Constant(3),
        ] {
            let (lo, hi) = (spec.lower_bound(), spec.upper_bound());
            for x in 0..200u64 {
                let k = int(spec.eval(x));
                let xr = int(x);
                assert!(lo.eval(&xr) <= k && k <= hi.eval(&xr), "{spec} at {x}");
                assert!(spec.eval(x + 1) >= spec.eval(x));
            }
        }
    }

    #[test]
    fn parse_and_print() {
        for s in [
            "half",
            "three-quarter",
            "two-thirds",
            "const:7",
            "affine:1,1,1,2,1",
        ] {
            let k: KSpec = s.parse().unwrap();
            assert_eq!(k.to_string(), s);
        }
        assert!("const:0".parse::<KSpec>().is_err());
        assert!("affine:1,1,1,0,1".parse::<KSpec>().is_err());
        assert!("quarter".parse::<KSpec>().is_err());
    }
}
