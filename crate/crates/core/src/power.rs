//! Exact decision of `a · b^(p/q) ≥ target` over big integers.
//!
//! For positive `a`, `b` and `target`, raising both sides to the `q`-th
//! power preserves the order, so the inequality is equivalent to
//! `a^q · b^p ≥ target^q`, and clearing denominators gives one comparison
//! of natural numbers. No transcendental function is evaluated.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Results larger than this many decimal digits are not computed.
pub const MAX_DIGITS: u64 = 10_000_000;

/// The two cleared sides `lhs = a_n^q · b_n^p · T_d^q` and
/// `rhs = T_n^q · a_d^q · b_d^p` of the comparison, and whether `lhs ≥ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerComparison {
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub holds: bool,
}

/// Decides `a · b^(p/q) ≥ target` exactly. Requires `a > 0`, `b > 0`,
/// `target > 0` and `q > 0`; `p` and `q` are used as given, so an
/// unreduced exponent yields a rescaled but equivalent comparison.
/// Returns `None` when either side would exceed [`MAX_DIGITS`] digits.
pub fn power_ge(
    a: &BigRational,
    b: &BigRational,
    p: u64,
    q: u64,
    target: &BigRational,
) -> Option<PowerComparison> {
    assert!(
        a.is_positive() && b.is_positive() && target.is_positive(),
        "positive operands"
    );
    assert!(q > 0, "positive root");
    let nat = |x: &num_bigint::BigInt| x.magnitude().clone();
    let (an, ad) = (nat(a.numer()), nat(a.denom()));
    let (bn, bd) = (nat(b.numer()), nat(b.denom()));
    let (tn, td) = (nat(target.numer()), nat(target.denom()));

    let bits = |x: &BigUint, e: u64| x.bits().saturating_mul(e);
    let lhs_bits = bits(&an, q)
        .saturating_add(bits(&bn, p))
        .saturating_add(bits(&td, q));
    let rhs_bits = bits(&tn, q)
        .saturating_add(bits(&ad, q))
        .saturating_add(bits(&bd, p));
    // log10(2) < 0.30103
    let max_bits = MAX_DIGITS.saturating_mul(100_000) / 30_103;
    if lhs_bits.max(rhs_bits) > max_bits {
        return None;
    }
    let pw = |x: &BigUint, e: u64| -> BigUint {
        if e == 0 {
            return BigUint::from(1u8);
        }
        x.pow(u32::try_from(e).expect("exponent bounded by the digit guard"))
    };
    let lhs = pw(&an, q) * pw(&bn, p) * pw(&td, q);
    let rhs = pw(&tn, q) * pw(&ad, q) * pw(&bd, p);
    let holds = lhs >= rhs;
    Some(PowerComparison { lhs, rhs, holds })
}

/// Lowest-terms numerator and denominator of a positive or zero rational
/// exponent, as machine integers.
pub fn exponent_parts(e: &BigRational) -> Option<(u64, u64)> {
    use num_traits::ToPrimitive;
    if e.is_negative() {
        return None;
    }
    if e.is_zero() {
        return Some((0, 1));
    }
    Some((e.numer().to_u64()?, e.denom().to_u64()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn simple_cases() {
        // 2 · (1/2)^(1/1) = 1 ≥ 1
        assert!(
            power_ge(&int(2), &ratio(1, 2), 1, 1, &int(1))
                .unwrap()
                .holds
        );
        // 2 · (1/2)^(3/2) ≈ 0.707 < 1
        assert!(
            !power_ge(&int(2), &ratio(1, 2), 3, 2, &int(1))
                .unwrap()
                .holds
        );
        // 203.5 · 2^(-14/3) ≥ 8.01
        assert!(
            power_ge(&ratio(407, 2), &ratio(1, 2), 14, 3, &ratio(801, 100))
                .unwrap()
                .holds
        );
        assert!(
            !power_ge(&ratio(377, 2), &ratio(1, 2), 14, 3, &ratio(801, 100))
                .unwrap()
                .holds
        );
    }

    #[test]
    fn digit_guard() {
        assert!(power_ge(&int(3), &ratio(1, 2), 1, 100_000_000, &int(1)).is_none());
    }

    proptest! {
        #[test]
        fn matches_floats_away_from_ties(an in 1i64..500, ad in 1i64..50, p in 0u64..40, q in 1u64..20, tn in 1i64..500, td in 1i64..50) {
            let a = ratio(an, ad);
            let t = ratio(tn, td);
            let f = (an as f64 / ad as f64) * 0.5f64.powf(p as f64 / q as f64);
            let g = tn as f64 / td as f64;
            prop_assume!((f - g).abs() > 1e-9 * g);
            prop_assert_eq!(power_ge(&a, &ratio(1, 2), p, q, &t).unwrap().holds, f >= g);
        }

        #[test]
        fn rescaling_keeps_verdict(an in 1i64..200, p in 0u64..30, q in 1u64..12, m in 1u64..5, tn in 1i64..200) {
            let a = int(an);
            let t = int(tn);
            let base = ratio(2, 3);
            prop_assert_eq!(
                power_ge(&a, &base, p, q, &t).unwrap().holds,
                power_ge(&a, &base, p * m, q * m, &t).unwrap().holds
            );
        }
    }
}
