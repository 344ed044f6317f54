//! Outward-rounded interval arithmetic over dyadic rationals.
//!
//! Endpoints are `m · 2^e` with a big-integer mantissa. Every operation
//! computes exact bounds where it can and otherwise rounds the lower end
//! toward −∞ and the upper end toward +∞ to `prec` significant bits, so the
//! true value always lies in `[lo, hi]`. `exp` and `ln` use truncated series
//! with explicit remainder bounds; nothing here touches hardware floats.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Precision ladder used by the adaptive certificate engines.
pub const PRECISION_LADDER: [u32; 4] = [64, 128, 256, 512];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

/// `mant · 2^exp`, kept with an odd mantissa (or zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn floor_shr(m: &BigInt, k: u64) -> BigInt {
    m.div_floor(&(BigInt::one() << k))
}

fn bits(m: &BigInt) -> i64 {
    m.bits() as i64
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Dyadic::new(v.into(), 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    /// Exact `self · 2^k`.
    pub fn shl(&self, k: i64) -> Dyadic {
        Dyadic::new(self.mant.clone(), self.exp + k)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    /// Upper bound on `log2 |self|` (exclusive): `|self| < 2^magnitude`.
    pub fn magnitude(&self) -> i64 {
        bits(&self.mant) + self.exp
    }

    /// Rounds to at most `prec` significant bits in direction `dir`.
    pub fn round(&self, prec: u32, dir: Round) -> Dyadic {
        let excess = bits(&self.mant) - prec as i64;
        if excess <= 0 {
            return self.clone();
        }
        let k = excess as u64;
        let mant = match dir {
            Round::Down => floor_shr(&self.mant, k),
            Round::Up => -floor_shr(&-&self.mant, k),
        };
        Dyadic::new(mant, self.exp + excess)
    }

    /// `a / b` rounded to `prec` bits in direction `dir`. `b` must be nonzero.
    pub fn div(a: &Dyadic, b: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        assert!(!b.is_zero(), "dyadic division by zero");
        if a.is_zero() {
            return Dyadic::zero();
        }
        let shift = prec as i64 + bits(&b.mant) - bits(&a.mant) + 2;
        let (num, den) = if shift >= 0 {
            (&a.mant << shift as u64, b.mant.clone())
        } else {
            (a.mant.clone(), &b.mant << (-shift) as u64)
        };
        let q = match dir {
            Round::Down => num.div_floor(&den),
            Round::Up => -((-num).div_floor(&den)),
        };
        Dyadic::new(q, a.exp - b.exp - shift).round(prec, dir)
    }

    pub fn from_rational(r: &BigRational, prec: u32, dir: Round) -> Dyadic {
        let exact = Dyadic::from_int(r.numer().clone());
        if r.denom().is_one() {
            return exact.round(prec, dir);
        }
        Dyadic::div(&exact, &Dyadic::from_int(r.denom().clone()), prec, dir)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            floor_shr(&self.mant, (-self.exp) as u64)
        }
    }

    pub fn ceil(&self) -> BigInt {
        -self.neg().floor()
    }

    pub fn to_f64(&self) -> f64 {
        // Keep 60 leading bits, then scale.
        let d = self.round(60, Round::Down);
        let m = d.mant.to_f64().unwrap_or(f64::NAN);
        m * 2f64.powi(d.exp.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        self.to_rational().cmp(r)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub(other).mant.sign().cmp(&num_bigint::Sign::NoSign)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mant, self.exp)
    }
}

/// A closed interval `[lo, hi]` with dyadic endpoints and a working
/// precision in bits. The represented real is guaranteed to lie inside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Interval {
            lo: lo.round(prec, Round::Down),
            hi: hi.round(prec, Round::Up),
            prec,
        }
    }

    pub fn point(d: Dyadic, prec: u32) -> Self {
        Interval::new(d.clone(), d, prec)
    }

    pub fn from_int(v: impl Into<BigInt>, prec: u32) -> Self {
        Interval::point(Dyadic::from_int(v), prec)
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        Interval {
            lo: Dyadic::from_rational(r, prec, Round::Down),
            hi: Dyadic::from_rational(r, prec, Round::Up),
            prec,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }

    fn with(&self, lo: Dyadic, hi: Dyadic) -> Interval {
        Interval {
            lo: lo.round(self.prec, Round::Down),
            hi: hi.round(self.prec, Round::Up),
            prec: self.prec,
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        self.with(self.lo.add(&o.lo), self.hi.add(&o.hi))
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        self.with(self.lo.sub(&o.hi), self.hi.sub(&o.lo))
    }

    pub fn neg(&self) -> Interval {
        self.with(self.hi.neg(), self.lo.neg())
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        if !self.lo.is_negative() && !o.lo.is_negative() {
            return self.with(self.lo.mul(&o.lo), self.hi.mul(&o.hi));
        }
        let p = [
            self.lo.mul(&o.lo),
            self.lo.mul(&o.hi),
            self.hi.mul(&o.lo),
            self.hi.mul(&o.hi),
        ];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        self.with(lo, hi)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Division; panics if the divisor contains zero.
    pub fn div(&self, o: &Interval) -> Interval {
        assert!(
            !o.contains_zero(),
            "interval division by an interval containing zero"
        );
        let prec = self.prec;
        if o.lo.is_positive() {
            // Positive divisor: each endpoint has one extreme partner.
            let lo_den = if self.lo.is_negative() { &o.lo } else { &o.hi };
            let hi_den = if self.hi.is_negative() { &o.hi } else { &o.lo };
            return self.with(
                Dyadic::div(&self.lo, lo_den, prec, Round::Down),
                Dyadic::div(&self.hi, hi_den, prec, Round::Up),
            );
        }
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&o.lo, &o.hi] {
                let d = Dyadic::div(a, b, prec, Round::Down);
                let u = Dyadic::div(a, b, prec, Round::Up);
                lo = Some(lo.map_or(d.clone(), |x| x.min(d)));
                hi = Some(hi.map_or(u.clone(), |x| x.max(u)));
            }
        }
        self.with(lo.unwrap(), hi.unwrap())
    }

    /// `self^n` for a natural exponent.
    pub fn powi(&self, n: u64) -> Interval {
        if n == 0 {
            return Interval::from_int(1, self.prec);
        }
        if self.lo.is_negative() && self.hi.is_positive() && n.is_multiple_of(2) {
            let m = self.lo.abs().max(self.hi.abs());
            let up = Interval::point(m, self.prec).powi(n);
            return self.with(Dyadic::zero(), up.hi);
        }
        let mut base = self.clone();
        let mut acc = Interval::from_int(1, self.prec);
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn exp(&self) -> Interval {
        self.with(
            exp_bound(&self.lo, self.prec, Round::Down),
            exp_bound(&self.hi, self.prec, Round::Up),
        )
    }

    /// Natural logarithm; panics unless the interval is strictly positive.
    pub fn ln(&self) -> Interval {
        assert!(self.lo.is_positive(), "ln of a non-positive interval");
        self.with(
            ln_bound(&self.lo, self.prec, Round::Down),
            ln_bound(&self.hi, self.prec, Round::Up),
        )
    }

    /// `self^exponent` for a strictly positive base.
    pub fn pow(&self, exponent: &Interval) -> Interval {
        exponent.mul(&self.ln()).exp()
    }

    /// `self^(p/q)` for a strictly positive base; exact-integer exponents go
    /// through [`Interval::powi`].
    pub fn pow_rational(&self, e: &BigRational) -> Interval {
        if e.is_integer() {
            let n = e.numer();
            let mag = n.abs().to_u64().expect("integer exponent fits u64");
            let p = self.powi(mag);
            return if n.is_negative() {
                Interval::from_int(1, self.prec).div(&p)
            } else {
                p
            };
        }
        self.pow(&Interval::from_rational(e, self.prec))
    }

    /// Euler's number, cached per precision.
    pub fn e(prec: u32) -> Interval {
        E.with(|c| {
            c.borrow_mut()
                .entry(prec)
                .or_insert_with(|| Interval::from_int(1, prec).exp())
                .clone()
        })
    }

    pub fn certainly_le(&self, o: &Interval) -> bool {
        self.hi <= o.lo
    }

    pub fn certainly_lt(&self, o: &Interval) -> bool {
        self.hi < o.lo
    }

    /// Compares against an exact rational: `Some(Less)` if every point is
    /// below it, `Some(Greater)` if every point is above, `None` if it lies
    /// inside (or touches an endpoint of) the interval.
    pub fn compare_rational(&self, r: &BigRational) -> Option<Ordering> {
        if self.hi.cmp_rational(r) == Ordering::Less {
            Some(Ordering::Less)
        } else if self.lo.cmp_rational(r) == Ordering::Greater {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// `⌈x⌉` if it is the same for every point of the interval.
    pub fn ceil_if_determined(&self) -> Option<BigInt> {
        let a = self.lo.ceil();
        (a == self.hi.ceil()).then_some(a)
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        self.lo.cmp_rational(r) != Ordering::Greater && self.hi.cmp_rational(r) != Ordering::Less
    }
}

/// Wire form of an interval: exact endpoints as `m*2^e` strings plus
/// decimal approximations for reading.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
    pub lo_approx: f64,
    pub hi_approx: f64,
    pub precision: u32,
}

impl Interval {
    pub fn to_json(&self) -> IntervalJson {
        IntervalJson {
            lo: self.lo.to_string(),
            hi: self.hi.to_string(),
            lo_approx: self.lo.to_f64(),
            hi_approx: self.hi.to_f64(),
            precision: self.prec,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:.12e}, {:.12e}]@{}",
            self.lo.to_f64(),
            self.hi.to_f64(),
            self.prec
        )
    }
}

const GUARD_BITS: u32 = 32;

/// Bound on `exp(x)` in direction `dir`, `prec` bits.
fn exp_bound(x: &Dyadic, prec: u32, dir: Round) -> Dyadic {
    if x.is_zero() {
        return Dyadic::from_int(1);
    }
    // Halve until |y| < 2^-10 (a handful of series terms), then square back.
    let squarings = (x.magnitude() + 10).max(0) as u32;
    let w = prec + GUARD_BITS + squarings;
    let y = Interval::point(x.shl(-(squarings as i64)), w);
    let tiny = -(w as i64) - 4;
    let mut sum = Interval::from_int(1, w);
    let mut term = Interval::from_int(1, w);
    let mut i = 1u64;
    let tail = loop {
        term = term.mul(&y).div(&Interval::from_int(i, w));
        sum = sum.add(&term);
        let t = term.lo.abs().max(term.hi.abs());
        if t.magnitude() < tiny || t.is_zero() {
            // With |y| < 1/2 the remaining terms sum to at most |term|.
            break t;
        }
        i += 1;
    };
    let mut r = Interval {
        lo: sum.lo.sub(&tail),
        hi: sum.hi.add(&tail),
        prec: w,
    };
    for _ in 0..squarings {
        r = r.mul(&r);
    }
    match dir {
        Round::Down => r.lo.round(prec, Round::Down),
        Round::Up => r.hi.round(prec, Round::Up),
    }
}

/// `atanh(y)` for `0 <= y <= 1/3` as an interval at `w` bits.
fn atanh_small(y: &Interval, w: u32) -> Interval {
    let y2 = y.mul(y);
    let tiny = -(w as i64) - 4;
    let mut sum = y.clone();
    let mut pow = y.clone();
    let mut k = 1u64;
    loop {
        pow = pow.mul(&y2);
        let term = pow.div(&Interval::from_int(2 * k + 1, w));
        sum = sum.add(&term);
        if pow.hi.magnitude() < tiny || pow.hi.is_zero() {
            break;
        }
        k += 1;
    }
    // Remaining terms: sum_{j>k} y^(2j+1)/(2j+1) <= y^(2k+3) / (1 - y^2) <= (9/8) y^(2k+3).
    let next = pow.hi.mul(&y2.hi);
    let tail = next.mul(&Dyadic::from_int(9)).shl(-3);
    Interval {
        lo: sum.lo.clone(),
        hi: sum.hi.add(&tail),
        prec: w,
    }
}

thread_local! {
    static LN2: RefCell<HashMap<u32, Interval>> = RefCell::new(HashMap::new());
    static E: RefCell<HashMap<u32, Interval>> = RefCell::new(HashMap::new());
    static LN_GRID: RefCell<HashMap<(u32, u32), Interval>> = RefCell::new(HashMap::new());
}

fn ln2(w: u32) -> Interval {
    LN2.with(|c| {
        c.borrow_mut()
            .entry(w)
            .or_insert_with(|| {
                let third = Interval::from_rational(&BigRational::new(1.into(), 3.into()), w);
                let a = atanh_small(&third, w);
                a.add(&a)
            })
            .clone()
    })
}

/// `ln(1 + j/32)`, cached.
fn ln_grid(j: u32, w: u32) -> Interval {
    LN_GRID.with(|c| {
        c.borrow_mut()
            .entry((j, w))
            .or_insert_with(|| {
                let y = Interval::from_rational(&BigRational::new(j.into(), (64 + j).into()), w);
                let a = atanh_small(&y, w);
                a.add(&a)
            })
            .clone()
    })
}

/// Bound on `ln(x)` for `x > 0` in direction `dir`, `prec` bits.
fn ln_bound(x: &Dyadic, prec: u32, dir: Round) -> Dyadic {
    assert!(x.is_positive());
    let w = prec + GUARD_BITS;
    // x = m * 2^k with m in [1, 2)
    let b = bits(&x.mant);
    let k = x.exp + b - 1;
    let m = Dyadic::new(x.mant.clone(), -(b - 1));
    // ln m = ln c + 2·atanh((m − c)/(m + c)) with c = 1 + j/32 ≤ m.
    let m32 = m.shl(5).floor().to_u32().expect("32·m < 64");
    let j = m32 - 32;
    let c = Interval::from_rational(&BigRational::new((32 + j).into(), 32.into()), w);
    let mi = Interval::point(m, w);
    let y = mi.sub(&c).div(&mi.add(&c));
    let at = atanh_small(&y, w);
    let r = at
        .add(&at)
        .add(&ln_grid(j, w))
        .add(&ln2(w).mul(&Interval::from_int(k, w)));
    match dir {
        Round::Down => r.lo.round(prec, Round::Down),
        Round::Up => r.hi.round(prec, Round::Up),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(s: &str) -> BigRational {
        // decimal string -> rational
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        let den = BigInt::from(10).pow(frac.len() as u32);
        let num: BigInt = format!("{int}{frac}").parse().unwrap();
        BigRational::new(num, den)
    }

    const E_50: &str = "2.71828182845904523536028747135266249775724709369995";
    const LN2_50: &str = "0.69314718055994530941723212145817656807550013436025";

    #[test]
    fn e_encloses_reference_digits() {
        for prec in PRECISION_LADDER {
            let e = Interval::e(prec);
            let r = rat(E_50);
            let slack = BigRational::new(1.into(), BigInt::from(10).pow(48));
            assert!(e.lo().to_rational() <= &r + &slack, "{prec}");
            assert!(e.hi().to_rational() >= &r - &slack, "{prec}");
            // width shrinks with precision
            assert!(
                e.width().magnitude() <= -(prec as i64) + 4,
                "{prec}: {}",
                e.width()
            );
        }
    }

    #[test]
    fn ln2_encloses_reference_digits() {
        let l = Interval::from_int(2, 256).ln();
        let r = rat(LN2_50);
        let slack = BigRational::new(1.into(), BigInt::from(10).pow(48));
        assert!(l.lo().to_rational() <= &r + &slack && l.hi().to_rational() >= &r - &slack);
    }

    #[test]
    fn exact_points_stay_exact() {
        let x = Interval::from_int(3, 64);
        assert_eq!(x.powi(4), Interval::from_int(81, 64));
        let z = Interval::from_int(0, 64);
        assert_eq!(z.exp(), Interval::from_int(1, 64));
        assert_eq!(Interval::from_int(1, 64).ln().lo().to_f64(), 0.0);
    }

    #[test]
    fn third_power_of_two_thirds() {
        let x = Interval::from_rational(&BigRational::new(2.into(), 3.into()), 128);
        let c = x.powi(5);
        assert!(c.contains_rational(&BigRational::new(32.into(), 243.into())));
    }

    #[test]
    fn rational_power_matches_root() {
        // 2^(-14/3) * 203.5 = 8.0123104266752...
        let v = Interval::from_int(2, 128)
            .pow_rational(&BigRational::new((-14).into(), 3.into()))
            .mul(&Interval::from_rational(
                &BigRational::new(407.into(), 2.into()),
                128,
            ));
        assert!(v.compare_rational(&rat("8.0123104266752")) == Some(Ordering::Greater));
        assert!(v.compare_rational(&rat("8.0123104266753")) == Some(Ordering::Less));
    }

    #[test]
    fn ceil_detection() {
        let x = Interval::from_rational(&BigRational::new(7.into(), 2.into()), 64);
        assert_eq!(x.ceil_if_determined(), Some(BigInt::from(4)));
        let y = Interval::new(Dyadic::from_int(3), Dyadic::from_int(4), 64);
        assert_eq!(y.ceil_if_determined(), None);
    }

    #[test]
    fn dyadic_rounding_brackets() {
        let third = BigRational::new(1.into(), 3.into());
        let lo = Dyadic::from_rational(&third, 20, Round::Down);
        let hi = Dyadic::from_rational(&third, 20, Round::Up);
        assert!(lo.to_rational() < third && third < hi.to_rational());
        assert!(hi.mantissa().bits() <= 20);
        let neg = BigRational::new((-1).into(), 3.into());
        assert!(Dyadic::from_rational(&neg, 20, Round::Down).to_rational() < neg);
        assert!(Dyadic::from_rational(&neg, 20, Round::Up).to_rational() > neg);
    }

    proptest! {
        #[test]
        fn exp_matches_f64(num in -4000i64..4000, den in 1i64..200) {
            let r = BigRational::new(num.into(), den.into());
            let x = Interval::from_rational(&r, 64).exp();
            let f = (num as f64 / den as f64).exp();
            prop_assume!(f.is_normal() && f < 1e300);
            prop_assert!(x.lo().to_f64() <= f * (1.0 + 1e-12));
            prop_assert!(x.hi().to_f64() >= f * (1.0 - 1e-12));
            prop_assert!((x.hi().to_f64() - x.lo().to_f64()) <= f * 1e-15);
        }

        #[test]
        fn ln_matches_f64(num in 1i64..1_000_000, den in 1i64..1000) {
            let r = BigRational::new(num.into(), den.into());
            let x = Interval::from_rational(&r, 64).ln();
            let f = (num as f64 / den as f64).ln();
            prop_assert!(x.lo().to_f64() <= f + 1e-12);
            prop_assert!(x.hi().to_f64() >= f - 1e-12);
        }

        #[test]
        fn exp_ln_round_trip_encloses(num in 1i64..100_000, den in 1i64..1000, prec_idx in 0usize..4) {
            let prec = PRECISION_LADDER[prec_idx];
            let r = BigRational::new(num.into(), den.into());
            let x = Interval::from_rational(&r, prec).ln().exp();
            prop_assert!(x.contains_rational(&r));
        }

        #[test]
        fn higher_precision_nested_width(num in 1i64..10_000, den in 1i64..100) {
            let r = BigRational::new(num.into(), den.into());
            let a = Interval::from_rational(&r, 64).ln();
            let b = Interval::from_rational(&r, 256).ln();
            // both enclose the same real, so they must intersect
            prop_assert!(a.lo() <= b.hi() && b.lo() <= a.hi());
            prop_assert!(b.width() <= a.width());
        }
    }
}
