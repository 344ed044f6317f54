//! Choosability of bipartite graphs with per-part degree bounds.
//!
//! For a bipartite graph with parts `A`, `B` of maximum degrees `Δ_A`,
//! `Δ_B`, two sufficient conditions for `(k_A, k_B)`-choosability (with
//! `k_A ≤ Δ_A`, `k_B ≤ Δ_B`) are evaluated here with certified intervals:
//!
//! * transversal: `k_B ≥ (e·k_A·Δ_B)^{1/k_A}·Δ_A`;
//! * coupon: `e(Δ_A(Δ_B − 1) + 1)·(1 − (1 − 1/k_B)^{Δ_A·min(1, k_B/k_A)})^{k_A} ≤ 1`.
//!
//! Both sides involve `e`, so verdicts come from outward-rounded intervals
//! on the precision ladder; a transcendental value never equals the
//! rational it is compared with, so escalation always terminates in
//! practice and `Undecided` is reported if it does not.
//!
//! On top of these sit the half-degree list sizes `k = ⌈Δ/2⌉ + 1`: the
//! threshold table `⌈(e·k_A·(2Δ_A)^{k_A})^{1/(k_A − 1)}⌉`, the two regions
//! `Δ_A ≥ 165, Δ_A ≥ Δ_B ≥ 56` and `Δ_A ≤ 55, Δ_B ≥ 153`, and a scan of a
//! finite window for pairs neither condition certifies.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::certificate::{Certificate, Method, Step, Verdict};
use crate::interval::{Interval, IntervalJson, PRECISION_LADDER};
use crate::rational::{int, ratio};
use crate::{Error, Result};

/// Degree bounds and list sizes per part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BipartiteParams {
    pub delta_a: u64,
    pub delta_b: u64,
    pub k_a: u64,
    pub k_b: u64,
}

impl BipartiteParams {
    pub fn new(delta_a: u64, delta_b: u64, k_a: u64, k_b: u64) -> Self {
        BipartiteParams {
            delta_a,
            delta_b,
            k_a,
            k_b,
        }
    }

    /// List sizes `⌈Δ/2⌉ + 1` on both parts.
    pub fn half(delta_a: u64, delta_b: u64) -> Self {
        Self::new(delta_a, delta_b, half_k(delta_a), half_k(delta_b))
    }

    /// Exchanges the roles of the parts.
    pub fn swapped(self) -> Self {
        Self::new(self.delta_b, self.delta_a, self.k_b, self.k_a)
    }

    fn check_positive(&self) -> Result<()> {
        if self.delta_a == 0 || self.delta_b == 0 || self.k_a == 0 || self.k_b == 0 {
            return Err(Error::InvalidParams(
                "degrees and list sizes must be positive".into(),
            ));
        }
        Ok(())
    }

    /// `k_A ≤ Δ_A` and `k_B ≤ Δ_B`.
    pub fn lists_within_degrees(&self) -> bool {
        self.k_a <= self.delta_a && self.k_b <= self.delta_b
    }

    fn json(&self) -> serde_json::Value {
        json!({ "delta_a": self.delta_a, "delta_b": self.delta_b, "k_a": self.k_a, "k_b": self.k_b })
    }
}

/// `⌈Δ/2⌉ + 1`.
pub fn half_k(delta: u64) -> u64 {
    delta.div_ceil(2) + 1
}

/// Which sufficient condition certified a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    Transversal,
    Coupon,
}

/// Orientation in which a condition fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    AsGiven,
    Swapped,
}

/// `(e·k_A·Δ_B)^{1/k_A}·Δ_A = exp((1 + ln(k_A·Δ_B))/k_A)·Δ_A`.
pub fn transversal_rhs(p: &BipartiteParams, prec: u32) -> Interval {
    let one = Interval::from_int(1, prec);
    let inner = one.add(&Interval::from_int(p.k_a * p.delta_b, prec).ln());
    inner
        .div(&Interval::from_int(p.k_a, prec))
        .exp()
        .mul(&Interval::from_int(p.delta_a, prec))
}

/// `e(Δ_A(Δ_B − 1) + 1)·(1 − (1 − 1/k_B)^{Δ_A·min(1, k_B/k_A)})^{k_A}`.
pub fn coupon_lhs(p: &BipartiteParams, prec: u32) -> Interval {
    let e = Interval::e(prec);
    let count = Interval::from_int(p.delta_a * (p.delta_b - 1) + 1, prec);
    let exponent = int(p.delta_a) * ratio(p.k_b, p.k_a).min(BigRational::one());
    let miss = if p.k_b == 1 {
        Interval::from_int(0, prec)
    } else {
        Interval::from_rational(&(BigRational::one() - ratio(1, p.k_b)), prec)
            .pow_rational(&exponent)
    };
    let hit = Interval::from_int(1, prec).sub(&miss);
    e.mul(&count).mul(&hit.powi(p.k_a))
}

/// Evaluates `value(prec)` up the precision ladder until it is certainly on
/// one side of `bound`. `want_le`: the condition is `value ≤ bound`.
fn decide(
    mut value: impl FnMut(u32) -> Interval,
    bound: &BigRational,
    want_le: bool,
) -> (Verdict, Interval) {
    let mut last = None;
    for prec in PRECISION_LADDER {
        let v = value(prec);
        let b = Interval::from_rational(bound, prec);
        let verdict = if v.certainly_le(&b) {
            Some(want_le)
        } else if b.certainly_lt(&v) {
            Some(!want_le)
        } else {
            None
        };
        if let Some(holds) = verdict {
            return (Verdict::from_bool(holds), v);
        }
        last = Some(v);
    }
    (Verdict::Undecided, last.expect("ladder is nonempty"))
}

fn transversal_verdict(p: &BipartiteParams) -> (Verdict, Interval) {
    decide(|prec| transversal_rhs(p, prec), &int(p.k_b), true)
}

fn coupon_verdict(p: &BipartiteParams) -> (Verdict, Interval) {
    decide(|prec| coupon_lhs(p, prec), &BigRational::one(), true)
}

/// `k_B ≥ (e·k_A·Δ_B)^{1/k_A}·Δ_A`, certified.
pub fn transversal_condition(p: &BipartiteParams) -> Result<Certificate> {
    p.check_positive()?;
    let (verdict, rhs) = transversal_verdict(p);
    Ok(condition_certificate(
        "transversal",
        p,
        verdict,
        &rhs,
        "k_B ≥ (e·k_A·Δ_B)^(1/k_A)·Δ_A",
        int(p.k_b).to_string(),
        "≥",
        true,
    ))
}

/// `e(Δ_A(Δ_B−1)+1)(1 − (1−1/k_B)^{Δ_A·min(1,k_B/k_A)})^{k_A} ≤ 1`, certified.
pub fn coupon_condition(p: &BipartiteParams) -> Result<Certificate> {
    p.check_positive()?;
    let (verdict, lhs) = coupon_verdict(p);
    Ok(condition_certificate(
        "coupon",
        p,
        verdict,
        &lhs,
        "coupon expression ≤ 1",
        "1".into(),
        "≤",
        false,
    ))
}

#[allow(clippy::too_many_arguments)]
fn condition_certificate(
    claim: &str,
    p: &BipartiteParams,
    verdict: Verdict,
    value: &Interval,
    label: &str,
    bound: String,
    relation: &str,
    bound_on_left: bool,
) -> Certificate {
    let enclosure = format!("[{}, {}]", value.lo(), value.hi());
    let step = if bound_on_left {
        Step::new(label, bound, relation, enclosure, verdict.is_true())
    } else {
        Step::new(label, enclosure, relation, bound, verdict.is_true())
    };
    Certificate::new(
        claim,
        p.json(),
        verdict,
        Method::Interval {
            precision: value.precision(),
        },
    )
    .with_witness(json!({ "value": value.to_json() }))
    .with_step(step)
}

/// Fast verdict on one pair: both conditions in both orientations, first
/// success wins.
type Decision = (Verdict, Option<(Condition, Orientation)>);

/// Decisions for the unordered half-size pairs `2 ≤ a ≤ b ≤ window` kept by
/// `keep`, in row-major order. Rows are evaluated on the rayon pool.
fn decide_window(
    window_max: u64,
    keep: impl Fn(u64, u64) -> bool + Sync,
) -> Vec<(u64, u64, Decision)> {
    (2..=window_max)
        .into_par_iter()
        .flat_map_iter(|a| {
            let keep = &keep;
            (a..=window_max)
                .filter(move |&b| keep(a, b))
                .map(move |b| (a, b, decide_pair(&BipartiteParams::half(a, b))))
        })
        .collect()
}

fn decide_pair(p: &BipartiteParams) -> (Verdict, Option<(Condition, Orientation)>) {
    let mut verdict = Verdict::CertifiedFalse;
    for (q, orientation) in [
        (*p, Orientation::AsGiven),
        (p.swapped(), Orientation::Swapped),
    ] {
        for condition in [Condition::Transversal, Condition::Coupon] {
            let (v, _) = match condition {
                Condition::Transversal => transversal_verdict(&q),
                Condition::Coupon => coupon_verdict(&q),
            };
            if v.is_true() {
                return (v, Some((condition, orientation)));
            }
            verdict = verdict.or(v);
        }
    }
    (verdict, None)
}

/// Either condition, in either orientation of the parts. Requires
/// `k_A ≤ Δ_A` and `k_B ≤ Δ_B`.
pub fn choosable_certificate(p: &BipartiteParams) -> Result<Certificate> {
    p.check_positive()?;
    if !p.lists_within_degrees() {
        return Err(Error::Precondition(format!(
            "need k_A ≤ Δ_A and k_B ≤ Δ_B, got {p:?}"
        )));
    }
    let mut cert = Certificate::new(
        "bipartite-choosable",
        p.json(),
        Verdict::CertifiedFalse,
        Method::Composite,
    );
    for (q, orientation) in [
        (*p, Orientation::AsGiven),
        (p.swapped(), Orientation::Swapped),
    ] {
        for condition in [Condition::Transversal, Condition::Coupon] {
            let mut child = match condition {
                Condition::Transversal => transversal_condition(&q)?,
                Condition::Coupon => coupon_condition(&q)?,
            };
            child.claim = format!(
                "{}/{}",
                child.claim,
                if orientation == Orientation::AsGiven {
                    "as-given"
                } else {
                    "swapped"
                }
            );
            let v = child.verdict;
            cert.children.push(child);
            if v.is_true() {
                cert.verdict = v;
                cert.witness = Some(json!({ "condition": condition, "orientation": orientation }));
                return Ok(cert);
            }
            cert.verdict = cert.verdict.or(v);
        }
    }
    Ok(cert)
}

/// `Δ_A` range of the threshold table.
pub const THRESHOLD_TABLE_RANGE: std::ops::RangeInclusive<u64> = 2..=55;

/// The threshold `(e·k_A·(2Δ_A)^{k_A})^{1/(k_A − 1)}` with `k_A = ⌈Δ_A/2⌉+1`:
/// every `Δ_B` at least this value satisfies the transversal condition with
/// `k_B ≥ Δ_B/2`.
pub fn threshold_interval(delta_a: u64, prec: u32) -> Result<Interval> {
    if delta_a < 2 {
        return Err(Error::InvalidParams("Δ_A must be at least 2".into()));
    }
    let k = half_k(delta_a);
    let ln = |x: u64| Interval::from_int(x, prec).ln();
    let num = Interval::from_int(1, prec)
        .add(&ln(k))
        .add(&Interval::from_int(k, prec).mul(&ln(2 * delta_a)));
    Ok(num.div(&Interval::from_int(k - 1, prec)).exp())
}

/// Certified ceiling of [`threshold_interval`], escalating precision while an
/// integer lies inside the enclosure.
pub fn threshold_value(delta_a: u64) -> Result<u64> {
    threshold_entry(delta_a).map(|e| e.value)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdEntry {
    pub delta_a: u64,
    pub k_a: u64,
    pub value: u64,
    pub enclosure: IntervalJson,
}

pub fn threshold_entry(delta_a: u64) -> Result<ThresholdEntry> {
    let mut last = 0;
    for prec in PRECISION_LADDER {
        let x = threshold_interval(delta_a, prec)?;
        if let Some(c) = x.ceil_if_determined() {
            let value = c
                .to_u64()
                .ok_or_else(|| Error::InvalidParams("table value out of range".into()))?;
            return Ok(ThresholdEntry {
                delta_a,
                k_a: half_k(delta_a),
                value,
                enclosure: x.to_json(),
            });
        }
        last = prec;
    }
    Err(Error::AmbiguousCeiling { precision: last })
}

/// The whole table over [`THRESHOLD_TABLE_RANGE`].
pub fn threshold_table() -> Result<Vec<ThresholdEntry>> {
    THRESHOLD_TABLE_RANGE.map(threshold_entry).collect()
}

/// `delta_a,value` lines with a header.
pub fn threshold_table_csv(entries: &[ThresholdEntry]) -> String {
    let mut s = String::from("delta_a,value\n");
    for e in entries {
        writeln!(s, "{},{}", e.delta_a, e.value).expect("write to string");
    }
    s
}

/// Region 1: `Δ_A ≥ 165` and `Δ_A ≥ Δ_B ≥ 56`.
pub fn in_region_one(delta_a: u64, delta_b: u64) -> bool {
    delta_a >= 165 && delta_a >= delta_b && delta_b >= 56
}

/// Region 2: `Δ_A ≤ 55` and `Δ_B ≥ 153`.
pub fn in_region_two(delta_a: u64, delta_b: u64) -> bool {
    delta_a <= 55 && delta_b >= 153
}

/// Either region, in either orientation.
pub fn in_either_region(delta_a: u64, delta_b: u64) -> bool {
    [(delta_a, delta_b), (delta_b, delta_a)]
        .iter()
        .any(|&(a, b)| in_region_one(a, b) || in_region_two(a, b))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionReport {
    pub window_max: u64,
    /// Ordered pairs in the window lying in a region.
    pub pairs_checked: usize,
    pub via_transversal: usize,
    pub via_coupon: usize,
    /// Pairs with a part of maximum degree 1, outside the conditions'
    /// hypothesis `k ≤ Δ`. Every component is then a star, which is
    /// choosable directly: colour the centre, then each leaf avoids it.
    pub star_forest_pairs: usize,
    pub violations: Vec<(u64, u64)>,
    pub undecided: Vec<(u64, u64)>,
    pub certificate: Certificate,
}

/// Checks every ordered pair in `[1, window_max]²` lying in either region
/// (or its exchange) with half-degree list sizes.
pub fn verify_regions(window_max: u64) -> Result<RegionReport> {
    if window_max == 0 {
        return Err(Error::InvalidParams("window must be nonempty".into()));
    }
    let mut r = RegionReport {
        window_max,
        pairs_checked: 0,
        via_transversal: 0,
        via_coupon: 0,
        star_forest_pairs: 0,
        violations: Vec::new(),
        undecided: Vec::new(),
        certificate: Certificate::new(
            "bipartite-regions",
            json!({ "window_max": window_max }),
            Verdict::CertifiedTrue,
            Method::Composite,
        ),
    };
    // The verdict of a pair does not depend on its orientation, so each
    // unordered pair is evaluated once and counted with multiplicity.
    for b in (1..=window_max).filter(|&b| in_either_region(1, b)) {
        let mult = if b == 1 { 1 } else { 2 };
        r.pairs_checked += mult;
        r.star_forest_pairs += mult;
    }
    for (a, b, decision) in decide_window(window_max, in_either_region) {
        let mult = if a == b { 1 } else { 2 };
        r.pairs_checked += mult;
        match decision {
            (Verdict::CertifiedTrue, Some((Condition::Transversal, _))) => {
                r.via_transversal += mult
            }
            (Verdict::CertifiedTrue, _) => r.via_coupon += mult,
            (Verdict::Undecided, _) => r.undecided.push((a, b)),
            (Verdict::CertifiedFalse, _) => r.violations.push((a, b)),
        }
    }
    let c = &mut r.certificate;
    c.transcript.push(Step::new(
        "violations",
        r.violations.len(),
        "=",
        0,
        r.violations.is_empty(),
    ));
    c.transcript.push(Step::new(
        "undecided",
        r.undecided.len(),
        "=",
        0,
        r.undecided.is_empty(),
    ));
    c.verdict = if !r.violations.is_empty() {
        Verdict::CertifiedFalse
    } else if !r.undecided.is_empty() {
        Verdict::Undecided
    } else {
        Verdict::CertifiedTrue
    };
    c.witness = Some(json!({
        "pairs_checked": r.pairs_checked,
        "via_transversal": r.via_transversal,
        "via_coupon": r.via_coupon,
        "star_forest_pairs": r.star_forest_pairs,
        "violations": r.violations,
    }));
    Ok(r)
}

/// Number of uncovered pairs claimed for the conditions with half-degree
/// list sizes.
pub const CLAIMED_UNCOVERED_BOUND: u64 = 27_000;

/// Smallest window for which the coverage argument applies.
pub const MIN_SCAN_WINDOW: u64 = 165;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UncoveredScan {
    pub window_max: u64,
    /// Pairs `Δ_A ≤ Δ_B` with `Δ_A ≥ 2` that neither condition certifies.
    pub uncovered: Vec<(u64, u64)>,
    /// Pairs `Δ_A ≤ Δ_B` with `Δ_A = 1`, outside the hypothesis `k ≤ Δ`.
    pub uncovered_by_precondition: Vec<(u64, u64)>,
    pub undecided: Vec<(u64, u64)>,
    /// All uncovered pairs, each unordered pair once.
    pub unordered_count: u64,
    /// All uncovered pairs counting `(a, b)` and `(b, a)` separately.
    pub ordered_count: u64,
    pub certificate: Certificate,
}

/// Scans `Δ_A ≤ Δ_B` in `[1, window_max]²` for pairs that neither condition
/// certifies with half-degree list sizes. The certificate also carries the
/// argument that every pair outside the window is covered.
pub fn uncovered_region_scan(window_max: u64) -> Result<UncoveredScan> {
    if window_max < MIN_SCAN_WINDOW {
        return Err(Error::Precondition(format!(
            "window must be at least {MIN_SCAN_WINDOW}"
        )));
    }
    let pre: Vec<(u64, u64)> = (1..=window_max).map(|b| (1, b)).collect();
    let mut uncovered = Vec::new();
    let mut undecided = Vec::new();
    for (a, b, (verdict, _)) in decide_window(window_max, |_, _| true) {
        match verdict {
            Verdict::CertifiedTrue => {}
            Verdict::CertifiedFalse => uncovered.push((a, b)),
            Verdict::Undecided => undecided.push((a, b)),
        }
    }
    let ordered = |v: &[(u64, u64)]| {
        v.iter()
            .map(|&(a, b)| if a == b { 1 } else { 2 })
            .sum::<u64>()
    };
    let all: Vec<(u64, u64)> = uncovered
        .iter()
        .chain(&pre)
        .chain(&undecided)
        .copied()
        .collect();
    let unordered_count = all.len() as u64;
    let ordered_count = ordered(&all);

    let params = json!({ "window_max": window_max, "list_sizes": "half" });
    let mut cert = Certificate::new(
        "bipartite-uncovered-scan",
        params,
        Verdict::CertifiedTrue,
        Method::Composite,
    );
    cert.transcript.push(Step::new(
        "undecided pairs",
        undecided.len(),
        "=",
        0,
        undecided.is_empty(),
    ));
    cert.transcript.push(Step::new(
        "unordered uncovered",
        unordered_count,
        "≤",
        CLAIMED_UNCOVERED_BOUND,
        unordered_count <= CLAIMED_UNCOVERED_BOUND,
    ));
    cert.transcript.push(Step::new(
        "ordered uncovered",
        ordered_count,
        "≤",
        CLAIMED_UNCOVERED_BOUND,
        ordered_count <= CLAIMED_UNCOVERED_BOUND,
    ));
    let coverage = outside_window_coverage(window_max)?;
    let mut verdict =
        Verdict::from_bool(cert.transcript.iter().all(|s| s.holds)).and(coverage.verdict);
    if !undecided.is_empty() && verdict != Verdict::CertifiedFalse {
        verdict = Verdict::Undecided;
    }
    cert.verdict = verdict;
    cert.children.push(coverage);
    Ok(UncoveredScan {
        window_max,
        uncovered,
        uncovered_by_precondition: pre,
        undecided,
        unordered_count,
        ordered_count,
        certificate: cert,
    })
}

/// Why every pair with `max(Δ_A, Δ_B) > W` is covered, for `W ≥ 165`.
/// Write `s ≤ b` for the smaller and larger degree; then `b ≥ W + 1 ≥ 166`.
///
/// * `s ≥ 56`: `(b, s)` lies in region 1. There the coupon expression is at
///   most `e·Δ_A²·(1 − (1 − 2/58)^{59})^{Δ_A/2 + 1}` (using
///   `Δ_A·min(1, k_B/k_A) ≤ Δ_B + 3`, `k_B ≥ (Δ_B + 2)/2`, and that
///   `x ↦ 1 − (1 − 2/(x+2))^{x+3}` decreases), the inner base is below
///   `0.874`, and `e·x²·0.874^{x/2+1}` decreases for `x ≥ 35` and is below
///   `1` at `x = 165`. The two numeric facts are checked by intervals here.
/// * `2 ≤ s ≤ 55`: `(s, b)` lies in region 2. Since `k_B ≥ Δ_B/2`, the
///   transversal condition follows from `Δ_B^{k_A − 1} ≥ e·k_A·(2Δ_A)^{k_A}`,
///   i.e. from `Δ_B` being at least the table value for `Δ_A = s`; every
///   table value is at most `153`.
/// * `s = 1`: every component is a star, choosable directly.
pub fn outside_window_coverage(window_max: u64) -> Result<Certificate> {
    let mut cert = Certificate::new(
        "bipartite-outside-window",
        json!({ "window_max": window_max }),
        Verdict::CertifiedTrue,
        Method::Interval { precision: 128 },
    );
    cert.transcript.push(Step::new(
        "window",
        window_max,
        "≥",
        MIN_SCAN_WINDOW,
        window_max >= MIN_SCAN_WINDOW,
    ));
    let prec = 128;
    let base =
        Interval::from_int(1, prec).sub(&Interval::from_rational(&ratio(56, 58), prec).powi(59));
    let bound = ratio(874, 1000);
    let base_ok = base.compare_rational(&bound) == Some(std::cmp::Ordering::Less);
    cert.transcript.push(Step::new(
        "1 − (56/58)^59 < 0.874",
        format!("[{}, {}]", base.lo(), base.hi()),
        "<",
        "0.874",
        base_ok,
    ));
    let at165 = Interval::e(prec)
        .mul(&Interval::from_int(165 * 165, prec))
        .mul(&Interval::from_rational(&bound, prec).pow_rational(&ratio(167, 2)));
    let at165_ok = at165.compare_rational(&ratio(97, 100)) == Some(std::cmp::Ordering::Less);
    cert.transcript.push(Step::new(
        "e·165²·0.874^83.5 < 0.97",
        format!("[{}, {}]", at165.lo(), at165.hi()),
        "<",
        "0.97",
        at165_ok,
    ));
    let table = threshold_table()?;
    let max = table.iter().map(|e| e.value).max().unwrap_or(0);
    cert.transcript
        .push(Step::new("max table value", max, "≤", 153, max <= 153));
    cert.verdict = Verdict::from_bool(cert.transcript.iter().all(|s| s.holds));
    Ok(cert)
}

/// `delta_a,delta_b,kind` lines for the uncovered pairs.
pub fn uncovered_csv(scan: &UncoveredScan) -> String {
    let mut rows: Vec<(u64, u64, &str)> = scan
        .uncovered
        .iter()
        .map(|&(a, b)| (a, b, "uncovered"))
        .chain(
            scan.uncovered_by_precondition
                .iter()
                .map(|&(a, b)| (a, b, "uncovered-by-precondition")),
        )
        .chain(scan.undecided.iter().map(|&(a, b)| (a, b, "undecided")))
        .collect();
    rows.sort();
    let mut s = String::from("delta_a,delta_b,kind\n");
    for (a, b, kind) in rows {
        writeln!(s, "{a},{b},{kind}").expect("write to string");
    }
    s
}

/// Exact value of the coupon expression without the factor `e` when the
/// exponent is an integer, for cross-checks.
pub fn coupon_rational_part(p: &BipartiteParams) -> Option<BigRational> {
    let exponent = int(p.delta_a) * ratio(p.k_b, p.k_a).min(BigRational::one());
    if !exponent.is_integer() {
        return None;
    }
    let n = exponent.to_integer().to_u32()?;
    let miss = num_traits::pow(BigRational::one() - ratio(1, p.k_b), n as usize);
    let hit = BigRational::one() - miss;
    let count = BigRational::from_integer(BigInt::from(p.delta_a * (p.delta_b - 1) + 1));
    Some(count * num_traits::pow(hit, p.k_a as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn transversal_examples() {
        let p = BipartiteParams::new(2, 87, 2, 45);
        let c = transversal_condition(&p).unwrap();
        assert_eq!(c.verdict, Verdict::CertifiedTrue);
        let v = transversal_rhs(&p, 128).midpoint_f64();
        assert!((v - 43.4962544664).abs() < 1e-9, "{v}");
        assert_eq!(
            transversal_condition(&BipartiteParams::new(2, 87, 2, 43))
                .unwrap()
                .verdict,
            Verdict::CertifiedFalse
        );
        let one = BipartiteParams::new(1, 1, 1, 1);
        assert_eq!(
            transversal_condition(&one).unwrap().verdict,
            Verdict::CertifiedFalse
        );
        assert!((transversal_rhs(&one, 64).midpoint_f64() - std::f64::consts::E).abs() < 1e-12);
    }

    #[test]
    fn coupon_examples() {
        let p = BipartiteParams::new(165, 56, 84, 29);
        assert_eq!(
            coupon_condition(&p).unwrap().verdict,
            Verdict::CertifiedTrue
        );
        assert!((coupon_lhs(&p, 128).midpoint_f64() - 0.120617734).abs() < 1e-8);

        let p = BipartiteParams::new(5, 5, 3, 3);
        assert_eq!(
            coupon_condition(&p).unwrap().verdict,
            Verdict::CertifiedFalse
        );
        // e · 21 · (211/243)^3
        assert_eq!(
            coupon_rational_part(&p),
            Some(int(21) * num_traits::pow(ratio(211, 243), 3))
        );
        assert!((coupon_lhs(&p, 128).midpoint_f64() - 37.3716542).abs() < 1e-6);

        let one = BipartiteParams::new(1, 1, 1, 1);
        assert_eq!(
            coupon_condition(&one).unwrap().verdict,
            Verdict::CertifiedFalse
        );
        assert!((coupon_lhs(&one, 64).midpoint_f64() - std::f64::consts::E).abs() < 1e-12);
    }

    #[test]
    fn combined_examples() {
        let c = choosable_certificate(&BipartiteParams::new(165, 56, 84, 29)).unwrap();
        assert_eq!(c.verdict, Verdict::CertifiedTrue);
        assert_eq!(c.witness.unwrap()["condition"], json!("coupon"));
        let c = choosable_certificate(&BipartiteParams::new(2, 87, 2, 45)).unwrap();
        assert_eq!(
            c.witness.unwrap(),
            json!({"condition": "transversal", "orientation": "as-given"})
        );
        let c = choosable_certificate(&BipartiteParams::new(5, 5, 3, 3)).unwrap();
        assert_eq!(c.verdict, Verdict::CertifiedFalse);
        assert_eq!(c.children.len(), 4);
        let c = choosable_certificate(&BipartiteParams::new(87, 2, 45, 2)).unwrap();
        assert_eq!(c.witness.unwrap()["orientation"], json!("swapped"));
        assert!(matches!(
            choosable_certificate(&BipartiteParams::half(1, 5)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn table_first_and_last() {
        assert_eq!(threshold_value(2).unwrap(), 87);
        assert_eq!(threshold_value(3).unwrap(), 42);
        assert_eq!(threshold_value(55).unwrap(), 153);
        assert!(threshold_value(1).is_err());
    }

    #[test]
    fn regions() {
        assert!(in_region_one(165, 56) && !in_region_one(164, 56) && !in_region_one(165, 166));
        assert!(in_region_two(55, 153) && !in_region_two(56, 153));
        assert!(in_either_region(56, 165) && in_either_region(153, 2));
        let r = verify_regions(170).unwrap();
        assert_eq!(r.certificate.verdict, Verdict::CertifiedTrue);
        assert!(r.violations.is_empty() && r.via_coupon > 0 && r.via_transversal > 0);
        let r = verify_regions(164).unwrap();
        assert_eq!(
            r.via_coupon + r.via_transversal + r.star_forest_pairs,
            r.pairs_checked
        );
        assert!(r.certificate.verdict.is_true());
    }

    #[test]
    fn outside_window_argument() {
        assert!(outside_window_coverage(165).unwrap().verdict.is_true());
        assert!(!outside_window_coverage(100).unwrap().verdict.is_true());
        assert!(uncovered_region_scan(100).is_err());
    }

    #[test]
    fn scan_membership() {
        let s = uncovered_region_scan(165).unwrap();
        assert!(s.uncovered_by_precondition.contains(&(1, 1)));
        assert!(!s.uncovered.contains(&(56, 165)));
        assert!(s.undecided.is_empty());
        assert_eq!(
            s.unordered_count,
            (s.uncovered.len() + s.uncovered_by_precondition.len()) as u64
        );
        let csv = uncovered_csv(&s);
        assert!(csv.starts_with("delta_a,delta_b,kind\n1,1,uncovered-by-precondition\n"));
    }

    #[test]
    fn csv_shape() {
        let t = vec![threshold_entry(2).unwrap(), threshold_entry(3).unwrap()];
        assert_eq!(threshold_table_csv(&t), "delta_a,value\n2,87\n3,42\n");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn exchange_symmetry(da in 2u64..120, db in 2u64..120) {
            let p = BipartiteParams::half(da, db);
            prop_assert_eq!(
                choosable_certificate(&p).unwrap().verdict,
                choosable_certificate(&p.swapped()).unwrap().verdict
            );
        }

        #[test]
        fn verdicts_stable_under_precision(da in 1u64..200, db in 1u64..200, ka in 1u64..60, kb in 1u64..60) {
            let p = BipartiteParams::new(da, db, ka, kb);
            for f in [transversal_rhs as fn(&BipartiteParams, u32) -> Interval, coupon_lhs] {
                let lo = f(&p, 64);
                let hi = f(&p, 128);
                // the finer enclosure meets the coarser one
                prop_assert!(!(lo.certainly_lt(&hi) || hi.certainly_lt(&lo)));
            }
            let (v1, _) = transversal_verdict(&p);
            let (v2, _) = decide(|prec| transversal_rhs(&p, prec * 2), &int(kb), true);
            prop_assert!(v1 == v2 || v1 == Verdict::Undecided || v2 == Verdict::Undecided);
        }
    }

    #[test]
    fn coupon_monotone_in_ka() {
        let mut n = 0;
        for da in (2..200).step_by(20) {
            for db in (2..200).step_by(20) {
                for kb in [5, 15, 30, 60, 100, 150, 200, 300, 400, 500] {
                    for ka in [2u64, 4] {
                        if kb < ka + 1 {
                            continue;
                        }
                        n += 1;
                        let a = coupon_verdict(&BipartiteParams::new(da, db, ka, kb)).0;
                        let b = coupon_verdict(&BipartiteParams::new(da, db, ka + 1, kb)).0;
                        assert!(
                            !(a.is_true() && b == Verdict::CertifiedFalse),
                            "{da} {db} {ka} {kb}"
                        );
                    }
                }
            }
        }
        assert!(n >= 1000);
    }
}
