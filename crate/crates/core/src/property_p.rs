//! Exact certification of the degree-threshold condition.
//!
//! A quadruple `(Δ₀, ℓ, t, k)` has the property when, for every `δ ≥ Δ₀`,
//!
//! 1. `0 < t < ℓ < k(δ) < δ`, and
//! 2. `A · r^E ≥ ℓ` with `A = k(δ) − tδ/ℓ`, `r = t/(t+1)` and
//!    `E = (t+1)(δ − tδ/ℓ)/A`.
//!
//! Item 2 is decided exactly: with `E = p/q` in lowest terms both sides are
//! raised to the `q`-th power and compared over big integers. Infinitely
//! many `δ` are handled by a tail schema, a linear lower bound
//! `A ≥ αδ + β` and an exponent cap `E ≤ E_max`, both checked exactly,
//! after which a single comparison at the threshold covers every larger `δ`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::certificate::{Certificate, Method, Step, Verdict};
use crate::interval::{Interval, IntervalJson};
use crate::power::{exponent_parts, power_ge};
use crate::ratio::pessimistic_bound_rational;
use crate::rational::{int, ratio, RationalJson};
use crate::{Error, KSpec, Result};

pub const CLAIM_SINGLE: &str = "property-p";
pub const CLAIM_RANGE: &str = "property-p-range";
pub const CLAIM_TAIL: &str = "property-p-tail";
pub const CLAIM_THRESHOLD: &str = "property-p-threshold";

/// Parameters `(Δ₀, ℓ, t, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyPParams {
    pub delta0: u64,
    pub ell: u64,
    pub t: u64,
    pub k: KSpec,
}

impl PropertyPParams {
    /// The quadruple `(524, 8, 1, half)`.
    pub fn half_524() -> Self {
        PropertyPParams {
            delta0: 524,
            ell: 8,
            t: 1,
            k: KSpec::Half,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.delta0 == 0 || self.ell == 0 || self.t == 0 {
            return Err(Error::InvalidParams("Δ₀, ℓ and t must be positive".into()));
        }
        self.k.validate()?;
        Ok(())
    }
}

/// Exact analysis of one degree `δ`.
#[derive(Clone, Debug, PartialEq)]
struct Single {
    item1: Vec<Step>,
    item1_holds: bool,
    a: BigRational,
    exponent: Option<(u64, u64)>,
    comparison: Option<(String, String)>,
    item2: Verdict,
    approx: Option<Interval>,
}

fn analyse(delta: u64, ell: u64, t: u64, k: KSpec, scale: u64) -> Single {
    let kd = k.eval(delta);
    let item1 = vec![
        Step::new("0 < t", 0, "<", t, t > 0),
        Step::new("t < ℓ", t, "<", ell, t < ell),
        Step::new("ℓ < k(δ)", ell, "<", kd, ell < kd),
        Step::new("k(δ) < δ", kd, "<", delta, kd < delta),
    ];
    let item1_holds = item1.iter().all(|s| s.holds);
    let blocked = ratio(t * delta, ell);
    let a = int(kd) - &blocked;
    let mut s = Single {
        item1,
        item1_holds,
        a: a.clone(),
        exponent: None,
        comparison: None,
        item2: Verdict::CertifiedFalse,
        approx: None,
    };
    if !a.is_positive() {
        return s;
    }
    let e = int(t + 1) * (int(delta) - &blocked) / &a;
    let Some((p, q)) = exponent_parts(&e) else {
        s.item2 = Verdict::Undecided;
        return s;
    };
    s.exponent = Some((p, q));
    s.approx = pessimistic_bound_rational(&int(kd), &blocked, &int(delta), t, 64).ok();
    match (p.checked_mul(scale), q.checked_mul(scale)) {
        (Some(ps), Some(qs)) => match power_ge(&a, &ratio(t, t + 1), ps, qs, &int(ell)) {
            Some(cmp) => {
                s.item2 = Verdict::from_bool(cmp.holds);
                s.comparison = Some((cmp.lhs.to_string(), cmp.rhs.to_string()));
            }
            None => s.item2 = Verdict::Undecided,
        },
        _ => s.item2 = Verdict::Undecided,
    }
    s
}

impl Single {
    fn verdict(&self) -> Verdict {
        if self.item1_holds {
            self.item2
        } else {
            Verdict::CertifiedFalse
        }
    }

    fn approx_f64(&self) -> Option<f64> {
        self.approx.as_ref().map(Interval::midpoint_f64)
    }
}

/// Exact verdict on both items at one degree `δ`. The transcript records the
/// item-1 comparisons, `A`, the reduced exponent `p/q`, and the two cleared
/// sides `A_n^q·t^p·ℓ_d^q` and `ℓ^q·A_d^q·(t+1)^p` as decimal strings.
/// `Undecided` only if the numbers would exceed the size guard.
pub fn property_p_single(delta: u64, ell: u64, t: u64, k: KSpec) -> Result<Certificate> {
    single_scaled(delta, ell, t, k, 1)
}

/// [`property_p_single`] with the exponent written as `(m·p)/(m·q)`. The
/// verdict is the same for every `m ≥ 1`; the cleared sides are the `m`-th
/// powers of the reduced ones.
pub fn property_p_single_unreduced(
    delta: u64,
    ell: u64,
    t: u64,
    k: KSpec,
    m: u64,
) -> Result<Certificate> {
    if m == 0 {
        return Err(Error::InvalidParams("scale must be positive".into()));
    }
    single_scaled(delta, ell, t, k, m)
}

fn single_scaled(delta: u64, ell: u64, t: u64, k: KSpec, scale: u64) -> Result<Certificate> {
    PropertyPParams {
        delta0: delta,
        ell,
        t,
        k,
    }
    .validate()?;
    let s = analyse(delta, ell, t, k, scale);
    let mut params = json!({ "delta": delta, "ell": ell, "t": t, "k": k });
    if scale != 1 {
        params["scale"] = json!(scale);
    }
    let mut cert = Certificate::new(CLAIM_SINGLE, params, s.verdict(), Method::ExactRational);
    cert.transcript.extend(s.item1.iter().cloned());
    let mut witness = json!({ "A": RationalJson::from(&s.a) });
    if !s.item1_holds {
        let failed: Vec<&str> = s
            .item1
            .iter()
            .filter(|x| !x.holds)
            .map(|x| x.label.as_str())
            .collect();
        witness["failed"] = json!(failed);
    } else if !s.a.is_positive() {
        cert.transcript
            .push(Step::new("A > 0", &s.a, ">", 0, false));
        witness["failed"] = json!(["A > 0"]);
    } else {
        cert.transcript.push(Step::new("A > 0", &s.a, ">", 0, true));
        if let Some((p, q)) = s.exponent {
            witness["exponent"] = json!({ "num": p.to_string(), "den": q.to_string() });
        }
        match &s.comparison {
            Some((lhs, rhs)) => cert.transcript.push(Step::new(
                "A^q·r^p ≥ ℓ^q (cleared)",
                lhs,
                "≥",
                rhs,
                s.item2.is_true(),
            )),
            None => witness["undecided"] = json!("resource"),
        }
        if let Some(x) = &s.approx {
            witness["value"] = json!(x.to_json());
        }
    }
    Ok(cert.with_witness(witness))
}

/// Verdict for every `δ ∈ [Δ₀, δ_max]`. The transcript has one summary step
/// per degree; the first failing degree is the witness, with its full
/// single-degree certificate attached as a child.
pub fn property_p_range(
    delta0: u64,
    delta_max: u64,
    ell: u64,
    t: u64,
    k: KSpec,
) -> Result<Certificate> {
    PropertyPParams { delta0, ell, t, k }.validate()?;
    if delta0 > delta_max {
        return Err(Error::InvalidParams(format!(
            "empty range [{delta0}, {delta_max}]"
        )));
    }
    let params = json!({ "delta0": delta0, "delta_max": delta_max, "ell": ell, "t": t, "k": k });
    let mut cert = Certificate::new(
        CLAIM_RANGE,
        params,
        Verdict::CertifiedTrue,
        Method::ExactRational,
    );
    for delta in delta0..=delta_max {
        let s = analyse(delta, ell, t, k, 1);
        let v = s.verdict();
        let lhs = s
            .approx_f64()
            .map_or_else(|| format!("A = {}", s.a), |x| format!("{x:.6}"));
        cert.transcript.push(Step::new(
            format!("δ = {delta}"),
            lhs,
            "≥",
            ell,
            v.is_true(),
        ));
        if v != Verdict::CertifiedTrue {
            cert.verdict = v;
            cert.witness = Some(json!({ "delta": delta }));
            cert.children.push(property_p_single(delta, ell, t, k)?);
            break;
        }
    }
    Ok(cert)
}

/// A linear lower bound `A(δ) ≥ αδ + β` and an exponent cap `E(δ) ≤ E_max`,
/// to be checked for all `δ ≥ threshold`. `target` is the value the
/// threshold comparison must reach; it must be at least `ℓ` and defaults to
/// `ℓ`.
#[derive(Clone, Debug, PartialEq)]
pub struct TailSchema {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub exponent_max: BigRational,
    pub threshold: u64,
    pub target: Option<BigRational>,
}

impl TailSchema {
    /// `A ≥ 3δ/8 + 1`, `E ≤ 14/3`, threshold 540, target 8.01.
    pub fn half() -> Self {
        Self::half_at(540)
    }

    /// [`TailSchema::half`] with another threshold.
    pub fn half_at(threshold: u64) -> Self {
        TailSchema {
            alpha: ratio(3, 8),
            beta: int(1),
            exponent_max: ratio(14, 3),
            threshold,
            target: Some(ratio(801, 100)),
        }
    }

    /// The built-in schema for `k`, if there is one.
    pub fn builtin(k: KSpec) -> Option<Self> {
        (k == KSpec::Half).then(Self::half)
    }
}

/// Checks a tail schema exactly. Sub-checks:
/// (i) `αδ + β ≤ k(δ) − tδ/ℓ` for all `δ`, via the ceiling-free lower bound
/// of `k`, with `α > 0` and `β ≥ 0`;
/// (ii) `(t+1)(1 − t/ℓ)/α ≤ E_max`, which bounds the exponent for all `δ > 0`;
/// (iii) `(α·T + β)·r^{E_max} ≥ target ≥ ℓ` at the threshold `T`, decided by
/// the power trick;
/// (iv) monotonicity: `αδ + β` grows and `r^E ≥ r^{E_max}`, so (iii) carries
/// over to every `δ ≥ T`;
/// (v) item 1 holds for every `δ ≥ T`, via linear bounds on `k`.
pub fn tail_certificate(ell: u64, t: u64, k: KSpec, schema: &TailSchema) -> Result<Certificate> {
    PropertyPParams {
        delta0: schema.threshold.max(1),
        ell,
        t,
        k,
    }
    .validate()?;
    let target = schema.target.clone().unwrap_or_else(|| int(ell));
    let params = json!({
        "ell": ell, "t": t, "k": k, "threshold": schema.threshold,
        "alpha": RationalJson::from(&schema.alpha), "beta": RationalJson::from(&schema.beta),
        "exponent_max": RationalJson::from(&schema.exponent_max), "target": RationalJson::from(&target),
    });
    let mut cert = Certificate::new(
        CLAIM_TAIL,
        params,
        Verdict::CertifiedTrue,
        Method::ExactRational,
    );
    let lb = k.lower_bound();
    let ub = k.upper_bound();
    let blocked_slope = ratio(t, ell);
    let a_slope = &lb.slope - &blocked_slope;
    let (alpha, beta) = (&schema.alpha, &schema.beta);
    let tq = int(schema.threshold);

    let mut steps = vec![
        Step::new("(i) α > 0", alpha, ">", 0, alpha.is_positive()),
        Step::new("(i) β ≥ 0", beta, "≥", 0, !beta.is_negative()),
        Step::new(
            "(i) α ≤ slope of k − t/ℓ",
            alpha,
            "≤",
            &a_slope,
            alpha <= &a_slope,
        ),
        Step::new(
            "(i) β ≤ intercept of k",
            beta,
            "≤",
            &lb.intercept,
            beta <= &lb.intercept,
        ),
    ];
    let e_bound = if alpha.is_positive() {
        int(t + 1) * (BigRational::one() - &blocked_slope) / alpha
    } else {
        BigRational::zero()
    };
    steps.push(Step::new(
        "(ii) (t+1)(1 − t/ℓ)/α ≤ E_max",
        &e_bound,
        "≤",
        &schema.exponent_max,
        alpha.is_positive() && e_bound <= schema.exponent_max,
    ));

    let base = alpha * &tq + beta;
    let holds_iii = if base.is_positive() && !schema.exponent_max.is_negative() {
        let (p, q) = exponent_parts(&schema.exponent_max).unwrap_or((u64::MAX, 1));
        match power_ge(&base, &ratio(t, t + 1), p, q, &target) {
            Some(cmp) => {
                steps.push(Step::new(
                    "(iii) (αT+β)^q·r^p ≥ target^q (cleared)",
                    cmp.lhs,
                    "≥",
                    cmp.rhs,
                    cmp.holds,
                ));
                Verdict::from_bool(cmp.holds)
            }
            None => Verdict::Undecided,
        }
    } else {
        steps.push(Step::new("(iii) αT + β > 0", &base, ">", 0, false));
        Verdict::CertifiedFalse
    };
    steps.push(Step::new(
        "(iii) target ≥ ℓ",
        &target,
        "≥",
        ell,
        target >= int(ell),
    ));
    let value = if base.is_positive() {
        let r = Interval::from_rational(&ratio(t, t + 1), 128);
        Some(Interval::from_rational(&base, 128).mul(&r.pow_rational(&schema.exponent_max)))
    } else {
        None
    };
    steps.push(Step::new(
        "(iv) α ≥ 0 and r < 1",
        alpha,
        "≥",
        0,
        !alpha.is_negative(),
    ));

    // Item 1 past the threshold; k(δ) − δ is nonincreasing when the slope of
    // the upper bound is at most 1.
    let k_low_at_t = lb.eval(&tq);
    let k_high_at_t = ub.eval(&tq);
    steps.push(Step::new("(v) t < ℓ", t, "<", ell, t < ell));
    steps.push(Step::new(
        "(v) ℓ < lower bound of k(T)",
        ell,
        "<",
        &k_low_at_t,
        int(ell) < k_low_at_t,
    ));
    steps.push(Step::new(
        "(v) slope of k ≥ 0",
        &lb.slope,
        "≥",
        0,
        !lb.slope.is_negative(),
    ));
    steps.push(Step::new(
        "(v) upper bound of k(T) < T",
        &k_high_at_t,
        "<",
        &tq,
        k_high_at_t < tq,
    ));
    steps.push(Step::new(
        "(v) slope of upper bound ≤ 1",
        &ub.slope,
        "≤",
        1,
        ub.slope <= BigRational::one(),
    ));

    let exact_ok = steps.iter().all(|s| s.holds);
    cert.verdict = if exact_ok {
        holds_iii
    } else {
        Verdict::CertifiedFalse
    };
    if holds_iii == Verdict::Undecided && exact_ok {
        cert.witness = Some(json!({ "undecided": "resource" }));
    }
    if let Some(v) = value {
        let mut w = cert.witness.take().unwrap_or_else(|| json!({}));
        w["threshold_value"] = json!(v.to_json());
        let failed: Vec<&str> = steps
            .iter()
            .filter(|s| !s.holds)
            .map(|s| s.label.as_str())
            .collect();
        if !failed.is_empty() {
            w["failed"] = json!(failed);
        }
        cert.witness = Some(w);
    }
    cert.transcript = steps;
    Ok(cert)
}

/// [`tail_certificate`] with [`TailSchema::half`] for `k = half`.
pub fn tail_certificate_half(ell: u64, t: u64) -> Result<Certificate> {
    tail_certificate(ell, t, KSpec::Half, &TailSchema::half())
}

/// Certifies the property for all `δ ≥ Δ₀`: the exact range `[Δ₀, T − 1]`
/// together with the tail certificate at `T`. Without a schema (none given
/// and none built in for `k`) this fails with [`Error::NoTailAvailable`].
pub fn certify_threshold(p: &PropertyPParams, schema: Option<&TailSchema>) -> Result<Certificate> {
    p.validate()?;
    let builtin = TailSchema::builtin(p.k);
    let schema = schema.or(builtin.as_ref()).ok_or(Error::NoTailAvailable)?;
    let params = json!({ "delta0": p.delta0, "ell": p.ell, "t": p.t, "k": p.k, "threshold": schema.threshold });
    let mut cert = Certificate::new(
        CLAIM_THRESHOLD,
        params,
        Verdict::CertifiedTrue,
        Method::Composite,
    );
    if p.delta0 < schema.threshold {
        let range = property_p_range(p.delta0, schema.threshold - 1, p.ell, p.t, p.k)?;
        cert.verdict = cert.verdict.and(range.verdict);
        if let Some(w) = &range.witness {
            cert.witness = Some(w.clone());
        }
        cert.children.push(range);
    }
    let tail = tail_certificate(p.ell, p.t, p.k, schema)?;
    cert.verdict = cert.verdict.and(tail.verdict);
    cert.children.push(tail);
    Ok(cert)
}

/// How far a minimal-threshold answer reaches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum ScanMode {
    /// Backed by a tail certificate: the answer holds for all `δ ≥ Δ₀`.
    Tail { threshold: u64 },
    /// No tail certificate: the answer only covers `δ ∈ [Δ₀, scan_limit]`.
    RangeOnly { scan_limit: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinimalDelta0 {
    pub delta0: Option<u64>,
    pub mode: ScanMode,
    /// Largest failing degree found, if any.
    pub last_failure: Option<u64>,
    pub certificate: Certificate,
}

/// Smallest `Δ₀ ≤ scan_limit` such that every `δ ≥ Δ₀` has the property.
/// When `k` has a built-in tail whose certificate holds, degrees are
/// scanned downward from the tail threshold; otherwise the answer is
/// range-only and labelled as such.
pub fn minimal_delta0(ell: u64, t: u64, k: KSpec, scan_limit: u64) -> Result<MinimalDelta0> {
    PropertyPParams {
        delta0: 1,
        ell,
        t,
        k,
    }
    .validate()?;
    let tail = match TailSchema::builtin(k) {
        Some(s) => {
            let cert = tail_certificate(ell, t, k, &s)?;
            cert.verdict.is_true().then_some((s.threshold, cert))
        }
        None => None,
    };
    let (top, mode) = match &tail {
        Some((threshold, _)) => (
            threshold - 1,
            ScanMode::Tail {
                threshold: *threshold,
            },
        ),
        None => (scan_limit, ScanMode::RangeOnly { scan_limit }),
    };
    let last_failure = (1..=top)
        .rev()
        .find(|&d| !analyse(d, ell, t, k, 1).verdict().is_true());
    let candidate = last_failure.map_or(1, |f| f + 1);
    let delta0 =
        (candidate <= scan_limit && (tail.is_some() || candidate <= top)).then_some(candidate);
    let params = json!({ "ell": ell, "t": t, "k": k, "scan_limit": scan_limit, "scan": mode });
    let mut cert = Certificate::new(
        "minimal-delta0",
        params,
        Verdict::from_bool(delta0.is_some()),
        Method::Composite,
    )
    .with_witness(json!({ "delta0": delta0, "last_failure": last_failure }));
    if let Some(f) = last_failure {
        cert.children.push(property_p_single(f, ell, t, k)?);
    }
    if let Some(d) = delta0 {
        if d <= top {
            cert.children.push(property_p_range(d, top, ell, t, k)?);
        }
    }
    if let Some((_, c)) = tail {
        cert.children.push(c);
    }
    Ok(MinimalDelta0 {
        delta0,
        mode,
        last_failure,
        certificate: cert,
    })
}

/// Second-derivative and finite-difference evidence for convexity of
/// `z ↦ c·z·(1 − 1/b)^{ab/z}` on a grid of positive points.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexityReport {
    /// Closed form `c·(1−1/b)^{ab/z}·(ab·ln(1−1/b))²/z³` at each grid point.
    pub second_derivative: Vec<IntervalJson>,
    pub derivative_positive: bool,
    /// Divided second differences on consecutive triples.
    pub second_differences: Vec<IntervalJson>,
    /// Lower endpoint of the smallest second difference.
    pub min_second_difference: f64,
    pub differences_ok: bool,
    pub tolerance: f64,
    pub verdict: Verdict,
}

/// Working precision of the probe.
pub const CONVEXITY_PRECISION: u32 = 256;

/// `c·z·(1 − 1/b)^{ab/z}` for `z > 0`, and `0` for `z ≤ 0` (its convex
/// extension).
pub fn convexity_function(
    c: &BigRational,
    a: &BigRational,
    b: &BigRational,
    z: &BigRational,
    prec: u32,
) -> Interval {
    if !z.is_positive() {
        return Interval::from_int(0, prec);
    }
    let base = Interval::from_rational(&(BigRational::one() - b.recip()), prec);
    Interval::from_rational(&(c * z), prec).mul(&base.pow_rational(&(a * b / z)))
}

/// Evaluates the closed-form second derivative (its lower endpoint must be
/// positive) and divided second differences (lower endpoints must be
/// `≥ −tolerance`) on `grid`.
pub fn convexity_probe(
    c: &BigRational,
    a: &BigRational,
    b: &BigRational,
    grid: &[BigRational],
    tolerance: f64,
) -> Result<ConvexityReport> {
    if !c.is_positive() || !a.is_positive() || b <= &BigRational::one() {
        return Err(Error::InvalidParams("need c > 0, a > 0, b > 1".into()));
    }
    if grid.len() < 3 || grid.windows(2).any(|w| w[0] >= w[1]) || !grid[0].is_positive() {
        return Err(Error::InvalidParams(
            "grid must be ≥ 3 increasing positive points".into(),
        ));
    }
    let prec = CONVEXITY_PRECISION;
    let ab = a * b;
    let log_base = Interval::from_rational(&(BigRational::one() - b.recip()), prec).ln();
    let k = Interval::from_rational(&ab, prec).mul(&log_base);
    let k2 = k.mul(&k);
    let cq = Interval::from_rational(c, prec);
    let base = Interval::from_rational(&(BigRational::one() - b.recip()), prec);
    let second_derivative: Vec<Interval> = grid
        .iter()
        .map(|z| {
            let zi = Interval::from_rational(z, prec);
            cq.mul(&base.pow_rational(&(&ab / z)))
                .mul(&k2)
                .div(&zi.powi(3))
        })
        .collect();
    let derivative_positive = second_derivative.iter().all(|d| d.lo().is_positive());
    let values: Vec<Interval> = grid
        .iter()
        .map(|z| convexity_function(c, a, b, z, prec))
        .collect();
    let second_differences: Vec<Interval> = (0..grid.len() - 2)
        .map(|i| {
            let h1 = Interval::from_rational(&(&grid[i + 1] - &grid[i]), prec);
            let h2 = Interval::from_rational(&(&grid[i + 2] - &grid[i + 1]), prec);
            let s1 = values[i + 1].sub(&values[i]).div(&h1);
            let s2 = values[i + 2].sub(&values[i + 1]).div(&h2);
            s2.sub(&s1)
        })
        .collect();
    let min_second_difference = second_differences
        .iter()
        .map(|d| d.lo().to_f64())
        .fold(f64::INFINITY, f64::min);
    let differences_ok = min_second_difference >= -tolerance;
    Ok(ConvexityReport {
        second_derivative: second_derivative.iter().map(Interval::to_json).collect(),
        derivative_positive,
        second_differences: second_differences.iter().map(Interval::to_json).collect(),
        min_second_difference,
        differences_ok,
        tolerance,
        verdict: Verdict::from_bool(derivative_positive && differences_ok),
    })
}

/// Recomputes a certificate from its claim and parameters.
pub fn replay(cert: &Certificate) -> Result<Certificate> {
    let p = &cert.params;
    let u = |key: &str| -> Result<u64> {
        p.get(key)
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::InvalidParams(format!("missing parameter `{key}`")))
    };
    let k: KSpec = p
        .get("k")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::InvalidParams("missing parameter `k`".into()))?
        .parse()?;
    match cert.claim.as_str() {
        CLAIM_SINGLE => match p.get("scale").and_then(Value::as_u64) {
            Some(m) => property_p_single_unreduced(u("delta")?, u("ell")?, u("t")?, k, m),
            None => property_p_single(u("delta")?, u("ell")?, u("t")?, k),
        },
        CLAIM_RANGE => property_p_range(u("delta0")?, u("delta_max")?, u("ell")?, u("t")?, k),
        CLAIM_TAIL => tail_certificate(u("ell")?, u("t")?, k, &tail_schema_of(cert)?),
        CLAIM_THRESHOLD => {
            let params = PropertyPParams {
                delta0: u("delta0")?,
                ell: u("ell")?,
                t: u("t")?,
                k,
            };
            let schema = match cert.children.iter().find(|c| c.claim == CLAIM_TAIL) {
                Some(tail) => tail_schema_of(tail)?,
                None => TailSchema::builtin(k).ok_or(Error::NoTailAvailable)?,
            };
            certify_threshold(&params, Some(&schema))
        }
        other => Err(Error::InvalidParams(format!(
            "cannot replay claim `{other}`"
        ))),
    }
}

fn tail_schema_of(cert: &Certificate) -> Result<TailSchema> {
    let p = &cert.params;
    let r = |key: &str| -> Result<BigRational> {
        let j: RationalJson = serde_json::from_value(p.get(key).cloned().unwrap_or(Value::Null))?;
        BigRational::try_from(&j)
    };
    Ok(TailSchema {
        alpha: r("alpha")?,
        beta: r("beta")?,
        exponent_max: r("exponent_max")?,
        threshold: p
            .get("threshold")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::InvalidParams("missing parameter `threshold`".into()))?,
        target: Some(r("target")?),
    })
}

/// `A·r^E` at degree `δ` as an enclosure, for reports.
pub fn property_p_value(delta: u64, ell: u64, t: u64, k: KSpec, prec: u32) -> Result<Interval> {
    PropertyPParams {
        delta0: delta,
        ell,
        t,
        k,
    }
    .validate()?;
    pessimistic_bound_rational(
        &int(k.eval(delta)),
        &ratio(t * delta, ell),
        &int(delta),
        t,
        prec,
    )
}
