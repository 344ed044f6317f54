use clap::{Args, Subcommand};
use serde_json::{json, Value};
use trifree_core::bipartite::{
    choosable_certificate, half_k, threshold_table, threshold_table_csv, uncovered_csv,
    uncovered_region_scan, verify_regions, BipartiteParams, CLAIMED_UNCOVERED_BOUND,
};
use trifree_core::{Result, Verdict};

use crate::report::Outcome;

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Thresholds for `Δ_A = 2..=55` (CSV via `--csv`).
    #[command(visible_alias = "table1")]
    ThresholdTable,
    /// Decide one parameter pair; list sizes default to `⌈Δ/2⌉ + 1`.
    Certify(CertifyArgs),
    /// Pairs in `[1, W]²` that neither condition certifies (CSV via `--csv`).
    Scan(WindowArgs),
    /// Check every pair of both covered regions inside `[1, W]²`.
    Regions(WindowArgs),
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long)]
    da: u64,
    #[arg(long)]
    db: u64,
    #[arg(long)]
    ka: Option<u64>,
    #[arg(long)]
    kb: Option<u64>,
}

#[derive(Args, Debug)]
pub struct WindowArgs {
    #[arg(long)]
    window: u64,
}

impl Cmd {
    pub fn name(&self) -> &'static str {
        match self {
            Cmd::ThresholdTable => "threshold-table",
            Cmd::Certify(_) => "certify",
            Cmd::Scan(_) => "scan",
            Cmd::Regions(_) => "regions",
        }
    }

    pub fn parameters(&self) -> Value {
        match self {
            Cmd::ThresholdTable => json!({}),
            Cmd::Certify(a) => json!({ "da": a.da, "db": a.db, "ka": a.ka, "kb": a.kb }),
            Cmd::Scan(w) | Cmd::Regions(w) => json!({ "window": w.window }),
        }
    }

    pub fn run(&self) -> Result<Outcome> {
        match self {
            Cmd::ThresholdTable => {
                let entries = threshold_table()?;
                let csv = threshold_table_csv(&entries);
                let rows: Vec<Value> = entries.iter().map(|e| json!({ "delta_a": e.delta_a, "k_a": e.k_a, "value": e.value, "enclosure": e.enclosure })).collect();
                let mut o = Outcome::new(Some(Verdict::CertifiedTrue), json!({ "rows": rows }));
                o.csv = Some(csv);
                Ok(o)
            }
            Cmd::Certify(a) => {
                let p = BipartiteParams::new(
                    a.da,
                    a.db,
                    a.ka.unwrap_or(half_k(a.da)),
                    a.kb.unwrap_or(half_k(a.db)),
                );
                let cert = choosable_certificate(&p)?;
                let (condition, orientation) = match &cert.witness {
                    Some(w) => (w["condition"].clone(), w["orientation"].clone()),
                    None => (Value::Null, Value::Null),
                };
                let results = json!({
                    "k_a": p.k_a,
                    "k_b": p.k_b,
                    "condition": condition,
                    "orientation": orientation,
                    "certificate": cert,
                });
                Ok(Outcome::new(Some(cert.verdict), results))
            }
            Cmd::Scan(w) => {
                let scan = uncovered_region_scan(w.window)?;
                let results = json!({
                    "unordered_count": scan.unordered_count,
                    "ordered_count": scan.ordered_count,
                    "claimed_bound": CLAIMED_UNCOVERED_BOUND,
                    "uncovered": scan.uncovered.len(),
                    "uncovered_by_precondition": scan.uncovered_by_precondition.len(),
                    "undecided": scan.undecided,
                    "certificate": scan.certificate,
                });
                let mut o = Outcome::new(Some(scan.certificate.verdict), results);
                o.csv = Some(uncovered_csv(&scan));
                Ok(o)
            }
            Cmd::Regions(w) => {
                let r = verify_regions(w.window)?;
                let verdict = r.certificate.verdict;
                Ok(Outcome::new(Some(verdict), serde_json::to_value(&r)?))
            }
        }
    }
}
