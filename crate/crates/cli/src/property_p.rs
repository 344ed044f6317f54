use clap::{Args, Subcommand};
use serde_json::{json, Value};
use trifree_core::property_p::{
    certify_threshold, minimal_delta0, property_p_range, PropertyPParams, TailSchema,
};
use trifree_core::{Error, KSpec, Result, Verdict};

use crate::report::Outcome;

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Certify the condition for every degree `δ ≥ Δ₀`.
    Certify(CertifyArgs),
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long)]
    delta0: u64,
    #[arg(long)]
    ell: u64,
    #[arg(long)]
    t: u64,
    /// half | three-quarter | two-thirds | half-bipartite | const:N | affine:...
    #[arg(long)]
    k: KSpec,
    /// Also search for the smallest valid `Δ₀` up to this degree.
    #[arg(long, value_name = "SCAN_LIMIT", num_args = 0..=1, default_missing_value = "2000")]
    search_min: Option<u64>,
    /// Last degree of the exact range when `k` has no tail certificate.
    #[arg(long, default_value_t = 2000)]
    delta_max: u64,
}

impl Cmd {
    pub fn name(&self) -> &'static str {
        match self {
            Cmd::Certify(_) => "certify",
        }
    }

    pub fn parameters(&self) -> Value {
        match self {
            Cmd::Certify(a) => json!({
                "delta0": a.delta0,
                "ell": a.ell,
                "t": a.t,
                "k": a.k,
                "search_min": a.search_min,
                "delta_max": a.delta_max,
            }),
        }
    }

    pub fn run(&self) -> Result<Outcome> {
        match self {
            Cmd::Certify(a) => certify(a),
        }
    }
}

fn certify(a: &CertifyArgs) -> Result<Outcome> {
    let p = PropertyPParams {
        delta0: a.delta0,
        ell: a.ell,
        t: a.t,
        k: a.k,
    };
    let (verdict, mut results) = match TailSchema::builtin(a.k) {
        Some(schema) => {
            let cert = certify_threshold(&p, Some(&schema))?;
            (
                cert.verdict,
                json!({ "scope": "all degrees", "certificate": cert }),
            )
        }
        None => {
            if a.delta0 > a.delta_max {
                return Err(Error::InvalidParams(format!(
                    "--delta0 {} exceeds --delta-max {}",
                    a.delta0, a.delta_max
                )));
            }
            // Without a tail only a failure is conclusive.
            let cert = property_p_range(a.delta0, a.delta_max, a.ell, a.t, a.k)?;
            let verdict = match cert.verdict {
                Verdict::CertifiedFalse => Verdict::CertifiedFalse,
                _ => Verdict::Undecided,
            };
            (
                verdict,
                json!({ "scope": format!("range [{}, {}] only", a.delta0, a.delta_max), "certificate": cert }),
            )
        }
    };
    if let Some(limit) = a.search_min {
        let m = minimal_delta0(a.ell, a.t, a.k, limit)?;
        results["minimal_delta0"] = json!({
            "delta0": m.delta0,
            "last_failure": m.last_failure,
            "scan": m.mode,
        });
    }
    Ok(Outcome::new(Some(verdict), results))
}
