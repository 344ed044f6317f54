use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};
use trifree_core::color::{
    chromatic_number, count_list_colorings, list_chromatic_number, Color, ColoringSampler,
    ListAssignment, ListAssignmentJson, LIST_CHROMATIC_MAX_K,
};
use trifree_core::graph::{encode_graph6, parse_graph6, zoo, OrientationJson};
use trifree_core::orient::{
    alon_tarsi_difference, halved_outdegree_orientation, has_odd_directed_cycle,
};
use trifree_core::ratio::{ratio_report, RatioExperiment};
use trifree_core::{Error, Graph, Limits, NamedGraph, Orientation, Result, Verdict};

use crate::report::Outcome;

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Describe a named graph.
    Zoo(ZooArgs),
    /// Chromatic number against the bound `⌈(Δ+1)/2⌉ + 1`.
    Chi(Source),
    /// List chromatic number.
    ChiList(ChiListArgs),
    /// Number of proper list colourings.
    Count(ListArgs),
    /// Colouring-count ratio at a vertex and the quantities around it.
    Ratio(RatioArgs),
    /// Orientation with `outdeg(v) ≤ ⌈deg(v)/2⌉` and its Eulerian trace.
    Orient(Source),
    /// Alon–Tarsi difference of the halved orientation or of a given one.
    At(AtArgs),
    /// Exact uniform samples of list colourings.
    Sample(SampleArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Named graph: chvatal, petersen, clebsch, cN, odd_cycle(N), kN, kA,B, pathN, starN.
    #[arg(long, conflicts_with = "input")]
    zoo: Option<String>,
    /// File holding a graph6 record (first non-empty line).
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Use the line graph of the chosen graph.
    #[arg(long)]
    line: bool,
}

#[derive(Args, Debug)]
pub struct ZooArgs {
    #[arg(long)]
    name: String,
    #[arg(long)]
    line: bool,
}

#[derive(Args, Debug)]
pub struct ChiListArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, default_value_t = LIST_CHROMATIC_MAX_K)]
    k_max: usize,
}

#[derive(Args, Debug)]
pub struct ListArgs {
    #[command(flatten)]
    source: Source,
    /// `uniform:N` or a JSON file `{"lists": {"0": [..], ...}}`.
    #[arg(long)]
    lists: String,
}

#[derive(Args, Debug)]
pub struct RatioArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    lists: String,
    #[arg(long)]
    vertex: usize,
    #[arg(long, default_value_t = 1)]
    t: u64,
    /// Rational bound for the expected blocked-colour check.
    #[arg(long, default_value = "8")]
    ell: String,
}

#[derive(Args, Debug)]
pub struct AtArgs {
    #[command(flatten)]
    source: Source,
    /// JSON orientation `{"n": .., "arcs": [[u, v], ..]}` instead of a graph.
    #[arg(long)]
    orientation: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    lists: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    samples: usize,
}

impl Source {
    fn json(&self) -> Value {
        json!({ "zoo": self.zoo, "in": self.input, "line": self.line })
    }

    fn load(&self) -> Result<Graph> {
        let g = match (&self.zoo, &self.input) {
            (Some(name), _) => zoo(&NamedGraph::from_str(name)?)?,
            (None, Some(path)) => {
                let text = read(path)?;
                let line = text
                    .lines()
                    .map(str::trim)
                    .find(|l| !l.is_empty())
                    .unwrap_or("");
                parse_graph6(line)?
            }
            (None, None) => {
                return Err(Error::InvalidParams(
                    "one of --zoo or --in is required".into(),
                ))
            }
        };
        Ok(if self.line { g.line_graph() } else { g })
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParams(format!("cannot read {}: {e}", path.display())))
}

fn load_lists(spec: &str, g: &Graph) -> Result<ListAssignment> {
    let l = match spec.strip_prefix("uniform:") {
        Some(k) => {
            let k: u32 = k
                .parse()
                .map_err(|_| Error::InvalidParams(format!("bad list size in `{spec}`")))?;
            ListAssignment::uniform(g.n(), k)
        }
        None => {
            let j: ListAssignmentJson = serde_json::from_str(&read(&PathBuf::from(spec))?)?;
            ListAssignment::from_json(&j)?
        }
    };
    l.check_covers(g)?;
    Ok(l)
}

fn summary(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "max_degree": g.max_degree(),
        "min_degree": g.min_degree(),
        "graph6": encode_graph6(g),
        "triangle_free": g.is_triangle_free(),
        "c4_free": g.is_c4_free(),
        "bipartite": g.is_bipartite().is_some(),
        "connected": g.is_connected(),
    })
}

/// `⌈(Δ+1)/2⌉ + 1`.
fn half_degree_bound(max_degree: usize) -> usize {
    (max_degree + 1).div_ceil(2) + 1
}

impl Cmd {
    pub fn name(&self) -> &'static str {
        match self {
            Cmd::Zoo(_) => "zoo",
            Cmd::Chi(_) => "chi",
            Cmd::ChiList(_) => "chi-list",
            Cmd::Count(_) => "count",
            Cmd::Ratio(_) => "ratio",
            Cmd::Orient(_) => "orient",
            Cmd::At(_) => "at",
            Cmd::Sample(_) => "sample",
        }
    }

    pub fn parameters(&self) -> Value {
        match self {
            Cmd::Zoo(a) => json!({ "name": a.name, "line": a.line }),
            Cmd::Chi(s) | Cmd::Orient(s) => json!({ "graph": s.json() }),
            Cmd::ChiList(a) => json!({ "graph": a.source.json(), "k_max": a.k_max }),
            Cmd::Count(a) => json!({ "graph": a.source.json(), "lists": a.lists }),
            Cmd::Ratio(a) => {
                json!({ "graph": a.source.json(), "lists": a.lists, "vertex": a.vertex, "t": a.t, "ell": a.ell })
            }
            Cmd::At(a) => json!({ "graph": a.source.json(), "orientation": a.orientation }),
            Cmd::Sample(a) => {
                json!({ "graph": a.source.json(), "lists": a.lists, "seed": a.seed, "samples": a.samples })
            }
        }
    }

    pub fn run(&self) -> Result<Outcome> {
        match self {
            Cmd::Zoo(a) => {
                let g = Source {
                    zoo: Some(a.name.clone()),
                    input: None,
                    line: a.line,
                }
                .load()?;
                Ok(Outcome::new(
                    None,
                    json!({ "graph": summary(&g), "edge_list": g.to_json() }),
                ))
            }
            Cmd::Chi(s) => {
                let g = s.load()?;
                let chi = chromatic_number(&g)?;
                let bound = half_degree_bound(g.max_degree());
                let comparison = match chi.cmp(&bound) {
                    std::cmp::Ordering::Less => "below",
                    std::cmp::Ordering::Equal => "sharp",
                    std::cmp::Ordering::Greater => "above",
                };
                Ok(Outcome::new(
                    None,
                    json!({ "graph": summary(&g), "chi": chi, "bound": bound, "comparison": comparison }),
                ))
            }
            Cmd::ChiList(a) => {
                let g = a.source.load()?;
                let chi_l = list_chromatic_number(&g, a.k_max)?;
                let results = if chi_l > a.k_max {
                    json!({ "graph": summary(&g), "chi_list": null, "exceeds": a.k_max })
                } else {
                    json!({ "graph": summary(&g), "chi_list": chi_l })
                };
                let verdict = (chi_l > a.k_max).then_some(Verdict::Undecided);
                Ok(Outcome::new(verdict, results))
            }
            Cmd::Count(a) => {
                let g = a.source.load()?;
                let l = load_lists(&a.lists, &g)?;
                let count = count_list_colorings(&g, &l)?;
                Ok(Outcome::new(
                    None,
                    json!({ "graph": summary(&g), "count": count.to_string() }),
                ))
            }
            Cmd::Ratio(a) => {
                let g = a.source.load()?;
                let lists = load_lists(&a.lists, &g)?;
                let ell = BigRational::from_str(&a.ell)
                    .map_err(|_| Error::InvalidParams(format!("bad rational `{}`", a.ell)))?;
                let report = ratio_report(&RatioExperiment {
                    graph: g,
                    lists,
                    vertex: a.vertex,
                    t: a.t,
                    ell,
                })?;
                Ok(Outcome::new(None, serde_json::to_value(&report)?))
            }
            Cmd::Orient(s) => {
                let g = s.load()?;
                let (o, trace) = halved_outdegree_orientation(&g);
                let out = o.out_degrees();
                let bound_holds = (0..g.n()).all(|v| out[v] <= g.degree(v).div_ceil(2));
                let verdict = Verdict::from_bool(bound_holds && trace.verify(&g));
                let results = json!({
                    "graph": summary(&g),
                    "orientation": o.to_json(),
                    "out_degrees": out,
                    "bound_holds": bound_holds,
                    "odd_directed_cycle": has_odd_directed_cycle(&o),
                    "trace": trace,
                });
                Ok(Outcome::new(Some(verdict), results))
            }
            Cmd::At(a) => {
                let o = match &a.orientation {
                    Some(path) => {
                        let j: OrientationJson = serde_json::from_str(&read(path)?)?;
                        Orientation::from_json(&j)?
                    }
                    None => halved_outdegree_orientation(&a.source.load()?).0,
                };
                let diff = alon_tarsi_difference(&o)?;
                let sizes: Vec<usize> = o.out_degrees().iter().map(|d| d + 1).collect();
                let results = json!({
                    "orientation": o.to_json(),
                    "alon_tarsi_difference": diff,
                    "list_sizes": sizes,
                    "odd_directed_cycle": has_odd_directed_cycle(&o),
                });
                Ok(Outcome::new(Some(Verdict::from_bool(diff != 0)), results))
            }
            Cmd::Sample(a) => {
                let g = a.source.load()?;
                let l = load_lists(&a.lists, &g)?;
                let mut sampler = ColoringSampler::new(&g, &l, &Limits::default())?;
                let samples: Vec<Vec<Color>> = sampler
                    .samples(a.seed, a.samples)
                    .iter()
                    .map(|c| c.to_total().expect("samples are total"))
                    .collect();
                let mut o = Outcome::new(
                    None,
                    json!({ "total": sampler.total().to_string(), "samples": samples }),
                );
                o.seeds = vec![a.seed];
                Ok(o)
            }
        }
    }
}
