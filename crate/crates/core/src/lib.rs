//! Certified computations around list colouring of triangle-free and
//! bipartite graphs.
//!
//! The crate is organised by engine:
//!
//! * [`graph`]: the graph substrate, graph6 I/O, named graphs, structural
//!   predicates, line graphs and the regular-supergraph embedding.
//! * [`color`]: exact counting of list colourings, chromatic and list
//!   chromatic numbers, and an exact uniform sampler.
//! * [`ratio`]: desk-scale checks of the counting-ratio argument for
//!   triangle-free graphs.
//! * [`property_p`]: exact big-integer certificates for the degree
//!   threshold condition, the analytic tail, and the convexity probe.
//! * [`bipartite`]: interval-certified local-lemma choosability conditions
//!   for bipartite graphs with per-part degree bounds.
//! * [`orient`]: halved-outdegree Eulerian orientations, odd directed
//!   cycles and Alon–Tarsi differences.
//!
//! Exact quantities are `num` big integers and rationals; anything that
//! involves `e`, `exp` or `ln` goes through [`interval::Interval`], whose
//! endpoints are dyadic rationals rounded outward.

pub mod bipartite;
pub mod certificate;
pub mod color;
pub mod error;
pub mod graph;
pub mod interval;
pub mod kspec;
pub mod limits;
pub mod orient;
pub mod power;
pub mod property_p;
pub mod ratio;
pub mod rational;

pub use certificate::{Certificate, Method, Verdict};
pub use error::{Error, Result};
pub use graph::{Graph, NamedGraph, Orientation};
pub use kspec::KSpec;
pub use limits::Limits;
