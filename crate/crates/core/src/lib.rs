//! Resilience analysis for undirected social networks.
//!
//! The crate covers the full pipeline from edge-list ingestion to attack
//! simulation: graph construction and layer aggregation ([`graph`]),
//! centrality, clustering and path statistics ([`metrics`]), discrete
//! power-law fitting ([`powerlaw`]), vertex-removal attacks ([`attack`]) and
//! seeded synthetic networks ([`synth`]).
//!
//! Metric routines are generic over the [`Scalar`] used for scores. The
//! aliases below name the common instantiations; `f64` is the default.
//!
//! ```
//! use netresil::{metrics, Graph};
//!
//! let g = Graph::from_edges([(0, 1), (1, 2)]).unwrap();
//! let bc: netresil::CentralityScores = metrics::betweenness_centrality(&g);
//! assert_eq!(bc.ranking()[0], 1);
//! ```

pub mod attack;
pub mod error;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod powerlaw;
pub mod report;
pub mod scalar;
pub mod synth;

pub use attack::{AttackCurve, AttackStrategy, CurvePoint, Mode, Selector, SweepConfig};
pub use error::{Error, Result};
pub use graph::{aggregate_union, EdgeList, EdgeRecord, Graph, NodeId, Role, RoleRecord};
pub use scalar::Scalar;

/// Exact rational scalar, for oracle comparisons on small graphs.
pub type Exact = num_rational::Rational64;

pub type CentralityScores = metrics::CentralityScores<f64>;
pub type CentralityScoresF32 = metrics::CentralityScores<f32>;
pub type ExactCentralityScores = metrics::CentralityScores<Exact>;

pub type NetworkSummary = metrics::NetworkSummary<f64>;
pub type ExactNetworkSummary = metrics::NetworkSummary<Exact>;

pub type CcdfPoint = metrics::CcdfPoint<f64>;

pub type PowerLawFit = powerlaw::PowerLawFit<f64>;
pub type PowerLawFitF32 = powerlaw::PowerLawFit<f32>;
