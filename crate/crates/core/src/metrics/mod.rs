//! Structural measurements over a [`Graph`](crate::Graph).
//!
//! Every routine is a pure function of an immutable graph. Scores and
//! averages are generic over [`Scalar`](crate::Scalar); counts are integers.

mod centrality;
mod clustering;
mod components;
mod degree;
mod paths;
mod summary;

pub use centrality::{
    betweenness_centrality, centrality, closeness_centrality, degree_centrality, CentralityKind, CentralityScores,
};
pub use clustering::{clustering_by_degree, local_clustering, local_clustering_all};
pub use components::{component_count, connected_components, largest_component};
pub use degree::{classify_by_degree, degree_ccdf, degree_rank, CcdfPoint, DegreeClass, DegreeRank, DegreeThresholds};
pub use paths::{average_path_length, diameter, PathStats};
pub use summary::{summarize, NetworkSummary};

pub(crate) use components::largest_component_size;
pub(crate) use paths::path_stats;
