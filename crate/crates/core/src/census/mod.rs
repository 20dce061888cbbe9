//! Component census: classification, Monte Carlo disconnection estimates,
//! and exact enumeration for tiny sequences.

mod components;
mod estimate;
mod oracle;
pub mod stats;
mod taxonomy;
mod tightness;

use thiserror::Error;

pub use components::{connected_components, Component};
pub use estimate::{
    estimate_disconnection, large_edge_threshold, multigraph_edge_components, parallel_trials,
    CensusConfig, CensusReport, ClassMean, ClassRow, EdgeComponentEstimate, CONFIDENCE,
    REPORT_SCHEMA_VERSION,
};
pub use oracle::{
    exact_connectivity_oracle, for_each_realization, OracleError, OracleExport, OracleResult,
    ORACLE_MAX_HALF_EDGES,
};
pub use taxonomy::{
    canonical_key, classify_component, classify_components, ComponentClass, ComponentTaxonomy,
    SMALL_COMPONENT_MAX_ORDER,
};
pub use tightness::{tightness_experiment, RatioRange, TightnessRow, TightnessTable};

use crate::families::FamilyError;
use crate::sampler::SampleError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CensusError {
    #[error("trials must be at least 1")]
    NoTrials,
    #[error(transparent)]
    Sample(#[from] SampleError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("interval width {width} exceeds the requested {max_width}; run more trials")]
    TrialsTooFew { width: f64, max_width: f64 },
    #[error("cannot start worker pool: {0}")]
    ThreadPool(String),
}
