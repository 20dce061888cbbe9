//! Uniform random simple graphs with a prescribed degree sequence.
//!
//! The crate covers four layers:
//!
//! * [`degseq`] validates degree sequences (Erdős–Gallai) and evaluates the
//!   closed-form small-component invariants and the disconnection bound they
//!   sum to. The invariants are generic over the scalar type, so the same code
//!   produces exact rationals ([`ExactInvariants`]) and floats
//!   ([`FloatInvariants`]).
//! * [`sampler`] draws configuration-model matchings, rejection-samples
//!   uniform simple graphs, runs the edge-switching chain, and hosts the
//!   exhaustive conditional-edge-probability oracle.
//! * [`exploration`] grows a spanning tree of one component while tracking
//!   open half-edges, recording per-iteration statistics.
//! * [`census`] classifies components, estimates disconnection probabilities
//!   by Monte Carlo, and enumerates tiny sequences exactly.
//!
//! Vertices are `0..n` inside the library. Text and JSON exports use labels
//! `1..=n`.

pub mod census;
pub mod degseq;
pub mod exploration;
pub mod families;
pub mod graph;
pub mod rng;
pub mod sampler;
pub mod scalar;

use num_rational::BigRational;

pub use census::{
    classify_components, connected_components, estimate_disconnection, exact_connectivity_oracle,
    tightness_experiment, CensusConfig, CensusError, CensusReport, Component, ComponentClass,
    ComponentTaxonomy, OracleError, OracleResult,
};
pub use degseq::{
    compute_invariants, BoundedClass, DegreeSequence, InvariantReport, InvariantSet, SequenceError,
};
pub use exploration::{
    explore, explore_revealing, ExplorationTrace, IterationRecord, RevealMode, TruncationParams,
};
pub use families::{Family, FamilyError, ScaledFamily};
pub use graph::{GraphError, MultiGraph, SimpleGraph};
pub use sampler::{
    havel_hakimi_construct, random_matching, rejection_sample, switch_chain_sample, switching,
    HalfEdge, HalfEdgeIndex, Matching, SampleError, SamplerChoice, SwitchError,
};
pub use scalar::Scalar;

/// Exact rational scalar used for invariants and oracle probabilities.
pub type Exact = BigRational;

/// Invariants evaluated in exact rational arithmetic.
pub type ExactInvariants = InvariantSet<BigRational>;

/// Invariants evaluated in `f64`.
pub type FloatInvariants = InvariantSet<f64>;

/// Invariants evaluated in `f32`.
pub type SinglePrecisionInvariants = InvariantSet<f32>;
