//! Uniform sampling of simple graphs with a given degree sequence.

mod chain;
mod edge_probability;
mod havel_hakimi;
mod matching;
mod rejection;
mod switching;

use rand_core::RngCore;
use serde::Serialize;
use thiserror::Error;

pub use chain::{default_chain_steps, switch_chain_sample, SwitchChain};
pub use edge_probability::{
    conditional_edge_probability_oracle, edge_probability_bound, lemma_hypotheses_hold,
    simple_completions, EdgeProbabilityError, MAX_ORACLE_HALF_EDGES,
};
pub use havel_hakimi::havel_hakimi_construct;
pub use matching::{
    matching_to_multigraph, multigraph_from_matching, random_matching, HalfEdge, HalfEdgeIndex,
    Matching,
};
pub use rejection::{rejection_sample, RejectionOutcome, DEFAULT_MAX_ATTEMPTS};
pub use switching::{switch_counts, switching, switchings_between, SwitchError};

use crate::degseq::DegreeSequence;
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SampleError {
    #[error("rejection sampling gave up after {max_attempts} attempts")]
    AttemptsExhausted { max_attempts: u64 },
    #[error("matching leaves {unmatched} half-edges unmatched")]
    PartialMatching { unmatched: usize },
    #[error("matching has {found} half-edges, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("cannot pair half-edges {a} and {b}")]
    InvalidPair { a: usize, b: usize },
    #[error("initial graph does not realize the degree sequence")]
    InitialMismatch,
}

/// Which uniform sampler produces simple graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SamplerChoice {
    Rejection {
        max_attempts: u64,
    },
    /// `steps: None` uses [`default_chain_steps`].
    SwitchChain {
        steps: Option<u64>,
    },
    /// Rejection when the configuration model is simple with probability at
    /// least [`AUTO_MIN_SIMPLE_PROBABILITY`] (estimated as
    /// `exp(-lambda - lambda^2)`, `lambda = sum d(d-1) / 4m`), otherwise the
    /// switch chain with default steps.
    Auto,
}

pub const AUTO_MIN_SIMPLE_PROBABILITY: f64 = 1e-4;

impl Default for SamplerChoice {
    fn default() -> Self {
        SamplerChoice::Rejection {
            max_attempts: DEFAULT_MAX_ATTEMPTS,
        }
    }
}

impl SamplerChoice {
    /// Resolves `Auto` for `seq`; other choices are returned unchanged.
    pub fn resolve(self, seq: &DegreeSequence) -> SamplerChoice {
        match self {
            SamplerChoice::Auto => {
                if estimated_simple_probability(seq) >= AUTO_MIN_SIMPLE_PROBABILITY {
                    SamplerChoice::Rejection {
                        max_attempts: DEFAULT_MAX_ATTEMPTS,
                    }
                } else {
                    SamplerChoice::SwitchChain { steps: None }
                }
            }
            other => other,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SamplerChoice::Rejection { .. } => "rejection",
            SamplerChoice::SwitchChain { .. } => "switch-chain",
            SamplerChoice::Auto => "auto",
        }
    }
}

/// Heuristic probability that a configuration-model multigraph is simple.
pub fn estimated_simple_probability(seq: &DegreeSequence) -> f64 {
    let pairs: f64 = seq
        .degrees()
        .iter()
        .map(|&d| f64::from(d) * (f64::from(d) - 1.0))
        .sum();
    let lambda = pairs / (4.0 * seq.m() as f64);
    (-lambda - lambda * lambda).exp()
}

/// Draws one simple graph with the resolved sampler.
pub fn sample_simple<R: RngCore + ?Sized>(
    seq: &DegreeSequence,
    choice: SamplerChoice,
    rng: &mut R,
) -> Result<SimpleGraph, SampleError> {
    match choice.resolve(seq) {
        SamplerChoice::Rejection { max_attempts } => {
            rejection_sample(seq, rng, max_attempts).map(|o| o.graph)
        }
        SamplerChoice::SwitchChain { steps } => {
            let steps = steps.unwrap_or_else(|| default_chain_steps(seq.m()));
            switch_chain_sample(seq, steps, rng, None)
        }
        SamplerChoice::Auto => unreachable!("resolved above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::trial_rng;

    #[test]
    fn auto_prefers_rejection_for_sparse_sequences() {
        let s = DegreeSequence::from_degrees(&[3; 20]).unwrap();
        assert!(matches!(
            SamplerChoice::Auto.resolve(&s),
            SamplerChoice::Rejection { .. }
        ));
    }

    #[test]
    fn auto_falls_back_to_chain_for_dense_sequences() {
        let s = DegreeSequence::from_degrees(&[20; 30]).unwrap();
        assert_eq!(
            SamplerChoice::Auto.resolve(&s),
            SamplerChoice::SwitchChain { steps: None }
        );
    }

    #[test]
    fn both_samplers_respect_degrees() {
        let s = DegreeSequence::from_degrees(&[1, 1, 2, 2, 3, 3, 4]).unwrap();
        let mut rng = trial_rng(3, 0);
        for choice in [
            SamplerChoice::default(),
            SamplerChoice::SwitchChain { steps: Some(50) },
            SamplerChoice::Auto,
        ] {
            let g = sample_simple(&s, choice, &mut rng).unwrap();
            assert_eq!(g.degrees(), s.degrees());
        }
    }
}
