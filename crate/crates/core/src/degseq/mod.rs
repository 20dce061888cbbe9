//! Degree sequences and their closed-form invariants.

mod invariants;

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use invariants::{
    compute_invariants, BoundedClass, InvariantReport, InvariantSet, RationalValue, DELTA_STAR_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("degree sequence is empty")]
    Empty,
    #[error("vertex {vertex} has negative degree {degree}")]
    NegativeDegree { vertex: usize, degree: i64 },
    #[error("vertex {vertex} has degree 0")]
    ZeroDegree { vertex: usize },
    #[error("degree sum {sum} is odd")]
    OddSum { sum: u64 },
    #[error("sequence is not graphical (Erdős–Gallai inequality fails at k = {k})")]
    NotGraphical { k: usize },
    #[error("degree {degree} is too large")]
    DegreeTooLarge { degree: i64 },
    #[error("cannot parse degree sequence: {0}")]
    Parse(String),
}

/// A graphical degree sequence with no zero degrees.
///
/// `degrees()[v]` is the degree of vertex `v` (label `v + 1` in exports).
/// Input order is preserved; a nondecreasing copy is kept alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
    sorted: Vec<u32>,
    counts: BTreeMap<u32, usize>,
    edges: u64,
}

impl DegreeSequence {
    /// Validates `degrees` and returns the sequence if some simple graph
    /// realizes it.
    ///
    /// Checks run in order: empty, negative, zero, oversized, odd sum,
    /// Erdős–Gallai.
    pub fn new(degrees: &[i64]) -> Result<Self, SequenceError> {
        if degrees.is_empty() {
            return Err(SequenceError::Empty);
        }
        if let Some((v, &d)) = degrees.iter().enumerate().find(|(_, &d)| d < 0) {
            return Err(SequenceError::NegativeDegree {
                vertex: v + 1,
                degree: d,
            });
        }
        if let Some(v) = degrees.iter().position(|&d| d == 0) {
            return Err(SequenceError::ZeroDegree { vertex: v + 1 });
        }
        if let Some(&d) = degrees.iter().find(|&&d| d > i64::from(u32::MAX)) {
            return Err(SequenceError::DegreeTooLarge { degree: d });
        }
        let degrees: Vec<u32> = degrees.iter().map(|&d| d as u32).collect();
        let sum: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
        if sum % 2 == 1 {
            return Err(SequenceError::OddSum { sum });
        }
        let mut sorted = degrees.clone();
        sorted.sort_unstable();
        erdos_gallai(&sorted)?;

        let mut counts = BTreeMap::new();
        for &d in &degrees {
            *counts.entry(d).or_insert(0) += 1;
        }
        Ok(Self {
            degrees,
            sorted,
            counts,
            edges: sum / 2,
        })
    }

    pub fn from_degrees(degrees: &[u32]) -> Result<Self, SequenceError> {
        let wide: Vec<i64> = degrees.iter().map(|&d| i64::from(d)).collect();
        Self::new(&wide)
    }

    /// Parses a JSON integer array (`[3, 3, 2]`) or a whitespace / comma
    /// separated list (`3 3 2`) and validates it.
    pub fn parse(text: &str) -> Result<Self, SequenceError> {
        Self::new(&parse_degree_list(text)?)
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn m(&self) -> u64 {
        self.edges
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Degrees in nondecreasing order.
    pub fn sorted(&self) -> &[u32] {
        &self.sorted
    }

    /// Number of vertices of degree `d`.
    pub fn count(&self, d: u32) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0) as u64
    }

    pub fn counts(&self) -> &BTreeMap<u32, usize> {
        &self.counts
    }

    pub fn max_degree(&self) -> u32 {
        *self.sorted.last().expect("nonempty")
    }

    pub fn min_degree(&self) -> u32 {
        self.sorted[0]
    }

    /// Sum of the `max_degree()` largest degrees. No vertex of any
    /// realization has a neighbourhood degree sum above this.
    pub fn d_star(&self) -> u64 {
        let take = self.max_degree() as usize;
        self.sorted
            .iter()
            .rev()
            .take(take)
            .map(|&d| u64::from(d))
            .sum()
    }

    /// `min(10^6, max{k >= 1 : n_1 + ... + n_k <= n / 10^24})`, with an
    /// empty max clamped to 1.
    ///
    /// Because `n / 10^24 < 1` for any sequence that fits in memory, the
    /// condition holds exactly while no vertex has degree `<= k`, so the
    /// value is `max(1, min(10^6, min_degree - 1))` in practice.
    pub fn delta_star(&self) -> u32 {
        const SCALE: u128 = 1_000_000_000_000_000_000_000_000;
        let n = self.n() as u128;
        let mut cumulative = 0u128;
        let mut best = 0u32;
        for k in 1..=self.max_degree().min(DELTA_STAR_CAP) {
            cumulative += self.count(k) as u128;
            if cumulative * SCALE <= n {
                best = k;
            } else {
                break;
            }
        }
        best.clamp(1, DELTA_STAR_CAP)
    }

    /// `n_1 > m`: some component is forced to be a single edge.
    pub fn forces_edge_component(&self) -> bool {
        self.count(1) > self.m()
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(d, c)| format!("{d}^{c}"))
            .collect();
        format!("n={} m={} [{}]", self.n(), self.m(), parts.join(" "))
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.degrees.serialize(serializer)
    }
}

/// Tokenizes a degree list without validating it.
pub fn parse_degree_list(text: &str) -> Result<Vec<i64>, SequenceError> {
    let trimmed = text.trim();
    let body = match (trimmed.strip_prefix('['), trimmed.strip_suffix(']')) {
        (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
        _ => return Err(SequenceError::Parse("unbalanced brackets".into())),
    };
    body.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| SequenceError::Parse(format!("not an integer: {tok:?}")))
        })
        .collect()
}

/// Erdős–Gallai test on a nondecreasing list with even sum.
fn erdos_gallai(sorted_ascending: &[u32]) -> Result<(), SequenceError> {
    let desc: Vec<u64> = sorted_ascending
        .iter()
        .rev()
        .map(|&d| u64::from(d))
        .collect();
    let n = desc.len();
    let mut prefix = 0u64;
    for k in 1..=n {
        prefix += desc[k - 1];
        let kk = k as u64;
        let tail: u64 = desc[k..].iter().map(|&d| d.min(kk)).sum();
        if prefix > kk * (kk - 1) + tail {
            return Err(SequenceError::NotGraphical { k });
        }
    }
    Ok(())
}
