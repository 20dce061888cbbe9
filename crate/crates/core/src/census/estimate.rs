use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::components::connected_components;
use super::stats::{clopper_pearson_interval, wilson_interval, Interval};
use super::taxonomy::{classify_component, ComponentTaxonomy};
use super::CensusError;
use crate::degseq::{BoundedClass, DegreeSequence, InvariantReport, InvariantSet, RationalValue};
use crate::rng::trial_rng;
use crate::sampler::{matching_to_multigraph, random_matching, sample_simple, SamplerChoice};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Confidence level of both reported intervals.
pub const CONFIDENCE: f64 = 0.95;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CensusConfig {
    pub trials: u64,
    pub seed: u64,
    pub sampler: SamplerChoice,
    /// Worker threads; 0 lets rayon decide. Never affects results.
    pub threads: usize,
    /// Fail with [`CensusError::TrialsTooFew`] when the Wilson interval is
    /// wider than this.
    pub max_interval_width: Option<f64>,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            trials: 1000,
            seed: 0,
            sampler: SamplerChoice::Auto,
            threads: 0,
            max_interval_width: None,
        }
    }
}

/// Runs `per_trial(acc, t)` for every trial `t` in `0..trials` on a pool of
/// `threads` workers and merges the partial accumulators.
///
/// Trial `t` must draw its randomness from `trial_rng(seed, t)` only, and
/// `merge` must be associative and commutative; then the result does not
/// depend on the thread count or on scheduling.
pub fn parallel_trials<T, E, F, M>(
    trials: u64,
    threads: usize,
    per_trial: F,
    merge: M,
) -> Result<T, CensusError>
where
    T: Default + Send,
    E: Into<CensusError> + Send,
    F: Fn(&mut T, u64) -> Result<(), E> + Sync,
    M: Fn(T, T) -> T + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CensusError::ThreadPool(e.to_string()))?;
    pool.install(|| {
        (0..trials)
            .into_par_iter()
            .try_fold(T::default, |mut acc, t| {
                per_trial(&mut acc, t).map_err(Into::into)?;
                Ok::<T, CensusError>(acc)
            })
            .try_reduce(T::default, |a, b| Ok(merge(a, b)))
    })
}

#[derive(Debug, Clone, Default)]
struct Tally {
    disconnected: u64,
    taxonomy: ComponentTaxonomy,
    two_large: u64,
    second_largest_edges: BTreeMap<usize, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.disconnected += other.disconnected;
        self.two_large += other.two_large;
        self.taxonomy.merge(&other.taxonomy);
        for (k, c) in other.second_largest_edges {
            *self.second_largest_edges.entry(k).or_default() += c;
        }
        self
    }
}

/// `4 (ln m)^4`: components with more edges than this count as large.
pub fn large_edge_threshold(m: u64) -> f64 {
    4.0 * (m as f64).ln().powi(4)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassMean {
    pub class: String,
    pub total: u64,
    pub mean: f64,
}

/// Empirical mean count of one bounded class next to its invariant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassRow {
    pub class: BoundedClass,
    pub mean: f64,
    pub u: RationalValue,
    /// `mean / u`; `None` when `u = 0`.
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusReport {
    pub schema_version: u32,
    pub sequence: DegreeSequence,
    pub n: usize,
    pub m: u64,
    pub trials: u64,
    pub seed: u64,
    /// The sampler after resolving `auto`.
    pub sampler: SamplerChoice,
    pub disconnected: u64,
    pub p_hat: f64,
    pub standard_error: f64,
    pub wilson: Interval,
    pub clopper_pearson: Interval,
    pub invariants: InvariantReport,
    /// `p_hat / bound`; `None` when the bound is 0.
    pub bound_ratio: Option<f64>,
    /// `(n_3^4 + n) / m^6`.
    pub cubic_rate: f64,
    pub cubic_rate_ratio: Option<f64>,
    pub taxonomy: Vec<ClassMean>,
    pub large_edge_threshold: f64,
    pub two_large_count: u64,
    pub two_large_frequency: f64,
    /// Edge count of the second-largest component (0 when connected) →
    /// number of trials.
    pub second_largest_edges: BTreeMap<usize, u64>,
    pub class_rows: Vec<ClassRow>,
}

/// Samples `config.trials` uniform simple graphs with degrees `seq` and
/// reports how often they are disconnected, which small components appear,
/// and how both compare with the closed-form invariants.
pub fn estimate_disconnection(
    seq: &DegreeSequence,
    config: &CensusConfig,
) -> Result<CensusReport, CensusError> {
    if config.trials == 0 {
        return Err(CensusError::NoTrials);
    }
    let sampler = config.sampler.resolve(seq);
    let threshold = large_edge_threshold(seq.m());
    let tally = parallel_trials(
        config.trials,
        config.threads,
        |acc: &mut Tally, t| {
            let mut rng = trial_rng(config.seed, t);
            let g = sample_simple(seq, sampler, &mut rng)?;
            let components = connected_components(&g);
            if components.len() > 1 {
                acc.disconnected += 1;
            }
            let mut sizes: Vec<usize> = components.iter().map(|c| c.edges).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            if sizes.iter().filter(|&&e| e as f64 > threshold).count() >= 2 {
                acc.two_large += 1;
            }
            *acc.second_largest_edges
                .entry(sizes.get(1).copied().unwrap_or(0))
                .or_default() += 1;
            for c in &components {
                acc.taxonomy.add(&classify_component(&g, c), 1);
            }
            Ok::<(), crate::sampler::SampleError>(())
        },
        Tally::merge,
    )?;
    build_report(seq, config, sampler, threshold, tally).require_width(config.max_interval_width)
}

fn build_report(
    seq: &DegreeSequence,
    config: &CensusConfig,
    sampler: SamplerChoice,
    threshold: f64,
    tally: Tally,
) -> CensusReport {
    let trials = config.trials;
    let n = trials as f64;
    let p_hat = tally.disconnected as f64 / n;
    let exact: InvariantSet<BigRational> = InvariantSet::compute(seq);
    let bound = exact.disconnection_bound();
    let bound_ratio = (!bound.is_zero()).then(|| p_hat / RationalValue::from(&bound).float);
    let cubic = {
        let n3 = BigInt::from(seq.count(3));
        let rate = BigRational::new(
            n3.pow(4) + BigInt::from(seq.n()),
            BigInt::from(seq.m()).pow(6),
        );
        RationalValue::from(&rate).float
    };
    let class_rows = BoundedClass::ALL
        .iter()
        .map(|&class| {
            let mean = tally.taxonomy.bounded_count(class) as f64 / n;
            let u = exact.get(class);
            ClassRow {
                class,
                mean,
                u: u.into(),
                ratio: (!u.is_zero()).then(|| mean / RationalValue::from(u).float),
            }
        })
        .collect();
    CensusReport {
        schema_version: REPORT_SCHEMA_VERSION,
        sequence: seq.clone(),
        n: seq.n(),
        m: seq.m(),
        trials,
        seed: config.seed,
        sampler,
        disconnected: tally.disconnected,
        p_hat,
        standard_error: (p_hat * (1.0 - p_hat) / n).sqrt(),
        wilson: wilson_interval(tally.disconnected, trials, CONFIDENCE),
        clopper_pearson: clopper_pearson_interval(tally.disconnected, trials, CONFIDENCE),
        invariants: InvariantReport::from(&exact),
        bound_ratio,
        cubic_rate: cubic,
        cubic_rate_ratio: Some(p_hat / cubic),
        taxonomy: tally
            .taxonomy
            .entries()
            .into_iter()
            .map(|(class, total)| ClassMean {
                class: class.to_string(),
                total,
                mean: total as f64 / n,
            })
            .collect(),
        large_edge_threshold: threshold,
        two_large_count: tally.two_large,
        two_large_frequency: tally.two_large as f64 / n,
        second_largest_edges: tally.second_largest_edges,
        class_rows,
    }
}

impl CensusReport {
    /// Checks the requested interval width.
    pub fn require_width(self, max_width: Option<f64>) -> Result<Self, CensusError> {
        match max_width {
            Some(max) if self.wilson.width() > max => Err(CensusError::TrialsTooFew {
                width: self.wilson.width(),
                max_width: max,
            }),
            _ => Ok(self),
        }
    }

    /// Flat `field,value` CSV.
    pub fn to_csv(&self) -> String {
        let na = |x: Option<f64>| x.map_or_else(|| "N/A".to_string(), |v| v.to_string());
        let degrees: Vec<String> = self
            .sequence
            .degrees()
            .iter()
            .map(|d| d.to_string())
            .collect();
        let inv = &self.invariants;
        let mut rows: Vec<(String, String)> = vec![
            ("schema_version".into(), self.schema_version.to_string()),
            ("sequence".into(), degrees.join(" ")),
            ("n".into(), self.n.to_string()),
            ("m".into(), self.m.to_string()),
            ("trials".into(), self.trials.to_string()),
            ("seed".into(), self.seed.to_string()),
            ("sampler".into(), self.sampler.name().to_string()),
            ("disconnected".into(), self.disconnected.to_string()),
            ("p_hat".into(), self.p_hat.to_string()),
            ("standard_error".into(), self.standard_error.to_string()),
            ("wilson_lower".into(), self.wilson.lower.to_string()),
            ("wilson_upper".into(), self.wilson.upper.to_string()),
            (
                "clopper_pearson_lower".into(),
                self.clopper_pearson.lower.to_string(),
            ),
            (
                "clopper_pearson_upper".into(),
                self.clopper_pearson.upper.to_string(),
            ),
        ];
        for (name, v) in [
            ("u_edge", &inv.u_edge),
            ("u_triangle", &inv.u_triangle),
            ("u_triangle_pendant", &inv.u_triangle_pendant),
            ("u_k4_minus_e", &inv.u_k4_minus_e),
            ("u_k4", &inv.u_k4),
            ("u_k5_plus", &inv.u_k5_plus),
            ("bound", &inv.bound),
        ] {
            rows.push((name.into(), v.rational.clone()));
            rows.push((format!("{name}_float"), v.float.to_string()));
        }
        rows.extend([
            ("d_star".into(), inv.d_star.to_string()),
            ("delta_star".into(), inv.delta_star.to_string()),
            ("bound_ratio".into(), na(self.bound_ratio)),
            ("cubic_rate".into(), self.cubic_rate.to_string()),
            ("cubic_rate_ratio".into(), na(self.cubic_rate_ratio)),
            (
                "large_edge_threshold".into(),
                self.large_edge_threshold.to_string(),
            ),
            ("two_large_count".into(), self.two_large_count.to_string()),
            (
                "two_large_frequency".into(),
                self.two_large_frequency.to_string(),
            ),
        ]);
        for c in &self.taxonomy {
            rows.push((format!("taxonomy.{}.mean", c.class), c.mean.to_string()));
        }
        for r in &self.class_rows {
            let label = r.class.label();
            rows.push((format!("class.{label}.mean"), r.mean.to_string()));
            rows.push((format!("class.{label}.u"), r.u.float.to_string()));
            rows.push((format!("class.{label}.ratio"), na(r.ratio)));
        }
        for (k, c) in &self.second_largest_edges {
            rows.push((format!("second_largest_edges.{k}"), c.to_string()));
        }
        let mut out = String::from("field,value\n");
        for (f, v) in rows {
            out.push_str(&f);
            out.push(',');
            out.push_str(&v);
            out.push('\n');
        }
        out
    }
}

/// Mean and spread of the number of edge components (two degree-1 vertices
/// matched to each other) in configuration-model multigraphs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeComponentEstimate {
    pub trials: u64,
    pub mean: f64,
    pub variance: f64,
    pub standard_error: f64,
    /// `C(n_1, 2) / (2m - 1)`: each pair of leaf half-edges is matched with
    /// probability `1 / (2m - 1)`.
    pub expected: RationalValue,
}

pub fn multigraph_edge_components(
    seq: &DegreeSequence,
    trials: u64,
    seed: u64,
    threads: usize,
) -> Result<EdgeComponentEstimate, CensusError> {
    if trials == 0 {
        return Err(CensusError::NoTrials);
    }
    let (sum, sum_sq) = parallel_trials(
        trials,
        threads,
        |acc: &mut (u64, u64), t| {
            let mut rng = trial_rng(seed, t);
            let g = matching_to_multigraph(seq, &random_matching(seq, &mut rng))?;
            let c = g.edge_component_count(seq.degrees()) as u64;
            acc.0 += c;
            acc.1 += c * c;
            Ok::<(), crate::sampler::SampleError>(())
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    )?;
    let n = trials as f64;
    let mean = sum as f64 / n;
    let variance = if trials > 1 {
        (sum_sq as f64 - n * mean * mean) / (n - 1.0)
    } else {
        0.0
    };
    let n1 = seq.count(1);
    let expected = BigRational::new(
        BigInt::from(n1 * n1.saturating_sub(1) / 2),
        BigInt::from(2 * seq.m() - 1),
    );
    Ok(EdgeComponentEstimate {
        trials,
        mean,
        variance,
        standard_error: (variance / n).sqrt(),
        expected: (&expected).into(),
    })
}
