use serde::Serialize;
use statrs::distribution::{Beta, ChiSquared, ContinuousCDF, Normal};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }
}

fn two_sided_z(confidence: f64) -> f64 {
    Normal::standard().inverse_cdf(0.5 + confidence / 2.0)
}

/// Wilson score interval for `successes` out of `trials`.
pub fn wilson_interval(successes: u64, trials: u64, confidence: f64) -> Interval {
    assert!(trials > 0);
    let n = trials as f64;
    let p = successes as f64 / n;
    let z = two_sided_z(confidence);
    let z2 = z * z;
    let centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
    let half = z / (1.0 + z2 / n) * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    Interval {
        lower: (centre - half).max(0.0),
        upper: (centre + half).min(1.0),
    }
}

/// Exact Clopper–Pearson interval from Beta quantiles.
pub fn clopper_pearson_interval(successes: u64, trials: u64, confidence: f64) -> Interval {
    assert!(trials > 0 && successes <= trials);
    let alpha = 1.0 - confidence;
    let (k, n) = (successes as f64, trials as f64);
    let lower = if successes == 0 {
        0.0
    } else {
        Beta::new(k, n - k + 1.0).unwrap().inverse_cdf(alpha / 2.0)
    };
    let upper = if successes == trials {
        1.0
    } else {
        Beta::new(k + 1.0, n - k)
            .unwrap()
            .inverse_cdf(1.0 - alpha / 2.0)
    };
    Interval { lower, upper }
}

/// Pearson chi-square goodness of fit of `observed` counts against a
/// distribution `probabilities` (summing to 1). Returns the upper-tail
/// p-value with `len - 1` degrees of freedom.
pub fn chi_square_p_value(observed: &[u64], probabilities: &[f64]) -> f64 {
    assert_eq!(observed.len(), probabilities.len());
    assert!(observed.len() >= 2, "need at least two cells");
    let total: u64 = observed.iter().sum();
    let stat: f64 = observed
        .iter()
        .zip(probabilities)
        .map(|(&o, &p)| {
            let e = p * total as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    let dof = (observed.len() - 1) as f64;
    ChiSquared::new(dof).unwrap().sf(stat)
}

/// Total variation distance between empirical `observed` counts and
/// `probabilities`.
pub fn total_variation(observed: &[u64], probabilities: &[f64]) -> f64 {
    assert_eq!(observed.len(), probabilities.len());
    let total: u64 = observed.iter().sum();
    observed
        .iter()
        .zip(probabilities)
        .map(|(&o, &p)| (o as f64 / total as f64 - p).abs())
        .sum::<f64>()
        / 2.0
}
