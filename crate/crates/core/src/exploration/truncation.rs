use num_rational::Ratio;
use num_traits::Float;

/// Parameters of the truncated walk increment.
///
/// Below the degree threshold `sqrt(m) / (ln m)^log_power` the increment is
/// `min(cap_multiplier * d, X_i - X_{i-1})`; at or above it, it is
/// `high_degree_fraction * d`. The fraction is exact, so `9/10 * 3` comes
/// out as the float nearest to 2.7.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationParams {
    pub cap_multiplier: u32,
    pub high_degree_fraction: Ratio<u32>,
    pub log_power: i32,
}

impl Default for TruncationParams {
    fn default() -> Self {
        TruncationParams {
            cap_multiplier: 3,
            high_degree_fraction: Ratio::new_raw(9, 10),
            log_power: 2,
        }
    }
}

impl TruncationParams {
    /// `sqrt(m) / (ln m)^log_power`; infinite for `m = 1`.
    pub fn degree_threshold<F: Float>(&self, m: u64) -> F {
        let m = F::from(m).unwrap();
        m.sqrt() / m.ln().powi(self.log_power)
    }
}

/// Truncated increment for one live iteration with `open` half-edges
/// exposed and walk step `step`.
pub fn truncated_increment<F: Float>(open: u32, step: i64, m: u64, params: &TruncationParams) -> F {
    let d = F::from(open).unwrap();
    if d < params.degree_threshold(m) {
        let cap = i64::from(params.cap_multiplier) * i64::from(open);
        F::from(cap.min(step)).unwrap()
    } else {
        let numer = u64::from(*params.high_degree_fraction.numer()) * u64::from(open);
        F::from(numer).unwrap() / F::from(*params.high_degree_fraction.denom()).unwrap()
    }
}
