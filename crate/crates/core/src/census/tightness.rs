use serde::Serialize;

use super::estimate::{estimate_disconnection, CensusConfig};
use super::CensusError;
use crate::degseq::BoundedClass;
use crate::families::ScaledFamily;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessRow {
    pub m: u64,
    pub n: usize,
    pub class: BoundedClass,
    pub mean: f64,
    pub u: f64,
    pub u_exact: String,
    /// `mean / u`; `None` when `u = 0`.
    pub ratio: Option<f64>,
    /// `D* <= m / 3`, the regime where the lower bounds are claimed.
    pub d_star_ok: bool,
}

/// Range of `mean / u` for one class across all sizes where it is defined.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioRange {
    pub class: BoundedClass,
    pub min: f64,
    pub max: f64,
}

impl RatioRange {
    /// `max / min`; infinite when some size saw no components at all.
    pub fn spread(&self) -> f64 {
        self.max / self.min
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessTable {
    pub family: ScaledFamily,
    pub trials: u64,
    pub seed: u64,
    pub rows: Vec<TightnessRow>,
}

impl TightnessTable {
    pub fn ratio_range(&self, class: BoundedClass) -> Option<RatioRange> {
        let ratios: Vec<f64> = self
            .rows
            .iter()
            .filter(|r| r.class == class)
            .filter_map(|r| r.ratio)
            .collect();
        if ratios.is_empty() {
            return None;
        }
        Some(RatioRange {
            class,
            min: ratios.iter().copied().fold(f64::INFINITY, f64::min),
            max: ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        })
    }

    /// One row per `(size, class)`; undefined ratios are written `N/A`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,n,class,mean,u,u_exact,ratio,d_star_ok\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.m,
                r.n,
                r.class.label(),
                r.mean,
                r.u,
                r.u_exact,
                r.ratio.map_or_else(|| "N/A".to_string(), |x| x.to_string()),
                r.d_star_ok
            ));
        }
        out
    }
}

/// Runs a census for each size of `family` and tabulates the mean count of
/// every bounded class against its invariant.
pub fn tightness_experiment(
    family: ScaledFamily,
    sizes: &[u64],
    config: &CensusConfig,
) -> Result<TightnessTable, CensusError> {
    let mut rows = Vec::new();
    for &m in sizes {
        let seq = family.degrees_for_edges(m)?;
        let d_star_ok = 3 * seq.d_star() <= seq.m();
        let report = estimate_disconnection(&seq, config)?;
        for row in report.class_rows {
            rows.push(TightnessRow {
                m,
                n: seq.n(),
                class: row.class,
                mean: row.mean,
                u: row.u.float,
                u_exact: row.u.rational,
                ratio: row.ratio,
                d_star_ok,
            });
        }
    }
    Ok(TightnessTable {
        family,
        trials: config.trials,
        seed: config.seed,
        rows,
    })
}
