use std::fs;
use std::path::Path;

use degcon::census::{
    estimate_disconnection, exact_connectivity_oracle, tightness_experiment, CensusConfig,
    RatioRange,
};
use degcon::degseq::parse_degree_list;
use degcon::exploration::{explore_revealing, InvariantViolation, RevealMode, TraceExport};
use degcon::rng::trial_rng;
use degcon::sampler::{default_chain_steps, sample_simple, DEFAULT_MAX_ATTEMPTS};
use degcon::{
    BoundedClass, DegreeSequence, ExactInvariants, Family, InvariantReport, SamplerChoice,
    ScaledFamily,
};
use serde::Serialize;

use crate::args::{Format, OutputArgs, SamplerKind, SamplingArgs, SourceArgs};
use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Where the degree sequence came from, as recorded in reports.
#[derive(Debug, Clone, Serialize)]
pub struct Source {
    pub kind: &'static str,
    pub value: String,
}

/// Everything that determines a command's output. Thread count and output
/// path are left out on purpose: they never change the results.
#[derive(Debug, Clone, Serialize)]
pub struct ResolvedConfig {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<Source>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampler: Option<SamplerChoice>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multigraph: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_width: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scaled_family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sizes: Option<Vec<u64>>,
}

impl ResolvedConfig {
    fn new(command: &'static str) -> Self {
        ResolvedConfig {
            command,
            source: None,
            sequence: None,
            trials: None,
            seed: None,
            sampler: None,
            start: None,
            multigraph: None,
            max_width: None,
            scaled_family: None,
            sizes: None,
        }
    }

    fn csv_rows(&self) -> Vec<(String, String)> {
        let value = serde_json::to_value(self).expect("config serializes");
        let mut rows = Vec::new();
        flatten("config", &value, &mut rows);
        rows
    }
}

fn flatten(prefix: &str, v: &serde_json::Value, out: &mut Vec<(String, String)>) {
    match v {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                flatten(&format!("{prefix}.{k}"), v, out);
            }
        }
        serde_json::Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
            let parts: Vec<String> = items.iter().map(|i| i.to_string()).collect();
            out.push((prefix.to_string(), parts.join(" ")));
        }
        serde_json::Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// Output of a command: the report text and a one-line summary.
pub struct Emitted {
    pub body: String,
    pub summary: String,
}

pub struct Outcome {
    pub emitted: Emitted,
    pub exit_code: i32,
}

impl From<Emitted> for Outcome {
    fn from(emitted: Emitted) -> Self {
        Outcome {
            emitted,
            exit_code: 0,
        }
    }
}

fn load_sequence(source: &SourceArgs) -> Result<(DegreeSequence, Source), CliError> {
    if let Some(text) = &source.seq {
        let seq = DegreeSequence::parse(text)?;
        return Ok((
            seq,
            Source {
                kind: "seq",
                value: text.trim().to_string(),
            },
        ));
    }
    if let Some(path) = &source.seq_file {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let seq = DegreeSequence::parse(&text)?;
        return Ok((
            seq,
            Source {
                kind: "seq-file",
                value: path.display().to_string(),
            },
        ));
    }
    let text = source.family.as_deref().expect("clap requires one source");
    let family: Family = text.parse()?;
    let seq = family.sequence()?;
    Ok((
        seq,
        Source {
            kind: "family",
            value: family.to_string(),
        },
    ))
}

fn sampler_choice(args: &SamplingArgs, seq: &DegreeSequence) -> SamplerChoice {
    let kind = match args.sampler {
        SamplerKind::Auto => SamplerChoice::Auto.resolve(seq),
        SamplerKind::Rejection => SamplerChoice::default(),
        SamplerKind::SwitchChain => SamplerChoice::SwitchChain { steps: None },
    };
    match kind {
        SamplerChoice::Rejection { .. } => SamplerChoice::Rejection {
            max_attempts: args.max_attempts.unwrap_or(DEFAULT_MAX_ATTEMPTS),
        },
        _ => SamplerChoice::SwitchChain {
            steps: Some(args.steps.unwrap_or_else(|| default_chain_steps(seq.m()))),
        },
    }
}

fn trials(args: &SamplingArgs, default: u64) -> Result<u64, CliError> {
    match args.trials.unwrap_or(default) {
        0 => Err(CliError::Usage("--trials must be at least 1".into())),
        t => Ok(t),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn csv_with_config(config: &ResolvedConfig, rows: Vec<(String, String)>) -> String {
    let mut out = String::from("field,value\n");
    for (f, v) in config.csv_rows().into_iter().chain(rows) {
        out.push_str(&format!("{f},{v}\n"));
    }
    out
}

// ---- check ----------------------------------------------------------------

#[derive(Serialize)]
struct CheckReport<'a> {
    schema_version: u32,
    config: &'a ResolvedConfig,
    graphical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    invariants: Option<InvariantReport>,
}

pub fn check(source: &SourceArgs, output: &OutputArgs) -> Result<Outcome, CliError> {
    let mut config = ResolvedConfig::new("check");
    let loaded = match load_sequence(source) {
        Ok(x) => Ok(x),
        Err(CliError::Infeasible(reason)) => Err(reason),
        Err(other) => return Err(other),
    };
    let report = match &loaded {
        Ok((seq, src)) => {
            config.source = Some(src.clone());
            config.sequence = Some(seq.degrees().to_vec());
            let exact = ExactInvariants::compute(seq);
            CheckReport {
                schema_version: SCHEMA_VERSION,
                config: &config,
                graphical: true,
                reason: None,
                n: Some(seq.n()),
                m: Some(seq.m()),
                invariants: Some(InvariantReport::from(&exact)),
            }
        }
        Err(reason) => {
            if let Some(text) = &source.seq {
                config.source = Some(Source {
                    kind: "seq",
                    value: text.trim().to_string(),
                });
                config.sequence = parse_degree_list(text).ok().map(|d| {
                    d.iter()
                        .map(|&x| x.clamp(0, i64::from(u32::MAX)) as u32)
                        .collect()
                });
            }
            CheckReport {
                schema_version: SCHEMA_VERSION,
                config: &config,
                graphical: false,
                reason: Some(reason.clone()),
                n: None,
                m: None,
                invariants: None,
            }
        }
    };
    let body = match output.format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut rows = vec![("graphical".to_string(), report.graphical.to_string())];
            if let Some(reason) = &report.reason {
                rows.push(("reason".into(), reason.replace(',', ";")));
            }
            if let (Some(n), Some(m), Some(inv)) = (report.n, report.m, &report.invariants) {
                rows.push(("n".into(), n.to_string()));
                rows.push(("m".into(), m.to_string()));
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
                rows.push(("d_star".into(), inv.d_star.to_string()));
                rows.push(("delta_star".into(), inv.delta_star.to_string()));
            }
            csv_with_config(&config, rows)
        }
    };
    let summary = match (&report.invariants, &report.reason) {
        (Some(inv), _) => format!(
            "graphical; bound = {} ({})",
            inv.bound.rational, inv.bound.float
        ),
        (_, Some(reason)) => format!("not graphical: {reason}"),
        _ => unreachable!(),
    };
    let exit_code = if report.graphical { 0 } else { 2 };
    Ok(Outcome {
        emitted: Emitted { body, summary },
        exit_code,
    })
}

// ---- sample ---------------------------------------------------------------

#[derive(Serialize)]
struct SampledGraph {
    trial: u64,
    n: usize,
    m: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct SampleReport<'a> {
    schema_version: u32,
    config: &'a ResolvedConfig,
    graphs: Vec<SampledGraph>,
}

pub fn sample(
    source: &SourceArgs,
    sampling: &SamplingArgs,
    output: &OutputArgs,
) -> Result<Outcome, CliError> {
    let (seq, src) = load_sequence(source)?;
    let trials = trials(sampling, 1)?;
    let sampler = sampler_choice(sampling, &seq);
    let mut config = ResolvedConfig::new("sample");
    config.source = Some(src);
    config.sequence = Some(seq.degrees().to_vec());
    config.trials = Some(trials);
    config.seed = Some(sampling.seed);
    config.sampler = Some(sampler);

    let mut graphs = Vec::new();
    for t in 0..trials {
        let mut rng = trial_rng(sampling.seed, t);
        let g = sample_simple(&seq, sampler, &mut rng)?;
        graphs.push(SampledGraph {
            trial: t,
            n: g.n(),
            m: g.m(),
            edges: g.edges().map(|(u, v)| [u + 1, v + 1]).collect(),
        });
    }
    let body = match output.format {
        Format::Json => json(&SampleReport {
            schema_version: SCHEMA_VERSION,
            config: &config,
            graphs,
        }),
        Format::Csv => {
            let mut out = String::from("trial,u,v\n");
            for g in &graphs {
                for [u, v] in &g.edges {
                    out.push_str(&format!("{},{u},{v}\n", g.trial));
                }
            }
            out
        }
    };
    Ok(Emitted {
        body,
        summary: format!("sampled {trials} graph(s) with {}", sampler.name()),
    }
    .into())
}

// ---- explore --------------------------------------------------------------

#[derive(Serialize)]
struct ExploredTrial {
    trial: u64,
    trace: TraceExport,
    violations: Vec<InvariantViolation>,
}

#[derive(Serialize)]
struct ExploreReport<'a> {
    schema_version: u32,
    config: &'a ResolvedConfig,
    traces: Vec<ExploredTrial>,
}

pub fn explore(
    source: &SourceArgs,
    sampling: &SamplingArgs,
    start: usize,
    multigraph: bool,
    output: &OutputArgs,
) -> Result<Outcome, CliError> {
    let (seq, src) = load_sequence(source)?;
    if start == 0 || start > seq.n() {
        return Err(CliError::Usage(format!(
            "--start must be in 1..={}",
            seq.n()
        )));
    }
    let trials = trials(sampling, 1)?;
    let mut config = ResolvedConfig::new("explore");
    config.source = Some(src);
    config.sequence = Some(seq.degrees().to_vec());
    config.trials = Some(trials);
    config.seed = Some(sampling.seed);
    config.start = Some(start);
    config.multigraph = Some(multigraph);
    let mode = if multigraph {
        RevealMode::Multigraph
    } else {
        let sampler = sampler_choice(sampling, &seq);
        config.sampler = Some(sampler);
        RevealMode::SimpleConditioned(sampler)
    };

    let mut traces = Vec::new();
    let mut csv = String::from("trial,i,v_i,d_i,J,K,L,X,X_star\n");
    let mut violation_count = 0;
    for t in 0..trials {
        let mut rng = trial_rng(sampling.seed, t);
        let (trace, _) = explore_revealing(&seq, &mut rng, start - 1, mode)?;
        for line in trace.to_csv().lines().skip(1) {
            csv.push_str(&format!("{t},{line}\n"));
        }
        let violations = trace.violations(!multigraph);
        violation_count += violations.len();
        traces.push(ExploredTrial {
            trial: t,
            trace: trace.export(),
            violations,
        });
    }
    let body = match output.format {
        Format::Json => json(&ExploreReport {
            schema_version: SCHEMA_VERSION,
            config: &config,
            traces,
        }),
        Format::Csv => csv,
    };
    Ok(Emitted {
        body,
        summary: format!("explored {trials} graph(s); {violation_count} invariant violation(s)"),
    }
    .into())
}

// ---- census ---------------------------------------------------------------

#[derive(Serialize)]
struct CensusOutput<'a> {
    schema_version: u32,
    config: &'a ResolvedConfig,
    report: &'a degcon::CensusReport,
}

pub fn census(
    source: &SourceArgs,
    sampling: &SamplingArgs,
    max_width: Option<f64>,
    output: &OutputArgs,
) -> Result<Outcome, CliError> {
    let (seq, src) = load_sequence(source)?;
    let trials = trials(sampling, 1000)?;
    let sampler = sampler_choice(sampling, &seq);
    let mut config = ResolvedConfig::new("census");
    config.source = Some(src);
    config.sequence = Some(seq.degrees().to_vec());
    config.trials = Some(trials);
    config.seed = Some(sampling.seed);
    config.sampler = Some(sampler);
    config.max_width = max_width;

    let report = estimate_disconnection(
        &seq,
        &CensusConfig {
            trials,
            seed: sampling.seed,
            sampler,
            threads: sampling.threads,
            max_interval_width: max_width,
        },
    )?;
    let body = match output.format {
        Format::Json => json(&CensusOutput {
            schema_version: SCHEMA_VERSION,
            config: &config,
            report: &report,
        }),
        Format::Csv => {
            let mut rows = config.csv_rows();
            let report_csv = report.to_csv();
            let mut out = String::from("field,value\n");
            for (f, v) in rows.drain(..) {
                out.push_str(&format!("{f},{v}\n"));
            }
            for line in report_csv.lines().skip(1) {
                out.push_str(line);
                out.push('\n');
            }
            out
        }
    };
    Ok(Emitted {
        body,
        summary: format!(
            "p_hat = {} ({} of {trials}); wilson [{}, {}]",
            report.p_hat, report.disconnected, report.wilson.lower, report.wilson.upper
        ),
    }
    .into())
}

// ---- oracle ---------------------------------------------------------------

#[derive(Serialize)]
struct OracleOutput<'a> {
    schema_version: u32,
    config: &'a ResolvedConfig,
    result: degcon::census::OracleExport,
}

pub fn oracle(source: &SourceArgs, output: &OutputArgs) -> Result<Outcome, CliError> {
    let (seq, src) = load_sequence(source)?;
    let mut config = ResolvedConfig::new("oracle");
    config.source = Some(src);
    config.sequence = Some(seq.degrees().to_vec());
    let result = exact_connectivity_oracle(&seq)?.export();
    let summary = format!(
        "P(connected) = {} over {} realizations",
        result.p_connected, result.realizations
    );
    let body = match output.format {
        Format::Json => json(&OracleOutput {
            schema_version: SCHEMA_VERSION,
            config: &config,
            result,
        }),
        Format::Csv => {
            let mut rows = vec![
                ("realizations".to_string(), result.realizations.to_string()),
                ("connected".into(), result.connected.to_string()),
                ("p_connected".into(), result.p_connected.clone()),
                (
                    "p_connected_float".into(),
                    result.p_connected_float.to_string(),
                ),
                ("p_disconnected".into(), result.p_disconnected.clone()),
            ];
            for (class, count) in &result.taxonomy {
                rows.push((format!("taxonomy.{class}"), count.to_string()));
            }
            csv_with_config(&config, rows)
        }
    };
    Ok(Emitted { body, summary }.into())
}

// ---- tightness ------------------------------------------------------------

#[derive(Serialize)]
struct TightnessOutput<'a> {
    schema_version: u32,
    config: &'a ResolvedConfig,
    table: &'a degcon::census::TightnessTable,
    ratio_ranges: Vec<RatioRange>,
}

pub fn tightness(
    scaled: &str,
    sizes: &[u64],
    sampling: &SamplingArgs,
    output: &OutputArgs,
) -> Result<Outcome, CliError> {
    let family: ScaledFamily = scaled.parse()?;
    let trials = trials(sampling, 1000)?;
    // Validate every size before any sampling starts.
    for &m in sizes {
        family.degrees_for_edges(m)?;
    }
    let sampler = match sampling.sampler {
        SamplerKind::Auto => SamplerChoice::Auto,
        SamplerKind::Rejection => SamplerChoice::Rejection {
            max_attempts: sampling.max_attempts.unwrap_or(DEFAULT_MAX_ATTEMPTS),
        },
        SamplerKind::SwitchChain => SamplerChoice::SwitchChain {
            steps: sampling.steps,
        },
    };
    let mut config = ResolvedConfig::new("tightness");
    config.scaled_family = Some(family.to_string());
    config.sizes = Some(sizes.to_vec());
    config.trials = Some(trials);
    config.seed = Some(sampling.seed);
    config.sampler = Some(sampler);

    let table = tightness_experiment(
        family,
        sizes,
        &CensusConfig {
            trials,
            seed: sampling.seed,
            sampler,
            threads: sampling.threads,
            max_interval_width: None,
        },
    )?;
    let ratio_ranges: Vec<RatioRange> = BoundedClass::ALL
        .iter()
        .filter_map(|&c| table.ratio_range(c))
        .collect();
    let summary = ratio_ranges
        .iter()
        .map(|r| format!("{}: [{}, {}]", r.class.label(), r.min, r.max))
        .collect::<Vec<_>>()
        .join("; ");
    let body = match output.format {
        Format::Json => json(&TightnessOutput {
            schema_version: SCHEMA_VERSION,
            config: &config,
            table: &table,
            ratio_ranges,
        }),
        Format::Csv => table.to_csv(),
    };
    Ok(Emitted { body, summary }.into())
}

/// Writes the body to `out` (printing the summary) or to standard output.
pub fn emit(emitted: &Emitted, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, &emitted.body)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            println!("{} -> {}", emitted.summary, path.display());
        }
        None => print!("{}", emitted.body),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use degcon::SequenceError;

    #[test]
    fn flatten_config() {
        let mut c = ResolvedConfig::new("census");
        c.sequence = Some(vec![1, 1]);
        c.sampler = Some(SamplerChoice::Rejection { max_attempts: 5 });
        let rows = c.csv_rows();
        assert!(rows.contains(&("config.sequence".into(), "1 1".into())));
        assert!(rows.contains(&("config.sampler.kind".into(), "rejection".into())));
        assert!(rows.contains(&("config.sampler.max_attempts".into(), "5".into())));
    }

    #[test]
    fn odd_sum_is_infeasible_not_usage() {
        let e: CliError = SequenceError::OddSum { sum: 3 }.into();
        assert_eq!(e.exit_code(), 2);
        let e: CliError = SequenceError::Parse("x".into()).into();
        assert_eq!(e.exit_code(), 1);
    }
}
