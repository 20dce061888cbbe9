use degcon::census::{estimate_disconnection, exact_connectivity_oracle, CensusConfig};
use degcon::{DegreeSequence, Family, SamplerChoice};

fn seq(d: &[u32]) -> DegreeSequence {
    DegreeSequence::from_degrees(d).unwrap()
}

fn census(s: &DegreeSequence, trials: u64, seed: u64, sampler: SamplerChoice) -> f64 {
    let cfg = CensusConfig {
        trials,
        seed,
        sampler,
        ..CensusConfig::default()
    };
    estimate_disconnection(s, &cfg).unwrap().p_hat
}

#[test]
fn deterministic_outcomes() {
    // more leaves than edges forces an edge component
    for d in [
        vec![1; 4],
        vec![1, 1, 1, 1, 1, 1, 2, 2],
        vec![1, 1, 1, 1, 1, 3],
    ] {
        let s = seq(&d);
        assert!(s.forces_edge_component());
        assert_eq!(census(&s, 300, 1, SamplerChoice::Auto), 1.0, "{d:?}");
    }
    for n in [3, 5, 9, 20] {
        let star = Family::Star { n }.sequence().unwrap();
        let two = Family::TwoStars { n }.sequence().unwrap();
        for sampler in [
            SamplerChoice::Auto,
            SamplerChoice::SwitchChain { steps: None },
        ] {
            assert_eq!(census(&star, 200, 2, sampler), 0.0);
            assert_eq!(census(&two, 200, 2, sampler), 0.0);
        }
    }
}

#[test]
fn six_twos_match_the_oracle() {
    let s = seq(&[2; 6]);
    let exact = exact_connectivity_oracle(&s).unwrap();
    let p = 1.0 - *exact.p_connected().numer() as f64 / *exact.p_connected().denom() as f64;
    assert!((p - 1.0 / 7.0).abs() < 1e-15);
    let trials = 20_000;
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    for sampler in [
        SamplerChoice::default(),
        SamplerChoice::SwitchChain { steps: None },
    ] {
        let p_hat = census(&s, trials, 5, sampler);
        assert!((p_hat - p).abs() < 3.0 * sigma, "{sampler:?}: {p_hat}");
    }
}

#[test]
fn samplers_agree() {
    for d in [
        vec![1, 1, 2, 2, 2, 2, 2, 2],
        vec![1, 1, 1, 1, 2, 2, 3, 3],
        vec![2, 2, 2, 2, 2, 2, 2, 2, 2],
        vec![1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 3],
    ] {
        let s = seq(&d);
        let trials = 20_000;
        let a = census(&s, trials, 11, SamplerChoice::default());
        let b = census(&s, trials, 12, SamplerChoice::SwitchChain { steps: None });
        let var = |p: f64| p * (1.0 - p) / trials as f64;
        let combined = (var(a) + var(b)).sqrt();
        assert!(
            (a - b).abs() <= 3.0 * combined.max(1e-12),
            "{d:?}: {a} vs {b}"
        );
    }
}

#[test]
fn monte_carlo_tracks_the_oracle() {
    // one run per small sequence; 4 sigma misses should be rare
    let mut checked = 0;
    let mut misses = 0;
    for d in [
        vec![1, 1, 1, 1, 2, 2],
        vec![1, 1, 2, 2, 2, 2],
        vec![2, 2, 2, 2, 2, 2, 2],
        vec![1, 1, 1, 1, 1, 1, 2, 2],
        vec![1, 1, 1, 2, 2, 3],
        vec![1, 1, 1, 1, 2, 2, 2, 2],
        vec![3, 3, 3, 3, 2, 2],
        vec![1, 1, 1, 1, 1, 1, 3, 3],
    ] {
        let s = seq(&d);
        let exact = exact_connectivity_oracle(&s).unwrap();
        let q = exact.p_disconnected();
        let p = *q.numer() as f64 / *q.denom() as f64;
        let trials = 5_000;
        let p_hat = census(&s, trials, 21, SamplerChoice::default());
        let tol = 4.0 * (p * (1.0 - p) / trials as f64).sqrt();
        checked += 1;
        if (p_hat - p).abs() > tol.max(0.0) && !(p == 0.0 && p_hat == 0.0) {
            misses += 1;
        }
    }
    assert_eq!(misses, 0, "{misses} of {checked}");
}

#[test]
fn cubic_disconnection_shrinks_with_n() {
    let mut prev = f64::INFINITY;
    let mut worst_constant: f64 = 0.0;
    for n in [8, 12, 16] {
        let s = Family::Regular { d: 3, n }.sequence().unwrap();
        let cfg = CensusConfig {
            trials: 50_000,
            seed: 4,
            ..CensusConfig::default()
        };
        let r = estimate_disconnection(&s, &cfg).unwrap();
        assert!(r.p_hat <= prev, "n = {n}: {} > {prev}", r.p_hat);
        prev = r.p_hat;
        worst_constant = worst_constant.max(r.cubic_rate_ratio.unwrap());
    }
    assert!(
        worst_constant.is_finite() && worst_constant < 10.0,
        "{worst_constant}"
    );
}
