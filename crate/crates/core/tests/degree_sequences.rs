//! Graphicality and the neighbour-degree bound, checked against every graph
//! on up to seven labelled vertices.

use std::collections::BTreeSet;

use degcon::{havel_hakimi_construct, DegreeSequence, SequenceError};

/// Sorted degree vectors (no zeros) of all graphs on `n` labelled vertices.
fn realizable(n: usize) -> BTreeSet<Vec<u32>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let mut deg = vec![0u32; n];
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        if deg.iter().all(|&d| d > 0) {
            deg.sort_unstable();
            out.insert(deg);
        }
    }
    out
}

/// Nondecreasing vectors of length `n` with entries in `1..=max`.
fn candidates(n: usize, max: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, lo: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in lo..=max {
            cur.push(d);
            go(n, d, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, max, &mut Vec::new(), &mut out);
    out
}

#[test]
fn erdos_gallai_matches_exhaustive_search() {
    for n in 1..=7 {
        let real = realizable(n);
        // degree n is impossible but must still be rejected cleanly
        for cand in candidates(n, n as u32) {
            let verdict = DegreeSequence::from_degrees(&cand);
            assert_eq!(
                verdict.is_ok(),
                real.contains(&cand),
                "{cand:?}: {verdict:?}"
            );
            if let Ok(seq) = verdict {
                let g = havel_hakimi_construct(&seq);
                assert_eq!(g.degrees(), cand);
            } else {
                let sum: u32 = cand.iter().sum();
                if sum % 2 == 1 {
                    assert!(matches!(verdict, Err(SequenceError::OddSum { .. })));
                } else {
                    assert!(matches!(verdict, Err(SequenceError::NotGraphical { .. })));
                }
            }
        }
    }
}

#[test]
fn input_order_does_not_matter() {
    let seq = DegreeSequence::from_degrees(&[3, 1, 2, 2, 1, 3]).unwrap();
    assert_eq!(seq.sorted(), &[1, 1, 2, 2, 3, 3]);
    assert_eq!(havel_hakimi_construct(&seq).degrees(), seq.degrees());
}

#[test]
fn d_star_bounds_every_neighbour_degree_sum() {
    for n in 2..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let mut adj = vec![Vec::new(); n];
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
            let deg: Vec<u32> = adj.iter().map(|a| a.len() as u32).collect();
            if deg.contains(&0) {
                continue;
            }
            let seq = DegreeSequence::from_degrees(&deg).unwrap();
            let worst = adj
                .iter()
                .map(|a| a.iter().map(|&y| u64::from(deg[y])).sum::<u64>())
                .max()
                .unwrap();
            assert!(worst <= seq.d_star(), "{deg:?}");
        }
    }
}
