//! Seeded random generators for automata, profiles and digraphs, used by
//! tests, the acceptance suite and the CLI sweep.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automaton::Dfa;
use crate::classifier::LinearProfile;
use crate::gadgets::Digraph;

/// Deterministic generator for a seed.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random complete DFA with initial state 0.
pub fn random_dfa<R: Rng>(rng: &mut R, states: usize, alphabet: &[String], p_accept: f64) -> Dfa {
    let k = alphabet.len();
    let delta = (0..states * k).map(|_| rng.random_range(0..states)).collect();
    let accepting = (0..states).map(|_| rng.random_bool(p_accept)).collect();
    Dfa::new(alphabet.to_vec(), 0, delta, accepting).expect("random tables are well formed")
}

/// Random DFA recognizing a finite language: states `0..states-1` only move
/// forward or into the rejecting sink `states-1`.
pub fn random_adfa<R: Rng>(rng: &mut R, states: usize, alphabet: &[String], p_accept: f64) -> Dfa {
    let k = alphabet.len();
    let sink = states - 1;
    let mut delta = Vec::with_capacity(states * k);
    for q in 0..states {
        for _ in 0..k {
            delta.push(if q == sink { sink } else { rng.random_range(q + 1..states) });
        }
    }
    let accepting = (0..states).map(|q| q != sink && rng.random_bool(p_accept)).collect();
    Dfa::new(alphabet.to_vec(), 0, delta, accepting).expect("random tables are well formed")
}

/// Random linear profile with longest word length `n`. With `safety` every
/// state `q_0..q_n` accepts; otherwise each of `q_0..q_{n-1}` accepts with
/// probability one half.
pub fn random_profile<R: Rng>(rng: &mut R, n: usize, alphabet: &[String], safety: bool) -> LinearProfile {
    let k = alphabet.len();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row: Vec<usize> = (0..k).map(|_| rng.random_range(i + 1..=n + 1)).collect();
        if !row.contains(&(i + 1)) {
            let c = rng.random_range(0..k);
            row[c] = i + 1;
        }
        rows.push(row);
    }
    let accepting: Vec<bool> = (0..=n).map(|i| i == n || safety || rng.random_bool(0.5)).collect();
    LinearProfile::from_rows(alphabet.to_vec(), &rows, &accepting).expect("random profile is linear")
}

/// Random digraph with `n` nodes, outdegree at most two, and random
/// endpoints.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n {
        let deg = rng.random_range(0..=2);
        let mut seen = Vec::new();
        for _ in 0..deg {
            let v = rng.random_range(0..n);
            if !seen.contains(&v) {
                seen.push(v);
                edges.push((u, v));
            }
        }
    }
    let s = rng.random_range(0..n);
    let t = rng.random_range(0..n);
    Digraph::new(n, edges, s, t).expect("random digraph respects the outdegree bound")
}
