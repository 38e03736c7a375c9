//! Shared helpers for the integration suites: a seeded generator and
//! random graph instances.
#![allow(dead_code)] // each test binary uses its own subset

use eaqec::{Graph, VertexSet};
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

pub fn rand_f64(rng: &mut ChaCha20Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

pub fn rand_below(rng: &mut ChaCha20Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// A random graph with 2..=max_vertices vertices, edge probability 1/2 and
/// a random pure set that leaves at least `min_noisy` noisy vertices.
pub fn random_graph(rng: &mut ChaCha20Rng, max_vertices: usize, min_noisy: usize) -> Graph {
    let m = min_noisy.max(2) + rand_below(rng, max_vertices - min_noisy.max(2) + 1);
    let mut edges = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            if rng.next_u64().is_multiple_of(2) {
                edges.push((a, b));
            }
        }
    }
    let max_pure = m - min_noisy;
    let pure_count = rand_below(rng, max_pure + 1);
    let mut pure = Vec::new();
    while pure.len() < pure_count {
        let v = rand_below(rng, m);
        if !pure.contains(&v) {
            pure.push(v);
        }
    }
    pure.sort_unstable();
    Graph::new(m, &edges, &pure).expect("random graph parameters are valid")
}

pub fn random_subset_of(rng: &mut ChaCha20Rng, of: &VertexSet) -> VertexSet {
    let mut out = VertexSet::empty(of.universe());
    for v in of.iter() {
        if rng.next_u64().is_multiple_of(2) {
            out.insert(v);
        }
    }
    out
}
