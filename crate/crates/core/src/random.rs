//! Seeded random graph sampling. All draws go through one ChaCha stream so
//! a seed pins the whole sample on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexSet};

pub struct GraphSampler {
    rng: ChaCha8Rng,
}

impl GraphSampler {
    pub fn new(seed: u64) -> GraphSampler {
        GraphSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform draw from an inclusive range, for order schedules.
    pub fn pick(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    /// Binomial random graph: each of the n(n-1)/2 edges present with
    /// probability p, drawn in the fixed (u, v) lexicographic order.
    pub fn gnp(&mut self, n: usize, p: f64) -> Graph {
        assert!(n >= 1, "gnp needs n >= 1");
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("gnp edges are in range")
    }

    /// Rejection-samples a connected graph with no vertex adjacent to all
    /// others. Needs n >= 4: smaller connected graphs always have one.
    pub fn connected_no_universal(&mut self, n: usize, p: f64) -> Graph {
        assert!(
            n >= 4,
            "every connected graph on fewer than 4 vertices has a universal vertex"
        );
        loop {
            let g = self.gnp(n, p);
            if g.is_connected() && g.universal_vertices().is_empty() {
                return g;
            }
        }
    }

    /// Random d-regular graph by the pairing model: d stubs per vertex,
    /// shuffled and paired, rejecting pairings with loops or repeats.
    pub fn regular(&mut self, n: usize, d: usize) -> Graph {
        assert!(d < n, "regular graph needs d < n");
        assert!(n * d % 2 == 0, "regular graph needs n*d even");
        'retry: loop {
            let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
            stubs.shuffle(&mut self.rng);
            let mut adjacency = vec![VertexSet::empty(n); n];
            let mut edges = Vec::with_capacity(n * d / 2);
            for pair in stubs.chunks(2) {
                let (u, v) = (pair[0], pair[1]);
                if u == v || adjacency[u].contains(v) {
                    continue 'retry;
                }
                adjacency[u].insert(v);
                adjacency[v].insert(u);
                edges.push((u, v));
            }
            return Graph::from_edges(n, &edges).expect("pairing produced a simple graph");
        }
    }
}
