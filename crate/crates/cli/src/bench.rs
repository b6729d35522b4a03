//! Timing of the reduction on large random collections.

use std::time::Duration;

use arcnerve::reduce::reduce_to_minimal;
use serde::Serialize;

use crate::random::large_collection;

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub n: usize,
    pub sort_ms: f64,
    pub post_sort_ms: f64,
    pub mutations: usize,
    pub n_prime: usize,
    pub k_prime: usize,
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn minimum(v: Vec<f64>) -> f64 {
    v.into_iter().fold(f64::INFINITY, f64::min)
}

/// Fastest sort and post-sort times over `repeats` runs on one collection;
/// the minimum is the least disturbed by other load on the machine.
pub fn time_reduction(count: usize, seed: u64, repeats: usize) -> Timing {
    let c = large_collection(count.max(1), seed);
    let runs: Vec<_> = (0..repeats.max(1))
        .map(|_| reduce_to_minimal(&c).expect("nonempty"))
        .collect();
    let first = &runs[0];
    Timing {
        n: c.len(),
        sort_ms: minimum(runs.iter().map(|r| ms(r.stats.sort_time)).collect()),
        post_sort_ms: minimum(runs.iter().map(|r| ms(r.stats.post_sort_time)).collect()),
        mutations: first.stats.mutations,
        n_prime: first.n_prime,
        k_prime: first.k_prime,
    }
}

/// `2^lo, 2^(lo+1), …, 2^hi` arcs.
pub fn ladder(lo: u32, hi: u32, seed: u64, repeats: usize) -> Vec<Timing> {
    (lo..=hi)
        .map(|e| time_reduction(1 << e, seed, repeats))
        .collect()
}

/// Largest ratio of post-sort times between consecutive rungs.
pub fn worst_growth(rungs: &[Timing]) -> f64 {
    rungs
        .windows(2)
        .map(|w| w[1].post_sort_ms / w[0].post_sort_ms.max(1e-6))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arc() {
        let t = time_reduction(1, 0, 1);
        assert_eq!((t.n, t.n_prime, t.k_prime), (1, 1, 0));
    }

    #[test]
    fn mutations_are_linear() {
        let t = time_reduction(5000, 4, 1);
        assert!(t.mutations <= 8 * t.n);
    }
}
