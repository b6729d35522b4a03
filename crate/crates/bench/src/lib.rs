//! Inputs shared by the benchmarks.

use arcnerve::{Angle, Arc, ArcCollection, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` arcs with endpoints on a 2^20 grid and lengths below 1/8.
pub fn random_arcs(count: usize, seed: u64) -> ArcCollection {
    const Q: i64 = 1 << 20;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs = (0..count.max(1))
        .map(|_| {
            let start = Angle::new(Rational::new(rng.gen_range(0..Q).into(), Q.into()));
            Arc::new(
                start,
                Rational::new(rng.gen_range(0..Q / 8).into(), Q.into()),
            )
            .expect("nonnegative")
        })
        .collect();
    ArcCollection::new(arcs).expect("nonempty")
}

/// Arcs `[i/n, i/n + k/n]`, whose nerve is `N(n, k)`.
pub fn regular_arcs(n: usize, k: usize) -> ArcCollection {
    let (n, k) = (n as i64, k as i64);
    let arcs = (0..n)
        .map(|i| {
            Arc::new(Angle::from_ratio(i, n), Rational::new(k.into(), n.into()))
                .expect("nonnegative")
        })
        .collect();
    ArcCollection::new(arcs).expect("nonempty")
}
