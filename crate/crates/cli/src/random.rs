//! Seeded random arc collections.

use arcnerve::{Angle, Arc, ArcCollection, Rational};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DENOMINATORS: [i64; 7] = [2, 3, 4, 5, 6, 8, 12];

fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Up to `n_max` arcs on small grids. Endpoints are often copied from
/// earlier arcs so that coincident openings and closings are common, and
/// points, whole circles and duplicates all show up.
pub fn small_collection<R: Rng>(rng: &mut R, n_max: usize) -> ArcCollection {
    let n = rng.gen_range(1..=n_max.max(1));
    let q = *DENOMINATORS.choose(rng).expect("nonempty");
    let mut endpoints: Vec<Rational> = vec![];
    let mut arcs: Vec<Arc> = Vec::with_capacity(n);
    for _ in 0..n {
        let roll = rng.gen_range(0..20);
        let arc = if roll == 0 {
            Arc::whole()
        } else if roll == 1 && !arcs.is_empty() {
            arcs.choose(rng).expect("nonempty").clone()
        } else {
            let start = if !endpoints.is_empty() && rng.gen_bool(0.4) {
                endpoints.choose(rng).expect("nonempty").clone()
            } else {
                ratio(rng.gen_range(0..q), q)
            };
            let start = Angle::new(start);
            if !endpoints.is_empty() && rng.gen_bool(0.3) {
                Arc::from_endpoints(
                    start,
                    Angle::new(endpoints.choose(rng).expect("nonempty").clone()),
                )
            } else {
                let len = if roll == 2 { 0 } else { rng.gen_range(1..q) };
                Arc::new(start, ratio(len, q)).expect("nonnegative")
            }
        };
        endpoints.push(arc.start().value().clone());
        endpoints.push(arc.end().value().clone());
        arcs.push(arc);
    }
    ArcCollection::new(arcs).expect("n >= 1")
}

/// `count` arcs with endpoints on the `1/2^20` grid and lengths up to `1/8`.
pub fn large_collection(count: usize, seed: u64) -> ArcCollection {
    const Q: i64 = 1 << 20;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs = (0..count)
        .map(|_| {
            let start = Angle::new(ratio(rng.gen_range(0..Q), Q));
            Arc::new(start, ratio(rng.gen_range(0..Q / 8), Q)).expect("nonnegative")
        })
        .collect();
    ArcCollection::new(arcs).expect("count >= 1")
}
