//! Facets of even-dimensional cyclic polytopes, the spheres they carve out
//! inside `N(n, k)`, and explicit homology and cohomology generators.
//!
//! When `k/n = l/(l+1)` the group `H̃_{2l}(N(n, k))` is spanned by rotations
//! of `∂Δ` for a minimal non-face `Δ`; strictly between two such ratios the
//! boundary of `C_{2l+2}(n)` sits inside `N(n, k)` as a generating sphere.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::circle::Rational;
use crate::complex::{nerve_nk, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{pair, Chain, Cochain, IntMatrix};

/// Facets of `∂C_{2m}(n)` as sorted vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetSet {
    pub two_m: usize,
    pub n: usize,
    pub facets: Vec<Simplex>,
}

impl FacetSet {
    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_simplices(self.n, self.facets.iter().cloned())
            .expect("facet labels are below n")
    }

    /// Splits a facet into its adjacent pairs `{i, i+1 mod n}`.
    pub fn blocks(&self, facet: &Simplex) -> Option<Vec<(usize, usize)>> {
        let n = self.n;
        let set: BTreeSet<usize> = facet.vertices().iter().copied().collect();
        // Start at a vertex whose predecessor is missing, then pair greedily.
        let start = *set.iter().find(|&&v| !set.contains(&((v + n - 1) % n)))?;
        let mut out = vec![];
        let mut v = start;
        let mut seen = 0;
        while seen < set.len() {
            while !set.contains(&v) {
                v = (v + 1) % n;
            }
            let w = (v + 1) % n;
            if !set.contains(&w) {
                return None;
            }
            out.push((v, w));
            seen += 2;
            v = (w + 1) % n;
        }
        Some(out)
    }
}

fn pair_placements(m: usize, n: usize) -> Vec<Simplex> {
    // Choose m disjoint adjacent pairs on the n-cycle.
    fn go(
        m: usize,
        n: usize,
        next: usize,
        used0: bool,
        cur: &mut Vec<usize>,
        out: &mut BTreeSet<Simplex>,
    ) {
        if cur.len() == 2 * m {
            out.insert(Simplex::new(cur.iter().copied()).expect("nonempty"));
            return;
        }
        for i in next..n {
            let j = (i + 1) % n;
            if j == 0 && used0 {
                continue;
            }
            cur.push(i);
            cur.push(j);
            go(m, n, i + 2, used0 || i == 0, cur, out);
            cur.pop();
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    if m == 0 || 2 * m > n {
        return vec![];
    }
    go(m, n, 0, false, &mut vec![], &mut out);
    out.into_iter().collect()
}

/// Facets of `∂C_{2m}(n)`: disjoint unions of `m` cyclically adjacent pairs.
pub fn gale_facets(two_m: usize, n: usize) -> Result<FacetSet> {
    if two_m < 2 || !two_m.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "dimension {two_m} must be even and at least 2"
        )));
    }
    if n <= two_m {
        return Err(Error::Precondition(format!(
            "need n > {two_m}, got n = {n}"
        )));
    }
    Ok(FacetSet {
        two_m,
        n,
        facets: pair_placements(two_m / 2, n),
    })
}

/// Size-`d` subsets of `{0..n-1}` satisfying Gale's evenness condition
/// directly: between any two non-members the number of members is even.
pub fn gale_brute_force(d: usize, n: usize) -> Vec<Simplex> {
    let mut out = vec![];
    if d == 0 || d > n || n >= usize::BITS as usize {
        return out;
    }
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != d {
            continue;
        }
        let inside = |v: usize| mask >> v & 1 == 1;
        let outside: Vec<usize> = (0..n).filter(|&v| !inside(v)).collect();
        let even = outside.iter().enumerate().all(|(a, &x)| {
            outside[a + 1..]
                .iter()
                .all(|&y| (x..=y).filter(|&v| inside(v)).count() % 2 == 0)
        });
        if even {
            out.push(Simplex::new((0..n).filter(|&v| inside(v))).expect("d >= 1"));
        }
    }
    out.sort();
    out
}

/// The trigonometric moment curve `(cos 2πt, sin 2πt, …, cos 2πmt, sin 2πmt)`.
pub fn moment_curve(two_m: usize, t: &Rational) -> Vec<f64> {
    let t = t.numer().to_f64().unwrap_or(f64::NAN) / t.denom().to_f64().unwrap_or(f64::NAN);
    (1..=two_m / 2)
        .flat_map(|j| {
            let a = 2.0 * std::f64::consts::PI * j as f64 * t;
            [a.cos(), a.sin()]
        })
        .collect()
}

/// `l` with `k/n = l/(l+1)`, for the cases where `N(n, k)` is a nontrivial
/// wedge of even spheres.
pub fn even_case(n: usize, k: usize) -> Result<usize> {
    if k + 2 > n || !k.is_multiple_of(n - k) {
        return Err(Error::Precondition(format!(
            "k/n = {k}/{n} is not of the form l/(l+1) with n - k >= 2"
        )));
    }
    Ok(k / (n - k))
}

/// `l` with `l/(l+1) < k/n < (l+1)/(l+2)`.
pub fn odd_case(n: usize, k: usize) -> Result<usize> {
    if k + 2 > n || k.is_multiple_of(n - k) {
        return Err(Error::Precondition(format!(
            "k/n = {k}/{n} is not strictly between l/(l+1) and (l+1)/(l+2)"
        )));
    }
    Ok(k / (n - k))
}

/// Whether every facet of `∂C_{2l+2}(n)` is a simplex of `N(n, k)`.
pub fn facets_lie_in_nerve(n: usize, k: usize) -> Result<bool> {
    let l = odd_case(n, k)?;
    if n < 2 * l + 3 {
        return Err(Error::Precondition(format!("need n >= {}", 2 * l + 3)));
    }
    let nk = nerve_nk(n, k);
    Ok(gale_facets(2 * l + 2, n)?
        .facets
        .iter()
        .all(|f| nk.contains_simplex(f)))
}

fn rotate(v: usize, by: i64, n: usize) -> usize {
    (v as i64 + by).rem_euclid(n as i64) as usize
}

/// `Δ = [0, 1, n-k, n-k+1, …, l(n-k), l(n-k)+1]` in its listed order.
pub fn delta(n: usize, k: usize) -> Result<Vec<usize>> {
    let l = even_case(n, k)?;
    let m = n - k;
    Ok((0..=l).flat_map(|i| [i * m, i * m + 1]).collect())
}

/// Facets of `∂C_{2l+2}(n)` missing from `N(n, k)` when `k/n = l/(l+1)`.
/// Includes `n = 2l + 2`, where the polytope degenerates to the single
/// facet `{0, …, n-1}`.
pub fn missing_facets(n: usize, k: usize) -> Result<Vec<Simplex>> {
    let l = even_case(n, k)?;
    let nk = nerve_nk(n, k);
    Ok(pair_placements(l + 1, n)
        .into_iter()
        .filter(|f| !nk.contains_simplex(f))
        .collect())
}

/// The distinct rotations `g^i Δ`, sorted.
pub fn delta_rotations(n: usize, k: usize) -> Result<Vec<Simplex>> {
    let d = delta(n, k)?;
    let set: BTreeSet<Simplex> = (0..(n - k) as i64)
        .map(|i| Simplex::new(d.iter().map(|&v| rotate(v, i, n))).expect("nonempty"))
        .collect();
    Ok(set.into_iter().collect())
}

fn oriented_boundary(vertices: &[usize]) -> Chain {
    let mut top = Chain::zero(vertices.len() - 1);
    top.add_oriented(vertices, 1).expect("distinct vertices");
    top.boundary().expect("Δ has at least two vertices")
}

/// The `2l`-cycle `∂Δ`.
pub fn delta_boundary(n: usize, k: usize) -> Result<Chain> {
    let d = delta(n, k)?;
    Ok(oriented_boundary(&d))
}

/// `g^i(∂Δ)` with `g(v) = v + 1 mod n`; any integer `i`.
pub fn alpha_cycle(n: usize, k: usize, i: i64) -> Result<Chain> {
    let base = delta_boundary(n, k)?;
    let period = (n - k) as i64;
    let wrapped = base.map_vertices(|v| rotate(v, period, n));
    assert_eq!(wrapped, base, "g^(n-k) must fix ∂Δ as a chain");
    Ok(base.map_vertices(|v| rotate(v, i, n)))
}

/// `β̃ = Σ B^∨` over `B = [0, v_0, n-k, v_1, …, l(n-k)]` with `v_i` strictly
/// between `i(n-k)` and `(i+1)(n-k)`.
pub fn beta_cochain_even(n: usize, k: usize) -> Result<Cochain> {
    let l = even_case(n, k)?;
    let m = n - k;
    let mut c = Cochain::zero(2 * l);
    let mut choice = vec![1usize; l];
    loop {
        let mut b = vec![0];
        for (i, &off) in choice.iter().enumerate() {
            b.push(i * m + off);
            b.push((i + 1) * m);
        }
        c.add_oriented(&b, 1)?;
        // Odometer over v_i = i*m + off, 1 <= off < m.
        let mut p = 0;
        loop {
            if p == l {
                return Ok(c);
            }
            choice[p] += 1;
            if choice[p] < m {
                break;
            }
            choice[p] = 1;
            p += 1;
        }
    }
}

/// `β_i = β̃ ∘ g^{-i}`.
pub fn beta_rotated(n: usize, k: usize, i: i64) -> Result<Cochain> {
    Ok(beta_cochain_even(n, k)?.map_vertices(|v| rotate(v, i, n)))
}

/// The raw pattern `⟨β_0, α_i⟩` for `i = 0..n-k-1`.
pub fn beta_alpha_pattern(n: usize, k: usize) -> Result<Vec<BigInt>> {
    let beta = beta_cochain_even(n, k)?;
    (0..(n - k) as i64)
        .map(|i| pair(&beta, &alpha_cycle(n, k, i)?))
        .collect()
}

/// `⟨γ_i, α_j⟩` for `i, j = 0..n-k-2` where `γ_i = -(β_0 + … + β_i)`.
pub fn evaluation_matrix(n: usize, k: usize) -> Result<IntMatrix> {
    even_case(n, k)?;
    let r = n - k - 1;
    let alphas = (0..r as i64)
        .map(|j| alpha_cycle(n, k, j))
        .collect::<Result<Vec<_>>>()?;
    let mut m = IntMatrix::zeros(r, r);
    let mut gamma = Cochain::zero(alphas.first().map_or(0, Chain::dim));
    for i in 0..r {
        gamma = gamma.add(&beta_rotated(n, k, i as i64)?.neg())?;
        for (j, a) in alphas.iter().enumerate() {
            m.set(i, j, pair(&gamma, a)?);
        }
    }
    Ok(m)
}

/// The `(n, k)`-admissible sets `{a_1 < … < a_{2l+2}} ⊂ {1, …, n-1}`.
pub fn admissible_sets(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    let l = odd_case(n, k)?;
    let size = 2 * l + 2;
    let gap = n - k;
    let mut out = vec![];
    fn go(
        n: usize,
        gap: usize,
        size: usize,
        k: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let len = cur.len() - 1; // cur[0] = a_0 = 0
        if len == size {
            if cur[size] - cur[1] <= k {
                out.push(cur[1..].to_vec());
            }
            return;
        }
        let last = *cur.last().unwrap();
        for a in last + 1..n.min(last + gap) {
            // Pairs of steps a_{2i} -> a_{2i+2} must jump at least n - k.
            let next_index = len + 1;
            if next_index.is_multiple_of(2) && a - cur[next_index - 2] < gap {
                continue;
            }
            cur.push(a);
            go(n, gap, size, k, cur, out);
            cur.pop();
        }
    }
    go(n, gap, size, k, &mut vec![0], &mut out);
    Ok(out)
}

/// `β̃ = Σ Q^∨` over the admissible sets `Q`.
pub fn beta_cochain_odd(n: usize, k: usize) -> Result<Cochain> {
    let l = odd_case(n, k)?;
    let mut c = Cochain::zero(2 * l + 1);
    for q in admissible_sets(n, k)? {
        c.add_oriented(&q, 1)?;
    }
    Ok(c)
}

/// `⋃_{i=1}^{l+1} {i(n-k) - 1, i(n-k)}`, the one simplex shared by the
/// support of the odd cocycle and `∂C_{2l+2}(n)`.
pub fn odd_common_simplex(n: usize, k: usize) -> Result<Simplex> {
    let l = odd_case(n, k)?;
    let m = n - k;
    Simplex::new((1..=l + 1).flat_map(|i| [i * m - 1, i * m]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{
        generator_of_top_homology, induced_map_on_homology, is_boundary, is_cocycle,
        reduced_homology, Caps,
    };

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn small_gale_cases() {
        let f = gale_facets(2, 6).unwrap();
        assert_eq!(f.facets.len(), 6);
        assert!(f.facets.contains(&s(&[0, 5])));
        for m in 1..=4 {
            let f = gale_facets(2 * m, 2 * m + 1).unwrap();
            assert_eq!(f.complex(), SimplicialComplex::simplex_boundary(2 * m + 1));
        }
        assert_eq!(gale_facets(4, 7).unwrap().facets, gale_brute_force(4, 7));
        assert!(gale_facets(4, 4).is_err());
        assert!(gale_facets(3, 7).is_err());
    }

    #[test]
    fn gale_matches_evenness() {
        for n in 3..=10 {
            for m in 1..=(n - 1) / 2 {
                assert_eq!(
                    gale_facets(2 * m, n).unwrap().facets,
                    gale_brute_force(2 * m, n)
                );
            }
        }
    }

    #[test]
    fn facet_blocks() {
        let f = gale_facets(4, 7).unwrap();
        for facet in &f.facets {
            let b = f.blocks(facet).unwrap();
            assert_eq!(b.len(), 2);
        }
        assert_eq!(f.blocks(&s(&[0, 2, 3, 5])), None);
    }

    #[test]
    fn curve_points() {
        let p = moment_curve(6, &Rational::from_integer(0.into()));
        assert_eq!(p, vec![1.0, 0.0, 1.0, 0.0, 1.0, 0.0]);
        let n = 7;
        for i in 0..n {
            let t = Rational::new(i.into(), n.into());
            let p = moment_curve(4, &t);
            for pair in p.chunks(2) {
                assert!((pair[0].hypot(pair[1]) - 1.0).abs() < 1e-12);
            }
            // Block j rotates by 2πj/n.
            let q = moment_curve(4, &Rational::new((i + 1).into(), n.into()));
            for j in 0..2 {
                let a = 2.0 * std::f64::consts::PI * (j + 1) as f64 / n as f64;
                let (x, y) = (p[2 * j], p[2 * j + 1]);
                assert!((a.cos() * x - a.sin() * y - q[2 * j]).abs() < 1e-12);
                assert!((a.sin() * x + a.cos() * y - q[2 * j + 1]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn polytope_facets_lie_in_nerve() {
        for (n, k) in [(7, 4), (8, 5), (9, 5), (11, 8), (5, 2), (9, 7)] {
            assert!(facets_lie_in_nerve(n, k).unwrap(), "n={n} k={k}");
        }
        assert!(facets_lie_in_nerve(6, 3).is_err());
    }

    #[test]
    fn missing_facet_examples() {
        assert_eq!(
            missing_facets(6, 3).unwrap(),
            vec![s(&[0, 1, 3, 4]), s(&[1, 2, 4, 5]), s(&[0, 2, 3, 5])]
                .into_iter()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect::<Vec<_>>()
        );
        assert_eq!(missing_facets(4, 2).unwrap(), vec![s(&[0, 1, 2, 3])]);
        assert_eq!(missing_facets(9, 6).unwrap().len(), 3);
        assert!(missing_facets(9, 6)
            .unwrap()
            .contains(&s(&[0, 1, 3, 4, 6, 7])));
        assert!(missing_facets(7, 4).is_err());
        for (n, k) in [(4, 2), (6, 3), (9, 6), (8, 6), (6, 4), (12, 8)] {
            assert_eq!(
                missing_facets(n, k).unwrap(),
                delta_rotations(n, k).unwrap(),
                "n={n} k={k}"
            );
        }
    }

    #[test]
    fn delta_is_a_minimal_non_face() {
        for (n, k) in [(4, 2), (6, 3), (6, 4), (8, 6), (9, 6), (3, 0), (5, 0)] {
            let d = s(&delta(n, k).unwrap());
            let nk = nerve_nk(n, k);
            assert!(!nk.contains_simplex(&d));
            for p in 0..d.len() {
                if let Some(f) = d.without_position(p) {
                    assert!(nk.contains_simplex(&f));
                }
            }
            let db = delta_boundary(n, k).unwrap();
            assert!(!is_boundary(&nk, &db).unwrap());
        }
    }

    #[test]
    fn delta_boundary_signs() {
        // ∂[0,1,3,4] = [1,3,4] - [0,3,4] + [0,1,4] - [0,1,3].
        let db = delta_boundary(6, 3).unwrap();
        let want = Chain::from_oriented(
            2,
            &[
                (&[1, 3, 4], 1),
                (&[0, 3, 4], -1),
                (&[0, 1, 4], 1),
                (&[0, 1, 3], -1),
            ],
        )
        .unwrap();
        assert_eq!(db, want);
        // k = 0: ∂[0, 1] = [1] - [0].
        let db = delta_boundary(3, 0).unwrap();
        assert_eq!(
            db,
            Chain::from_oriented(0, &[(&[1], 1), (&[0], -1)]).unwrap()
        );
    }

    #[test]
    fn alphas() {
        let a: Vec<Chain> = (0..3).map(|i| alpha_cycle(6, 3, i).unwrap()).collect();
        assert_ne!(a[0], a[1]);
        assert_ne!(a[1], a[2]);
        assert_ne!(a[0], a[2]);
        assert_eq!(alpha_cycle(6, 3, 3).unwrap(), a[0]);
        assert_eq!(alpha_cycle(6, 3, -1).unwrap(), a[2]);
        let sum = a
            .iter()
            .skip(1)
            .fold(a[0].clone(), |acc, c| acc.add(c).unwrap());
        assert!(is_boundary(&nerve_nk(6, 3), &sum).unwrap());
    }

    #[test]
    fn even_generators() {
        for (n, k) in [(4, 2), (6, 3), (6, 4), (8, 6), (9, 6), (3, 0), (8, 4)] {
            let nk = nerve_nk(n, k);
            let beta = beta_cochain_even(n, k).unwrap();
            assert!(is_cocycle(&nk, &beta).unwrap(), "n={n} k={k}");
            assert_eq!(
                pair(&beta, &delta_boundary(n, k).unwrap()).unwrap(),
                BigInt::from(-1)
            );
            let pattern = beta_alpha_pattern(n, k).unwrap();
            let r = n - k - 1;
            for (i, p) in pattern.iter().enumerate() {
                let want = if i == 0 {
                    -1
                } else if i == r {
                    1
                } else {
                    0
                };
                assert_eq!(*p, BigInt::from(want), "n={n} k={k} i={i}");
            }
            assert_eq!(evaluation_matrix(n, k).unwrap(), IntMatrix::identity(r));
        }
        assert_eq!(beta_cochain_even(6, 3).unwrap().len(), 2);
        assert_eq!(beta_cochain_even(4, 2).unwrap().len(), 1);
    }

    #[test]
    fn admissible_examples() {
        // n - k = 3: a_1, a_2 within 2 steps, a_2 >= 3, a_4 - a_2 >= 3, a_4 - a_1 <= 4.
        let q = admissible_sets(7, 4).unwrap();
        assert!(q.contains(&vec![2, 3, 5, 6]));
        for set in &q {
            assert_eq!(set.len(), 4);
            assert!(set[3] - set[0] <= 4);
        }
        assert!(admissible_sets(6, 3).is_err());
    }

    #[test]
    fn odd_generators() {
        for (n, k) in [(7, 4), (8, 5), (5, 2), (5, 3), (9, 5)] {
            let l = odd_case(n, k).unwrap();
            let nk = nerve_nk(n, k);
            let beta = beta_cochain_odd(n, k).unwrap();
            assert!(is_cocycle(&nk, &beta).unwrap(), "n={n} k={k}");
            let facets: BTreeSet<Simplex> = gale_facets(2 * l + 2, n)
                .unwrap()
                .facets
                .into_iter()
                .collect();
            let common: Vec<&Simplex> = beta
                .terms()
                .map(|(s, _)| s)
                .filter(|s| facets.contains(s))
                .collect();
            assert_eq!(
                common,
                vec![&odd_common_simplex(n, k).unwrap()],
                "n={n} k={k}"
            );
            let sphere = gale_facets(2 * l + 2, n).unwrap().complex();
            let z = generator_of_top_homology(&sphere, 2 * l + 1, Caps::default()).unwrap();
            assert_eq!(pair(&beta, &z).unwrap().magnitude(), &1u32.into());
            let m = induced_map_on_homology(
                &sphere,
                &nk,
                &(0..n).collect::<Vec<_>>(),
                2 * l + 1,
                Caps::default(),
            )
            .unwrap();
            assert_eq!(m.rows(), 1);
            assert_eq!(m.get(0, 0).magnitude(), &1u32.into());
        }
        assert_eq!(odd_common_simplex(7, 4).unwrap(), s(&[2, 3, 5, 6]));
    }

    #[test]
    fn fundamental_cycle_covers_every_facet() {
        let sphere = gale_facets(4, 7).unwrap().complex();
        let z = generator_of_top_homology(&sphere, 3, Caps::default()).unwrap();
        assert_eq!(z.len(), sphere.maximal_simplices().len());
        assert!(z.terms().all(|(_, c)| c.magnitude() == &1u32.into()));
    }

    #[test]
    fn intersection_with_polytope_boundary() {
        for (n, k) in [(6, 3), (9, 6), (8, 6)] {
            let l = even_case(n, k).unwrap();
            let bd = SimplicialComplex::from_simplices(n, pair_placements(l + 1, n)).unwrap();
            let meet = nerve_nk(n, k).intersection(&bd);
            let h = reduced_homology(&meet, Caps::default()).unwrap();
            assert_eq!(h.concentrated(), Some((2 * l, n - k - 1)), "n={n} k={k}");
        }
    }
}
