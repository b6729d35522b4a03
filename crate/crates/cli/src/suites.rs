//! Verification suites: closed forms against the homology oracle, the
//! explicit generators, the cyclic-polytope facts, the symmetry and
//! surjection checks, and the chromatic bound.
//!
//! Cases run in parallel; failures are reported in case order so the first
//! one is the smallest counterexample.

use std::collections::BTreeSet;
use std::fmt;

use arcnerve::complex::{clique_complex, clique_nk, nerve, nerve_nk};
use arcnerve::graphs::{
    chi_circular, chromatic_number, circular_complete, lovasz_report, neighborhood_complex,
};
use arcnerve::homology::{
    generator_of_top_homology, induced_map_on_homology, is_boundary, is_cocycle, pair,
    reduced_homology, HomologyGroups, IntMatrix,
};
use arcnerve::homotopy::{clique_homotopy, nerve_homotopy, nerve_homotopy_by_recursion};
use arcnerve::maps::{
    automorphism_count, check_mod_n_surjection, dihedral_action_on_homology, epsilon_delta_identity,
};
use arcnerve::polytope::{
    alpha_cycle, beta_cochain_even, beta_cochain_odd, delta_boundary, delta_rotations,
    evaluation_matrix, even_case, facets_lie_in_nerve, gale_brute_force, gale_facets,
    missing_facets, odd_case, odd_common_simplex,
};
use arcnerve::reduce::{reduce_to_minimal, verify_reduction};
use arcnerve::{ArcCollection, Caps, HomotopyType, Simplex};
use num_bigint::BigInt;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::input::InputDocument;
use crate::random::small_collection;

/// Pairs whose `k/n` has the form `l/(l+1)`, used by the generator checks.
pub const EVEN_CASES: [(usize, usize); 6] = [(4, 2), (6, 3), (6, 4), (8, 6), (9, 6), (10, 8)];

/// Large enough for the full simplex on 11 vertices.
pub const SWEEP_CAPS: Caps = Caps {
    max_vertices: 12,
    max_dim: 10,
};

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub caps: Caps,
    /// Deliberately wrong closed form, to check that the suites notice.
    pub fault: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            caps: SWEEP_CAPS,
            fault: false,
        }
    }
}

impl Options {
    fn broken(&self, h: HomotopyType) -> HomotopyType {
        match h {
            HomotopyType::Wedge { dim, count } if self.fault && dim > 0 && dim % 2 == 0 => {
                HomotopyType::Wedge {
                    dim,
                    count: count + 1,
                }
            }
            h => h,
        }
    }

    pub fn nerve_formula(&self, n: usize, k: usize) -> HomotopyType {
        self.broken(nerve_homotopy(n, k))
    }

    pub fn clique_formula(&self, n: usize, k: usize) -> HomotopyType {
        self.broken(clique_homotopy(n, k))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checked: 0,
            failures: vec![],
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Merges per-case outcomes, keeping case order.
    fn absorb(&mut self, outcomes: Vec<Vec<Result<(), String>>>) {
        for o in outcomes.into_iter().flatten() {
            self.checked += 1;
            if let Err(e) = o {
                self.failures.push(e);
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAIL" };
        write!(f, "{:<12} {status:<4} {} checks", self.name, self.checked)?;
        if !self.passed() {
            write!(f, ", {} failed", self.failures.len())?;
        }
        Ok(())
    }
}

/// `H~_d = Z^b + torsion` in compact form, e.g. `H2=Z^2`.
pub fn describe(h: &HomologyGroups) -> String {
    if h.is_trivial() {
        return "0".into();
    }
    h.support()
        .into_iter()
        .map(|d| {
            let g = h.get(d);
            let mut parts = vec![];
            if g.betti > 0 {
                parts.push(format!("Z^{}", g.betti));
            }
            parts.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
            format!("H{d}={}", parts.join("+"))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn oracle_matches(
    k: &arcnerve::SimplicialComplex,
    expected: HomotopyType,
    caps: Caps,
) -> Result<(), String> {
    let h = reduced_homology(k, caps).map_err(|e| e.to_string())?;
    if !h.is_torsion_free() {
        return Err(format!("torsion: {}", describe(&h)));
    }
    if !expected.matches_homology(&h) {
        return Err(format!("oracle {} vs formula {expected}", describe(&h)));
    }
    Ok(())
}

fn ok_or(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Oracle homology of `N(n, k)` for `2 <= n <= n_max`, `0 <= k < n`.
pub fn nerve_sweep(n_max: usize, opts: Options) -> SuiteReport {
    let cases: Vec<(usize, usize)> = (2..=n_max)
        .flat_map(|n| (0..n).map(move |k| (n, k)))
        .collect();
    let outcomes = cases
        .par_iter()
        .map(|&(n, k)| {
            vec![
                oracle_matches(&nerve_nk(n, k), opts.nerve_formula(n, k), opts.caps)
                    .map_err(|e| format!("N({n},{k}): {e}")),
            ]
        })
        .collect();
    let mut r = SuiteReport::new("nerve");
    r.absorb(outcomes);
    r
}

/// Oracle homology of the clique complex for `0 <= k < n/2`.
pub fn clique_sweep(n_max: usize, opts: Options) -> SuiteReport {
    let cases: Vec<(usize, usize)> = (2..=n_max)
        .flat_map(|n| (0..n.div_ceil(2)).map(move |k| (n, k)))
        .collect();
    let outcomes = cases
        .par_iter()
        .map(|&(n, k)| {
            vec![
                oracle_matches(&clique_nk(n, k), opts.clique_formula(n, k), opts.caps)
                    .map_err(|e| format!("clique({n},{k}): {e}")),
            ]
        })
        .collect();
    let mut r = SuiteReport::new("clique");
    r.absorb(outcomes);
    r
}

/// The suspension recursion against the closed form, `1 <= n <= n_max`.
pub fn recursion(n_max: usize, opts: Options) -> SuiteReport {
    let mut r = SuiteReport::new("recursion");
    for n in 1..=n_max {
        for k in 0..n {
            let (a, b) = (nerve_homotopy_by_recursion(n, k), opts.nerve_formula(n, k));
            r.check(a == b, || {
                format!("N({n},{k}): recursion {a} vs formula {b}")
            });
        }
    }
    r
}

fn check_collection(c: &ArcCollection, opts: Options) -> Vec<Result<(), String>> {
    let dump = || serde_json::to_string(&InputDocument::from_arcs(c)).expect("serializable");
    let red = match reduce_to_minimal(c) {
        Ok(r) => r,
        Err(e) => return vec![Err(format!("{e} on {}", dump()))],
    };
    let (n, k) = (red.n_prime, red.k_prime);
    let replay = match verify_reduction(c, &red) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("reduction replay failed on {}", dump())),
        Err(e) => Err(format!("{e} on {}", dump())),
    };
    let kept = c.select(&red.kept_indices).expect("kept indices are valid");
    let shape = ok_or(nerve(&kept).isomorphic_to_nk() == Some((n, k)), || {
        format!("survivors do not form N({n},{k}) on {}", dump())
    });
    let nv = nerve(c);
    let nerve_side = oracle_matches(&nv, opts.nerve_formula(n, k), opts.caps)
        .map_err(|e| format!("nerve, reduced to ({n},{k}): {e} on {}", dump()));
    let clique_side = oracle_matches(&clique_complex(&nv), opts.clique_formula(n, k), opts.caps)
        .map_err(|e| format!("clique, reduced to ({n},{k}): {e} on {}", dump()));
    vec![replay, shape, nerve_side, clique_side]
}

/// `count` seeded random collections of at most eight arcs.
pub fn random_collections(count: usize, seed: u64, opts: Options) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let collections: Vec<ArcCollection> =
        (0..count).map(|_| small_collection(&mut rng, 8)).collect();
    let outcomes = collections
        .par_iter()
        .map(|c| check_collection(c, opts))
        .collect();
    let mut r = SuiteReport::new("random");
    r.absorb(outcomes);
    r
}

fn even_generator_case(
    n: usize,
    k: usize,
    caps: Caps,
) -> Result<Vec<Result<(), String>>, arcnerve::Error> {
    let l = even_case(n, k)?;
    let nk = nerve_nk(n, k);
    let r = n - k - 1;
    let beta = beta_cochain_even(n, k)?;
    let p = pair(&beta, &delta_boundary(n, k)?)?;
    let mut sum = alpha_cycle(n, k, 0)?;
    for i in 1..=r as i64 {
        sum = sum.add(&alpha_cycle(n, k, i)?)?;
    }
    let rank = reduced_homology(&nk, caps)?.betti(2 * l);
    let tag = |what: &str| format!("({n},{k}) {what}");
    Ok(vec![
        ok_or(is_cocycle(&nk, &beta)?, || tag("beta is not a cocycle")),
        ok_or(p == BigInt::from(-1), || {
            tag(&format!("<beta, dDelta> = {p}"))
        }),
        ok_or(evaluation_matrix(n, k)? == IntMatrix::identity(r), || {
            tag("evaluation matrix is not the identity")
        }),
        ok_or(is_boundary(&nk, &sum)?, || {
            tag("sum of alphas is not a boundary")
        }),
        ok_or(rank == r, || {
            tag(&format!("rank of H{} is {rank}, expected {r}", 2 * l))
        }),
    ])
}

/// Cocycle, pairing, evaluation matrix, boundary and rank checks.
pub fn generators(cases: &[(usize, usize)], caps: Caps) -> SuiteReport {
    let outcomes = cases
        .par_iter()
        .map(|&(n, k)| {
            even_generator_case(n, k, caps).unwrap_or_else(|e| vec![Err(format!("({n},{k}): {e}"))])
        })
        .collect();
    let mut r = SuiteReport::new("generators");
    r.absorb(outcomes);
    r
}

fn odd_generator_case(
    n: usize,
    k: usize,
    caps: Caps,
) -> Result<Vec<Result<(), String>>, arcnerve::Error> {
    let l = odd_case(n, k)?;
    let nk = nerve_nk(n, k);
    let facets = gale_facets(2 * l + 2, n)?;
    let sphere = facets.complex();
    let beta = beta_cochain_odd(n, k)?;
    let facet_set: BTreeSet<&Simplex> = facets.facets.iter().collect();
    let common: Vec<&Simplex> = beta
        .terms()
        .map(|(s, _)| s)
        .filter(|s| facet_set.contains(s))
        .collect();
    let expected = odd_common_simplex(n, k)?;
    let z = generator_of_top_homology(&sphere, 2 * l + 1, caps)?;
    let p = pair(&beta, &z)?;
    let m = induced_map_on_homology(&sphere, &nk, &(0..n).collect::<Vec<_>>(), 2 * l + 1, caps)?;
    let unit = m.rows() == 1 && m.cols() == 1 && m.get(0, 0).magnitude().is_one();
    let tag = |what: &str| format!("({n},{k}) {what}");
    Ok(vec![
        ok_or(is_cocycle(&nk, &beta)?, || tag("odd beta is not a cocycle")),
        ok_or(common == vec![&expected], || {
            tag(&format!("common simplices {common:?}"))
        }),
        ok_or(p.magnitude().is_one(), || {
            tag(&format!("<beta, [sphere]> = {p}"))
        }),
        ok_or(unit, || tag(&format!("inclusion induces {m:?}"))),
    ])
}

#[derive(Clone, Debug)]
pub struct PolytopeCases {
    /// Gale evenness is checked for every `n <= gale_n_max`.
    pub gale_n_max: usize,
    pub inclusion: Vec<(usize, usize)>,
    pub odd_generators: Vec<(usize, usize)>,
    pub missing: Vec<(usize, usize)>,
}

impl Default for PolytopeCases {
    fn default() -> Self {
        PolytopeCases {
            gale_n_max: 10,
            inclusion: vec![(7, 4), (8, 5), (9, 5), (11, 8)],
            odd_generators: vec![(7, 4), (8, 5)],
            missing: vec![(4, 2), (6, 3), (9, 6)],
        }
    }
}

pub fn polytope(cases: &PolytopeCases, caps: Caps) -> SuiteReport {
    let mut r = SuiteReport::new("polytope");
    for n in 3..=cases.gale_n_max {
        for m in 1..=(n - 1) / 2 {
            let ok = gale_facets(2 * m, n).map(|f| f.facets) == Ok(gale_brute_force(2 * m, n));
            r.check(ok, || {
                format!("C_{}({n}) facets disagree with Gale evenness", 2 * m)
            });
        }
    }
    for &(n, k) in &cases.inclusion {
        let res = facets_lie_in_nerve(n, k);
        r.check(res == Ok(true), || {
            format!("({n},{k}) polytope boundary not inside N: {res:?}")
        });
    }
    let outcomes = cases
        .odd_generators
        .par_iter()
        .map(|&(n, k)| {
            odd_generator_case(n, k, caps).unwrap_or_else(|e| vec![Err(format!("({n},{k}): {e}"))])
        })
        .collect();
    r.absorb(outcomes);
    for &(n, k) in &cases.missing {
        let (a, b) = (missing_facets(n, k), delta_rotations(n, k));
        r.check(a.is_ok() && a == b, || {
            format!("({n},{k}) missing facets {a:?}, rotations {b:?}")
        });
    }
    r
}

#[derive(Clone, Debug)]
pub struct MapsCases {
    pub automorphism_n_max: usize,
    pub epsilon: Vec<(usize, usize)>,
    pub action_n_max: usize,
}

impl Default for MapsCases {
    fn default() -> Self {
        MapsCases {
            automorphism_n_max: 8,
            epsilon: EVEN_CASES.to_vec(),
            action_n_max: 9,
        }
    }
}

/// Dihedral symmetry: automorphism counts, `εΔ` and the homology action.
pub fn maps(cases: &MapsCases, caps: Caps) -> SuiteReport {
    let mut r = SuiteReport::new("maps");
    let auto: Vec<(usize, usize)> = (4..=cases.automorphism_n_max)
        .flat_map(|n| (1..=n - 3).map(move |k| (n, k)))
        .collect();
    let outcomes = auto
        .par_iter()
        .map(|&(n, k)| {
            let c = automorphism_count(&nerve_nk(n, k));
            vec![ok_or(c == Ok(2 * n), || {
                format!("N({n},{k}) has {c:?} automorphisms, expected {}", 2 * n)
            })]
        })
        .collect();
    r.absorb(outcomes);
    for &(n, k) in &cases.epsilon {
        let res = epsilon_delta_identity(n, k);
        r.check(res == Ok(true), || {
            format!("({n},{k}) eps Delta identity: {res:?}")
        });
    }
    let actions: Vec<(usize, usize)> = (2..=cases.action_n_max)
        .flat_map(|n| (0..=n - 2).map(move |k| (n, k)))
        .collect();
    let outcomes = actions
        .par_iter()
        .map(|&(n, k)| {
            vec![match dihedral_action_on_homology(n, k, caps) {
                Ok(a) if a.holds() => Ok(()),
                Ok(a) => Err(format!(
                    "({n},{k}) g acts as {:?} (expected {:?}), eps as {:?} (expected {:?})",
                    a.g, a.expected_g, a.epsilon, a.expected_epsilon
                )),
                Err(e) => Err(format!("({n},{k}): {e}")),
            }]
        })
        .collect();
    r.absorb(outcomes);
    r
}

/// `i -> i mod n` for every `n >= 1`, `k >= 0` with `n + k <= total_max`.
pub fn surjection(total_max: usize, caps: Caps) -> SuiteReport {
    let cases: Vec<(usize, usize)> = (1..=total_max)
        .flat_map(|n| (0..=total_max - n).map(move |k| (n, k)))
        .collect();
    let outcomes = cases
        .par_iter()
        .map(|&(n, k)| {
            vec![match check_mod_n_surjection(n, k, caps) {
                Ok(rep) if rep.holds() => Ok(()),
                Ok(rep) => Err(format!(
                    "({n},{k}) non-cone preimage {:?}, |det| = {}",
                    rep.non_cone, rep.determinant
                )),
                Err(e) => Err(format!("({n},{k}): {e}")),
            }]
        })
        .collect();
    let mut r = SuiteReport::new("surjection");
    r.absorb(outcomes);
    r
}

/// The chromatic bound for `K_{n/d}`, `2d <= n <= n_max`; complexes and
/// chromatic numbers are compared directly for `n <= exact_n_max`.
pub fn chromatic(n_max: usize, exact_n_max: usize) -> SuiteReport {
    let mut r = SuiteReport::new("chromatic");
    for n in 2..=n_max {
        for d in 1..=n / 2 {
            let rep = lovasz_report(n, d);
            let rule = usize::from(d < n % (2 * d));
            r.check(
                matches!(&rep, Ok(x) if x.gap == rule as isize && (x.gap == 0 || x.gap == 1)),
                || format!("K_{n}/{d}: {rep:?}, residue rule says gap {rule}"),
            );
            if n <= exact_n_max {
                let g = circular_complete(n, d).expect("2d <= n");
                r.check(neighborhood_complex(&g) == nerve_nk(n, n - 2 * d), || {
                    format!("N(K_{n}/{d}) is not N({n},{})", n - 2 * d)
                });
                let chi = chi_circular(n, d).expect("2d <= n");
                let brute = chromatic_number(&g);
                r.check(brute == chi, || {
                    format!("K_{n}/{d}: chromatic number {brute}, closed form {chi}")
                });
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let o = Options::default();
        assert!(nerve_sweep(6, o).passed());
        assert!(clique_sweep(7, o).passed());
        assert!(recursion(20, o).passed());
        assert!(random_collections(20, 1, o).passed());
    }

    #[test]
    fn fault_is_caught() {
        let o = Options {
            fault: true,
            ..Options::default()
        };
        let r = nerve_sweep(6, o);
        assert!(!r.passed());
        assert!(r.failures[0].starts_with("N(4,2)"), "{}", r.failures[0]);
        assert!(!recursion(10, o).passed());
    }

    #[test]
    fn describe_groups() {
        let h = reduced_homology(&nerve_nk(6, 3), Caps::default()).unwrap();
        assert_eq!(describe(&h), "H2=Z^2");
        let h = reduced_homology(&nerve_nk(3, 2), Caps::default()).unwrap();
        assert_eq!(describe(&h), "0");
    }
}
