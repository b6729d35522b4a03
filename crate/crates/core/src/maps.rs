//! Simplicial vertex maps: the dihedral symmetries of `N(n, k)` and the
//! surjection `i ↦ i mod n` from the clique complex on `n + k` vertices.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::complex::{clique_nk, nerve_nk, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{
    check_simplicial, induced_map_in_bases, reduced_homology, Caps, HomologyBasis, IntMatrix,
};
use crate::homotopy::{clique_homotopy, nerve_homotopy, HomotopyType};
use crate::polytope::{alpha_cycle, even_case, odd_case};

/// A vertex map whose simpliciality has been checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    table: Vec<usize>,
}

impl VertexMap {
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        table: Vec<usize>,
    ) -> Result<Self> {
        if table.len() != source.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: source.vertex_count(),
                found: table.len(),
            });
        }
        if let Some(&v) = table.iter().find(|&&v| v >= target.vertex_count()) {
            return Err(Error::InvalidVertex {
                vertex: v,
                count: target.vertex_count(),
            });
        }
        check_simplicial(&source, &target, &table)?;
        Ok(VertexMap {
            source,
            target,
            table,
        })
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, v: usize) -> usize {
        self.table[v]
    }

    pub fn image(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|&v| self.table[v])).expect("nonempty")
    }

    /// Whether every maximal simplex of the target is the image of a simplex.
    pub fn hits_every_maximal_simplex(&self) -> bool {
        let images: HashSet<Simplex> = self
            .source
            .maximal_simplices()
            .iter()
            .map(|m| self.image(m))
            .collect();
        self.target
            .maximal_simplices()
            .iter()
            .all(|t| images.iter().any(|i| t.is_face_of(i)))
    }

    /// Induced map on `H̃_d` in the oracle bases.
    pub fn on_homology(&self, d: usize, caps: Caps) -> Result<IntMatrix> {
        let src = HomologyBasis::new(&self.source, d, caps)?;
        let dst = HomologyBasis::new(&self.target, d, caps)?;
        induced_map_in_bases(&self.source, &self.target, &self.table, &src, &dst)
    }
}

/// `g^rotation ∘ ε^reflected` in `D_2n`, acting by `x ↦ rotation ± x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    pub rotation: usize,
    pub reflected: bool,
}

impl DihedralElement {
    pub const IDENTITY: Self = DihedralElement {
        rotation: 0,
        reflected: false,
    };
    pub const G: Self = DihedralElement {
        rotation: 1,
        reflected: false,
    };
    pub const EPSILON: Self = DihedralElement {
        rotation: 0,
        reflected: true,
    };

    pub fn apply(&self, n: usize, x: usize) -> usize {
        let x = x % n;
        let y = if self.reflected { (n - x) % n } else { x };
        (y + self.rotation) % n
    }

    /// `self ∘ other` modulo `n`.
    pub fn compose(&self, other: &Self, n: usize) -> Self {
        let r2 = if self.reflected {
            (n - other.rotation % n) % n
        } else {
            other.rotation % n
        };
        DihedralElement {
            rotation: (self.rotation + r2) % n,
            reflected: self.reflected != other.reflected,
        }
    }

    pub fn pow(&self, e: usize, n: usize) -> Self {
        (0..e).fold(Self::IDENTITY, |acc, _| acc.compose(self, n))
    }

    pub fn inverse(&self, n: usize) -> Self {
        if self.reflected {
            *self
        } else {
            DihedralElement {
                rotation: (n - self.rotation % n) % n,
                reflected: false,
            }
        }
    }

    pub fn table(&self, n: usize) -> Vec<usize> {
        (0..n).map(|x| self.apply(n, x)).collect()
    }
}

/// The vertex bijection of `element` as a self-map of `N(n, k)`, or of the
/// clique complex when `clique` is set.
pub fn dihedral_vertex_map(
    n: usize,
    k: usize,
    element: DihedralElement,
    clique: bool,
) -> Result<VertexMap> {
    let k_complex = if clique {
        clique_nk(n, k)
    } else {
        nerve_nk(n, k)
    };
    VertexMap::new(k_complex.clone(), k_complex, element.table(n))
}

/// Vertex bijections preserving the complex, by brute force.
pub fn automorphism_count(k: &SimplicialComplex) -> Result<usize> {
    let n = k.vertex_count();
    if n > 8 {
        return Err(Error::CapsExceeded {
            what: "vertex count for brute-force automorphisms",
            value: n,
            cap: 8,
        });
    }
    let maximal: HashSet<Vec<usize>> = k
        .maximal_simplices()
        .iter()
        .map(|s| s.vertices().to_vec())
        .collect();
    let preserves = |p: &[usize]| {
        k.maximal_simplices().iter().all(|s| {
            let mut image: Vec<usize> = s.vertices().iter().map(|&v| p[v]).collect();
            image.sort_unstable();
            maximal.contains(&image)
        })
    };
    // Heap's algorithm.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut count = usize::from(preserves(&perm));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            count += usize::from(preserves(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(count)
}

fn top_simplex_chain(vertices: &[usize]) -> crate::homology::Chain {
    let mut c = crate::homology::Chain::zero(vertices.len() - 1);
    c.add_oriented(vertices, 1).expect("distinct vertices");
    c
}

/// Checks `εΔ = (-1)^{l+1} g^{-1}Δ` as oriented simplices.
pub fn epsilon_delta_identity(n: usize, k: usize) -> Result<bool> {
    let l = even_case(n, k)?;
    let delta = crate::polytope::delta(n, k)?;
    let eps: Vec<usize> = delta
        .iter()
        .map(|&v| DihedralElement::EPSILON.apply(n, v))
        .collect();
    let g_inv: Vec<usize> = delta.iter().map(|&v| (v + n - 1) % n).collect();
    let lhs = top_simplex_chain(&eps);
    let sign = if (l + 1) % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let rhs = top_simplex_chain(&g_inv).scale(&sign);
    Ok(lhs == rhs)
}

/// How `g` and `ε` act on the nonzero homology of `N(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionReport {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    /// Dimension of the nonzero group: `2l` (even case) or `2l + 1`.
    pub dim: usize,
    /// Matrices in the `α_0..α_{n-k-2}` basis (even case) or on `Z` (odd case).
    pub g: IntMatrix,
    pub epsilon: IntMatrix,
    pub expected_g: IntMatrix,
    pub expected_epsilon: IntMatrix,
}

impl ActionReport {
    pub fn holds(&self) -> bool {
        self.g == self.expected_g && self.epsilon == self.expected_epsilon
    }
}

/// Computes the induced action of `g` and `ε` and the action predicted by
/// `gα_i = α_{i+1}`, `εα_i = (-1)^{l+1} α_{-i-1}` (even case) or
/// `g = 1`, `ε = (-1)^{l+1}` (odd case).
pub fn dihedral_action_on_homology(n: usize, k: usize, caps: Caps) -> Result<ActionReport> {
    let nk = nerve_nk(n, k);
    let g_table = DihedralElement::G.table(n);
    let e_table = DihedralElement::EPSILON.table(n);
    if let Ok(l) = even_case(n, k) {
        let d = 2 * l;
        let basis = HomologyBasis::new(&nk, d, caps)?;
        let r = n - k - 1;
        let m = (n - k) as i64;
        // Columns: α_0..α_{r-1} in oracle coordinates.
        let mut a = IntMatrix::zeros(basis.rank(), r);
        for j in 0..r {
            for (i, c) in basis
                .coordinates(&alpha_cycle(n, k, j as i64)?)?
                .into_iter()
                .enumerate()
            {
                a.set(i, j, c);
            }
        }
        let a_inv = a.unimodular_inverse().ok_or_else(|| {
            Error::Precondition(format!(
                "α_0..α_{} do not form a basis",
                r.saturating_sub(1)
            ))
        })?;
        let to_alpha = |mat: IntMatrix| a_inv.mul(&mat).mul(&a);
        let g = to_alpha(induced_map_in_bases(&nk, &nk, &g_table, &basis, &basis)?);
        let epsilon = to_alpha(induced_map_in_bases(&nk, &nk, &e_table, &basis, &basis)?);
        // α_{r} = -(α_0 + … + α_{r-1}).
        let alpha_vec = |i: i64| {
            let i = i.rem_euclid(m) as usize;
            let mut v = vec![BigInt::from(0); r];
            if i < r {
                v[i] = BigInt::one();
            } else {
                v.iter_mut().for_each(|x| *x = -BigInt::one());
            }
            v
        };
        let sign = if (l + 1) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let mut expected_g = IntMatrix::zeros(r, r);
        let mut expected_epsilon = IntMatrix::zeros(r, r);
        for j in 0..r {
            for (i, x) in alpha_vec(j as i64 + 1).into_iter().enumerate() {
                expected_g.set(i, j, x);
            }
            for (i, x) in alpha_vec(-(j as i64) - 1).into_iter().enumerate() {
                expected_epsilon.set(i, j, &sign * x);
            }
        }
        return Ok(ActionReport {
            n,
            k,
            l,
            dim: d,
            g,
            epsilon,
            expected_g,
            expected_epsilon,
        });
    }
    let l = odd_case(n, k)?;
    let d = 2 * l + 1;
    let basis = HomologyBasis::new(&nk, d, caps)?;
    let g = induced_map_in_bases(&nk, &nk, &g_table, &basis, &basis)?;
    let epsilon = induced_map_in_bases(&nk, &nk, &e_table, &basis, &basis)?;
    let sign = if (l + 1) % 2 == 0 { 1 } else { -1 };
    Ok(ActionReport {
        n,
        k,
        l,
        dim: d,
        g,
        epsilon,
        expected_g: IntMatrix::from_rows(&[vec![1]]),
        expected_epsilon: IntMatrix::from_rows(&[vec![sign]]),
    })
}

/// `f(i) = i mod n` from the clique complex on `n + k` vertices to `N(n, k)`;
/// checked to be simplicial and to hit every maximal simplex.
pub fn mod_n_surjection(n: usize, k: usize) -> Result<VertexMap> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let f = VertexMap::new(
        clique_nk(n + k, k),
        nerve_nk(n, k),
        (0..n + k).map(|i| i % n).collect(),
    )?;
    if !f.hits_every_maximal_simplex() {
        return Err(Error::Precondition(format!(
            "i mod {n} misses a maximal simplex of N({n}, {k})"
        )));
    }
    Ok(f)
}

/// The subcomplex of the source induced on `f^{-1}(τ)`.
pub fn preimage_complex(f: &VertexMap, tau: &Simplex) -> Result<SimplicialComplex> {
    if !f.target().contains_simplex(tau) {
        return Err(Error::Precondition(format!(
            "{tau:?} is not a simplex of the target"
        )));
    }
    let pre: Vec<usize> = (0..f.table().len())
        .filter(|&v| tau.contains(f.apply(v)))
        .collect();
    f.source().induced(&pre)
}

/// A cone point of the preimage of `τ`: a vertex lying in every maximal
/// simplex of `f^{-1}(τ)`. `None` would refute the cone property.
pub fn preimage_is_cone(f: &VertexMap, tau: &Simplex) -> Result<Option<usize>> {
    let pre = preimage_complex(f, tau)?;
    let mut maximal = pre.maximal_simplices().iter();
    let first = match maximal.next() {
        Some(m) => m.vertices().to_vec(),
        None => return Ok(None),
    };
    let common = maximal.fold(first, |mut acc, m| {
        acc.retain(|&v| m.contains(v));
        acc
    });
    Ok(common.first().copied())
}

/// Outcome of checking `f: N̄(n+k, k) → N(n, k)` at one `(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectionReport {
    pub n: usize,
    pub k: usize,
    pub faces_checked: usize,
    /// First face of the target whose preimage has no cone point.
    pub non_cone: Option<Simplex>,
    pub homotopy: HomotopyType,
    /// `|det|` of the induced map on the nonzero group (1 when contractible).
    pub determinant: BigInt,
}

impl SurjectionReport {
    pub fn holds(&self) -> bool {
        self.non_cone.is_none() && self.determinant.is_one()
    }
}

pub fn check_mod_n_surjection(n: usize, k: usize, caps: Caps) -> Result<SurjectionReport> {
    let f = mod_n_surjection(n, k)?;
    let mut faces_checked = 0;
    let mut non_cone = None;
    'outer: for d in 0..=f.target().dim().max(0) as usize {
        for tau in f.target().faces(d) {
            faces_checked += 1;
            if preimage_is_cone(&f, &tau)?.is_none() {
                non_cone = Some(tau);
                break 'outer;
            }
        }
    }
    let homotopy = nerve_homotopy(n, k);
    let source_type = clique_homotopy(n + k, k);
    let determinant = match homotopy {
        HomotopyType::Contractible => {
            if !reduced_homology(f.source(), caps)?.is_trivial() || source_type != homotopy {
                BigInt::from(0)
            } else {
                BigInt::one()
            }
        }
        HomotopyType::Wedge { dim, .. } => {
            let m = f.on_homology(dim, caps)?;
            if m.rows() != m.cols() {
                BigInt::from(0)
            } else {
                m.determinant().abs()
            }
        }
    };
    Ok(SurjectionReport {
        n,
        k,
        faces_checked,
        non_cone,
        homotopy,
        determinant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn rotation_moves_arcs() {
        let g = dihedral_vertex_map(6, 3, DihedralElement::G, false).unwrap();
        assert_eq!(g.image(&s(&[0, 1, 2, 3])), s(&[1, 2, 3, 4]));
    }

    #[test]
    fn dihedral_relations() {
        for n in 1..=12 {
            let g = DihedralElement::G;
            let e = DihedralElement::EPSILON;
            let id = DihedralElement::IDENTITY.table(n);
            assert_eq!(g.pow(n, n).table(n), id);
            assert_eq!(e.compose(&e, n).table(n), id);
            assert_eq!(
                e.compose(&g, n).compose(&e, n).table(n),
                g.inverse(n).table(n)
            );
            // Composition agrees with composing tables.
            let h = g.pow(3, n).compose(&e, n);
            let direct: Vec<usize> = (0..n)
                .map(|x| g.pow(3, n).apply(n, e.apply(n, x)))
                .collect();
            assert_eq!(h.table(n), direct);
        }
    }

    #[test]
    fn dihedral_maps_are_automorphisms() {
        for n in 3..=9 {
            for k in 0..n {
                for r in 0..n {
                    for reflected in [false, true] {
                        let el = DihedralElement {
                            rotation: r,
                            reflected,
                        };
                        assert!(dihedral_vertex_map(n, k, el, false).is_ok());
                        assert!(dihedral_vertex_map(n, k, el, true).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&nerve_nk(6, 3)).unwrap(), 12);
        assert_eq!(automorphism_count(&nerve_nk(7, 4)).unwrap(), 14);
        assert_eq!(automorphism_count(&nerve_nk(5, 3)).unwrap(), 120);
        assert_eq!(automorphism_count(&nerve_nk(4, 0)).unwrap(), 24);
        assert!(automorphism_count(&nerve_nk(9, 3)).is_err());
    }

    #[test]
    fn epsilon_delta() {
        for (n, k) in [(4, 2), (6, 3), (9, 6), (6, 4), (8, 6), (10, 8), (3, 0)] {
            assert!(epsilon_delta_identity(n, k).unwrap(), "n={n} k={k}");
        }
        assert!(epsilon_delta_identity(7, 4).is_err());
    }

    #[test]
    fn homology_actions() {
        for (n, k) in [
            (6, 3),
            (4, 2),
            (9, 6),
            (8, 6),
            (7, 4),
            (5, 2),
            (8, 5),
            (9, 7),
            (4, 0),
        ] {
            let r = dihedral_action_on_homology(n, k, Caps::default()).unwrap();
            assert!(r.holds(), "{r:?}");
        }
        let r = dihedral_action_on_homology(7, 4, Caps::default()).unwrap();
        assert_eq!(r.epsilon, IntMatrix::from_rows(&[vec![1]]));
        let r = dihedral_action_on_homology(5, 2, Caps::default()).unwrap();
        assert_eq!(r.epsilon, IntMatrix::from_rows(&[vec![-1]]));
    }

    #[test]
    fn surjection_examples() {
        let f = mod_n_surjection(5, 0).unwrap();
        assert_eq!(f.table(), &[0, 1, 2, 3, 4]);
        let f = mod_n_surjection(6, 3).unwrap();
        assert_eq!(f.source(), &clique_nk(9, 3));
        let r = check_mod_n_surjection(5, 2, Caps::default()).unwrap();
        assert!(r.holds());
        assert_eq!(r.homotopy, HomotopyType::sphere(1));
    }

    #[test]
    fn preimages_are_cones() {
        let f = mod_n_surjection(6, 3).unwrap();
        for d in 0..=3 {
            for tau in f.target().faces(d) {
                assert!(preimage_is_cone(&f, &tau).unwrap().is_some(), "{tau:?}");
            }
        }
        // Vertex 1 < k has preimage {1, 7}, an edge.
        let pre = preimage_complex(&f, &s(&[1])).unwrap();
        assert_eq!(pre.maximal_simplices(), &[s(&[1, 7])]);
        // Vertex 4 >= k has a single preimage.
        assert_eq!(preimage_is_cone(&f, &s(&[4])).unwrap(), Some(4));
        assert!(preimage_is_cone(&f, &s(&[0, 2, 4])).is_err());
    }

    #[test]
    fn surjection_sweep_small() {
        for n in 1..=7 {
            for k in 0..=(9 - n).min(4) {
                let r = check_mod_n_surjection(n, k, Caps::default()).unwrap();
                assert!(r.holds(), "{r:?}");
            }
        }
    }

    #[test]
    fn non_simplicial_tables_are_rejected() {
        let c = nerve_nk(6, 1);
        assert!(VertexMap::new(c.clone(), c.clone(), vec![0, 2, 4, 0, 2, 4]).is_err());
        assert!(VertexMap::new(c.clone(), c, vec![0, 1]).is_err());
    }
}
