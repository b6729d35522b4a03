//! Integer simplicial homology and cohomology via Smith normal form.
//!
//! Everything here is reduced (augmented) homology with integer
//! coefficients, so a contractible complex has all groups zero. A simplex is
//! positively oriented when its vertices are listed in increasing order.

mod snf;

pub use snf::{invariant_factors, smith_normal_form, IntMatrix, SnfResult};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Size limits for oracle computations; face counts grow exponentially.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_vertices: usize,
    pub max_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vertices: 12,
            max_dim: 8,
        }
    }
}

impl Caps {
    pub fn new(max_vertices: usize, max_dim: usize) -> Self {
        Caps {
            max_vertices,
            max_dim,
        }
    }

    pub fn check(&self, k: &SimplicialComplex) -> Result<()> {
        let nv = k.vertices().len();
        if nv > self.max_vertices {
            return Err(Error::CapsExceeded {
                what: "vertex count",
                value: nv,
                cap: self.max_vertices,
            });
        }
        let d = k.dim().max(0) as usize;
        if d > self.max_dim {
            return Err(Error::CapsExceeded {
                what: "dimension",
                value: d,
                cap: self.max_dim,
            });
        }
        Ok(())
    }
}

/// Sign of the permutation sorting `v`, or `None` if `v` repeats a vertex.
pub fn sort_sign(v: &[usize]) -> Option<(Simplex, i32)> {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            match v[i].cmp(&v[j]) {
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Equal => return None,
                _ => {}
            }
        }
    }
    let s = Simplex::new(v.iter().copied()).ok()?;
    Some((s, if inversions.is_multiple_of(2) { 1 } else { -1 }))
}

#[doc(hidden)]
pub trait Variance {
    const NAME: &'static str;
}
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainKind {}
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CochainKind {}
impl Variance for ChainKind {
    const NAME: &'static str = "Chain";
}
impl Variance for CochainKind {
    const NAME: &'static str = "Cochain";
}

/// A finite integer combination of `dim`-simplices, keyed by the positively
/// oriented (sorted) simplex.
pub struct Combination<K> {
    dim: usize,
    terms: BTreeMap<Simplex, BigInt>,
    _kind: PhantomData<K>,
}

pub type Chain = Combination<ChainKind>;
pub type Cochain = Combination<CochainKind>;

impl<K> Clone for Combination<K> {
    fn clone(&self) -> Self {
        Combination {
            dim: self.dim,
            terms: self.terms.clone(),
            _kind: PhantomData,
        }
    }
}

impl<K> PartialEq for Combination<K> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.terms == other.terms
    }
}

impl<K> Eq for Combination<K> {}

impl<K: Variance> fmt::Debug for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}](", K::NAME, self.dim)?;
        for (i, (s, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:+}{s:?}")?;
        }
        write!(f, ")")
    }
}

impl<K> Combination<K> {
    pub fn zero(dim: usize) -> Self {
        Combination {
            dim,
            terms: BTreeMap::new(),
            _kind: PhantomData,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, s: &Simplex) -> BigInt {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    /// Adds `coeff` times the simplex with vertices in the given order.
    /// A vertex list out of sorted order contributes with the permutation sign.
    pub fn add_oriented(&mut self, vertices: &[usize], coeff: impl Into<BigInt>) -> Result<()> {
        if vertices.len() != self.dim + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: vertices.len().saturating_sub(1),
            });
        }
        let (s, sign) = sort_sign(vertices).ok_or_else(|| {
            Error::Precondition(format!("repeated vertex in oriented simplex {vertices:?}"))
        })?;
        self.add_term(s, coeff.into() * sign);
        Ok(())
    }

    pub fn from_oriented(dim: usize, simplices: &[(&[usize], i64)]) -> Result<Self> {
        let mut c = Self::zero(dim);
        for (v, x) in simplices {
            c.add_oriented(v, *x)?;
        }
        Ok(c)
    }

    fn add_term(&mut self, s: Simplex, coeff: BigInt) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, by: &BigInt) -> Self {
        let mut out = Self::zero(self.dim);
        if by.is_zero() {
            return out;
        }
        for (s, c) in &self.terms {
            out.terms.insert(s.clone(), c * by);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    /// Image under a vertex map; degenerate simplices vanish.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (s, c) in &self.terms {
            let image: Vec<usize> = s.vertices().iter().map(|&v| f(v)).collect();
            if let Some((t, sign)) = sort_sign(&image) {
                out.add_term(t, c * sign);
            }
        }
        out
    }

    /// Coefficient vector over an ordered face list.
    pub(crate) fn to_vector(
        &self,
        index: &HashMap<Simplex, usize>,
        len: usize,
    ) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); len];
        for (s, c) in &self.terms {
            let i = *index.get(s).ok_or_else(|| {
                Error::Precondition(format!("simplex {s:?} is not in the complex"))
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub(crate) fn from_vector(dim: usize, faces: &[Simplex], v: &[BigInt]) -> Self {
        let mut out = Self::zero(dim);
        for (s, c) in faces.iter().zip(v) {
            if !c.is_zero() {
                out.terms.insert(s.clone(), c.clone());
            }
        }
        out
    }
}

impl Chain {
    /// `∂` of this chain, a `(dim-1)`-chain. Boundaries of 0-chains are taken
    /// in the augmented complex and are reported as their coefficient sum.
    pub fn boundary(&self) -> Result<Chain> {
        if self.dim == 0 {
            return Err(Error::DimensionOutOfRange { dim: 0, max: -1 });
        }
        let mut out = Chain::zero(self.dim - 1);
        for (s, c) in &self.terms {
            for i in 0..s.len() {
                let face = s.without_position(i).expect("dim >= 1");
                let sign = if i % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(face, sign);
            }
        }
        Ok(out)
    }

    /// Sum of coefficients (the augmentation of a 0-chain).
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

/// `⟨c, z⟩`: the sum of coefficient products over common simplices.
pub fn pair(c: &Cochain, z: &Chain) -> Result<BigInt> {
    if c.dim != z.dim {
        return Err(Error::DimensionMismatch {
            expected: c.dim,
            found: z.dim,
        });
    }
    Ok(c.terms
        .iter()
        .filter_map(|(s, x)| z.terms.get(s).map(|y| x * y))
        .sum())
}

struct FaceIndex {
    faces: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
}

impl FaceIndex {
    fn new(faces: Vec<Simplex>) -> Self {
        let index = faces
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        FaceIndex { faces, index }
    }

    fn len(&self) -> usize {
        self.faces.len()
    }
}

fn boundary_from_faces(lower: Option<&FaceIndex>, upper: &FaceIndex) -> IntMatrix {
    match lower {
        // Augmentation C_0 -> Z.
        None => {
            let mut m = IntMatrix::zeros(1, upper.len());
            for j in 0..upper.len() {
                m.set(0, j, BigInt::one());
            }
            m
        }
        Some(lower) => {
            let mut m = IntMatrix::zeros(lower.len(), upper.len());
            for (j, s) in upper.faces.iter().enumerate() {
                for p in 0..s.len() {
                    let face = s.without_position(p).expect("dim >= 1");
                    let i = lower.index[&face];
                    m.set(i, j, BigInt::from(if p % 2 == 0 { 1 } else { -1 }));
                }
            }
            m
        }
    }
}

/// `∂_d`: rows are the `(d-1)`-faces (a single augmentation row when
/// `d = 0`), columns the `d`-faces, both in lexicographic order.
pub fn boundary_matrix(k: &SimplicialComplex, d: usize) -> Result<IntMatrix> {
    if d as isize > k.dim() {
        return Err(Error::DimensionOutOfRange {
            dim: d,
            max: k.dim(),
        });
    }
    let upper = FaceIndex::new(k.faces(d));
    let lower = (d > 0).then(|| FaceIndex::new(k.faces(d - 1)));
    Ok(boundary_from_faces(lower.as_ref(), &upper))
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Reduced homology groups `H̃_0 … H̃_top`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroups {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyGroups {
    pub fn get(&self, d: usize) -> HomologyGroup {
        self.groups.get(d).cloned().unwrap_or_default()
    }

    pub fn betti(&self, d: usize) -> usize {
        self.get(d).betti
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(|g| g.torsion.is_empty())
    }

    /// Dimensions with a nonzero group.
    pub fn support(&self) -> Vec<usize> {
        (0..self.groups.len())
            .filter(|&d| !self.groups[d].is_zero())
            .collect()
    }

    /// `Some((d, rank))` when the only nonzero group is free in dimension `d`.
    pub fn concentrated(&self) -> Option<(usize, usize)> {
        match self.support().as_slice() {
            [d] if self.groups[*d].torsion.is_empty() => Some((*d, self.groups[*d].betti)),
            _ => None,
        }
    }
}

/// Reduced integer homology in every dimension up to `dim K`.
pub fn reduced_homology(k: &SimplicialComplex, caps: Caps) -> Result<HomologyGroups> {
    let top = k.dim();
    if top < 0 {
        return Ok(HomologyGroups::default());
    }
    reduced_homology_up_to(k, top as usize, caps)
}

/// Reduced integer homology `H̃_0 … H̃_up_to`.
pub fn reduced_homology_up_to(
    k: &SimplicialComplex,
    up_to: usize,
    caps: Caps,
) -> Result<HomologyGroups> {
    caps.check(k)?;
    if up_to as isize > k.dim() {
        return Err(Error::DimensionOutOfRange {
            dim: up_to,
            max: k.dim(),
        });
    }
    let faces: Vec<FaceIndex> = (0..=up_to + 1)
        .map(|d| FaceIndex::new(k.faces(d)))
        .collect();
    // factors[d] = invariant factors of ∂_d for d = 0..=up_to+1.
    let factors: Vec<Vec<BigInt>> = (0..=up_to + 1)
        .map(|d| {
            let lower = if d == 0 { None } else { Some(&faces[d - 1]) };
            invariant_factors(&boundary_from_faces(lower, &faces[d]))
        })
        .collect();
    let groups = (0..=up_to)
        .map(|d| HomologyGroup {
            betti: faces[d].len() - factors[d].len() - factors[d + 1].len(),
            torsion: factors[d + 1]
                .iter()
                .filter(|x| !x.is_one())
                .cloned()
                .collect(),
        })
        .collect();
    Ok(HomologyGroups { groups })
}

/// Whether `δc` vanishes on every `(d+1)`-face of `K`.
pub fn is_cocycle(k: &SimplicialComplex, c: &Cochain) -> Result<bool> {
    for (s, _) in c.terms() {
        if !k.contains_simplex(s) {
            return Err(Error::Precondition(format!(
                "simplex {s:?} is not in the complex"
            )));
        }
    }
    Ok(coboundary(k, c).is_zero())
}

/// `δc`, evaluated on the `(d+1)`-faces of `K`.
pub fn coboundary(k: &SimplicialComplex, c: &Cochain) -> Cochain {
    let mut out = Cochain::zero(c.dim() + 1);
    for tau in k.faces(c.dim() + 1) {
        let mut value = BigInt::zero();
        for p in 0..tau.len() {
            let face = tau.without_position(p).expect("dim >= 1");
            let x = c.coefficient(&face);
            if p % 2 == 0 {
                value += x;
            } else {
                value -= x;
            }
        }
        out.add_term(tau, value);
    }
    out
}

/// Whether `z = ∂x` for some integer `(d+1)`-chain `x` of `K`.
pub fn is_boundary(k: &SimplicialComplex, z: &Chain) -> Result<bool> {
    let d = z.dim();
    let faces = FaceIndex::new(k.faces(d));
    let target = z.to_vector(&faces.index, faces.len())?;
    if (d + 1) as isize > k.dim() {
        return Ok(target.iter().all(Zero::is_zero));
    }
    let upper = FaceIndex::new(k.faces(d + 1));
    let m = boundary_from_faces(Some(&faces), &upper);
    let snf = smith_normal_form(&m);
    // M x = z  <=>  D (V⁻¹ x) = U z.
    let y = snf.u.mul_vec(&target);
    Ok(y.iter()
        .enumerate()
        .all(|(i, yi)| match snf.diagonal.get(i) {
            Some(di) => yi.is_multiple_of(di),
            None => yi.is_zero(),
        }))
}

/// An explicit basis of `H̃_d(K)` with coordinates for any cycle.
pub struct HomologyBasis {
    dim: usize,
    faces: FaceIndex,
    /// Rank of `∂_d`; the first `rank_d` coordinates of `V⁻¹ z` vanish on cycles.
    rank_d: usize,
    v_inv: IntMatrix,
    /// Row transform putting boundaries (in kernel coordinates) in Smith form.
    p: IntMatrix,
    image_factors: Vec<BigInt>,
    generators: Vec<Chain>,
    torsion: Vec<BigInt>,
}

impl HomologyBasis {
    pub fn new(k: &SimplicialComplex, d: usize, caps: Caps) -> Result<Self> {
        caps.check(k)?;
        if d as isize > k.dim() {
            return Err(Error::DimensionOutOfRange {
                dim: d,
                max: k.dim(),
            });
        }
        let faces = FaceIndex::new(k.faces(d));
        let lower = (d > 0).then(|| FaceIndex::new(k.faces(d - 1)));
        let upper = FaceIndex::new(k.faces(d + 1));
        let snf_d = smith_normal_form(&boundary_from_faces(lower.as_ref(), &faces));
        let r = snf_d.rank;
        let n = faces.len();
        let z = n - r;
        // Kernel basis: columns r.. of V.
        let kernel: Vec<Vec<BigInt>> = (r..n).map(|j| snf_d.v.column(j)).collect();
        // Boundaries in kernel coordinates: rows r.. of V⁻¹ ∂_{d+1}.
        let bd = boundary_from_faces(Some(&faces), &upper);
        let full = snf_d.v_inv.mul(&bd);
        let mut b = IntMatrix::zeros(z, upper.len());
        for i in 0..z {
            for j in 0..upper.len() {
                b.set(i, j, full.get(r + i, j).clone());
            }
        }
        let snf_b = smith_normal_form(&b);
        let to_chain = |coords: Vec<BigInt>| {
            let mut v = vec![BigInt::zero(); n];
            for (c, col) in coords.iter().zip(&kernel) {
                if c.is_zero() {
                    continue;
                }
                for (vi, x) in v.iter_mut().zip(col) {
                    *vi += c * x;
                }
            }
            Chain::from_vector(d, &faces.faces, &v)
        };
        let generators = (snf_b.rank..z)
            .map(|j| to_chain(snf_b.u_inv.column(j)))
            .collect();
        let torsion = snf_b
            .diagonal
            .iter()
            .filter(|x| !x.is_one())
            .cloned()
            .collect();
        Ok(HomologyBasis {
            dim: d,
            faces,
            rank_d: r,
            v_inv: snf_d.v_inv,
            p: snf_b.u,
            image_factors: snf_b.diagonal,
            generators,
            torsion,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Cycles representing a basis of the free part.
    pub fn generators(&self) -> &[Chain] {
        &self.generators
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    fn split(&self, z: &Chain) -> Result<Vec<BigInt>> {
        if z.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: z.dim(),
            });
        }
        let v = z.to_vector(&self.faces.index, self.faces.len())?;
        let w = self.v_inv.mul_vec(&v);
        if w[..self.rank_d].iter().any(|x| !x.is_zero()) {
            return Err(Error::NotACycle);
        }
        Ok(self.p.mul_vec(&w[self.rank_d..]))
    }

    /// Coordinates of the class of cycle `z` in the free generators.
    pub fn coordinates(&self, z: &Chain) -> Result<Vec<BigInt>> {
        let y = self.split(z)?;
        if !self.torsion.is_empty() {
            return Err(Error::Torsion {
                dim: self.dim,
                torsion: self.torsion.iter().map(ToString::to_string).collect(),
            });
        }
        Ok(y[self.image_factors.len()..].to_vec())
    }

    /// Whether the cycle `z` is null-homologous.
    pub fn is_boundary(&self, z: &Chain) -> Result<bool> {
        let y = self.split(z)?;
        Ok(y.iter()
            .enumerate()
            .all(|(i, yi)| match self.image_factors.get(i) {
                Some(di) => yi.is_multiple_of(di),
                None => yi.is_zero(),
            }))
    }
}

/// The map `H̃_d(src) → H̃_d(dst)` induced by a vertex map, as a matrix in the
/// bases of [`HomologyBasis`] (columns: source generators).
pub fn induced_map_on_homology(
    src: &SimplicialComplex,
    dst: &SimplicialComplex,
    vertex_map: &[usize],
    d: usize,
    caps: Caps,
) -> Result<IntMatrix> {
    let source = HomologyBasis::new(src, d, caps)?;
    let target = HomologyBasis::new(dst, d, caps)?;
    induced_map_in_bases(src, dst, vertex_map, &source, &target)
}

/// As [`induced_map_on_homology`] with precomputed bases.
pub fn induced_map_in_bases(
    src: &SimplicialComplex,
    dst: &SimplicialComplex,
    vertex_map: &[usize],
    source: &HomologyBasis,
    target: &HomologyBasis,
) -> Result<IntMatrix> {
    check_simplicial(src, dst, vertex_map)?;
    for b in [source, target] {
        if !b.torsion().is_empty() {
            return Err(Error::Torsion {
                dim: b.dim(),
                torsion: b.torsion().iter().map(ToString::to_string).collect(),
            });
        }
    }
    let mut m = IntMatrix::zeros(target.rank(), source.rank());
    for (j, g) in source.generators().iter().enumerate() {
        let image = g.map_vertices(|v| vertex_map[v]);
        for (i, c) in target.coordinates(&image)?.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// Checks that `vertex_map` sends every simplex of `src` to a simplex of `dst`.
pub fn check_simplicial(
    src: &SimplicialComplex,
    dst: &SimplicialComplex,
    vertex_map: &[usize],
) -> Result<()> {
    for m in src.maximal_simplices() {
        let image: Vec<usize> = m
            .vertices()
            .iter()
            .map(|&v| {
                vertex_map
                    .get(v)
                    .copied()
                    .ok_or(Error::NotSimplicial(m.vertices().to_vec()))
            })
            .collect::<Result<_>>()?;
        if !dst.contains(&image) {
            return Err(Error::NotSimplicial(m.vertices().to_vec()));
        }
    }
    Ok(())
}

/// A cycle generating `H̃_d(K) ≅ Z`.
pub fn generator_of_top_homology(k: &SimplicialComplex, d: usize, caps: Caps) -> Result<Chain> {
    let basis = HomologyBasis::new(k, d, caps)?;
    if !basis.torsion().is_empty() {
        return Err(Error::Torsion {
            dim: d,
            torsion: basis.torsion().iter().map(ToString::to_string).collect(),
        });
    }
    if basis.rank() != 1 {
        return Err(Error::RankNotOne {
            dim: d,
            rank: basis.rank(),
        });
    }
    Ok(basis.generators()[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{clique_nk, nerve_nk};

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn edge_boundary_matrix() {
        let m = boundary_matrix(&SimplicialComplex::full_simplex(2), 1).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[vec![-1], vec![1]]));
        assert!(boundary_matrix(&SimplicialComplex::full_simplex(2), 2).is_err());
    }

    #[test]
    fn boundary_squares_to_zero() {
        for (n, k) in [(6, 3), (7, 4), (5, 2), (8, 5)] {
            let c = nerve_nk(n, k);
            for d in 1..=c.dim() as usize {
                let a = boundary_matrix(&c, d - 1).unwrap();
                let b = boundary_matrix(&c, d).unwrap();
                assert!(a.mul(&b).is_zero(), "n={n} k={k} d={d}");
            }
        }
    }

    #[test]
    fn n63_boundary_shape() {
        let c = nerve_nk(6, 3);
        let m = boundary_matrix(&c, 3).unwrap();
        assert_eq!(m.cols(), 6);
        assert_eq!(m.rows(), c.faces(2).len());
        // Every triple except {0, 2, 4} and {1, 3, 5} fits in a window of four.
        assert_eq!(m.rows(), 18);
    }

    #[test]
    fn known_homology() {
        let h = reduced_homology(&nerve_nk(6, 3), Caps::default()).unwrap();
        assert_eq!(h.concentrated(), Some((2, 2)));
        let h = reduced_homology(&clique_nk(9, 3), Caps::default()).unwrap();
        assert_eq!(h.concentrated(), Some((2, 2)));
        let h = reduced_homology(&nerve_nk(5, 3), Caps::default()).unwrap();
        assert_eq!(h.concentrated(), Some((3, 1)));
        let h = reduced_homology(&SimplicialComplex::full_simplex(5), Caps::default()).unwrap();
        assert!(h.is_trivial());
        let h = reduced_homology(&nerve_nk(4, 0), Caps::default()).unwrap();
        assert_eq!(h.concentrated(), Some((0, 3)));
    }

    #[test]
    fn torsion_in_projective_plane() {
        // Six-vertex triangulation of RP^2.
        let tris: [[usize; 3]; 10] = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let k = SimplicialComplex::from_simplices(
            6,
            tris.iter()
                .map(|t| Simplex::new(t.iter().copied()).unwrap()),
        )
        .unwrap();
        let h = reduced_homology(&k, Caps::default()).unwrap();
        assert_eq!(h.get(1).torsion, vec![big(2)]);
        assert_eq!(h.get(1).betti, 0);
        assert_eq!(h.get(2), HomologyGroup::default());
        assert!(HomologyBasis::new(&k, 1, Caps::default())
            .unwrap()
            .coordinates(&Chain::zero(1))
            .is_err());
    }

    #[test]
    fn euler_characteristic_matches_betti() {
        for n in 2..=9 {
            for k in 0..n {
                let c = nerve_nk(n, k);
                let h = reduced_homology(&c, Caps::new(12, 9)).unwrap();
                let reduced_chi: i64 = h
                    .groups
                    .iter()
                    .enumerate()
                    .map(|(d, g)| {
                        if d % 2 == 0 {
                            g.betti as i64
                        } else {
                            -(g.betti as i64)
                        }
                    })
                    .sum();
                assert_eq!(c.euler_characteristic() - 1, reduced_chi, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let big_simplex = SimplicialComplex::full_simplex(13);
        assert!(matches!(
            reduced_homology(&big_simplex, Caps::default()),
            Err(Error::CapsExceeded {
                what: "vertex count",
                ..
            })
        ));
        assert!(matches!(
            reduced_homology(&SimplicialComplex::full_simplex(10), Caps::default()),
            Err(Error::CapsExceeded {
                what: "dimension",
                ..
            })
        ));
        assert!(reduced_homology(&SimplicialComplex::full_simplex(10), Caps::new(12, 9)).is_ok());
    }

    #[test]
    fn pairing_and_orientation() {
        let mut z = Chain::zero(2);
        z.add_oriented(&[0, 1, 2], 1).unwrap();
        let mut c = Cochain::zero(2);
        c.add_oriented(&[0, 1, 2], 1).unwrap();
        assert_eq!(pair(&c, &z).unwrap(), big(1));
        let mut rev = Cochain::zero(2);
        rev.add_oriented(&[1, 0, 2], 1).unwrap();
        assert_eq!(pair(&rev, &z).unwrap(), big(-1));
        assert!(pair(&Cochain::zero(1), &z).is_err());
        assert!(z.add_oriented(&[0, 1], 1).is_err());
        assert!(z.add_oriented(&[0, 1, 1], 1).is_err());
    }

    #[test]
    fn cycles_boundaries_and_generators() {
        let bd = SimplicialComplex::simplex_boundary(3);
        let g = generator_of_top_homology(&bd, 1, Caps::default()).unwrap();
        let standard =
            Chain::from_oriented(1, &[(&[0, 1], 1), (&[1, 2], 1), (&[2, 0], 1)]).unwrap();
        assert!(g == standard || g == standard.neg());
        assert!(g.boundary().unwrap().is_zero());
        assert!(!is_boundary(&bd, &standard).unwrap());
        let full = SimplicialComplex::full_simplex(3);
        assert!(is_boundary(&full, &standard).unwrap());
        assert!(generator_of_top_homology(&full, 1, Caps::default()).is_err());

        let mut c = Cochain::zero(1);
        c.add_oriented(&[0, 1], 1).unwrap();
        assert!(is_cocycle(&bd, &c).unwrap());
        assert!(!is_cocycle(&full, &c).unwrap());
        assert!(coboundary(&full, &coboundary(&full, &Cochain::zero(0))).is_zero());
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let k = nerve_nk(7, 4);
        for d in 0..4 {
            for s in k.faces(d).into_iter().take(5) {
                let mut c = Cochain::zero(d);
                c.add_oriented(s.vertices(), 3).unwrap();
                let dd = coboundary(&k, &coboundary(&k, &c));
                assert!(dd.is_zero());
            }
        }
    }

    #[test]
    fn identity_induces_identity() {
        for (n, k) in [(6, 3), (7, 4), (8, 4), (5, 1)] {
            let c = nerve_nk(n, k);
            let (d, rank) = reduced_homology(&c, Caps::default())
                .unwrap()
                .concentrated()
                .unwrap();
            let id: Vec<usize> = (0..n).collect();
            let m = induced_map_on_homology(&c, &c, &id, d, Caps::default()).unwrap();
            assert_eq!(m, IntMatrix::identity(rank));
        }
    }

    #[test]
    fn non_simplicial_map_is_rejected() {
        let c = nerve_nk(6, 1);
        let squash = vec![0, 2, 4, 0, 2, 4];
        assert!(matches!(
            induced_map_on_homology(&c, &c, &squash, 1, Caps::default()),
            Err(Error::NotSimplicial(_))
        ));
    }
}
