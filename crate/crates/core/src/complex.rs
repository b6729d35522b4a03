//! Finite abstract simplicial complexes stored by their maximal simplices,
//! and the nerve / clique constructions over arc collections.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::circle::{balls, Angle, ArcCollection, Rational};
use crate::error::{Error, Result};

/// A nonempty, strictly increasing list of vertex labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Sorts and deduplicates `vertices`.
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(Simplex(v))
    }

    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    /// Vertices shared with `other`, or `None` when disjoint.
    pub fn intersect(&self, other: &Simplex) -> Option<Simplex> {
        let v: Vec<usize> = self
            .0
            .iter()
            .copied()
            .filter(|x| other.contains(*x))
            .collect();
        (!v.is_empty()).then_some(Simplex(v))
    }

    /// The face obtained by deleting the vertex at `position`.
    pub fn without_position(&self, position: usize) -> Option<Simplex> {
        let mut v = self.0.clone();
        v.remove(position);
        (!v.is_empty()).then_some(Simplex(v))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

fn is_sorted_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// A simplicial complex given by its inclusion-maximal simplices.
///
/// Vertex labels are below `vertex_count`; the vertex set is the union of the
/// maximal simplices, so isolated vertices appear as singletons.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    maximal: Vec<Simplex>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertex_count", &self.vertex_count)
            .field("maximal", &self.maximal)
            .finish()
    }
}

impl SimplicialComplex {
    /// Builds a complex from any generating family of simplices; non-maximal
    /// members are dropped.
    pub fn from_simplices<I>(vertex_count: usize, simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut all: Vec<Simplex> = simplices.into_iter().collect();
        for s in &all {
            if let Some(&v) = s.vertices().iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    count: vertex_count,
                });
            }
        }
        all.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut maximal: Vec<Simplex> = Vec::new();
        for s in all {
            if !maximal.iter().any(|m| s.is_face_of(m)) {
                maximal.push(s);
            }
        }
        maximal.sort_unstable();
        Ok(SimplicialComplex {
            vertex_count,
            maximal,
        })
    }

    /// The complex with no simplices at all.
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            maximal: Vec::new(),
        }
    }

    pub fn full_simplex(n: usize) -> Self {
        if n == 0 {
            return Self::void(0);
        }
        SimplicialComplex {
            vertex_count: n,
            maximal: vec![Simplex((0..n).collect())],
        }
    }

    /// Boundary of the `(n-1)`-simplex on vertices `0..n`.
    pub fn simplex_boundary(n: usize) -> Self {
        let maximal = (0..n)
            .filter_map(|skip| {
                let v: Vec<usize> = (0..n).filter(|&x| x != skip).collect();
                (!v.is_empty()).then_some(Simplex(v))
            })
            .collect::<Vec<_>>();
        let mut maximal = maximal;
        maximal.sort_unstable();
        SimplicialComplex {
            vertex_count: n,
            maximal,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn maximal_simplices(&self) -> &[Simplex] {
        &self.maximal
    }

    /// Vertices that occur in some simplex, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .maximal
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .collect();
        set.into_iter().collect()
    }

    /// Dimension, `-1` for the void complex.
    pub fn dim(&self) -> isize {
        self.maximal
            .iter()
            .map(|s| s.dim() as isize)
            .max()
            .unwrap_or(-1)
    }

    pub fn contains(&self, vertices: &[usize]) -> bool {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        v.dedup();
        self.maximal
            .iter()
            .any(|m| is_sorted_subset(&v, m.vertices()))
    }

    pub fn contains_simplex(&self, s: &Simplex) -> bool {
        self.maximal.iter().any(|m| s.is_face_of(m))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count || !self.maximal.iter().any(|m| m.contains(v)) {
            return Err(Error::InvalidVertex {
                vertex: v,
                count: self.vertex_count,
            });
        }
        Ok(())
    }

    /// All `d`-dimensional faces, sorted lexicographically.
    pub fn faces(&self, d: usize) -> Vec<Simplex> {
        let mut out = BTreeSet::new();
        for m in &self.maximal {
            if m.len() > d {
                for_each_subset(m.vertices(), d + 1, &mut |s| {
                    out.insert(Simplex(s.to_vec()));
                });
            }
        }
        out.into_iter().collect()
    }

    /// Number of faces in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim().max(-1))
            .map(|d| self.faces(d as usize).len())
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// `lk(v) = {σ : v ∉ σ, σ ∪ {v} ∈ K}`.
    pub fn link(&self, v: usize) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let parts = self
            .maximal
            .iter()
            .filter(|m| m.contains(v))
            .filter_map(|m| m.without_position(m.vertices().binary_search(&v).unwrap()));
        SimplicialComplex::from_simplices(self.vertex_count, parts)
    }

    /// The induced subcomplex `K[subset]`.
    pub fn induced(&self, subset: &[usize]) -> Result<SimplicialComplex> {
        if let Some(&v) = subset.iter().find(|&&v| v >= self.vertex_count) {
            return Err(Error::InvalidVertex {
                vertex: v,
                count: self.vertex_count,
            });
        }
        let keep = Simplex::new(subset.iter().copied())?;
        let parts = self.maximal.iter().filter_map(|m| m.intersect(&keep));
        SimplicialComplex::from_simplices(self.vertex_count, parts)
    }

    /// The subcomplex of simplices lying in both `self` and `other`.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let count = self.vertex_count.max(other.vertex_count);
        let parts = self
            .maximal
            .iter()
            .flat_map(|a| other.maximal.iter().filter_map(move |b| a.intersect(b)));
        SimplicialComplex::from_simplices(count, parts).expect("labels already valid")
    }

    /// Sorted edge list of the 1-skeleton.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces(1)
            .into_iter()
            .map(|s| (s.vertices()[0], s.vertices()[1]))
            .collect()
    }

    /// Smallest `w ≠ v` such that every simplex containing `v` stays a simplex
    /// after adding `w`, i.e. the link of `v` is a cone with apex `w`.
    pub fn dominated_vertex(&self, v: usize) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        let mut containing = self.maximal.iter().filter(|m| m.contains(v));
        let first = containing.next().expect("checked vertex");
        let mut common: Vec<usize> = first.vertices().to_vec();
        for m in containing {
            common.retain(|x| m.contains(*x));
        }
        Ok(common.into_iter().find(|&w| w != v))
    }

    /// Applies a relabeling of vertices; the result lives on `new_count` labels.
    pub fn relabel(&self, map: &[usize], new_count: usize) -> Result<SimplicialComplex> {
        let parts = self
            .maximal
            .iter()
            .map(|m| Simplex::new(m.vertices().iter().map(|&v| map[v])))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_simplices(new_count, parts)
    }

    /// Detects whether the complex is isomorphic to some `N(n, k)`.
    ///
    /// The full simplex on `n` vertices is reported as `(n, n - 1)`.
    pub fn isomorphic_to_nk(&self) -> Option<(usize, usize)> {
        self.nk_labeling().map(|(n, k, _)| (n, k))
    }

    /// Like [`isomorphic_to_nk`](Self::isomorphic_to_nk), also returning the
    /// vertices listed in cyclic order.
    pub fn nk_labeling(&self) -> Option<(usize, usize, Vec<usize>)> {
        let verts = self.vertices();
        let n = verts.len();
        if n == 0 {
            return None;
        }
        if self.maximal.len() == 1 {
            return (self.maximal[0].len() == n).then(|| (n, n - 1, verts));
        }
        let size = self.maximal[0].len();
        if self.maximal.len() != n || self.maximal.iter().any(|m| m.len() != size) {
            return None;
        }
        let k = size - 1;
        let order: Vec<usize> = if k == 0 {
            verts.clone()
        } else if k == n - 2 {
            // Boundary of a simplex: every cyclic order works.
            verts.clone()
        } else {
            // For 1 <= k <= n - 3 only cyclically adjacent maximal simplices
            // share k vertices, so they form a single n-cycle.
            let shares = |a: &Simplex, b: &Simplex| {
                a.vertices().iter().filter(|&&x| b.contains(x)).count() == k
            };
            let mut walk = vec![0usize];
            let mut prev = usize::MAX;
            loop {
                let cur = *walk.last().unwrap();
                let next = (0..n).find(|&j| {
                    j != cur && j != prev && shares(&self.maximal[cur], &self.maximal[j])
                })?;
                if next == 0 {
                    break;
                }
                if walk.contains(&next) {
                    return None;
                }
                prev = cur;
                walk.push(next);
            }
            if walk.len() != n {
                return None;
            }
            // The vertex leaving between consecutive simplices gets the next label.
            let mut order = Vec::with_capacity(n);
            for j in 0..n {
                let a = &self.maximal[walk[j]];
                let b = &self.maximal[walk[(j + 1) % n]];
                let left: Vec<usize> = a
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|&x| !b.contains(x))
                    .collect();
                if left.len() != 1 {
                    return None;
                }
                order.push(left[0]);
            }
            order
        };
        let mut label = vec![usize::MAX; self.vertex_count];
        for (i, &v) in order.iter().enumerate() {
            if label[v] != usize::MAX {
                return None;
            }
            label[v] = i;
        }
        let relabeled = self.relabel(&label, n).ok()?;
        (relabeled == nerve_nk(n, k)).then_some((n, k, order))
    }
}

fn for_each_subset(items: &[usize], size: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &[usize], size: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        let need = size - cur.len();
        for i in 0..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            rec(&items[i + 1..], size, cur, f);
            cur.pop();
        }
    }
    rec(items, size, &mut Vec::with_capacity(size), f);
}

/// Nerve of an arc collection.
///
/// Every nonempty intersection contains the start of one of its arcs, so the
/// sets `S_i = {j : U_j ∋ start(U_i)}` generate the nerve.
pub fn nerve(collection: &ArcCollection) -> SimplicialComplex {
    let n = collection.len();
    let parts = collection.iter().map(|a| {
        let p = a.start();
        Simplex::from_sorted(
            collection
                .iter()
                .enumerate()
                .filter(|(_, b)| b.contains(p))
                .map(|(j, _)| j)
                .collect(),
        )
    });
    SimplicialComplex::from_simplices(n, parts).expect("labels below n")
}

/// `Cl(K^(1))`: maximal simplices are the maximal cliques of the 1-skeleton.
pub fn clique_complex(k: &SimplicialComplex) -> SimplicialComplex {
    let n = k.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (a, b) in k.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let cliques = maximal_cliques(&k.vertices(), &adj);
    SimplicialComplex::from_simplices(n, cliques.into_iter().map(Simplex::from_sorted))
        .expect("labels below n")
}

/// Bron–Kerbosch with pivoting. `adj` lists are symmetric.
fn maximal_cliques(vertices: &[usize], adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn bk(
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        adj: &[Vec<usize>],
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|v| adj[u].contains(v)).count())
            .unwrap();
        let candidates: Vec<usize> = p
            .iter()
            .copied()
            .filter(|v| !adj[pivot].contains(v))
            .collect();
        let mut p = p;
        let mut x = x;
        for v in candidates {
            let np = p.iter().copied().filter(|u| adj[v].contains(u)).collect();
            let nx = x.iter().copied().filter(|u| adj[v].contains(u)).collect();
            r.push(v);
            bk(r, np, nx, adj, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    bk(
        &mut Vec::new(),
        vertices.to_vec(),
        Vec::new(),
        adj,
        &mut out,
    );
    out
}

/// `N(n, k)`: maximal simplices are the discrete arcs `[i, i + k]_n`; the full
/// simplex once `k >= n - 1`.
pub fn nerve_nk(n: usize, k: usize) -> SimplicialComplex {
    if n == 0 {
        return SimplicialComplex::void(0);
    }
    if k + 1 >= n {
        return SimplicialComplex::full_simplex(n);
    }
    let parts = (0..n).map(|i| Simplex::from_sorted(discrete_arc(n, i, k)));
    SimplicialComplex::from_simplices(n, parts).expect("labels below n")
}

/// Sorted vertex set of `[start, start + k]_n`.
pub fn discrete_arc(n: usize, start: usize, k: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..=k.min(n - 1)).map(|j| (start + j) % n).collect();
    v.sort_unstable();
    v
}

/// `N̄(n, k)`, the clique complex of the `k`-th distance power of the n-cycle;
/// the full simplex once `k >= ⌊n/2⌋`.
pub fn clique_nk(n: usize, k: usize) -> SimplicialComplex {
    if n == 0 {
        return SimplicialComplex::void(0);
    }
    if k >= n / 2 {
        return SimplicialComplex::full_simplex(n);
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (1..=k)
                .flat_map(|d| [(i + d) % n, (i + n - d) % n])
                .collect()
        })
        .collect();
    let verts: Vec<usize> = (0..n).collect();
    let cliques = maximal_cliques(&verts, &adj);
    SimplicialComplex::from_simplices(n, cliques.into_iter().map(Simplex::from_sorted))
        .expect("labels below n")
}

/// Ambient Čech complex: nerve of the closed balls of radius `r`.
pub fn cech(points: &[Angle], r: &Rational) -> Result<SimplicialComplex> {
    Ok(nerve(&balls(points, r)?))
}

/// Vietoris–Rips complex: simplices have all pairwise distances `<= r`.
pub fn vr(points: &[Angle], r: &Rational) -> Result<SimplicialComplex> {
    if r < &Rational::zero() {
        return Err(Error::Negative {
            what: "radius",
            value: crate::circle::format_rational(r),
        });
    }
    let half = r / BigInt::from(2);
    Ok(clique_complex(&nerve(&balls(points, &half)?)))
}
