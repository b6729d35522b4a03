//! Circular complete graphs `K_{n/d}` and the topological lower bound on
//! their chromatic number.

use std::collections::BTreeSet;

use crate::circle::Rational;
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homotopy::{connectivity, nerve_homotopy};

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![BTreeSet::new(); n];
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::InvalidVertex {
                        vertex: v,
                        count: n,
                    });
                }
            }
            if a == b {
                return Err(Error::Precondition(format!("loop at vertex {a}")));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Graph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj.get(a).is_some_and(|s| s.contains(&b))
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.adj[a].range(a + 1..).map(move |&b| (a, b)))
            .collect()
    }
}

/// `K_{n/d}`: vertices `Z/n`, `i ~ j` iff `d <= |i - j| <= n - d`.
pub fn circular_complete(n: usize, d: usize) -> Result<Graph> {
    check(n, d)?;
    let edges = (0..n).flat_map(|i| {
        (i + 1..n)
            .filter(move |j| j - i >= d && j - i <= n - d)
            .map(move |j| (i, j))
    });
    Graph::new(n, edges)
}

fn check(n: usize, d: usize) -> Result<()> {
    if d == 0 || n < 2 * d {
        return Err(Error::Precondition(format!(
            "K_{{n/d}} needs 1 <= d and n >= 2d, got n={n} d={d}"
        )));
    }
    Ok(())
}

/// Simplices are the vertex sets with a common neighbour.
pub fn neighborhood_complex(g: &Graph) -> SimplicialComplex {
    let parts = (0..g.vertex_count())
        .filter(|&v| !g.neighbors(v).is_empty())
        .map(|v| Simplex::new(g.neighbors(v).iter().copied()).expect("nonempty"));
    SimplicialComplex::from_simplices(g.vertex_count(), parts).expect("labels are vertices")
}

/// `χ(K_{n/d}) = ⌈n/d⌉`.
pub fn chi_circular(n: usize, d: usize) -> Result<usize> {
    check(n, d)?;
    Ok(n.div_ceil(d))
}

/// Exact chromatic number by backtracking; meant for small graphs.
pub fn chromatic_number(g: &Graph) -> usize {
    fn colorable(g: &Graph, colors: usize, v: usize, assign: &mut Vec<usize>) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        // Symmetry breaking: a new colour may only be the next unused one.
        let used = assign[..v].iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..colors.min(used + 1) {
            if g.neighbors(v).iter().any(|&u| u < v && assign[u] == c) {
                continue;
            }
            assign[v] = c;
            if colorable(g, colors, v + 1, assign) {
                return true;
            }
        }
        false
    }
    let n = g.vertex_count();
    (0..=n)
        .find(|&c| colorable(g, c, 0, &mut vec![0; n]))
        .unwrap_or(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LovaszReport {
    pub n: usize,
    pub d: usize,
    pub chi: usize,
    /// `conn(N(K_{n/d})) + 3`.
    pub bound: isize,
    pub gap: isize,
    /// `(n / 2d) mod 1`.
    pub fractional_case: Rational,
}

/// Compares `χ(K_{n/d})` with the bound from the connectivity of its
/// neighbourhood complex `N(n, n - 2d)`. The gap is 1 exactly when
/// `d < n mod 2d`.
pub fn lovasz_report(n: usize, d: usize) -> Result<LovaszReport> {
    let chi = chi_circular(n, d)?;
    let h = nerve_homotopy(n, n - 2 * d);
    let conn = connectivity(h).ok_or_else(|| {
        Error::Precondition(format!(
            "N({n}, {}) is unexpectedly contractible",
            n - 2 * d
        ))
    })?;
    let bound = conn + 3;
    let gap = chi as isize - bound;
    let r = n % (2 * d);
    let predicted = if r > d { 1 } else { 0 };
    if gap != predicted {
        return Err(Error::Precondition(format!(
            "gap {gap} at n={n} d={d} disagrees with the residue rule"
        )));
    }
    Ok(LovaszReport {
        n,
        d,
        chi,
        bound,
        gap,
        fractional_case: Rational::new(r.into(), (2 * d).into()),
    })
}
