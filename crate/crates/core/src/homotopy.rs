//! Closed-form homotopy types of `N(n, k)` and its clique complex.

use std::fmt;

use crate::circle::ArcCollection;
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::homology::{reduced_homology, Caps, HomologyGroups};
use crate::reduce::{reduce_to_minimal, ReductionResult};

/// A point, or a wedge of `count >= 1` spheres of dimension `dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomotopyType {
    Contractible,
    Wedge { dim: usize, count: usize },
}

impl HomotopyType {
    /// A wedge of `count` spheres; no spheres at all is a point.
    pub fn wedge(dim: usize, count: usize) -> Self {
        if count == 0 {
            HomotopyType::Contractible
        } else {
            HomotopyType::Wedge { dim, count }
        }
    }

    pub fn sphere(dim: usize) -> Self {
        HomotopyType::Wedge { dim, count: 1 }
    }

    /// Unreduced double suspension.
    pub fn double_suspension(self) -> Self {
        match self {
            HomotopyType::Contractible => HomotopyType::Contractible,
            HomotopyType::Wedge { dim, count } => HomotopyType::Wedge {
                dim: dim + 2,
                count,
            },
        }
    }

    /// The reduced homology this type must have: `Z^count` in degree `dim`.
    pub fn matches_homology(&self, h: &HomologyGroups) -> bool {
        match self {
            HomotopyType::Contractible => h.is_trivial(),
            HomotopyType::Wedge { dim, count } => h.concentrated() == Some((*dim, *count)),
        }
    }

    /// The type a wedge of spheres with this homology would have, if the
    /// homology is free and concentrated in one degree.
    pub fn from_homology(h: &HomologyGroups) -> Option<Self> {
        if h.is_trivial() {
            return Some(HomotopyType::Contractible);
        }
        h.concentrated()
            .map(|(dim, count)| HomotopyType::Wedge { dim, count })
    }
}

impl fmt::Display for HomotopyType {
    /// `*`, `S^d` or `vee^c S^d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomotopyType::Contractible => write!(f, "*"),
            HomotopyType::Wedge { dim, count: 1 } => write!(f, "S^{dim}"),
            HomotopyType::Wedge { dim, count } => write!(f, "vee^{count} S^{dim}"),
        }
    }
}

/// `m` parts out of `n - m` decide the type: `k = l*m` gives a wedge of
/// `count` even spheres, anything strictly between gives one odd sphere.
fn classify(k: usize, m: usize, count: usize) -> HomotopyType {
    let l = k / m;
    if k.is_multiple_of(m) {
        HomotopyType::wedge(2 * l, count)
    } else {
        HomotopyType::sphere(2 * l + 1)
    }
}

/// Homotopy type of the nerve complex `N(n, k)`.
pub fn nerve_homotopy(n: usize, k: usize) -> HomotopyType {
    assert!(n >= 1, "N(n, k) needs n >= 1");
    if k + 1 >= n {
        return HomotopyType::Contractible;
    }
    let m = n - k;
    classify(k, m, n - k - 1)
}

/// Homotopy type of the clique complex of the `k`-th power of the `n`-cycle.
pub fn clique_homotopy(n: usize, k: usize) -> HomotopyType {
    assert!(n >= 1, "clique complex needs n >= 1");
    if 2 * k >= n {
        return HomotopyType::Contractible;
    }
    let m = n - 2 * k;
    classify(k, m, n - 2 * k - 1)
}

/// `N(n, k)` computed from the small cases and `N(n, k) ≃ Σ² N(k, 2k - n)`.
pub fn nerve_homotopy_by_recursion(n: usize, k: usize) -> HomotopyType {
    assert!(n >= 1, "N(n, k) needs n >= 1");
    if k + 1 >= n {
        HomotopyType::Contractible
    } else if k == 0 {
        HomotopyType::wedge(0, n - 1)
    } else if 2 * k < n {
        HomotopyType::sphere(1)
    } else {
        nerve_homotopy_by_recursion(k, 2 * k - n).double_suspension()
    }
}

/// The largest `c` with the space `c`-connected; `None` means contractible
/// (connected in every degree). A wedge of `d`-spheres is `(d-1)`-connected,
/// so a disconnected space reports `-1`.
pub fn connectivity(h: HomotopyType) -> Option<isize> {
    match h {
        HomotopyType::Contractible => None,
        HomotopyType::Wedge { dim, .. } => Some(dim as isize - 1),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Nerve,
    Clique,
}

/// Homotopy type of the nerve (or clique complex) of an arbitrary
/// collection, via its reduction.
pub fn collection_homotopy(
    collection: &ArcCollection,
    variant: Variant,
) -> Result<(HomotopyType, ReductionResult)> {
    let r = reduce_to_minimal(collection)?;
    let h = match variant {
        Variant::Nerve => nerve_homotopy(r.n_prime, r.k_prime),
        Variant::Clique => clique_homotopy(r.n_prime, r.k_prime),
    };
    Ok((h, r))
}

/// Oracle classification: the wedge type matching the homology of `k`, if
/// the homology is that of a wedge of equidimensional spheres.
pub fn homotopy_from_oracle(k: &SimplicialComplex, caps: Caps) -> Result<Option<HomotopyType>> {
    Ok(HomotopyType::from_homology(&reduced_homology(k, caps)?))
}
