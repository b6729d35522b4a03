//! Homotopy types of nerve and clique complexes of circular arcs.
//!
//! The [`reduce`] module shrinks any finite collection of closed arcs to a
//! minimal subcollection whose nerve is some `N(n, k)`, and [`homotopy`] names
//! the homotopy type of `N(n, k)` and of its clique complex in closed form.
//! The remaining modules are an exact integer homology oracle and the
//! explicit generators, symmetries and maps used to check those formulas.

pub mod circle;
pub mod complex;
pub mod error;
pub mod graphs;
pub mod homology;
pub mod homotopy;
pub mod maps;
pub mod polytope;
pub mod reduce;

pub use circle::{Angle, Arc, ArcCollection, EndpointKind, EventKey, Rational};
pub use complex::{Simplex, SimplicialComplex};
pub use error::{Error, Result};
pub use homology::{Caps, Chain, Cochain, HomologyGroups};
pub use homotopy::{HomotopyType, Variant};
pub use maps::{DihedralElement, VertexMap};
pub use reduce::{LemmaCase, ReductionResult};
