//! Combinatorics, cohomology, curvature and fixed point theory of clique
//! complexes, centered on graph complements of cycles and paths.
//!
//! The library is organised around a few core objects:
//!
//! * [`graph::Graph`] — finite simple graphs with bitset adjacency, plus
//!   constructors for the families studied here: complements of cycles
//!   ($G_n$) and paths ($G_n^+$), circulants, dihedral Cayley complements,
//!   Paley graphs, prime graphs and barycentric refinements.
//! * [`complex::Complex`] — finite abstract simplicial complexes (sets of
//!   vertex subsets closed under taking nonempty subsets), most importantly
//!   the Whitney (clique) complex of a graph, with simplices stored as
//!   64-bit masks in a canonical order.
//! * [`poly::RationalPoly`] — exact rational polynomials used for simplex
//!   generating functions $f_G(t) = 1 + \sum_k f_k t^{k+1}$ and the
//!   Jacobsthal-type recursions they satisfy.
//! * [`hodge`] — exterior derivative, Hodge Laplacian $L = (d+d^*)^2$, exact
//!   Betti vectors, harmonic forms and spectra.
//! * [`kirchhoff`] — graph Laplacian, exact characteristic polynomials,
//!   rooted spanning tree/forest counts and spectral zeta values.
//! * [`curvature`] — Levitt curvature, curvature generating functions,
//!   Poincaré–Hopf indices and the renormalised curvature profiles of path
//!   complements.
//! * [`fixedpoint`] — Lefschetz numbers of graph automorphisms, via fixed
//!   simplices and via the induced action on cohomology.
//! * [`wu`] — Wu characteristics (quadratic and higher), Wu cohomology of
//!   the intersecting-pair complex, and connection/counting matrices.
//! * [`homotopy`] — contractibility certificates, homotopy type
//!   classification (point / sphere / wedge of spheres) and discrete
//!   manifold checks.
//!
//! All topological invariants are computed exactly over the rationals (or
//! the integers) unless a function explicitly says otherwise; floating point
//! only enters for eigenvalue listings and numerically checked identities.

pub mod complex;
pub mod curvature;
pub mod error;
pub mod fixedpoint;
pub mod graph;
pub mod hodge;
pub mod homotopy;
pub mod kirchhoff;
pub mod linalg;
pub mod poly;
pub mod wu;

pub use error::{Error, Result};
