//! Exact construction, verification and classification of the regular
//! convex polytopes in every dimension.
//!
//! Everything is computed over ℚ(√5) with arbitrary-precision rationals; no
//! floating point enters any decision. The crate builds the three generic
//! families (simplices, hypercubes, cross-polytopes) by the recursive
//! pyramid/prism/bipyramid constructions, the icosahedron and dodecahedron
//! from exact golden-ratio coordinates, the 24-cell from the hypercube ∪
//! cross-polytope vertex union, and the 600-cell from the binary icosahedral
//! group of unit quaternions, with the 120-cell as its dual. Face lattices
//! are validated (gradedness, diamond condition), symbols are recovered from
//! incidence with a flag-independence check, and symmetry group orders are
//! counted as flag extensions.
//!
//! The `polyforge` binary exposes all of it; see the README for the
//! commands.

pub mod algebras;
pub mod cli;
pub mod constructors;
pub mod exactnum;
pub mod lattice;
pub mod schlafli;
pub mod symmetry;

pub use constructors::{Geometry, NamedPolytope, PolytopeName};
pub use exactnum::{QuadExt, Rational};
pub use lattice::{FVector, Face, FaceLattice};
pub use schlafli::{SchlafliSymbol, SymbolClass};
