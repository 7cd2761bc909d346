//! addax-core: exact symbolic computations with Artinian local algebras,
//! H-pairs, and projective hypersurfaces carrying induced additive actions.
//!
//! The crate builds local algebras from quotient presentations or structure
//! constants, pairs them with generating subspaces of the maximal ideal,
//! derives the hypersurface equation and degree, decides when the action
//! has finitely many orbits, and analyses geometry (orbit poset, fixed
//! points, nondegeneracy, smoothness, normality, the second action on
//! degenerate hypersurfaces, and limit points of one-parameter subgroups).
//!
//! Everything runs over exact rationals; there is no floating point
//! anywhere in the computational path.

pub mod algebra;
pub mod corpus;
pub mod exec;
pub mod groebner;
pub mod hpair;
pub mod linalg;
pub mod orbits;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod verify;

pub use algebra::{Classification, Element, LocalAlgebra, QElement, SymElement};
pub use exec::ExecMode;
pub use hpair::{HPair, HypersurfaceEquation};
pub use linalg::{Matrix, Subspace};
pub use poly::{Monomial, Poly, VarSet};
pub use rat::Rat;
