//! Exact computation of genus-g Tutte polynomials of small matroids, with
//! reconstruction from the Whitney rank generating function, 2-fold
//! intersecting covers of cycles and paths, and linear-code weight enumerators.

pub mod base_graph;
pub mod codes;
pub mod constructions;
pub mod covers;
pub mod graph;
pub mod iso;
pub mod matroid;
pub mod poly;
pub mod reconstruct;
pub mod selfcheck;
pub mod subset;
pub mod tutte;

pub use matroid::{Matroid, MatroidError};
pub use poly::{SparsePoly, VarLayout};
pub use subset::Subset;
