//! Accretive transforms `C_{M,m}(A) = (MI − A*)(A − mI)`, certified
//! numerical radius enclosures, `(m, M)` window search and a catalog of
//! checkers for operator and numerical-radius inequalities.

pub mod catalog;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod numrad;
pub mod transform;
pub mod verdict;
pub mod window;

pub use error::{Error, Result};
pub use linalg::{HermitianMatrix, Matrix, Tolerance, C64};
pub use verdict::{Relation, Status, Verdict};
