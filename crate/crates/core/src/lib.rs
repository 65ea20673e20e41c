//! Exact computations around the restriction maps of `BPU(n)` cohomology:
//! graded-commutative algebras over F_p and Z, the symmetric-function
//! derivation `nabla` and the `d_3` differential it determines, Steenrod and
//! Milnor operations on presented algebras, `SL_2(F_p)` invariants, and the
//! restriction computations built from them.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod error;
pub mod galgebra;
pub mod invariants;
pub mod linalg;
pub mod ring;
pub mod spectral;
pub mod steenrod;
pub mod symfun;
pub mod topology;
pub mod verdict;

pub use error::AlgebraError;
pub use galgebra::{make_algebra, Algebra, Element, GeneratorSpec, Monomial, Parity};
pub use ring::{CoeffRing, Integers, PrimeField};
pub use verdict::{Detail, Status, VerdictReport};
