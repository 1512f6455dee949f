//! Exact computations for the partition algebra `P_k`, its spherical
//! subalgebra `e_k P_k e_k`, and the combinatorics indexing their
//! representations.
//!
//! Everything is computed over arbitrary-precision integers and rationals.

pub mod bipartite;
pub mod combinat;
pub mod diagram;
pub mod error;
mod json;
pub mod partition;
pub mod rep;
pub mod schur_weyl;

pub use bipartite::{BiPartition, GGForm};
pub use diagram::{AlgebraElement, RationalPolynomial, SetPartition2k};
pub use error::{Error, Result};
pub use partition::{Composition, Partition, Permutation};
