//! Exact-arithmetic combinatorics and geometry of gallery varieties for
//! GL(n): the Demazure product suite, standard and w0-standard tableaux,
//! positroid column sets, and rank certificates over the rationals.

pub mod column;
pub mod coxeter;
pub mod error;
pub mod geometry;
pub mod perm;
pub mod positroid;
pub mod tableaux;
pub mod word;

pub use column::Column;
pub use error::{Error, Result};
pub use perm::Permutation;
pub use word::{SubwordIndexSet, Word};
