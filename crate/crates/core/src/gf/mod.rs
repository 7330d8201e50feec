//! Exact linear algebra over prime fields and canonical subspace enumeration.

mod enumerate;
mod field;
mod matrix;
mod subspace;

pub use enumerate::{
    all_subspaces, enumerate_complements, enumerate_subspaces, gaussian_binomial, ComplementEnumerator,
    SubspaceEnumerator,
};
pub use field::{is_prime, Field, MAX_Q};
pub use matrix::{kernel_slice, rank_capped, rref_slice, Matrix, Rref};
pub use subspace::Subspace;

/// Standard basis vector `e_i` (0-indexed) of length `n`.
pub fn unit_vector(n: usize, i: usize) -> Vec<u8> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}
