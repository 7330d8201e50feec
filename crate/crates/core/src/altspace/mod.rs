//! Alternating matrix spaces `𝒜 ≤ Λ(n, F_q)` and their connectivity numbers.

mod construct;
mod decompose;
mod degree;
mod fullconn;
mod kappa;
mod lambda;
mod space;

pub use construct::{
    block_split, full_block_space, kappa_gt_lambda_from, kappa_gt_lambda_instance, random_invertible, random_isometry,
    random_isometry_image, random_space,
};
pub use decompose::{
    is_orth_decomposable, is_orth_decomposable_naive, is_orth_witness, LambdaWitnessJson, OrthWitness,
};
pub use degree::{degree_vector, delta_space, delta_space_with_witness};
pub use fullconn::{
    companion, field_ext_full_space, is_fully_connected, is_irreducible, least_irreducible, FieldExtSpace,
    GeneralMatrixSpace,
};
pub use kappa::{kappa_space, KappaResult, KappaWitnessJson};
pub use lambda::{cut_dim, lambda_space, lambda_space_naive, lambda_space_oracle, LambdaResult};
pub use space::{elementary, AltMatrixSpace, SpaceJson};

pub(crate) use decompose::decomposable_mats;
pub(crate) use kappa::{kappa_of_mats, restrict_mats};
pub(crate) use space::parse_matrices;
