//! Baer groups `P_φ` of exponent `p` and class at most 2, their subgroups and
//! central decompositions.

mod baer;
mod decompose;
mod lattice;
mod subgroup;

pub use baer::{sanity_check, BaerGroup, GroupElement, GroupJson, SanityReport};
pub use decompose::{
    central_decomposition, has_direct_decomposition, is_centrally_decomposable, kappa_group, kappa_group_fast,
    lambda_group, lambda_group_fast, CentralDecomposition, Section,
};
pub use lattice::{literal_kappa_lambda, LatticeReport};
pub use subgroup::{
    center, central_subgroup, commutator_subgroup, deg_element, deg_element_scan, degree_scan, delta_group, is_regular,
    regular_subgroup, SubgroupDescriptor,
};
