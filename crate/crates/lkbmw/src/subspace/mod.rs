//! Invariant subspaces of the Lawrence-Krammer space: the printed spanning
//! vectors, the kernel-intersection subspace `K(n)`, the reducibility
//! decision, indecomposability evidence, and parameter scans.

mod checks;
mod endo;
mod kspace;
mod rules;
mod scan;
mod vectors;

pub use checks::{
    check_family_on_vectors, check_prop3, check_thm4, check_thm5, check_thm5_n4_u,
};
pub use endo::{equivariant_endomorphisms, has_invariant_complement, restriction_matrix};
pub use kspace::{compute_k, decide_reducible, one_dim_invariant_exists, ReducibilityVerdict};
pub use rules::{annihilated_by_all_cij, cij_rules_check, membership_checks};
pub use scan::{
    conjugate_exceptional_l_values, exceptional_l_values, hecke_equivalence_witness,
    k5_trace_profile_check, scan_conjugate, scan_main_theorem,
};
pub use vectors::{
    prop3_vectors, thm4_n3_vectors, thm4_vector, thm5_u_vectors, thm5_vectors, NamedVector,
};
