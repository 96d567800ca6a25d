//! Constructing and checking realizations of configurations.

mod certificate;
mod permutational;

pub use certificate::{
    join_certificates, realize, realize_atom, twist, verify, verify_detailed, ComponentSummary,
    Mismatch, RealizationCertificate, SubsetReport, Verification, DEFAULT_SAMPLES,
};
pub use permutational::{
    decompose, fixed_subgroup, psi_embed, Orbit, OrbitDecomposition, PermutationalAut,
};
