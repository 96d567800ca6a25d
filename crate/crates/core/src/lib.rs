//! Realizes arbitrary subgroup intersection configurations inside direct
//! powers of the wreath product `Z wr Z`, and verifies the result with a
//! complete finite-generation test for the constraint subgroups involved.
//!
//! An `n`-configuration assigns 0 or 1 to every nonempty `I ⊆ [n]`. The
//! [`realize()`] pipeline splits a configuration into atoms (a single 1
//! each), realizes every atom with a chain of equalities closed by a twist
//! `g_n = f(g_1)`, and places the atoms in separate blocks of `G^{k·n}`.
//! Each intersection is decided by [`analyze()`], which reduces a gain graph of
//! conjugation constraints to centralizers of holonomy elements.
//!
//! ```
//! use configforge::{realize, verify, Configuration, Subset};
//!
//! // 0 on {1} and {2}, 1 on {1,2}: two f.g. subgroups with a non-f.g. intersection.
//! let howson = Configuration::atom(2, "1,2".parse::<Subset>()?)?;
//! let cert = realize(&howson)?;
//! assert_eq!(cert.ambient_m, 2);
//! assert!(verify(&cert)?);
//! # Ok::<(), configforge::Error>(())
//! ```

pub mod cli;
pub mod config;
mod error;
pub mod realize;
pub mod subgroup;
pub mod wreath;

pub use config::{enumerate_configurations, Configuration, Subset, MAX_N};
pub use error::{Error, Result};
pub use realize::{
    fixed_subgroup, psi_embed, realize, realize_atom, verify, PermutationalAut,
    RealizationCertificate,
};
pub use subgroup::{analyze, nonfg_witness, sample, Classification, Edge, SubgroupSpec};
pub use wreath::{
    apply_aut, classify_centralizer, cyclic_centralizer_generator, free_abelian_membership,
    CentralizerClass, ConjugationAut, WreathElement,
};
