//! Exact invariants of cuspidal plane-curve singularities and a bounded
//! census of singular annuli.

pub mod budget;
pub mod contact;
pub mod error;
pub mod export;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod profile;
pub mod rational;
pub mod resolution;
pub mod topology;
pub mod verifier;

pub use error::{Error, Result};
pub use profile::AnnulusProfile;
pub use rational::Rational;
pub use topology::BranchTopology;
