//! Bounded certification that no handsome annulus profile admits a budget
//! hiding all of its double points.

pub mod audit;
pub mod census;
pub mod certificate;
pub mod enumerate;
pub mod optimizer;
pub mod symbolic;

pub use audit::{boundary_audit, BoundaryAudit};
pub use census::{certify_all, run_census, CensusOptions, CensusReport, CensusSummary};
pub use certificate::{verify_profile, Certificate, Verdict};
pub use enumerate::{enumerate_profiles, enumerate_with, Enumeration, NormalForm};
pub use optimizer::{max_hidden_capacity, OptimizerOptions};
pub use symbolic::{symbolic_case_bound, SymbolicBound};
