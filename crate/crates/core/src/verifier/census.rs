use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::ExtNuFloor;
use crate::error::Result;
use crate::profile::AnnulusProfile;
use crate::verifier::certificate::{verify_profile, Certificate, Verdict};
use crate::verifier::enumerate::{enumerate_with, NormalForm};
use crate::verifier::optimizer::OptimizerOptions;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusOptions {
    pub max_exponent: i64,
    pub workers: usize,
    pub n_points: usize,
    pub floor: ExtNuFloor,
    pub normal_form: NormalForm,
}

impl CensusOptions {
    pub fn new(max_exponent: i64) -> Self {
        CensusOptions {
            max_exponent,
            workers: 1,
            n_points: 4,
            floor: ExtNuFloor::Standard,
            normal_form: NormalForm::Reduced,
        }
    }

    pub fn optimizer(&self) -> OptimizerOptions {
        OptimizerOptions {
            n_points: self.n_points,
            floor: self.floor,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub max_exponent: i64,
    pub n_points: usize,
    pub extnu_floor: ExtNuFloor,
    pub normal_form: NormalForm,
    pub profiles: usize,
    pub verdicts: BTreeMap<Verdict, usize>,
    pub boundary_profiles: Vec<AnnulusProfile>,
    pub rejected: BTreeMap<String, u64>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub certificates: Vec<Certificate>,
    pub summary: CensusSummary,
}

/// Certifies `profiles` on a pool of `workers` threads; the result is sorted
/// by profile whatever the pool size.
pub fn certify_all(profiles: &[AnnulusProfile], options: OptimizerOptions, workers: usize) -> Result<Vec<Certificate>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let mut certs = pool.install(|| {
        profiles
            .par_iter()
            .map(|p| verify_profile(p, options))
            .collect::<Result<Vec<_>>>()
    })?;
    certs.sort_by_key(|c| c.profile);
    Ok(certs)
}

pub fn summarize(
    options: &CensusOptions,
    certificates: &[Certificate],
    rejected: BTreeMap<String, u64>,
) -> CensusSummary {
    let mut verdicts = BTreeMap::new();
    for c in certificates {
        *verdicts.entry(c.verdict).or_insert(0) += 1;
    }
    let boundary_profiles = certificates
        .iter()
        .filter(|c| c.verdict == Verdict::BoundaryExcluded)
        .map(|c| c.profile)
        .collect();
    CensusSummary {
        max_exponent: options.max_exponent,
        n_points: options.n_points,
        extnu_floor: options.floor,
        normal_form: options.normal_form,
        profiles: certificates.len(),
        pass: !verdicts.contains_key(&Verdict::Counterexample),
        verdicts,
        boundary_profiles,
        rejected,
    }
}

pub fn run_census(options: &CensusOptions) -> Result<CensusReport> {
    let enumeration = enumerate_with(options.max_exponent, options.n_points, options.normal_form);
    let certificates = certify_all(&enumeration.profiles, options.optimizer(), options.workers)?;
    let summary = summarize(options, &certificates, enumeration.rejected);
    Ok(CensusReport { certificates, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census_passes() {
        let report = run_census(&CensusOptions::new(4)).unwrap();
        assert!(report.summary.pass);
        assert_eq!(
            report.summary.boundary_profiles,
            vec![AnnulusProfile::new(2, 3, 2, 3).unwrap()]
        );
    }

    #[test]
    fn worker_count_does_not_matter() {
        let one = run_census(&CensusOptions::new(5)).unwrap();
        let many = run_census(&CensusOptions {
            workers: 4,
            ..CensusOptions::new(5)
        })
        .unwrap();
        assert_eq!(one, many);
    }
}
