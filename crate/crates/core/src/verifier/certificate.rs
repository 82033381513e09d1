use serde::{Deserialize, Serialize};

use crate::budget::{self, SingularityBudget};
use crate::error::{Error, Result};
use crate::profile::{AnnulusProfile, TypeTag};
use crate::rational;
use crate::verifier::audit::{boundary_audit, is_boundary_family, BoundaryAudit};
use crate::verifier::optimizer::{max_hidden_capacity, OptimizerOptions};
use crate::verifier::symbolic::symbolic_case_bound;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    Positive,
    BoundaryExcluded,
    VacuouslyExcluded,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub profile: AnnulusProfile,
    #[serde(rename = "type")]
    pub type_tag: TypeTag,
    pub handsome: bool,
    pub orbit_size: usize,
    pub two_delta_max: i64,
    pub s_bound: i64,
    pub eta_deduction: Option<u64>,
    pub max_capacity: Option<i64>,
    pub min_reserve: Option<i64>,
    pub witness: Option<SingularityBudget>,
    /// Weakest closed-form chain, as `"num/den"`.
    pub symbolic_bound: String,
    pub symbolic_case: char,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub audit: Option<BoundaryAudit>,
}

pub fn verify_profile(profile: &AnnulusProfile, options: OptimizerOptions) -> Result<Certificate> {
    let type_tag = profile.classify()?;
    let handsome = profile.is_handsome()?;
    let (_, orbit_size) = profile.canonical()?;
    let symbolic = symbolic_case_bound(profile)?;
    let mut cert = Certificate {
        profile: *profile,
        type_tag,
        handsome,
        orbit_size,
        two_delta_max: profile.two_delta_max(),
        s_bound: profile.s_bound()?,
        eta_deduction: None,
        max_capacity: None,
        min_reserve: None,
        witness: None,
        symbolic_bound: rational::format(&symbolic.bound),
        symbolic_case: symbolic.case,
        verdict: Verdict::VacuouslyExcluded,
        audit: None,
    };
    let (capacity, witness) = match max_hidden_capacity(profile, options) {
        Ok(found) => found,
        Err(Error::Infeasible) => return Ok(cert),
        Err(e) => return Err(e),
    };
    let reserve = cert.two_delta_max - capacity;
    cert.eta_deduction = Some(budget::eta_deduction(&witness.m));
    cert.max_capacity = Some(capacity);
    cert.min_reserve = Some(reserve);
    cert.witness = Some(witness);
    cert.verdict = if reserve > 0 {
        Verdict::Positive
    } else if is_boundary_family(profile) {
        let audit = boundary_audit(profile, options).ok();
        let passes = audit.as_ref().is_some_and(|a| a.passes);
        cert.audit = audit;
        if passes {
            Verdict::BoundaryExcluded
        } else {
            Verdict::Counterexample
        }
    } else {
        Verdict::Counterexample
    };
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verify(p: i64, q: i64, r: i64, s: i64) -> Certificate {
        verify_profile(&AnnulusProfile::new(p, q, r, s).unwrap(), OptimizerOptions::default()).unwrap()
    }

    #[test]
    fn verdicts() {
        let b = verify(2, 3, 2, 3);
        assert_eq!(b.verdict, Verdict::BoundaryExcluded);
        assert_eq!(b.min_reserve, Some(0));
        assert!(b.audit.is_some());

        let p = verify(1, 3, 3, 4);
        assert_eq!(p.verdict, Verdict::Positive);
        assert!(p.min_reserve.unwrap() >= 8);

        let v = verify(1, 2, 1, 3);
        assert_eq!(v.verdict, Verdict::VacuouslyExcluded);
        assert_eq!(v.witness, None);
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(verify(1, 3, 3, 4)).unwrap();
        assert_eq!(v["profile"], serde_json::json!([1, 3, 3, 4]));
        assert_eq!(v["type"], "(+,+)");
        assert_eq!(v["witness"]["nuTan"], 0);
        assert_eq!(v["verdict"], "Positive");
        assert_eq!(v["symbolic_bound"], "2/1");
        assert!(v.get("audit").is_none());
    }
}
