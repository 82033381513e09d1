//! Arithmetic exclusion of the proportional profile with `p+r = 4`,
//! `q+s = 6`, where the optimal reserve is exactly zero.
//!
//! Every budget reaching `ℰ = 2δ_max` is turned into concrete local data:
//! each finite double-point cusp of codimension `k` is the `(2, 2k+1)`
//! branch with `δ = k`, and the two smooth branches at infinity share
//! `ν_tan` coefficients beyond their common order of tangency, so their
//! intersection index is the `δ` at infinity. The totals must miss the
//! genus count `(d−1)(d−2)/2` of a rational curve of degree `d`.

use serde::{Deserialize, Serialize};

use crate::contact::BranchPairContact;
use crate::error::{Error, Result};
use crate::profile::{AnnulusProfile, TypeTag};
use crate::rational;
use crate::topology::BranchTopology;
use crate::verifier::optimizer::{budgets_reaching, OptimizerOptions};
use crate::budget::SingularityBudget;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessAudit {
    pub budget: SingularityBudget,
    pub finite_delta: u64,
    pub infinity_delta: u64,
    pub total_delta: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryAudit {
    pub degree: u64,
    pub genus_count: u64,
    pub witnesses: Vec<WitnessAudit>,
    /// `ν_tan` of the witness with every `extν_i = 1`.
    pub forced_tangency: Option<u64>,
    /// Intersection index at infinity for that witness.
    pub infinity_intersection_index: Option<u64>,
    pub passes: bool,
}

/// Whether the profile belongs to the boundary family.
pub fn is_boundary_family(profile: &AnnulusProfile) -> bool {
    profile.classify() == Ok(TypeTag::PlusPlus)
        && profile.is_proportional()
        && profile.p + profile.r == 4
        && profile.q + profile.s == 6
}

pub fn boundary_audit(profile: &AnnulusProfile, options: OptimizerOptions) -> Result<BoundaryAudit> {
    if !is_boundary_family(profile) {
        return Err(Error::IncompatibleContact(format!("{profile} is outside the boundary family")));
    }
    // in u = x/y, w = 1/y both ends are smooth exactly when q − p = s − r = 1
    if profile.q - profile.p != 1 || profile.s - profile.r != 1 {
        return Err(Error::IncompatibleContact(format!("branches of {profile} at infinity are singular")));
    }
    let degree = (profile.p + profile.r).max(profile.q + profile.s) as u64;
    let genus_count = (degree - 1) * (degree - 2) / 2;
    let lead = profile.q as u32;
    let end = BranchTopology::smooth().with_leading_exponent(lead)?;

    let mut witnesses = Vec::new();
    let mut passes = true;
    let mut forced_tangency = None;
    let mut infinity_intersection_index = None;
    for budget in budgets_reaching(profile, options, profile.two_delta_max())? {
        let mut finite_delta = 0;
        for (&m, &k) in budget.m.iter().zip(&budget.extnu) {
            if m != 2 {
                passes = false;
                continue;
            }
            let cusp = BranchTopology::new(vec![(2, 2 * k as u32 + 1)])?;
            finite_delta += cusp.delta_invariant();
        }
        if budget.nu0 != 0 || budget.nu_inf != 0 {
            passes = false;
        }
        let kappa = rational::int(lead as i64 + budget.nu_tan as i64);
        let contact = BranchPairContact::new(end.clone(), end.clone(), Some(kappa))?;
        debug_assert_eq!(contact.tangency_codimension(), budget.nu_tan);
        let infinity_delta = contact.intersection_index();
        let total_delta = finite_delta + infinity_delta;
        if total_delta == genus_count {
            passes = false;
        }
        if budget.extnu.iter().all(|&e| e == 1) {
            forced_tangency = Some(budget.nu_tan);
            infinity_intersection_index = Some(infinity_delta);
        }
        witnesses.push(WitnessAudit {
            budget,
            finite_delta,
            infinity_delta,
            total_delta,
        });
    }
    Ok(BoundaryAudit {
        degree,
        genus_count,
        witnesses,
        forced_tangency,
        infinity_intersection_index,
        passes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_profile() {
        let x = AnnulusProfile::new(2, 3, 2, 3).unwrap();
        let audit = boundary_audit(&x, OptimizerOptions::default()).unwrap();
        assert_eq!(audit.degree, 6);
        assert_eq!(audit.genus_count, 10);
        assert_eq!(audit.forced_tangency, Some(2));
        assert_eq!(audit.infinity_intersection_index, Some(5));
        assert!(audit.witnesses.iter().all(|w| w.total_delta == 9));
        assert!(audit.passes);
    }

    #[test]
    fn outside_family() {
        let x = AnnulusProfile::new(1, 3, 3, 4).unwrap();
        assert!(!is_boundary_family(&x));
        assert!(boundary_audit(&x, OptimizerOptions::default()).is_err());
    }
}
