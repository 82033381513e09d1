//! Singularity budgets, the capacity `ℰ` they can hide and the reserve `Δ`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profile::AnnulusProfile;

/// Lower bound imposed on each `extν_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtNuFloor {
    /// `extν_i ≥ 2m_i − 3`.
    #[default]
    Standard,
    /// `extν_i ≥ 1`, for sensitivity runs.
    Relaxed,
}

impl ExtNuFloor {
    pub fn of(self, m: u32) -> u64 {
        match self {
            ExtNuFloor::Standard => (2 * m as u64).saturating_sub(3).max(1),
            ExtNuFloor::Relaxed => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SingularityBudget {
    pub m: Vec<u32>,
    pub extnu: Vec<u64>,
    pub nu0: u64,
    #[serde(rename = "nuInf")]
    pub nu_inf: u64,
    #[serde(rename = "nuTan")]
    pub nu_tan: u64,
}

impl SingularityBudget {
    /// `ν_0 + ν_∞ + ν_tan`.
    pub fn nu_at_infinity(&self) -> u64 {
        self.nu0 + self.nu_inf + self.nu_tan
    }

    pub fn codimension_total(&self) -> u64 {
        self.extnu.iter().sum::<u64>() + self.nu_at_infinity()
    }
}

/// Integer lower bound for `Σ η_i` given the multiplicities: each double
/// point contributes at least 5/6, each higher cusp strictly more than 1/2.
pub fn eta_deduction(ms: &[u32]) -> u64 {
    let sixths: u64 = ms.iter().map(|&m| if m == 2 { 5 } else { 3 }).sum();
    if ms.iter().any(|&m| m >= 3) {
        sixths / 6 + 1
    } else {
        sixths.div_ceil(6)
    }
}

/// Integer cap on `Σ extν_i + ν_inf`; negative when no budget fits.
pub fn codimension_cap(profile: &AnnulusProfile, ms: &[u32]) -> Result<i64> {
    Ok(profile.s_bound()? - eta_deduction(ms) as i64)
}

pub fn validate(profile: &AnnulusProfile, b: &SingularityBudget, floor: ExtNuFloor) -> Result<()> {
    let invalid = |rule: &'static str, detail: String| Err(Error::InvalidBudget { rule, detail });
    if b.m.len() != b.extnu.len() {
        return Err(Error::DimensionMismatch {
            expected: b.m.len(),
            got: b.extnu.len(),
        });
    }
    for (&m, &e) in b.m.iter().zip(&b.extnu) {
        if m < 2 {
            return invalid("multiplicity", format!("m = {m} is not a singular point"));
        }
        if e < floor.of(m) {
            return invalid("stratum floor", format!("extnu = {e} below {} for m = {m}", floor.of(m)));
        }
    }
    let drop: i64 = b.m.iter().map(|&m| m as i64 - 1).sum();
    if drop > profile.multiplicity_cap() {
        return invalid(
            "multiplicity drop",
            format!("sum of (m_i - 1) = {drop} exceeds {}", profile.multiplicity_cap()),
        );
    }
    if !profile.is_proportional() && b.nu_tan != 0 {
        return invalid("tangency", "nuTan must vanish when ps != rq".into());
    }
    if profile.p_gcd() == 1 && b.nu_inf != 0 {
        return invalid("quasi-homogeneity", "nuInf must vanish when gcd(p,q) = 1".into());
    }
    if profile.r_gcd() == 1 && b.nu0 != 0 {
        return invalid("quasi-homogeneity", "nu0 must vanish when gcd(r,s) = 1".into());
    }
    let cap = codimension_cap(profile, &b.m)?;
    if b.codimension_total() as i64 > cap {
        return invalid(
            "codimension cap",
            format!("codimension total {} exceeds cap {cap}", b.codimension_total()),
        );
    }
    Ok(())
}

/// Capacity `ℰ` of a budget, without validation.
pub fn capacity_unchecked(profile: &AnnulusProfile, b: &SingularityBudget) -> i64 {
    let finite: i64 = b
        .m
        .iter()
        .zip(&b.extnu)
        .map(|(&m, &e)| m as i64 * (e as i64 - m as i64 + 2))
        .sum();
    let (pg, rg) = (profile.p_gcd(), profile.r_gcd());
    let infinite = if profile.is_proportional() {
        (pg + rg) * (b.nu_at_infinity() as i64 + 1)
    } else {
        pg * b.nu_inf as i64 + rg * b.nu0 as i64
    };
    finite + infinite
}

pub fn hidden_capacity(profile: &AnnulusProfile, b: &SingularityBudget, floor: ExtNuFloor) -> Result<i64> {
    validate(profile, b, floor)?;
    Ok(capacity_unchecked(profile, b))
}

/// `Δ = 2δ_max − ℰ`.
pub fn reserve(profile: &AnnulusProfile, b: &SingularityBudget, floor: ExtNuFloor) -> Result<i64> {
    Ok(profile.two_delta_max() - hidden_capacity(profile, b, floor)?)
}
