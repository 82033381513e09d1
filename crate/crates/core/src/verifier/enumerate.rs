use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::profile::AnnulusProfile;

/// Which profiles count as normal forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalForm {
    /// The representative is handsome.
    Literal,
    /// Every image of the orbit is handsome and none admits a lowering move.
    #[default]
    Reduced,
}

/// Profiles kept for certification and the reasons the others were dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub profiles: Vec<AnnulusProfile>,
    pub rejected: BTreeMap<String, u64>,
}

/// Why a raw exponent tuple is not certified on its own.
pub fn rejection_reason(profile: &AnnulusProfile, n_points: usize, form: NormalForm) -> Option<String> {
    let (canonical, _) = match profile.canonical() {
        Ok(c) => c,
        Err(_) => return Some("unclassifiable orbit".into()),
    };
    if canonical != *profile {
        return Some("non-canonical".into());
    }
    if !profile.is_handsome().unwrap_or(false) {
        return Some("ugly orbit".into());
    }
    if form == NormalForm::Reduced && !profile.is_reduced() {
        let ugly = profile.orbit().iter().any(|x| x.is_handsome() == Ok(false));
        return Some(if ugly { "ugly orientation" } else { "lowering move" }.into());
    }
    if profile.multiplicity_cap() < n_points as i64 {
        return Some("too few multiplicity drops".into());
    }
    None
}

/// Canonical handsome profiles with every exponent bounded by `max_exp` in
/// absolute value, in lexicographic order.
pub fn enumerate_profiles(max_exp: i64, n_points: usize) -> Enumeration {
    enumerate_with(max_exp, n_points, NormalForm::Reduced)
}

pub fn enumerate_with(max_exp: i64, n_points: usize, form: NormalForm) -> Enumeration {
    let mut out = Enumeration::default();
    for p in 1..=max_exp {
        for q in -max_exp..=max_exp {
            for r in -max_exp..=max_exp {
                for s in 1..=max_exp {
                    let profile = AnnulusProfile { p, q, r, s };
                    match rejection_reason(&profile, n_points, form) {
                        None => out.profiles.push(profile),
                        Some(reason) => *out.rejected.entry(reason).or_default() += 1,
                    }
                }
            }
        }
    }
    out
}
