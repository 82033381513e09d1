//! Exact maximization of the capacity over admissible budgets.
//!
//! For a fixed multiplicity vector the capacity is linear in the remaining
//! variables and there is a single budget constraint, so all slack above the
//! floors goes to one variable with the largest coefficient.

use serde::{Deserialize, Serialize};

use crate::budget::{self, ExtNuFloor, SingularityBudget};
use crate::error::{Error, Result};
use crate::profile::AnnulusProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimizerOptions {
    pub n_points: usize,
    pub floor: ExtNuFloor,
}

impl Default for OptimizerOptions {
    fn default() -> Self {
        OptimizerOptions {
            n_points: 4,
            floor: ExtNuFloor::Standard,
        }
    }
}

/// Non-increasing vectors of `n` multiplicities `≥ 2` with
/// `Σ(m_i − 1) ≤ cap`, in lexicographic order.
pub fn multiplicity_vectors(cap: i64, n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, left: i64, max: u32, n: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let still = (n - prefix.len() - 1) as i64;
        let hi = (left - still + 1).min(max as i64);
        for m in 2..=hi {
            prefix.push(m as u32);
            go(prefix, left - (m - 1), m as u32, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if cap >= n as i64 {
        go(&mut Vec::with_capacity(n), cap, u32::MAX, n, &mut out);
    }
    out.sort();
    out
}

/// Slack variables in tie-break order, with their capacity coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Tangency,
    Infinity,
    Zero,
    Finite(usize),
}

fn slots(profile: &AnnulusProfile, ms: &[u32]) -> Vec<(Slot, i64)> {
    let (pg, rg) = (profile.p_gcd(), profile.r_gcd());
    let mut out = Vec::new();
    if profile.is_proportional() {
        out.push((Slot::Tangency, pg + rg));
        if pg > 1 {
            out.push((Slot::Infinity, pg + rg));
        }
        if rg > 1 {
            out.push((Slot::Zero, pg + rg));
        }
    } else {
        if pg > 1 {
            out.push((Slot::Infinity, pg));
        }
        if rg > 1 {
            out.push((Slot::Zero, rg));
        }
    }
    out.extend(ms.iter().enumerate().map(|(i, &m)| (Slot::Finite(i), m as i64)));
    out
}

/// Best budget for a fixed multiplicity vector, or `None` when even the
/// floors exceed the codimension cap.
pub fn best_for_multiplicities(
    profile: &AnnulusProfile,
    ms: &[u32],
    floor: ExtNuFloor,
) -> Result<Option<(i64, SingularityBudget)>> {
    let cap = budget::codimension_cap(profile, ms)?;
    let floors: Vec<u64> = ms.iter().map(|&m| floor.of(m)).collect();
    let slack = cap - floors.iter().sum::<u64>() as i64;
    if slack < 0 {
        return Ok(None);
    }
    let mut b = SingularityBudget {
        m: ms.to_vec(),
        extnu: floors,
        nu0: 0,
        nu_inf: 0,
        nu_tan: 0,
    };
    let mut best: Option<(Slot, i64)> = None;
    for (slot, coef) in slots(profile, ms) {
        if best.is_none_or(|(_, c)| coef > c) {
            best = Some((slot, coef));
        }
    }
    let slack = slack as u64;
    match best.map(|(s, _)| s) {
        Some(Slot::Tangency) => b.nu_tan = slack,
        Some(Slot::Infinity) => b.nu_inf = slack,
        Some(Slot::Zero) => b.nu0 = slack,
        Some(Slot::Finite(i)) => b.extnu[i] += slack,
        None => {}
    }
    Ok(Some((budget::capacity_unchecked(profile, &b), b)))
}

/// Maximal capacity over all admissible budgets with a witness attaining it.
pub fn max_hidden_capacity(profile: &AnnulusProfile, options: OptimizerOptions) -> Result<(i64, SingularityBudget)> {
    let mut best: Option<(i64, SingularityBudget)> = None;
    for ms in multiplicity_vectors(profile.multiplicity_cap(), options.n_points) {
        if let Some((cap, b)) = best_for_multiplicities(profile, &ms, options.floor)? {
            if best.as_ref().is_none_or(|(c, _)| cap > *c) {
                best = Some((cap, b));
            }
        }
    }
    best.ok_or(Error::Infeasible)
}

/// Every admissible budget whose capacity reaches `threshold`. Multiplicities
/// are non-increasing and `extν` is non-increasing within runs of equal
/// multiplicity, so each unordered configuration appears once.
pub fn budgets_reaching(
    profile: &AnnulusProfile,
    options: OptimizerOptions,
    threshold: i64,
) -> Result<Vec<SingularityBudget>> {
    let mut out = Vec::new();
    for ms in multiplicity_vectors(profile.multiplicity_cap(), options.n_points) {
        let Some((best, _)) = best_for_multiplicities(profile, &ms, options.floor)? else {
            continue;
        };
        if best < threshold {
            continue;
        }
        let cap = budget::codimension_cap(profile, &ms)? as u64;
        let slot_list = slots(profile, &ms);
        let mut values = vec![0u64; slot_list.len()];
        collect(profile, &ms, options.floor, &slot_list, 0, cap, &mut values, threshold, &mut out);
    }
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn collect(
    profile: &AnnulusProfile,
    ms: &[u32],
    floor: ExtNuFloor,
    slot_list: &[(Slot, i64)],
    k: usize,
    left: u64,
    values: &mut Vec<u64>,
    threshold: i64,
    out: &mut Vec<SingularityBudget>,
) {
    if k == slot_list.len() {
        let mut b = SingularityBudget {
            m: ms.to_vec(),
            extnu: vec![0; ms.len()],
            nu0: 0,
            nu_inf: 0,
            nu_tan: 0,
        };
        for (&(slot, _), &v) in slot_list.iter().zip(values.iter()) {
            match slot {
                Slot::Tangency => b.nu_tan = v,
                Slot::Infinity => b.nu_inf = v,
                Slot::Zero => b.nu0 = v,
                Slot::Finite(i) => b.extnu[i] = v,
            }
        }
        if budget::capacity_unchecked(profile, &b) >= threshold {
            out.push(b);
        }
        return;
    }
    let (lo, mut hi) = match slot_list[k].0 {
        Slot::Finite(i) => (floor.of(ms[i]), left),
        _ => (0, left),
    };
    if let Slot::Finite(i) = slot_list[k].0 {
        if i > 0 && ms[i] == ms[i - 1] {
            hi = hi.min(values[k - 1]);
        }
    }
    // the remaining finite slots still need their floors
    let reserved: u64 = slot_list[k + 1..]
        .iter()
        .filter_map(|&(s, _)| match s {
            Slot::Finite(i) => Some(floor.of(ms[i])),
            _ => None,
        })
        .sum();
    for v in lo..=hi {
        if v + reserved > left {
            break;
        }
        values[k] = v;
        collect(profile, ms, floor, slot_list, k + 1, left - v, values, threshold, out);
    }
}
