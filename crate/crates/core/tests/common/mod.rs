#![allow(dead_code)]

use annulus_core::budget::{self, ExtNuFloor, SingularityBudget};
use annulus_core::{AnnulusProfile, BranchTopology};

/// Number of gaps of the numerical semigroup generated by coprime `m`, `n`.
pub fn semigroup_gaps(m: u64, n: u64) -> u64 {
    let conductor = (m - 1) * (n - 1);
    (0..conductor)
        .filter(|&k| !(0..=k / n).any(|j| (k - j * n).is_multiple_of(m)))
        .count() as u64
}

pub fn single_pairs(max: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for m in 2..=max {
        for n in m + 1..=max {
            if gcd(m, n) == 1 {
                out.push((m, n));
            }
        }
    }
    out
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Single pairs `2 ≤ m < n ≤ 12` and three two-pair strata.
pub fn corpus() -> Vec<BranchTopology> {
    let mut out: Vec<BranchTopology> = single_pairs(12)
        .into_iter()
        .map(|p| BranchTopology::new(vec![p]).unwrap())
        .collect();
    for pairs in [vec![(2, 3), (2, 11)], vec![(2, 5), (2, 11)], vec![(2, 3), (3, 10)]] {
        out.push(BranchTopology::new(pairs).unwrap());
    }
    out
}

/// Every non-increasing multiplicity vector of length `n` with entries ≥ 2
/// whose total drop fits under `cap`.
fn multiplicity_vectors(cap: i64, n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, left: i64, n: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let top = prefix.last().copied().unwrap_or(u32::MAX);
        let mut m = 2u32;
        while m <= top && (m as i64 - 1) <= left {
            prefix.push(m);
            go(prefix, left - (m as i64 - 1), n, out);
            prefix.pop();
            m += 1;
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), cap, n, &mut out);
    out
}

/// One budget slot: admissible values `lo..=hi` and capacity per unit.
struct Slot {
    lo: i64,
    hi: i64,
    gain: i64,
}

/// Exact maximum of `Σ gain·value` subject to `Σ value ≤ cap`, by
/// multiple-choice knapsack over the slots. Returns the chosen values.
fn knapsack(slots: &[Slot], cap: i64) -> Option<(i64, Vec<i64>)> {
    if cap < 0 {
        return None;
    }
    let width = cap as usize + 1;
    const NONE: i64 = i64::MIN;
    let mut best = vec![NONE; width];
    best[0] = 0;
    let mut choice: Vec<Vec<i64>> = Vec::new();
    for slot in slots {
        let mut next = vec![NONE; width];
        let mut pick = vec![0i64; width];
        for (used, &base) in best.iter().enumerate() {
            if base == NONE {
                continue;
            }
            for v in slot.lo..=slot.hi {
                let total = used as i64 + v;
                if total > cap {
                    break;
                }
                let value = base + slot.gain * v;
                if value > next[total as usize] {
                    next[total as usize] = value;
                    pick[total as usize] = v;
                }
            }
        }
        choice.push(pick);
        best = next;
    }
    let (used, &value) = best.iter().enumerate().filter(|(_, v)| **v != NONE).max_by_key(|(_, v)| **v)?;
    let mut values = vec![0; slots.len()];
    let mut at = used as i64;
    for k in (0..slots.len()).rev() {
        let v = choice[k][at as usize];
        values[k] = v;
        at -= v;
    }
    Some((value, values))
}

/// Maximum hidden capacity over all admissible budgets, found by exhaustive
/// search over multiplicities and a knapsack over the codimensions. The
/// capacity is `Σ m_i(extν_i − m_i + 2)` plus the contribution at infinity.
pub fn exhaustive_max_capacity(profile: &AnnulusProfile, n_points: usize, floor: ExtNuFloor) -> Option<(i64, SingularityBudget)> {
    let s = profile.s_bound().ok()?;
    let (pg, rg) = (profile.p_gcd(), profile.r_gcd());
    let proportional = profile.p * profile.s == profile.r * profile.q;
    let mut best: Option<(i64, SingularityBudget)> = None;
    for ms in multiplicity_vectors(profile.multiplicity_cap(), n_points) {
        let sixths: i64 = ms.iter().map(|&m| if m == 2 { 5 } else { 3 }).sum();
        let eta = if ms.iter().any(|&m| m >= 3) { sixths / 6 + 1 } else { (sixths + 5) / 6 };
        let cap = s - eta;
        let mut slots: Vec<Slot> = ms
            .iter()
            .map(|&m| Slot {
                lo: match floor {
                    ExtNuFloor::Standard => (2 * m as i64 - 3).max(1),
                    ExtNuFloor::Relaxed => 1,
                },
                hi: cap,
                gain: m as i64,
            })
            .collect();
        let infinite_gain = |g: i64| if proportional { pg + rg } else { g };
        // ν_0, ν_∞, ν_tan
        slots.push(Slot { lo: 0, hi: if rg > 1 { cap } else { 0 }, gain: infinite_gain(rg) });
        slots.push(Slot { lo: 0, hi: if pg > 1 { cap } else { 0 }, gain: infinite_gain(pg) });
        slots.push(Slot { lo: 0, hi: if proportional { cap } else { 0 }, gain: pg + rg });
        let Some((gain, values)) = knapsack(&slots, cap) else { continue };
        let constant: i64 = ms.iter().map(|&m| -(m as i64) * (m as i64 - 2)).sum::<i64>()
            + if proportional { pg + rg } else { 0 };
        let total = gain + constant;
        let n = ms.len();
        let candidate = SingularityBudget {
            m: ms.clone(),
            extnu: values[..n].iter().map(|&v| v as u64).collect(),
            nu0: values[n] as u64,
            nu_inf: values[n + 1] as u64,
            nu_tan: values[n + 2] as u64,
        };
        if best.as_ref().is_none_or(|(b, _)| total > *b) {
            best = Some((total, candidate));
        }
    }
    best
}

/// Checks a budget found by the exhaustive search against the library's own
/// validation and capacity.
pub fn library_agrees(profile: &AnnulusProfile, b: &SingularityBudget, value: i64, floor: ExtNuFloor) -> bool {
    budget::hidden_capacity(profile, b, floor) == Ok(value)
}
