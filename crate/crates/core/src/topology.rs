//! Topology of a cuspidal branch, described by its characteristic pairs.
//!
//! A branch is written as `x = τ^m`, `y = Σ c_i τ^i`, with `m` the
//! multiplicity. Only the vanishing pattern of the `c_i` matters, and that
//! pattern is fixed by the characteristic pairs `(m_j, n_j)`: the j-th
//! characteristic term sits at τ-index `e_j = n_j · m / (m_1 ⋯ m_j)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::resolution;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BranchTopology {
    pairs: Vec<(u32, u32)>,
    /// Integer exponent of the first (inessential) term, when the expansion
    /// starts with one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    leading_exponent: Option<u32>,
}

/// Role of a single coefficient `c_i` in the stratum of a branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// Its presence would change the topology; vanishes on the stratum.
    VanishingEssential,
    /// A characteristic coefficient; nonzero on the stratum.
    Characteristic,
    Inessential,
}

impl BranchTopology {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        Self::validate(BranchTopology {
            pairs,
            leading_exponent: None,
        })
    }

    /// A smooth branch (no characteristic pairs).
    pub fn smooth() -> Self {
        BranchTopology {
            pairs: Vec::new(),
            leading_exponent: None,
        }
    }

    pub fn with_leading_exponent(mut self, n0: u32) -> Result<Self> {
        self.leading_exponent = Some(n0);
        Self::validate(self)
    }

    pub fn validate(topology: BranchTopology) -> Result<BranchTopology> {
        for (j, &(m, n)) in topology.pairs.iter().enumerate() {
            if m < 2 {
                return Err(Error::DegeneratePair { m, n });
            }
            if n < 1 || m.gcd(&n) != 1 {
                return Err(Error::NonCoprimePair { m, n });
            }
            if j == 0 {
                // x = τ^m must realize the multiplicity, so the first
                // characteristic exponent n_1/m_1 exceeds 1.
                if n <= m {
                    return Err(Error::NonIncreasingExponents {
                        index: 0,
                        detail: format!("first exponent {n}/{m} must exceed 1"),
                    });
                }
            } else {
                let prev = topology.pairs[j - 1].1 as u64;
                if (n as u64) <= prev * m as u64 {
                    return Err(Error::NonIncreasingExponents {
                        index: j,
                        detail: format!("need n_{} = {n} > {prev}·{m}", j + 1),
                    });
                }
            }
        }
        if let Some(n0) = topology.leading_exponent {
            if n0 < 1 {
                return Err(Error::NonIncreasingExponents {
                    index: 0,
                    detail: "leading exponent must be positive".into(),
                });
            }
            if let Some(&(m1, n1)) = topology.pairs.first() {
                if (n0 as u64) * (m1 as u64) >= n1 as u64 {
                    return Err(Error::NonIncreasingExponents {
                        index: 0,
                        detail: format!("leading exponent {n0} must precede {n1}/{m1}"),
                    });
                }
            }
        }
        Ok(topology)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn leading_exponent(&self) -> Option<u32> {
        self.leading_exponent
    }

    pub fn genus(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_smooth(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Total multiplicity `m = m_1 ⋯ m_g` (1 for a smooth branch).
    pub fn multiplicity(&self) -> u64 {
        self.pairs.iter().map(|&(m, _)| m as u64).product()
    }

    /// τ-indices `e_1 < … < e_g` of the characteristic terms.
    pub fn characteristic_indices(&self) -> Vec<u64> {
        let m = self.multiplicity();
        let mut partial = 1u64;
        self.pairs
            .iter()
            .map(|&(mj, nj)| {
                partial *= mj as u64;
                nj as u64 * (m / partial)
            })
            .collect()
    }

    /// gcd of `m, e_1, …, e_j`, for j = 0..=g.
    pub fn index_gcds(&self) -> Vec<u64> {
        let m = self.multiplicity();
        let mut partial = 1u64;
        let mut out = vec![m];
        for &(mj, _) in &self.pairs {
            partial *= mj as u64;
            out.push(m / partial);
        }
        out
    }

    /// Characteristic exponents as powers of `x`.
    pub fn characteristic_exponents(&self) -> Vec<Rational> {
        let m = self.multiplicity() as i64;
        self.characteristic_indices()
            .into_iter()
            .map(|e| rational::ratio(e as i64, m))
            .collect()
    }

    /// Classifies the coefficient `c_i`, i ≥ 1.
    pub fn quantity(&self, i: u64) -> Quantity {
        let indices = self.characteristic_indices();
        let gcds = self.index_gcds();
        if indices.contains(&i) {
            return Quantity::Characteristic;
        }
        let stage = indices.iter().take_while(|&&e| e < i).count();
        if i.is_multiple_of(gcds[stage]) {
            Quantity::Inessential
        } else {
            Quantity::VanishingEssential
        }
    }

    /// Number of vanishing essential Puiseux quantities, ν.
    pub fn y_codimension(&self) -> Result<u64> {
        if self.is_smooth() {
            return Err(Error::SmoothBranch);
        }
        let indices = self.characteristic_indices();
        let gcds = self.index_gcds();
        let mut nu = 0;
        let mut lower = 0u64;
        for (j, &e) in indices.iter().enumerate() {
            nu += (lower + 1..e).filter(|i| i % gcds[j] != 0).count() as u64;
            lower = e;
        }
        Ok(nu)
    }

    /// ext ν = ν + m − 2.
    pub fn external_codimension(&self) -> Result<u64> {
        Ok(self.y_codimension()? + self.multiplicity() - 2)
    }

    /// δ = Σ μ_p(μ_p − 1)/2 over the infinitely near points.
    pub fn delta_invariant(&self) -> u64 {
        resolution::multiplicity_sequence(self)
            .iter()
            .map(|&mu| mu * (mu - 1) / 2)
            .sum()
    }

    pub fn milnor_number(&self) -> u64 {
        2 * self.delta_invariant()
    }
}

impl fmt::Display for BranchTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(m, n)| format!("{m},{n}")).collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// Parses `"m1,n1;m2,n2;..."`. The empty string is the smooth branch.
impl FromStr for BranchTopology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(BranchTopology::smooth());
        }
        let bad = || Error::ParsePairs(s.to_string());
        let pairs = s
            .split(';')
            .map(|chunk| {
                let (m, n) = chunk.split_once(',').ok_or_else(bad)?;
                let m = m.trim().parse::<u32>().map_err(|_| bad())?;
                let n = n.trim().parse::<u32>().map_err(|_| bad())?;
                Ok((m, n))
            })
            .collect::<Result<Vec<_>>>()?;
        BranchTopology::new(pairs)
    }
}

/// `(⌈m/n⌉ − m/n) + (⌈n/m⌉ − n/m)`, a lower bound for the excess of a branch
/// whose first characteristic pair is `(m, n)`.
pub fn excess_floor(m: u32, n: u32) -> Result<Rational> {
    if m < 2 || n < 2 {
        return Err(Error::DegeneratePair { m, n });
    }
    if m.gcd(&n) != 1 {
        return Err(Error::NonCoprimePair { m, n });
    }
    let a = rational::ratio(m as i64, n as i64);
    let b = rational::ratio(n as i64, m as i64);
    Ok((a.ceil() - &a) + (b.ceil() - &b))
}
