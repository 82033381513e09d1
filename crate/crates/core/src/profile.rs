//! Exponent-level model of a Laurent-parametrized annulus
//! `x = t^p + … + a t^{−r}`, `y = t^q + … + b t^{−s}`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeTag {
    #[serde(rename = "(+,+)")]
    PlusPlus,
    #[serde(rename = "(-+,+-)")]
    Crossed,
    #[serde(rename = "(-,+)")]
    MinusPlus,
    #[serde(rename = "(-,-)")]
    MinusMinus,
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeTag::PlusPlus => "(+,+)",
            TypeTag::Crossed => "(-+,+-)",
            TypeTag::MinusPlus => "(-,+)",
            TypeTag::MinusMinus => "(-,-)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[i64; 4]", try_from = "[i64; 4]")]
pub struct AnnulusProfile {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl From<AnnulusProfile> for [i64; 4] {
    fn from(a: AnnulusProfile) -> Self {
        a.as_array()
    }
}

impl TryFrom<[i64; 4]> for AnnulusProfile {
    type Error = Error;
    fn try_from([p, q, r, s]: [i64; 4]) -> Result<Self> {
        AnnulusProfile::new(p, q, r, s)
    }
}

impl fmt::Display for AnnulusProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.p, self.q, self.r, self.s)
    }
}

impl FromStr for AnnulusProfile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<i64> = s
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::ParseProfile(format!("{s:?}: {e}")))?;
        match parts[..] {
            [p, q, r, s] => AnnulusProfile::new(p, q, r, s),
            _ => Err(Error::ParseProfile(format!("{s:?}: expected four integers"))),
        }
    }
}

impl AnnulusProfile {
    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Result<Self> {
        if p <= 0 || s <= 0 {
            return Err(Error::NonPositiveEnds { p, q, r, s });
        }
        Ok(AnnulusProfile { p, q, r, s })
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.p, self.q, self.r, self.s]
    }

    /// gcd of the orders at `t → ∞`.
    pub fn p_gcd(&self) -> i64 {
        self.p.gcd(&self.q)
    }

    /// gcd of the orders at `t → 0`.
    pub fn r_gcd(&self) -> i64 {
        self.r.gcd(&self.s)
    }

    /// `ps − rq`; zero exactly when the two branches at infinity meet.
    pub fn cross(&self) -> i64 {
        self.p * self.s - self.r * self.q
    }

    pub fn is_proportional(&self) -> bool {
        self.cross() == 0
    }

    /// `p − |r|`.
    pub fn k_gap(&self) -> i64 {
        self.p - self.r.abs()
    }

    /// `s − |q|`.
    pub fn l_gap(&self) -> i64 {
        self.s - self.q.abs()
    }

    /// Coordinate swap `x ↔ y`.
    pub fn swap(&self) -> Option<Self> {
        AnnulusProfile::new(self.q, self.p, self.s, self.r).ok()
    }

    /// `t → 1/t`.
    pub fn invert(&self) -> Option<Self> {
        AnnulusProfile::new(self.r, self.s, self.p, self.q).ok()
    }

    /// Both symmetries at once; always valid.
    pub fn mirror(&self) -> Self {
        AnnulusProfile {
            p: self.s,
            q: self.r,
            r: self.q,
            s: self.p,
        }
    }

    /// Distinct images under the symmetry group, including `self`.
    pub fn orbit(&self) -> Vec<AnnulusProfile> {
        let mut out = vec![*self];
        for image in [self.swap(), self.invert(), Some(self.mirror())].into_iter().flatten() {
            if !out.contains(&image) {
                out.push(image);
            }
        }
        out.sort();
        out
    }

    pub fn classify(&self) -> Result<TypeTag> {
        let AnnulusProfile { p, q, r, s } = *self;
        if 0 < p && p < q && 0 < r && r < s && p + r < q + s {
            Ok(TypeTag::PlusPlus)
        } else if 0 < q && q < p && 0 < r && r < s && p + r <= q + s {
            Ok(TypeTag::Crossed)
        } else if r < 0 && q > 0 {
            Ok(TypeTag::MinusPlus)
        } else if r < 0 && q < 0 && p + r <= q + s {
            Ok(TypeTag::MinusMinus)
        } else {
            Err(self.unclassifiable())
        }
    }

    fn unclassifiable(&self) -> Error {
        let AnnulusProfile { p, q, r, s } = *self;
        let reason = if q == 0 || r == 0 {
            "zero exponent"
        } else if p == q {
            "equal orders at infinity"
        } else if r > 0 && r >= s {
            "order at zero not below s"
        } else if r > 0 && q > 0 && p + r > q + s {
            "p+r exceeds q+s"
        } else if r > 0 && q < 0 {
            "sign pattern (+,-)"
        } else {
            "p+r exceeds q+s"
        };
        Error::Unclassifiable { p, q, r, s, reason }
    }

    pub fn is_handsome(&self) -> Result<bool> {
        let AnnulusProfile { p, q, r, s } = *self;
        let ugly = match self.classify()? {
            TypeTag::PlusPlus => q % p == 0 && r < p,
            TypeTag::Crossed => (p % q == 0 && s < q) || (s % r == 0 && p < r),
            TypeTag::MinusPlus => p % q == 0 && s < q,
            TypeTag::MinusMinus => false,
        };
        Ok(!ugly)
    }

    /// Representative of the symmetry orbit: handsome images first, then the
    /// lexicographically smallest. Returns the representative and the orbit
    /// size.
    pub fn canonical(&self) -> Result<(AnnulusProfile, usize)> {
        let orbit = self.orbit();
        let size = orbit.len();
        let best = orbit
            .into_iter()
            .filter_map(|a| a.is_handsome().ok().map(|h| (!h, a)))
            .min()
            .map(|(_, a)| a)
            .ok_or_else(|| self.unclassifiable())?;
        Ok((best, size))
    }

    /// Generic double-point count `2δ_max`.
    pub fn two_delta_max(&self) -> i64 {
        (self.p + self.r - 1) * (self.q + self.s - 1) + self.cross().abs() - self.p_gcd() - self.r_gcd() + 1
    }

    /// `|ps − rq| − p′ − r′ + 1`.
    pub fn det_prime(&self) -> Result<i64> {
        if self.is_proportional() {
            return Err(Error::ProportionalExponents);
        }
        Ok(self.cross().abs() - self.p_gcd() - self.r_gcd() + 1)
    }

    /// Right-hand side of the codimension inequality for the profile's type.
    pub fn s_bound(&self) -> Result<i64> {
        let AnnulusProfile { p, q, r, s } = *self;
        Ok(match self.classify()? {
            TypeTag::PlusPlus => p + r + q + s + 1 - (q / p).min(s / r),
            TypeTag::Crossed => p + r + q + s + 1,
            TypeTag::MinusPlus => p - r.abs() + q + s + 2 + (r.abs() - 1) / s - q / p,
            TypeTag::MinusMinus => p - r.abs() - q.abs() + s + 3 + (r.abs() - 1) / s + (q.abs() - 1) / p,
        })
    }

    /// `min(p+r, q+s)`, the cap on `Σ(m_i − 1)`.
    pub fn multiplicity_cap(&self) -> i64 {
        (self.p + self.r).min(self.q + self.s)
    }

    /// One de Jonquières move removing the ugliness of a classified
    /// representative; `None` when it is handsome.
    fn cremona_move(&self) -> Result<Option<AnnulusProfile>> {
        if self.is_handsome()? {
            return Ok(None);
        }
        let AnnulusProfile { p, q, r, s } = *self;
        let next = match self.classify()? {
            // y → y − x^k
            TypeTag::PlusPlus => AnnulusProfile::new(p, q - 1, r, s.max(q / p * r)),
            TypeTag::Crossed if p % q == 0 && s < q => AnnulusProfile::new(p - 1, q, r.max(p / q * s), s),
            TypeTag::Crossed => AnnulusProfile::new(p, q.max(s / r * p), r, s - 1),
            // x → x − y^k
            TypeTag::MinusPlus => AnnulusProfile::new(p - 1, q, r.max(p / q * s), s),
            TypeTag::MinusMinus => unreachable!("type (-,-) is never ugly"),
        };
        next.map(Some)
    }

    /// Applies symmetries and de Jonquières moves until handsome.
    pub fn normalize_to_handsome(&self) -> Result<AnnulusProfile> {
        const GUARD: usize = 10_000;
        let mut seen = HashSet::new();
        let mut current = *self;
        for _ in 0..GUARD {
            let (rep, _) = current.canonical()?;
            if rep.is_handsome()? {
                return Ok(rep);
            }
            if !seen.insert(rep) {
                return Err(Error::NormalizationDiverged(seen.len()));
            }
            current = rep
                .cremona_move()?
                .expect("canonical representative is ugly here");
        }
        Err(Error::NormalizationDiverged(GUARD))
    }

    /// `y → y − x^k` for `q = kp` when it lowers `q` without raising `s`.
    pub fn lowering_move(&self) -> Option<AnnulusProfile> {
        if self.q > 0 && self.q % self.p == 0 && self.q / self.p * self.r <= self.s {
            AnnulusProfile::new(self.p, self.q - 1, self.r, self.s).ok()
        } else {
            None
        }
    }

    /// No image in the orbit is ugly or admits a lowering move.
    pub fn is_reduced(&self) -> bool {
        self.orbit()
            .iter()
            .all(|x| x.lowering_move().is_none() && x.is_handsome().unwrap_or(true))
    }

    /// Applies lowering moves and de Jonquières moves on any image of the
    /// orbit until the profile is reduced.
    pub fn reduce(&self) -> Result<AnnulusProfile> {
        const GUARD: usize = 10_000;
        let mut seen = HashSet::new();
        let mut current = *self;
        for _ in 0..GUARD {
            if !seen.insert(current) {
                return Err(Error::NormalizationDiverged(seen.len()));
            }
            let orbit = current.orbit();
            if let Some(next) = orbit.iter().find_map(|x| x.lowering_move()) {
                current = next;
                continue;
            }
            if let Some(ugly) = orbit.iter().find(|x| x.is_handsome() == Ok(false)) {
                current = ugly.cremona_move()?.expect("ugly image has a move");
                continue;
            }
            return Ok(current.canonical()?.0);
        }
        Err(Error::NormalizationDiverged(GUARD))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileInvariants {
    pub profile: AnnulusProfile,
    #[serde(rename = "type")]
    pub type_tag: TypeTag,
    pub handsome: bool,
    pub two_delta_max: i64,
    pub det_prime: Option<i64>,
    pub s_bound: i64,
    pub multiplicity_cap: i64,
    pub p_gcd: i64,
    pub r_gcd: i64,
    pub k_gap: i64,
    pub l_gap: i64,
}

impl ProfileInvariants {
    pub fn of(profile: &AnnulusProfile) -> Result<Self> {
        Ok(ProfileInvariants {
            profile: *profile,
            type_tag: profile.classify()?,
            handsome: profile.is_handsome()?,
            two_delta_max: profile.two_delta_max(),
            det_prime: profile.det_prime().ok(),
            s_bound: profile.s_bound()?,
            multiplicity_cap: profile.multiplicity_cap(),
            p_gcd: profile.p_gcd(),
            r_gcd: profile.r_gcd(),
            k_gap: profile.k_gap(),
            l_gap: profile.l_gap(),
        })
    }
}
