//! Counts the double points of sampled Laurent-polynomial curves directly,
//! without any of the combinatorial machinery.

pub mod poly;
pub mod resultant;

use num_traits::{One, Zero};
use rand::rngs::ChaCha8Rng;
use rand::{RngExt, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profile::AnnulusProfile;
use crate::rational::{self, Rational};
use poly::{common_denominator, BiPoly, Poly};

/// Largest admissible bound on the resultant degree.
pub const RESULTANT_DEGREE_CAP: usize = 400;

const COEFFICIENT_BOX: i64 = 9;

/// `x = t^p + a_1 t^(p-1) + … + a_(p+r) t^(-r)`,
/// `y = t^q + b_1 t^(q-1) + … + b_(q+s) t^(-s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CoefficientCurve {
    pub profile: AnnulusProfile,
    #[serde(with = "rational::text_vec")]
    pub x_coeffs: Vec<Rational>,
    #[serde(with = "rational::text_vec")]
    pub y_coeffs: Vec<Rational>,
    pub seed: u64,
}

fn draw(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = (0..len)
        .map(|_| rational::int(rng.random_range(-COEFFICIENT_BOX..=COEFFICIENT_BOX)))
        .collect();
    if let Some(last) = out.last_mut() {
        let magnitude = rng.random_range(1..=COEFFICIENT_BOX);
        let sign = if rng.random_range(0..2) == 0 { 1 } else { -1 };
        *last = rational::int(sign * magnitude);
    }
    out
}

pub fn sample_curve(profile: &AnnulusProfile, seed: u64) -> Result<CoefficientCurve> {
    let (nx, ny) = (profile.p + profile.r, profile.q + profile.s);
    if nx < 1 || ny < 1 {
        return Err(Error::Degenerate(format!(
            "profile {profile} has p+r = {nx}, q+s = {ny}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(CoefficientCurve {
        profile: *profile,
        x_coeffs: draw(&mut rng, nx as usize),
        y_coeffs: draw(&mut rng, ny as usize),
        seed,
    })
}

impl CoefficientCurve {
    /// The same curve after `t -> c t`, renormalised to monic leading terms.
    pub fn rescaled(&self, c: &Rational) -> Self {
        let scale = |coeffs: &[Rational]| -> Vec<Rational> {
            let mut power = Rational::one();
            coeffs
                .iter()
                .map(|a| {
                    power = &power * c;
                    a / &power
                })
                .collect()
        };
        CoefficientCurve {
            x_coeffs: scale(&self.x_coeffs),
            y_coeffs: scale(&self.y_coeffs),
            ..self.clone()
        }
    }

    pub fn is_valid(&self) -> bool {
        self.x_coeffs.len() as i64 == self.profile.p + self.profile.r
            && self.y_coeffs.len() as i64 == self.profile.q + self.profile.s
            && self.x_coeffs.last().is_some_and(|a| !a.is_zero())
            && self.y_coeffs.last().is_some_and(|b| !b.is_zero())
    }

    /// Evaluates both coordinates at a nonzero parameter.
    pub fn point(&self, t: &Rational) -> (Rational, Rational) {
        (
            laurent_eval(self.profile.p, &self.x_coeffs, t),
            laurent_eval(self.profile.q, &self.y_coeffs, t),
        )
    }
}

fn laurent_eval(lead: i64, coeffs: &[Rational], t: &Rational) -> Rational {
    let mut total = Rational::zero();
    for (i, c) in std::iter::once(&Rational::one()).chain(coeffs).enumerate() {
        total += c * pow(t, lead - i as i64);
    }
    total
}

fn pow(t: &Rational, k: i64) -> Rational {
    let base = if k < 0 { t.recip() } else { t.clone() };
    (0..k.unsigned_abs()).fold(Rational::one(), |acc, _| acc * &base)
}

/// `(f(u) - f(v)) / (u - v)` multiplied by the power of `uv` that clears
/// negative exponents, with integer coefficients.
fn divided_difference(lead: i64, coeffs: &[Rational]) -> BiPoly {
    let all: Vec<Rational> = std::iter::once(Rational::one()).chain(coeffs.iter().cloned()).collect();
    let den = common_denominator(&all);
    let lowest = lead - coeffs.len() as i64;
    let shift = (-lowest).max(0) as usize;
    let mut out = BiPoly::zero(0, 0);
    for (i, c) in all.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let scaled = (c * Rational::from_integer(den.clone())).to_integer();
        let k = lead - i as i64;
        if k > 0 {
            for a in 0..k as usize {
                out.add_term(shift + a, shift + k as usize - 1 - a, &scaled);
            }
        } else if k < 0 {
            let l = (-k) as usize;
            let neg = -&scaled;
            for a in 0..l {
                out.add_term(shift - l + a, shift - 1 - a, &neg);
            }
        }
    }
    out.primitive()
}

fn lead_in_v(f: &BiPoly) -> Poly {
    let d = f.degree_v();
    Poly::from_ints(
        &f.coeffs
            .iter()
            .map(|row| row.get(d).cloned().unwrap_or_default())
            .collect::<Vec<_>>(),
    )
}

fn at_v_zero(f: &BiPoly) -> Poly {
    Poly::from_ints(
        &f.coeffs
            .iter()
            .map(|row| row.first().cloned().unwrap_or_default())
            .collect::<Vec<_>>(),
    )
}

fn common_factor(a: &Poly, b: &Poly) -> bool {
    let (a, b) = (a.strip_low_order(), b.strip_low_order());
    !a.is_zero() && !b.is_zero() && a.gcd(&b).degree().unwrap_or(0) > 0
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DoublePointCount {
    /// Unordered pairs of distinct parameters with the same image.
    pub count: u64,
    /// Degree of the resultant once factors of the parameter are removed.
    pub relevant_degree: usize,
    /// Formal bound on the resultant degree.
    pub degree_bound: usize,
    /// Factors of the parameter removed from the resultant.
    pub removed_zero_roots: usize,
}

pub fn count_double_points(curve: &CoefficientCurve) -> Result<DoublePointCount> {
    if !curve.is_valid() {
        return Err(Error::Degenerate("coefficient lists do not match the profile".into()));
    }
    let f = divided_difference(curve.profile.p, &curve.x_coeffs);
    let g = divided_difference(curve.profile.q, &curve.y_coeffs);
    if f.is_zero() || g.is_zero() {
        return Err(Error::Degenerate("a coordinate is constant".into()));
    }
    let bound = resultant::degree_bound(&f, &g);
    if bound > RESULTANT_DEGREE_CAP {
        return Err(Error::Degenerate(format!(
            "resultant degree bound {bound} exceeds cap {RESULTANT_DEGREE_CAP}"
        )));
    }
    if common_factor(&f.diagonal(), &g.diagonal()) {
        return Err(Error::Degenerate("curve has a finite singular point".into()));
    }
    if common_factor(&at_v_zero(&f), &at_v_zero(&g)) {
        return Err(Error::Degenerate("spurious solutions at zero".into()));
    }
    if common_factor(&lead_in_v(&f), &lead_in_v(&g)) {
        return Err(Error::Degenerate("spurious solutions at infinity".into()));
    }
    let res = resultant::resultant_v(&f, &g);
    if res.is_zero() {
        return Err(Error::Degenerate("resultant vanishes identically".into()));
    }
    let removed = res.low_order();
    let relevant = res.strip_low_order();
    let degree = relevant.degree().unwrap_or(0);
    if degree > 0 && !relevant.is_square_free() {
        return Err(Error::Degenerate("non-simple intersection".into()));
    }
    if degree % 2 == 1 {
        return Err(Error::Degenerate(format!("odd resultant degree {degree}")));
    }
    Ok(DoublePointCount {
        count: degree as u64 / 2,
        relevant_degree: degree,
        degree_bound: bound,
        removed_zero_roots: removed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TrialOutcome {
    pub index: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub count: Option<DoublePointCount>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degenerate: Option<String>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GenusReport {
    pub profile: AnnulusProfile,
    pub two_delta_max: i64,
    pub requested_trials: usize,
    pub non_degenerate: usize,
    pub agreeing: usize,
    /// `agreeing/non_degenerate`.
    pub agreement: String,
    pub samples: Vec<TrialOutcome>,
    pub mismatches: Vec<TrialOutcome>,
}

impl GenusReport {
    pub fn all_agree(&self) -> bool {
        self.non_degenerate > 0 && self.agreeing == self.non_degenerate
    }
}

fn run_trial(profile: &AnnulusProfile, index: usize, seed: u64, expected: i64) -> TrialOutcome {
    let result = sample_curve(profile, seed).and_then(|c| count_double_points(&c));
    match result {
        Ok(count) => TrialOutcome {
            index,
            seed,
            agrees: 2 * count.count as i64 == expected,
            count: Some(count),
            degenerate: None,
        },
        Err(e) => TrialOutcome {
            index,
            seed,
            count: None,
            degenerate: Some(e.to_string()),
            agrees: false,
        },
    }
}

/// Samples until `trials` non-degenerate curves have been counted, drawing
/// seeds `seed, seed+1, …` and giving up after `4·trials + 8` samples.
pub fn check_genus_formula(profile: &AnnulusProfile, trials: usize, seed: u64) -> Result<GenusReport> {
    let expected = profile.two_delta_max();
    let budget = 4 * trials + 8;
    let mut samples: Vec<TrialOutcome> = Vec::new();
    let good = |s: &[TrialOutcome]| s.iter().filter(|t| t.count.is_some()).count();
    while good(&samples) < trials && samples.len() < budget {
        let start = samples.len();
        let end = (start + trials - good(&samples)).min(budget);
        let batch: Vec<TrialOutcome> = (start..end)
            .into_par_iter()
            .map(|i| run_trial(profile, i, seed.wrapping_add(i as u64), expected))
            .collect();
        samples.extend(batch);
    }
    let non_degenerate = good(&samples);
    if non_degenerate == 0 {
        return Err(Error::AllTrialsDegenerate(samples.len()));
    }
    let agreeing = samples.iter().filter(|t| t.agrees).count();
    let mismatches = samples
        .iter()
        .filter(|t| t.count.is_some() && !t.agrees)
        .cloned()
        .collect();
    Ok(GenusReport {
        profile: *profile,
        two_delta_max: expected,
        requested_trials: trials,
        non_degenerate,
        agreeing,
        agreement: format!("{agreeing}/{non_degenerate}"),
        samples,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn prof(p: i64, q: i64, r: i64, s: i64) -> AnnulusProfile {
        AnnulusProfile::new(p, q, r, s).unwrap()
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = sample_curve(&prof(1, 2, 1, 2), 1).unwrap();
        assert_eq!(a, sample_curve(&prof(1, 2, 1, 2), 1).unwrap());
        assert_ne!(a, sample_curve(&prof(1, 2, 1, 2), 2).unwrap());
        assert!(a.is_valid());
    }

    #[test]
    fn smallest_profile() {
        let report = check_genus_formula(&prof(1, 2, 1, 2), 3, 7).unwrap();
        assert!(report.all_agree(), "{report:?}");
    }

    #[test]
    fn divided_difference_of_square() {
        // (u^2 - v^2)/(u - v) = u + v
        let f = divided_difference(2, &[rational::int(0), rational::int(0)]);
        assert_eq!(f.coeffs[1][0], BigInt::from(1));
        assert_eq!(f.coeffs[0][1], BigInt::from(1));
    }
}
