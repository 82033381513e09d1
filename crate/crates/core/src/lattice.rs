//! Divisor algebra on the exceptional lattice `Vect(E) = ⊕ Q·E_j`.
//!
//! The reduced total transform `D` is the sum of all exceptional components
//! plus the arrows. Arrows are not lattice elements; they only enter through
//! their pairings, `E_j · Ã = 1` when the arrow sits on `E_j`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, Rational};
use crate::resolution::ExceptionalGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QDivisor {
    #[serde(with = "rational::text_vec")]
    pub coefficients: Vec<Rational>,
}

impl QDivisor {
    pub fn zero(len: usize) -> Self {
        QDivisor {
            coefficients: vec![Rational::zero(); len],
        }
    }

    pub fn component(len: usize, j: usize) -> Self {
        let mut d = Self::zero(len);
        d.coefficients[j] = rational::one();
        d
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    fn zip_with(&self, other: &QDivisor, f: impl Fn(&Rational, &Rational) -> Rational) -> QDivisor {
        QDivisor {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &QDivisor) -> QDivisor {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &QDivisor) -> QDivisor {
        self.zip_with(other, |a, b| a - b)
    }
}

fn check_dim(g: &ExceptionalGraph, d: &QDivisor) -> Result<()> {
    if d.len() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: g.len(),
            got: d.len(),
        });
    }
    Ok(())
}

/// Intersection pairing `a · b`.
pub fn pairing(g: &ExceptionalGraph, a: &QDivisor, b: &QDivisor) -> Result<Rational> {
    check_dim(g, a)?;
    check_dim(g, b)?;
    let m = g.intersection_matrix();
    let mut acc = Rational::zero();
    for (i, ai) in a.coefficients.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coefficients.iter().enumerate() {
            if m[i][j] != 0 {
                acc += ai * bj * rational::int(m[i][j]);
            }
        }
    }
    Ok(acc)
}

/// `a · E_j` for every component.
pub fn pairings_with_components(g: &ExceptionalGraph, a: &QDivisor) -> Result<Vec<Rational>> {
    check_dim(g, a)?;
    Ok((0..g.len())
        .map(|j| pairing(g, a, &QDivisor::component(g.len(), j)).expect("dimension checked"))
        .collect())
}

/// The local canonical divisor: `K · E_j = −2 − E_j²`.
pub fn canonical_divisor(g: &ExceptionalGraph) -> Result<QDivisor> {
    let rhs: Vec<Rational> = g.weights().iter().map(|&w| rational::int(-2 - w)).collect();
    let coefficients = linalg::solve(&g.bigint_matrix(), &rhs)?;
    Ok(QDivisor { coefficients })
}

/// `D · E_j`.
pub fn boundary_pairings(g: &ExceptionalGraph) -> Vec<Rational> {
    (0..g.len())
        .map(|j| {
            rational::int(g.weights()[j] + g.neighbors(j).len() as i64 + g.arrow_count(j) as i64)
        })
        .collect()
}

/// `(K + D) · E_j`.
pub fn log_canonical_pairings(g: &ExceptionalGraph, k: &QDivisor) -> Result<Vec<Rational>> {
    let kk = pairings_with_components(g, k)?;
    Ok(kk.iter().zip(boundary_pairings(g)).map(|(a, b)| a + b).collect())
}

/// Orevkov's rough M-number `K · (K + D)`.
pub fn rough_m_number(g: &ExceptionalGraph) -> Result<Rational> {
    if g.arrows().is_empty() {
        return Err(Error::NoArrows);
    }
    let k = canonical_divisor(g)?;
    let k_sq = pairing(g, &k, &k)?;
    let k_dot_e: Rational = pairings_with_components(g, &k)?.into_iter().sum();
    let k_dot_arrows: Rational = g.arrows().iter().map(|&v| k.coefficients[v].clone()).sum();
    Ok(k_sq + k_dot_e + k_dot_arrows)
}

/// Maximal twigs: chains that start at a tip without arrows and continue
/// through valence-2 components without arrows. Each twig is listed from
/// its tip inwards.
pub fn maximal_twigs(g: &ExceptionalGraph) -> Vec<Vec<usize>> {
    let plain = |v: usize| g.arrow_count(v) == 0;
    let mut twigs = Vec::new();
    for tip in 0..g.len() {
        if !(plain(tip) && g.valence(tip) == 1) {
            continue;
        }
        let mut chain = vec![tip];
        let mut prev = tip;
        let mut cur = g.neighbors(tip)[0];
        let mut rod = false;
        loop {
            if !plain(cur) || g.valence(cur) >= 3 {
                break;
            }
            chain.push(cur);
            if g.valence(cur) == 1 {
                rod = true;
                break;
            }
            let next = g.neighbors(cur).into_iter().find(|&u| u != prev).expect("valence 2");
            prev = cur;
            cur = next;
        }
        if !rod {
            twigs.push(chain);
        }
    }
    twigs
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZariskiDecomposition {
    /// Exceptional part of `P`; the arrows carry coefficient 1.
    pub positive: QDivisor,
    pub negative: QDivisor,
}

impl ZariskiDecomposition {
    /// `P · E_j` for every component.
    pub fn positive_pairings(&self, g: &ExceptionalGraph) -> Result<Vec<Rational>> {
        let k = canonical_divisor(g)?;
        let kd = log_canonical_pairings(g, &k)?;
        let n = pairings_with_components(g, &self.negative)?;
        Ok(kd.iter().zip(n).map(|(a, b)| a - b).collect())
    }
}

/// Solves `N · E = target_E` for `N` supported on `support`.
fn solve_on_support(g: &ExceptionalGraph, support: &[usize], target: &[Rational]) -> Result<QDivisor> {
    let full = g.intersection_matrix();
    let sub: Vec<Vec<i64>> = support
        .iter()
        .map(|&i| support.iter().map(|&j| full[i][j]).collect())
        .collect();
    let rhs: Vec<Rational> = support.iter().map(|&i| target[i].clone()).collect();
    let coeffs = linalg::solve(&linalg::from_i64(&sub), &rhs)?;
    let mut n = QDivisor::zero(g.len());
    for (&i, c) in support.iter().zip(coeffs) {
        n.coefficients[i] = c;
    }
    Ok(n)
}

fn assemble(g: &ExceptionalGraph, negative: QDivisor) -> Result<ZariskiDecomposition> {
    let k = canonical_divisor(g)?;
    let ones = QDivisor {
        coefficients: vec![rational::one(); g.len()],
    };
    let positive = k.add(&ones).sub(&negative);
    Ok(ZariskiDecomposition { positive, negative })
}

/// `K + D = P + N` with `N` the bark of the maximal twigs.
pub fn zariski_fujita(g: &ExceptionalGraph) -> Result<ZariskiDecomposition> {
    let k = canonical_divisor(g)?;
    let target = log_canonical_pairings(g, &k)?;
    let mut negative = QDivisor::zero(g.len());
    for twig in maximal_twigs(g) {
        negative = negative.add(&solve_on_support(g, &twig, &target)?);
    }
    assemble(g, negative)
}

/// Zariski decomposition by support growth: start from the components
/// where `K + D` is negative, solve `P · E = 0` on the support, and add any
/// component where `P` is still negative until `P · E ≥ 0` everywhere.
pub fn zariski_by_support_growth(g: &ExceptionalGraph) -> Result<ZariskiDecomposition> {
    let k = canonical_divisor(g)?;
    let target = log_canonical_pairings(g, &k)?;
    let mut support: Vec<usize> = (0..g.len()).filter(|&j| target[j].is_negative()).collect();
    loop {
        let negative = if support.is_empty() {
            QDivisor::zero(g.len())
        } else {
            solve_on_support(g, &support, &target)?
        };
        let n_dot = pairings_with_components(g, &negative)?;
        let extra: Vec<usize> = (0..g.len())
            .filter(|j| !support.contains(j) && (&target[*j] - &n_dot[*j]).is_negative())
            .collect();
        if extra.is_empty() {
            return assemble(g, negative);
        }
        support.extend(extra);
        support.sort_unstable();
    }
}

/// η = −N².
pub fn excess(g: &ExceptionalGraph) -> Result<Rational> {
    let zf = zariski_fujita(g)?;
    Ok(-pairing(g, &zf.negative, &zf.negative)?)
}
