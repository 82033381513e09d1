//! Closed-form lower bounds on the reserve, one chain per case and subcase.
//!
//! Case letters: A and B are type (+,+) without and with `ps = rq`, C is
//! (−+,+−), D is (−,+), E is (−,−). Subcase 1 lets the finite points hide
//! the double points, subcase 2 lets the points at infinity hide them. The
//! bound reported for a profile is the weakest applicable chain.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::profile::{AnnulusProfile, TypeTag};
use crate::rational::{self, int, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainBound {
    pub chain: String,
    #[serde(with = "rational::text")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicBound {
    pub case: char,
    pub chains: Vec<ChainBound>,
    #[serde(with = "rational::text")]
    pub bound: Rational,
}

struct Chains(Vec<ChainBound>);

impl Chains {
    fn push(&mut self, chain: &str, value: Rational) {
        self.0.push(ChainBound {
            chain: chain.into(),
            value,
        });
    }
    fn push_int(&mut self, chain: &str, value: i64) {
        self.push(chain, int(value));
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

pub fn symbolic_case_bound(profile: &AnnulusProfile) -> Result<SymbolicBound> {
    let tag = profile.classify()?;
    let mut chains = Chains(Vec::new());
    let case = match tag {
        TypeTag::PlusPlus if !profile.is_proportional() => {
            plus_plus(profile, &mut chains);
            'A'
        }
        TypeTag::PlusPlus => {
            proportional(profile, &mut chains);
            'B'
        }
        TypeTag::Crossed => {
            crossed(profile, &mut chains);
            'C'
        }
        TypeTag::MinusPlus => {
            minus_plus(profile, &mut chains);
            'D'
        }
        TypeTag::MinusMinus => {
            minus_minus(profile, &mut chains);
            'E'
        }
    };
    let bound = chains
        .0
        .iter()
        .map(|c| c.value.clone())
        .min()
        .expect("every case has a subcase-1 chain");
    Ok(SymbolicBound {
        case,
        chains: chains.0,
        bound,
    })
}

fn plus_plus(a: &AnnulusProfile, out: &mut Chains) {
    let (e, f) = (a.p + a.r, a.q + a.s);
    out.push_int("A1", e + f - 9);
    for (name, c) in [("A2 infinity", a.p_gcd()), ("A2 zero", a.r_gcd())] {
        if c >= 2 {
            out.push_int(name, (e - 1 - c) * (f - 1 - c) - c * c + 5 * c - 8);
        }
    }
}

fn proportional(a: &AnnulusProfile, out: &mut Chains) {
    let (e, f) = (a.p + a.r, a.q + a.s);
    let g = e.gcd(&f);
    let small = e.min(f) <= 5;
    if small {
        out.push_int("B1", 2 * e + f - g - 10);
    } else {
        out.push_int("B1", e + f - g - 8);
    }
    let linear = if small { 4 * g } else { 3 * g };
    out.push_int("B2", (e - g - 1) * (f - g - 1) - 7 - g * g + linear);
}

fn crossed(a: &AnnulusProfile, out: &mut Chains) {
    let (e, f) = (a.p + a.r, a.q + a.s);
    let d = a.det_prime().expect("ps != rq in type (-+,+-)");
    if f <= 5 {
        out.push_int("C1", e + f + d - 9);
    } else {
        out.push_int("C1", (f - 1) + d - 6);
    }
    for (name, c) in [("C2 infinity", a.p_gcd()), ("C2 zero", a.r_gcd())] {
        if c >= 2 {
            out.push_int(name, (e - 1 - c) * (f - 1 - c) - c * c + 4 * c - 8 + d);
        }
    }
}

fn minus_plus(a: &AnnulusProfile, out: &mut Chains) {
    let AnnulusProfile { p, q, s, .. } = *a;
    let ar = a.r.abs();
    let k = p - ar;
    let f = q + s;
    let (pg, rg) = (a.p_gcd(), a.r_gcd());
    let fl = floor_div(ar - 1, s);
    let reduced = k <= f;

    if k.min(f) >= 6 {
        if reduced {
            let tail = int(ar * q) * (int(1) - ratio(1, s)) + ratio(q, s);
            out.push("D1 m2>=3", int(2 * f - pg - rg - 10 + p * s - ar) + tail);
        } else {
            out.push_int("D1 m2>=3", 2 * f - pg - rg - 11 + p * s + ar * q - (k - 3) * fl);
        }
    }
    if !reduced {
        out.push_int("D1 m2=2", f - pg - rg - 6 + p * s + ar * q - (k - 2) * fl);
    } else if s == 1 {
        out.push_int("D1 m2=2", q + 2 * p - pg - 8);
    } else {
        out.push_int("D1 m2=2", f - pg - rg - 5 + p * s - ar);
    }

    if pg.max(rg) >= 2 {
        let value = if pg >= rg {
            (p - pg - 1) * (f - pg - 1) + k * s + (ar - pg - fl + 2) * pg + (ar - rg) - 7
        } else {
            (p - rg - 1) * (f - rg - 1) + k * s + (ar - rg - fl + 2) * rg + ar - pg - 7
        };
        out.push_int("D2", value);
    }
}

fn minus_minus(a: &AnnulusProfile, out: &mut Chains) {
    let first = if a.k_gap() > a.l_gap() { a.mirror() } else { *a };
    out.push_int("E1", minus_minus_finite(&first));
    if a.p_gcd().max(a.r_gcd()) >= 2 {
        let second = if a.r_gcd() > a.p_gcd() { a.mirror() } else { *a };
        out.push_int("E2", minus_minus_infinite(&second));
    }
}

fn minus_minus_finite(a: &AnnulusProfile) -> i64 {
    let AnnulusProfile { p, s, .. } = *a;
    let (aq, ar) = (a.q.abs(), a.r.abs());
    let (k, l) = (a.k_gap(), a.l_gap());
    let flq = floor_div(aq - 1, p);
    let flr = floor_div(ar - 1, s);
    let fl = if flq > 0 { flq } else { flr };
    k * l + k * (aq - 2) + l * (ar + 1) - (k - 2) * fl - a.p_gcd() - a.r_gcd() - 2
}

fn minus_minus_infinite(a: &AnnulusProfile) -> i64 {
    let AnnulusProfile { p, s, .. } = *a;
    let (aq, ar) = (a.q.abs(), a.r.abs());
    let (k, l) = (a.k_gap(), a.l_gap());
    let pg = a.p_gcd();
    let flq = floor_div(aq - 1, p);
    let flr = floor_div(ar - 1, s);
    k * l - k - l - 6 + (p - pg) * l + (aq - pg) * k - pg * (flq + flr - 2)
}
