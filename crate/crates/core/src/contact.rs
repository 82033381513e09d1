//! Two branches through the same point and their mutual contact.
//!
//! Both branches are written as Puiseux series `y(x)` in a common coordinate
//! `x` transversal to them. The expansions agree term by term (after the best
//! choice of roots of unity) below the first disagreement exponent `κ` and
//! differ at `κ`.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::topology::{BranchTopology, Quantity};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchPairContact {
    pub left: BranchTopology,
    pub right: BranchTopology,
    /// `None` when the branches pass through different points.
    #[serde(with = "opt_rational")]
    pub first_disagreement_exponent: Option<Rational>,
}

mod opt_rational {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(x) => s.serialize_some(&rational::format(x)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
        let raw = Option::<String>::deserialize(d)?;
        raw.map(|s| rational::parse(&s).ok_or_else(|| serde::de::Error::custom("bad rational")))
            .transpose()
    }
}

impl BranchPairContact {
    pub fn new(left: BranchTopology, right: BranchTopology, kappa: Option<Rational>) -> Result<Self> {
        let contact = BranchPairContact {
            left,
            right,
            first_disagreement_exponent: kappa,
        };
        contact.check_alignment()?;
        Ok(contact)
    }

    fn check_alignment(&self) -> Result<()> {
        let Some(kappa) = &self.first_disagreement_exponent else {
            return Ok(());
        };
        if *kappa < rational::one() {
            return Err(Error::IncompatibleContact(format!(
                "disagreement exponent {} below 1",
                rational::format(kappa)
            )));
        }
        let lattice_ok = |b: &BranchTopology| (kappa * rational::int(b.multiplicity() as i64)).is_integer();
        if !lattice_ok(&self.left) && !lattice_ok(&self.right) {
            return Err(Error::IncompatibleContact(format!(
                "no term x^{} in either expansion",
                rational::format(kappa)
            )));
        }
        let below = |b: &BranchTopology| -> Vec<Rational> {
            b.characteristic_exponents()
                .into_iter()
                .filter(|e| e < kappa)
                .collect()
        };
        if below(&self.left) != below(&self.right) {
            return Err(Error::IncompatibleContact(
                "characteristic exponents differ inside the common part".into(),
            ));
        }
        let lead_below = |b: &BranchTopology| {
            b.leading_exponent()
                .filter(|&n0| rational::int(n0 as i64) < *kappa)
        };
        if lead_below(&self.left) != lead_below(&self.right) {
            return Err(Error::IncompatibleContact(
                "leading exponents differ inside the common part".into(),
            ));
        }
        Ok(())
    }

    /// Branch whose coefficients index the common part: the one with the
    /// smaller multiplicity.
    fn counting_branch(&self) -> &BranchTopology {
        if self.right.multiplicity() < self.left.multiplicity() {
            &self.right
        } else {
            &self.left
        }
    }

    /// Count of inessential and nonzero essential quantities shared by the
    /// two expansions, ν_tan.
    pub fn tangency_codimension(&self) -> u64 {
        let Some(kappa) = &self.first_disagreement_exponent else {
            return 0;
        };
        let branch = self.counting_branch();
        let m = branch.multiplicity();
        let start = branch.leading_exponent().map_or(1, |n0| n0 as u64 * m);
        // indices i with i/m < κ
        let scaled = kappa * rational::int(m as i64);
        let end = scaled.ceil().to_integer().to_u64().unwrap_or(0);
        (start..end)
            .filter(|&i| branch.quantity(i) != Quantity::VanishingEssential)
            .count() as u64
    }

    /// `ν(A_1) + ν(A_2) + ν_tan + m_1 + m_2 − 2`; smooth branches count
    /// ν = 0, m = 1.
    pub fn external_codimension(&self) -> u64 {
        let nu = |b: &BranchTopology| b.y_codimension().unwrap_or(0);
        nu(&self.left) + nu(&self.right) + self.tangency_codimension() + self.left.multiplicity()
            + self.right.multiplicity()
            - 2
    }

    /// Intersection index of the two branches.
    ///
    /// Sums the orders of `y_left − y_right^(j)` over the conjugates of the
    /// right branch. Conjugate `j` first departs from the aligned one at the
    /// smallest characteristic exponent `β_k` with `(m_1 ⋯ m_k) ∤ j`.
    pub fn intersection_index(&self) -> u64 {
        let Some(kappa) = &self.first_disagreement_exponent else {
            return 0;
        };
        let m_left = self.left.multiplicity();
        let m_right = self.right.multiplicity();
        let exps = self.right.characteristic_exponents();
        let mut partials = Vec::with_capacity(exps.len());
        let mut acc = 1u64;
        for &(mj, _) in self.right.pairs() {
            acc *= mj as u64;
            partials.push(acc);
        }
        let mut total = Rational::zero();
        for j in 0..m_right {
            let order = partials
                .iter()
                .position(|&d| j % d != 0)
                .map(|k| exps[k].clone())
                .filter(|lambda| lambda < kappa)
                .unwrap_or_else(|| kappa.clone());
            total += order;
        }
        let index = total * rational::int(m_left as i64);
        debug_assert!(index.is_integer());
        index.to_integer().to_u64().expect("intersection index fits u64")
    }
}

pub fn tangency_codimension(contact: &BranchPairContact) -> u64 {
    contact.tangency_codimension()
}

pub fn two_branch_external_codimension(contact: &BranchPairContact) -> u64 {
    contact.external_codimension()
}

pub fn branch_intersection_index(contact: &BranchPairContact) -> u64 {
    contact.intersection_index()
}
