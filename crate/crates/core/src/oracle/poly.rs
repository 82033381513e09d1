//! Dense univariate polynomials over the rationals and bivariate integer
//! polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Coefficients in increasing degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        Poly::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Number of factors of the variable.
    pub fn low_order(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn strip_low_order(&self) -> Poly {
        Poly::new(self.0[self.low_order().min(self.0.len())..].to_vec())
    }

    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.lead().unwrap();
        let mut rem = self.0.clone();
        if rem.len() <= d {
            return (Poly::default(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.0.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::default(),
            Some(l) => Poly(self.0.iter().map(|c| c / l).collect()),
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn is_square_free(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

/// `coeffs[i][j]` multiplies `u^i v^j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    pub coeffs: Vec<Vec<BigInt>>,
}

impl BiPoly {
    pub fn zero(deg_u: usize, deg_v: usize) -> Self {
        BiPoly {
            coeffs: vec![vec![BigInt::zero(); deg_v + 1]; deg_u + 1],
        }
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: &BigInt) {
        if self.coeffs.len() <= i {
            let width = self.coeffs.first().map_or(0, Vec::len);
            self.coeffs.resize(i + 1, vec![BigInt::zero(); width]);
        }
        for row in &mut self.coeffs {
            if row.len() <= j {
                row.resize(j + 1, BigInt::zero());
            }
        }
        self.coeffs[i][j] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    pub fn degree_u(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|row| row.iter().any(|c| !c.is_zero()))
            .unwrap_or(0)
    }

    pub fn degree_v(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(|row| row.iter().rposition(|c| !c.is_zero()))
            .max()
            .unwrap_or(0)
    }

    /// Coefficients in `v` after substituting `u = x`.
    pub fn at_u(&self, x: &BigInt) -> Vec<BigInt> {
        let width = self.degree_v() + 1;
        let mut out = vec![BigInt::zero(); width];
        let mut power = BigInt::one();
        for row in &self.coeffs {
            for (j, c) in row.iter().enumerate().take(width) {
                out[j] += c * &power;
            }
            power *= x;
        }
        out
    }

    /// Restriction to the diagonal `u = v`.
    pub fn diagonal(&self) -> Poly {
        let mut out = vec![BigInt::zero(); self.degree_u() + self.degree_v() + 1];
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if let Some(slot) = out.get_mut(i + j) {
                    *slot += c;
                }
            }
        }
        Poly::from_ints(&out)
    }

    /// Divides out the content so that coefficients are coprime.
    pub fn primitive(mut self) -> Self {
        let g = self
            .coeffs
            .iter()
            .flatten()
            .fold(BigInt::zero(), |g, c| g.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for c in self.coeffs.iter_mut().flatten() {
                *c = &*c / &g;
            }
        }
        self
    }
}

/// Newton interpolation through `(x_k, y_k)` with distinct nodes.
pub fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Poly {
    let n = xs.len();
    let xs: Vec<Rational> = xs.iter().cloned().map(Rational::from_integer).collect();
    let mut div: Vec<Rational> = ys.iter().cloned().map(Rational::from_integer).collect();
    for level in 1..n {
        for k in (level..n).rev() {
            div[k] = (&div[k] - &div[k - 1]) / (&xs[k] - &xs[k - level]);
        }
    }
    let mut acc = Poly::default();
    for k in (0..n).rev() {
        let mut next = vec![Rational::zero(); acc.0.len() + 1];
        for (i, c) in acc.0.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &xs[k];
        }
        next[0] += &div[k];
        acc = Poly::new(next);
    }
    acc
}

/// Smallest positive integer making every entry integral.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |l, v| l.lcm(v.denom()))
        .abs()
}
