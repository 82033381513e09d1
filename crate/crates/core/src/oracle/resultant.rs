//! Resultant in the second variable by evaluation and interpolation.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::determinant;
use crate::oracle::poly::{interpolate, BiPoly, Poly};

/// Sylvester matrix of two coefficient lists (increasing degree) with the
/// given formal degrees.
fn sylvester(f: &[BigInt], df: usize, g: &[BigInt], dg: usize) -> Vec<Vec<BigInt>> {
    let n = df + dg;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    let coeff = |c: &[BigInt], deg: usize, k: usize| c.get(deg - k).cloned().unwrap_or_default();
    for row in 0..dg {
        for k in 0..=df {
            m[row][row + k] = coeff(f, df, k);
        }
    }
    for row in 0..df {
        for k in 0..=dg {
            m[dg + row][row + k] = coeff(g, dg, k);
        }
    }
    m
}

/// Upper bound on the degree in the first variable of the resultant.
pub fn degree_bound(f: &BiPoly, g: &BiPoly) -> usize {
    g.degree_v() * f.degree_u() + f.degree_v() * g.degree_u()
}

/// `Res_v(f, g)` as a polynomial in `u`.
pub fn resultant_v(f: &BiPoly, g: &BiPoly) -> Poly {
    let (df, dg) = (f.degree_v(), g.degree_v());
    let bound = degree_bound(f, g);
    let xs: Vec<BigInt> = (0..=bound as i64).map(BigInt::from).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|x| determinant(&sylvester(&f.at_u(x), df, &g.at_u(x), dg)))
        .collect();
    interpolate(&xs, &ys)
}
