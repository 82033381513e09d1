//! Minimal normal-crossing resolution of a cuspidal branch.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::topology::BranchTopology;

/// Weighted dual graph of the exceptional divisor, with arrows marking the
/// components met by strict transforms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalGraph {
    weights: Vec<i64>,
    edges: Vec<(usize, usize)>,
    arrows: Vec<usize>,
}

impl ExceptionalGraph {
    pub fn new(weights: Vec<i64>, edges: Vec<(usize, usize)>, arrows: Vec<usize>) -> Result<Self> {
        let n = weights.len();
        let mut normalized = BTreeSet::new();
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: a.max(b) + 1,
                });
            }
            if a == b {
                return Err(Error::NotNegativeDefinite);
            }
            normalized.insert((a.min(b), a.max(b)));
        }
        if let Some(&bad) = arrows.iter().find(|&&v| v >= n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: bad + 1,
            });
        }
        let graph = ExceptionalGraph {
            weights,
            edges: normalized.into_iter().collect(),
            arrows,
        };
        if !graph.is_connected() || !graph.is_negative_definite() {
            return Err(Error::NotNegativeDefinite);
        }
        Ok(graph)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    pub fn arrow_count(&self, v: usize) -> usize {
        self.arrows.iter().filter(|&&a| a == v).count()
    }

    /// Number of neighbors in the reduced total transform, arrows included.
    pub fn valence(&self, v: usize) -> usize {
        self.neighbors(v).len() + self.arrow_count(v)
    }

    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, &w) in self.weights.iter().enumerate() {
            m[i][i] = w;
        }
        for &(a, b) in &self.edges {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        m
    }

    pub fn bigint_matrix(&self) -> Matrix {
        linalg::from_i64(&self.intersection_matrix())
    }

    pub fn is_negative_definite(&self) -> bool {
        linalg::is_negative_definite(&self.bigint_matrix())
    }

    fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// One blow-up center on the way to the resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Center {
    multiplicity: u64,
    /// Components through the center: `{x = 0}` and `{y = 0}` of the chart.
    on_x: Option<usize>,
    on_y: Option<usize>,
}

/// Blows up a branch `x = τ^a, y = τ^b + …` until its total transform has
/// normal crossings, recording each center.
///
/// In every chart the two coordinate axes are either exceptional components
/// or free. While `a ≠ b` the blow-up is monomial; when `a = b` the branch
/// leaves all old components through a generic direction on the new one,
/// the `y` axis becomes free again and `b` jumps to the next deviation
/// `e_{j+1} − e_j` between characteristic indices.
fn simulate(topology: &BranchTopology) -> (Vec<Center>, ExceptionalGraphBuilder) {
    let indices = topology.characteristic_indices();
    let mut deviations = indices.windows(2).map(|w| w[1] - w[0]);
    let mut a = topology.multiplicity();
    let mut b = indices[0];
    let mut on_x: Option<usize> = None;
    let mut on_y: Option<usize> = None;
    let mut builder = ExceptionalGraphBuilder::default();
    let mut centers = Vec::new();

    loop {
        let resolved = match (on_x, on_y) {
            (Some(_), Some(_)) => false,
            (Some(_), None) => a == 1,
            (None, Some(_)) => b == 1,
            (None, None) => false,
        };
        if resolved {
            break;
        }
        let center = Center {
            multiplicity: a.min(b),
            on_x,
            on_y,
        };
        centers.push(center);
        let v = builder.blow_up(on_x, on_y);
        if a < b {
            on_x = Some(v);
            b -= a;
        } else if a > b {
            on_y = Some(v);
            a -= b;
        } else {
            on_x = Some(v);
            on_y = None;
            b = deviations.next().unwrap_or(u64::MAX);
        }
    }
    (centers, builder)
}

#[derive(Debug, Default)]
struct ExceptionalGraphBuilder {
    weights: Vec<i64>,
    edges: BTreeSet<(usize, usize)>,
}

impl ExceptionalGraphBuilder {
    fn blow_up(&mut self, on_x: Option<usize>, on_y: Option<usize>) -> usize {
        let v = self.weights.len();
        self.weights.push(-1);
        for c in [on_x, on_y].into_iter().flatten() {
            self.weights[c] -= 1;
            self.edges.insert((c, v));
        }
        if let (Some(c1), Some(c2)) = (on_x, on_y) {
            self.edges.remove(&(c1.min(c2), c1.max(c2)));
        }
        v
    }
}

/// The minimal normal-crossing resolution graph of a singular branch, with
/// one arrow on the last exceptional component.
pub fn resolve_branch(topology: &BranchTopology) -> Result<ExceptionalGraph> {
    if topology.is_smooth() {
        return Err(Error::SmoothBranch);
    }
    let (_, builder) = simulate(topology);
    let last = builder.weights.len() - 1;
    ExceptionalGraph::new(builder.weights, builder.edges.into_iter().collect(), vec![last])
}

/// Multiplicities at the successive infinitely near points, read off the
/// Euclidean algorithm applied to each characteristic stage.
pub fn multiplicity_sequence(topology: &BranchTopology) -> Vec<u64> {
    let indices = topology.characteristic_indices();
    let mut out = Vec::new();
    let mut divisor = topology.multiplicity();
    let mut previous = 0u64;
    for &e in &indices {
        let (mut a, mut b) = (e - previous, divisor);
        while b > 0 {
            out.extend(std::iter::repeat_n(b, (a / b) as usize));
            (a, b) = (b, a % b);
        }
        divisor = a;
        previous = e;
    }
    out
}

/// Multiplicities recorded by the blow-up simulation itself.
pub fn blow_up_multiplicities(topology: &BranchTopology) -> Vec<u64> {
    if topology.is_smooth() {
        return Vec::new();
    }
    simulate(topology).0.iter().map(|c| c.multiplicity).collect()
}
