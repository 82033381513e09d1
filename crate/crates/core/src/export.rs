//! Documents shared by the command line and the browser demo: branch
//! reports, DOT graphs and key-sorted JSON.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::{self, QDivisor};
use crate::rational::{self, Rational};
use crate::resolution::{resolve_branch, ExceptionalGraph};
use crate::topology::BranchTopology;

/// Graph together with the divisors computed on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub weights: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
    pub arrows: Vec<usize>,
    pub canonical: QDivisor,
    pub negative_part: QDivisor,
    #[serde(with = "rational::text_vec")]
    pub positive_pairings: Vec<Rational>,
    pub twigs: Vec<Vec<usize>>,
}

impl GraphDocument {
    pub fn of(graph: &ExceptionalGraph) -> Result<Self> {
        let zariski = lattice::zariski_fujita(graph)?;
        Ok(GraphDocument {
            weights: graph.weights().to_vec(),
            edges: graph.edges().to_vec(),
            arrows: graph.arrows().to_vec(),
            canonical: lattice::canonical_divisor(graph)?,
            positive_pairings: zariski.positive_pairings(graph)?,
            negative_part: zariski.negative,
            twigs: lattice::maximal_twigs(graph),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchReport {
    pub pairs: Vec<(u32, u32)>,
    pub multiplicity: u64,
    pub y_codimension: u64,
    pub external_codimension: u64,
    pub delta: u64,
    pub milnor: u64,
    #[serde(with = "rational::text")]
    pub excess: Rational,
    /// `K(K+D)` of the resolution graph.
    #[serde(with = "rational::text")]
    pub rough_m_number: Rational,
    pub graph: GraphDocument,
}

pub fn branch_report(topology: &BranchTopology) -> Result<BranchReport> {
    let graph = resolve_branch(topology)?;
    Ok(BranchReport {
        pairs: topology.pairs().to_vec(),
        multiplicity: topology.multiplicity(),
        y_codimension: topology.y_codimension()?,
        external_codimension: topology.external_codimension()?,
        delta: topology.delta_invariant(),
        milnor: topology.milnor_number(),
        excess: lattice::excess(&graph)?,
        rough_m_number: lattice::rough_m_number(&graph)?,
        graph: GraphDocument::of(&graph)?,
    })
}

impl BranchReport {
    pub fn to_text(&self) -> String {
        let pairs: Vec<String> = self.pairs.iter().map(|(m, n)| format!("({m},{n})")).collect();
        let mut out = String::new();
        let _ = writeln!(out, "pairs: {}", pairs.join(" "));
        let _ = writeln!(out, "m = {}", self.multiplicity);
        let _ = writeln!(out, "nu = {}", self.y_codimension);
        let _ = writeln!(out, "extnu = {}", self.external_codimension);
        let _ = writeln!(out, "delta = {}", self.delta);
        let _ = writeln!(out, "mu = {}", self.milnor);
        let _ = writeln!(out, "eta = {}", rational::display(&self.excess));
        let _ = writeln!(out, "K(K+D) = {}", rational::display(&self.rough_m_number));
        out
    }
}

/// Vertices `E<i> (<weight>)` numbered from 1, then one box per arrow.
pub fn graph_to_dot(graph: &ExceptionalGraph) -> String {
    let mut out = String::from("graph exceptional {\n");
    for (i, w) in graph.weights().iter().enumerate() {
        let _ = writeln!(out, "  E{i} [label=\"E{i} ({w})\"];", i = i + 1);
    }
    for (k, _) in graph.arrows().iter().enumerate() {
        let _ = writeln!(out, "  A{k} [shape=box, label=\"\"];");
    }
    for (a, b) in graph.edges() {
        let _ = writeln!(out, "  E{} -- E{};", a + 1, b + 1);
    }
    for (k, v) in graph.arrows().iter().enumerate() {
        let _ = writeln!(out, "  E{} -- A{k};", v + 1);
    }
    out.push_str("}\n");
    out
}

/// Pretty JSON with object keys in sorted order.
pub fn to_sorted_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let tree = serde_json::to_value(value)?;
    let mut text = serde_json::to_string_pretty(&tree)?;
    text.push('\n');
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cusp() -> BranchTopology {
        BranchTopology::new(vec![(2, 3)]).unwrap()
    }

    #[test]
    fn cusp_report() {
        let r = branch_report(&cusp()).unwrap();
        assert_eq!(r.multiplicity, 2);
        assert_eq!(r.external_codimension, 1);
        assert_eq!(r.rough_m_number, rational::int(1));
        assert_eq!(r.excess, rational::ratio(5, 6));
        assert!(r.to_text().contains("eta = 5/6"));
    }

    #[test]
    fn cusp_dot() {
        let dot = graph_to_dot(&resolve_branch(&cusp()).unwrap());
        assert_eq!(dot.matches("label=\"E").count(), 3);
        assert_eq!(dot.matches("shape=box").count(), 1);
    }

    #[test]
    fn json_keys_sorted() {
        let text = to_sorted_json(&branch_report(&cusp()).unwrap()).unwrap();
        let delta = text.find("\"delta\"").unwrap();
        let excess = text.find("\"excess\"").unwrap();
        let pairs = text.find("\"pairs\"").unwrap();
        assert!(delta < excess && excess < pairs);
    }
}
