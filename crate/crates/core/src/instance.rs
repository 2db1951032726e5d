use std::fmt;
use std::str::FromStr;

use crate::graph::{Digraph, NodeSet};
use crate::{Error, Result};

/// Largest admissible total weight or budget (63-bit).
pub const WEIGHT_LIMIT: u64 = i64::MAX as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemKind {
    Ssg,
    Ssgw,
    MaximalSsg,
    MaximalSsgw,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 4] = [
        ProblemKind::Ssg,
        ProblemKind::Ssgw,
        ProblemKind::MaximalSsg,
        ProblemKind::MaximalSsgw,
    ];

    /// Uses weak closure (a node is forced once all in-neighbors are in).
    pub fn is_weak(self) -> bool {
        matches!(self, ProblemKind::Ssgw | ProblemKind::MaximalSsgw)
    }

    /// Minimization over maximal feasible sets.
    pub fn is_maximal(self) -> bool {
        matches!(self, ProblemKind::MaximalSsg | ProblemKind::MaximalSsgw)
    }

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Ssg => "ssg",
            ProblemKind::Ssgw => "ssgw",
            ProblemKind::MaximalSsg => "maximal-ssg",
            ProblemKind::MaximalSsgw => "maximal-ssgw",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        ProblemKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                format!("unknown problem `{s}` (expected ssg, ssgw, maximal-ssg or maximal-ssgw)")
            })
    }
}

/// A digraph with nonnegative integer node weights, a budget and the problem
/// to solve on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedInstance {
    graph: Digraph,
    weights: Vec<u64>,
    budget: u64,
    kind: ProblemKind,
}

impl WeightedInstance {
    /// Checks that there is one weight per node and that both the total
    /// weight and the budget fit in 63 bits.
    pub fn new(graph: Digraph, weights: Vec<u64>, budget: u64, kind: ProblemKind) -> Result<Self> {
        if weights.len() != graph.node_count() {
            return Err(Error::input(format!(
                "{} weights for {} nodes",
                weights.len(),
                graph.node_count()
            )));
        }
        let total = weights
            .iter()
            .try_fold(0u64, |acc, &w| acc.checked_add(w))
            .filter(|&t| t <= WEIGHT_LIMIT);
        if total.is_none() {
            return Err(Error::input("total weight exceeds 2^63 - 1"));
        }
        if budget > WEIGHT_LIMIT {
            return Err(Error::input("budget exceeds 2^63 - 1"));
        }
        Ok(WeightedInstance {
            graph,
            weights,
            budget,
            kind,
        })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn weight_of(&self, s: &NodeSet) -> u64 {
        s.iter().map(|v| self.weights[v]).sum()
    }

    pub fn with_kind(&self, kind: ProblemKind) -> Self {
        WeightedInstance {
            kind,
            ..self.clone()
        }
    }

    pub fn with_budget(&self, budget: u64) -> Result<Self> {
        WeightedInstance::new(self.graph.clone(), self.weights.clone(), budget, self.kind)
    }

    /// Wraps a node set with its weight under this instance.
    pub fn solution(&self, selected: NodeSet) -> Solution {
        let weight = self.weight_of(&selected);
        Solution { selected, weight }
    }
}

/// A selected node set and its cached weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub selected: NodeSet,
    pub weight: u64,
}

impl Solution {
    pub fn nodes(&self) -> Vec<usize> {
        self.selected.to_vec()
    }
}
