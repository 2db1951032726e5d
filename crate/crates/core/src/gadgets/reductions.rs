//! Instance generators built from hardness reductions.

use super::UndirectedGraph;
use crate::graph::is_acyclic;
use crate::{Digraph, Error, NodeId, ProblemKind, Result, WeightedInstance};

/// Source of the clique reduction: a connected `Δ`-regular graph and a
/// target clique size `k`.
#[derive(Clone, Debug)]
pub struct CliqueGadgetSpec {
    pub source: UndirectedGraph,
    pub k: usize,
}

impl CliqueGadgetSpec {
    pub fn new(source: UndirectedGraph, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::input("clique size must be at least 2"));
        }
        let delta = source
            .regular_degree()
            .ok_or_else(|| Error::input("source graph is not regular"))?;
        if !source.is_connected() {
            return Err(Error::input("source graph is not connected"));
        }
        if delta < 2 {
            return Err(Error::input("source graph must have degree at least 2"));
        }
        Ok(CliqueGadgetSpec { source, k })
    }

    pub fn delta(&self) -> u64 {
        self.source.regular_degree().unwrap_or(0) as u64
    }

    pub fn n(&self) -> u64 {
        self.source.node_count() as u64
    }

    /// `3Δnk(k−1) + Δk`.
    pub fn budget(&self) -> u64 {
        let (d, n, k) = (self.delta(), self.n(), self.k as u64);
        3 * d * n * k * (k - 1) + d * k
    }

    /// Id of the circuit node of `i` facing neighbor `j`.
    pub fn circuit_node(&self, i: NodeId, j: NodeId) -> NodeId {
        let d = self.delta() as usize;
        let pos = self
            .source
            .neighbors(i)
            .binary_search(&j)
            .expect("j is a neighbor of i");
        i * d + pos
    }

    /// Id of gadget node `t` (`1..=6`) of the `e`-th edge in sorted order.
    pub fn gadget_node(&self, e: usize, t: usize) -> NodeId {
        assert!((1..=6).contains(&t));
        self.source.node_count() * self.delta() as usize + 6 * e + t - 1
    }

    /// Node labels in id order; `names` are the source node labels.
    pub fn labels(&self, names: &[String]) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..self.source.node_count() {
            for &j in self.source.neighbors(i) {
                out.push(format!("c{}_{}", names[i], names[j]));
            }
        }
        for &(x, y) in self.source.edges() {
            for t in 1..=6 {
                out.push(format!("h{}_{}_{t}", names[x], names[y]));
            }
        }
        out
    }
}

/// Each source node becomes a circuit of `Δ` unit-weight nodes, each edge a
/// strongly connected 6-node gadget of weight `Δn` per node whose two end
/// nodes point into the circuits of the edge's endpoints. A `k`-clique exists
/// iff some closed set weighs exactly [`CliqueGadgetSpec::budget`], which is
/// also the instance budget.
pub fn clique_to_ssg(spec: &CliqueGadgetSpec) -> Result<WeightedInstance> {
    let g = &spec.source;
    let n = g.node_count();
    let d = spec.delta() as usize;
    let total = n * d + 6 * g.edge_count();
    let mut arcs = Vec::new();
    for i in 0..n {
        for t in 0..d {
            arcs.push((i * d + t, i * d + (t + 1) % d));
        }
    }
    for (e, &(x, y)) in g.edges().iter().enumerate() {
        let h = |t| spec.gadget_node(e, t);
        arcs.extend([
            (h(2), h(3)),
            (h(1), h(2)),
            (h(5), h(1)),
            (h(3), h(4)),
            (h(4), h(5)),
            (h(6), h(4)),
            (h(5), h(2)),
            (h(3), h(6)),
            (h(1), spec.circuit_node(x, y)),
            (h(6), spec.circuit_node(y, x)),
        ]);
    }
    let graph = Digraph::from_arcs(total, arcs)?;
    let heavy = spec.delta() * spec.n();
    let weights = (0..total)
        .map(|v| if v < n * d { 1 } else { heavy })
        .collect();
    WeightedInstance::new(graph, weights, spec.budget(), ProblemKind::Ssg)
}

/// Source of the reduction to the maximal problem: a weighted DAG, a
/// cardinality `p`, and a target weight `B` with `1 <= w(v) <= B − p`.
#[derive(Clone, Debug)]
pub struct MaximalGadgetSpec {
    pub graph: Digraph,
    pub weights: Vec<u64>,
    pub p: u64,
    pub target: u64,
}

impl MaximalGadgetSpec {
    pub fn new(graph: Digraph, weights: Vec<u64>, p: u64, target: u64) -> Result<Self> {
        if weights.len() != graph.node_count() {
            return Err(Error::input("one weight per node is required"));
        }
        if !is_acyclic(&graph) {
            return Err(Error::input("source graph must be acyclic"));
        }
        let hi = target
            .checked_sub(p)
            .ok_or_else(|| Error::input("target must be at least p"))?;
        if let Some(v) = weights.iter().position(|&w| w < 1 || w > hi) {
            return Err(Error::input(format!(
                "weight of node {v} is outside [1, B - p] = [1, {hi}]"
            )));
        }
        let spec = MaximalGadgetSpec {
            graph,
            weights,
            p,
            target,
        };
        spec.checked_budget()
            .ok_or_else(|| Error::input("derived weights overflow"))?;
        Ok(spec)
    }

    fn checked_budget(&self) -> Option<u64> {
        let (p, b) = (self.p, self.target);
        let p2b = p.checked_mul(p)?.checked_mul(b)?;
        let p3b = p2b.checked_mul(p)?;
        let bp = p3b
            .checked_add(p2b.checked_mul(3)?)?
            .checked_add(b)?
            .checked_sub(1)?;
        // total weight of the output must stay within the instance limit
        let n = self.graph.node_count() as u64;
        let heavy = p2b.checked_add(p.checked_mul(b)?)?.checked_add(b)?;
        heavy
            .checked_mul(n)?
            .checked_add(p2b.checked_mul(p + 1)?)
            .filter(|&t| t <= crate::WEIGHT_LIMIT)?;
        Some(bp)
    }

    /// `B′ = p³B + 3p²B + B − 1`.
    pub fn budget(&self) -> u64 {
        self.checked_budget().expect("validated")
    }

    /// `q = p³B + 2p²B + B`.
    pub fn threshold(&self) -> u64 {
        let (p, b) = (self.p, self.target);
        p * p * p * b + 2 * p * p * b + b
    }

    pub fn labels(&self, names: &[String]) -> Vec<String> {
        names
            .iter()
            .cloned()
            .chain((1..=self.p + 1).map(|i| format!("d{i}")))
            .collect()
    }
}

/// Appends a chain `d_{p+1} -> ... -> d_1` below every sink of the source,
/// reweights every source node to `p²B + pB + w(v)` and every chain node to
/// `p²B`. Some closed set of `p` source nodes weighs exactly `B` iff the
/// output has a maximal feasible set of weight at most the returned
/// threshold `q`.
pub fn cardinality_to_maximal(spec: &MaximalGadgetSpec) -> Result<(WeightedInstance, u64)> {
    let g = &spec.graph;
    let n = g.node_count();
    let p = spec.p as usize;
    let chain = |i: usize| n + i - 1; // d_i
    let mut arcs: Vec<(NodeId, NodeId)> = g.arcs().collect();
    arcs.extend(g.sinks().map(|u| (u, chain(1))));
    arcs.extend((1..=p).map(|i| (chain(i + 1), chain(i))));
    let graph = Digraph::from_arcs(n + p + 1, arcs)?;
    let (pp, b) = (spec.p, spec.target);
    let p2b = pp * pp * b;
    let weights = spec
        .weights
        .iter()
        .map(|&w| p2b + pp * b + w)
        .chain(std::iter::repeat_n(p2b, p + 1))
        .collect();
    let inst = WeightedInstance::new(graph, weights, spec.budget(), ProblemKind::MaximalSsg)?;
    Ok((inst, spec.threshold()))
}

/// Source of the independent-set reduction.
#[derive(Clone, Debug)]
pub struct ISGadgetSpec {
    pub source: UndirectedGraph,
}

impl ISGadgetSpec {
    pub fn new(source: UndirectedGraph) -> Result<Self> {
        if !source.is_connected() {
            return Err(Error::input("source graph is not connected"));
        }
        Ok(ISGadgetSpec { source })
    }

    pub fn labels(&self, names: &[String]) -> Vec<String> {
        names
            .iter()
            .cloned()
            .chain(
                self.source
                    .edges()
                    .iter()
                    .map(|&(u, v)| format!("e{}_{}", names[u], names[v])),
            )
            .collect()
    }
}

/// One unit-weight node per source node and one node of weight `n + 1` per
/// edge, with an arc from each endpoint to its edge node; budget `n`.
/// The weak optimum equals the independence number and the maximal weak
/// optimum equals the independent domination number.
pub fn graph_to_ssgw(spec: &ISGadgetSpec, kind: ProblemKind) -> Result<WeightedInstance> {
    if !kind.is_weak() {
        return Err(Error::input(format!(
            "{kind} is not a weak-closure problem"
        )));
    }
    let g = &spec.source;
    let n = g.node_count();
    let m = g.edge_count();
    let arcs = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(e, &(u, v))| [(u, n + e), (v, n + e)]);
    let graph = Digraph::from_arcs(n + m, arcs)?;
    let weights = (0..n + m)
        .map(|v| if v < n { 1 } else { n as u64 + 1 })
        .collect();
    WeightedInstance::new(graph, weights, n as u64, kind)
}

/// Star with an arc from every value node to a zero-weight hub (last id).
pub fn subset_sum_to_tree(
    values: &[u64],
    budget: u64,
    kind: ProblemKind,
) -> Result<WeightedInstance> {
    let n = values.len();
    let graph = Digraph::from_arcs(n + 1, (0..n).map(|i| (i, n)))?;
    let mut weights = values.to_vec();
    weights.push(0);
    WeightedInstance::new(graph, weights, budget, kind)
}

pub fn subset_sum_labels(n: usize) -> Vec<String> {
    (1..=n)
        .map(|i| format!("x{i}"))
        .chain(["r".to_string()])
        .collect()
}
