use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Digraph, NodeId, NodeSet};
use crate::{Error, Result};

fn forward_closure(g: &Digraph, start: impl IntoIterator<Item = NodeId>) -> NodeSet {
    let mut seen = NodeSet::empty(g.node_count());
    let mut stack: Vec<NodeId> = Vec::new();
    for v in start {
        if seen.insert(v) {
            stack.push(v);
        }
    }
    while let Some(v) = stack.pop() {
        for &u in g.out_neighbors(v) {
            if seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen
}

/// `s` together with every node reachable from `s` by a directed path.
pub fn descendants(g: &Digraph, s: &NodeSet) -> Result<NodeSet> {
    g.check_members(s)?;
    Ok(forward_closure(g, s.iter()))
}

/// Nodes `u` that reach some `v` in `s` with `u != v`. Members of `s` are
/// included only when they reach another member.
pub fn ascendants(g: &Digraph, s: &NodeSet) -> Result<NodeSet> {
    g.check_members(s)?;
    let n = g.node_count();
    // strict predecessors: reverse search seeded with in-neighbors of s
    let mut seen = NodeSet::empty(n);
    let mut stack: Vec<NodeId> = Vec::new();
    for v in s.iter() {
        for &u in g.in_neighbors(v) {
            if seen.insert(u) {
                stack.push(u);
            }
        }
    }
    while let Some(v) = stack.pop() {
        for &u in g.in_neighbors(v) {
            if seen.insert(u) {
                stack.push(u);
            }
        }
    }
    // a member of s may have been reached only through a circuit back to itself
    for u in s.iter().filter(|&u| seen.contains(u)).collect::<Vec<_>>() {
        let mut reach = forward_closure(g, g.out_neighbors(u).iter().copied());
        reach.remove(u);
        if reach.is_disjoint(s) {
            seen.remove(u);
        }
    }
    Ok(seen)
}

/// Sources of the subgraph induced by `s`: the minimal subset of `s` with the
/// same descendants. Defined on DAGs only.
pub fn kernel(g: &Digraph, s: &NodeSet) -> Result<NodeSet> {
    g.check_members(s)?;
    if !is_acyclic(g) {
        return Err(Error::structure(
            "kernel is only defined on acyclic digraphs",
        ));
    }
    Ok(NodeSet::from_nodes(
        g.node_count(),
        s.iter()
            .filter(|&v| g.in_neighbors(v).iter().all(|&u| !s.contains(u))),
    ))
}

/// Kahn's algorithm, always releasing the smallest available node id.
/// `None` if the graph has a circuit.
pub fn topological_order(g: &Digraph) -> Option<Vec<NodeId>> {
    let n = g.node_count();
    let mut indeg: Vec<usize> = g.nodes().map(|v| g.in_degree(v)).collect();
    let mut ready: BinaryHeap<Reverse<NodeId>> =
        g.nodes().filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = ready.pop() {
        order.push(v);
        for &u in g.out_neighbors(v) {
            indeg[u] -= 1;
            if indeg[u] == 0 {
                ready.push(Reverse(u));
            }
        }
    }
    (order.len() == n).then_some(order)
}

pub fn is_acyclic(g: &Digraph) -> bool {
    topological_order(g).is_some()
}
